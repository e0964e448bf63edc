//! Dense univariate polynomials over a field, low degree first, no trailing zeros.
//! Factorization over finite fields uses squarefree decomposition, distinct-degree
//! and equal-degree splitting; `trial_factor` is an exhaustive independent oracle.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{parse_expr, Field, Ring};

pub type Poly<E> = Vec<E>;

pub fn trim<F: Ring>(f: &F, a: &mut Poly<F::Elem>) {
    while let Some(c) = a.last() {
        if f.is_zero(c) {
            a.pop();
        } else {
            break;
        }
    }
}

/// Degree, with `None` for the zero polynomial.
pub fn degree<E>(a: &[E]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn constant<F: Ring>(f: &F, c: F::Elem) -> Poly<F::Elem> {
    let mut v = vec![c];
    trim(f, &mut v);
    v
}

/// The monomial c * x^k.
pub fn monomial<F: Ring>(f: &F, c: F::Elem, k: usize) -> Poly<F::Elem> {
    if f.is_zero(&c) {
        return Vec::new();
    }
    let mut v = vec![f.zero(); k + 1];
    v[k] = c;
    v
}

pub fn x<F: Ring>(f: &F) -> Poly<F::Elem> {
    monomial(f, f.one(), 1)
}

pub fn add<F: Ring>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(u), Some(v)) => f.add(u, v),
            (Some(u), None) => u.clone(),
            (None, Some(v)) => v.clone(),
            (None, None) => unreachable!(),
        });
    }
    trim(f, &mut out);
    out
}

pub fn neg<F: Ring>(f: &F, a: &[F::Elem]) -> Poly<F::Elem> {
    a.iter().map(|c| f.neg(c)).collect()
}

pub fn sub<F: Ring>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    add(f, a, &neg(f, b))
}

pub fn scale<F: Ring>(f: &F, a: &[F::Elem], c: &F::Elem) -> Poly<F::Elem> {
    let mut out: Vec<_> = a.iter().map(|u| f.mul(u, c)).collect();
    trim(f, &mut out);
    out
}

pub fn mul<F: Ring>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, u) in a.iter().enumerate() {
        if f.is_zero(u) {
            continue;
        }
        for (j, v) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(u, v));
        }
    }
    trim(f, &mut out);
    out
}

pub fn pow<F: Ring>(f: &F, a: &[F::Elem], mut e: u64) -> Poly<F::Elem> {
    let mut acc = constant(f, f.one());
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(f, &acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(f, &base, &base);
        }
    }
    acc
}

/// Division with remainder: `a = q*b + r`, `deg r < deg b`.
pub fn divrem<F: Field>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> Result<(Poly<F::Elem>, Poly<F::Elem>)> {
    let db = degree(b).ok_or(Error::DivisionByZero)?;
    let lc_inv = f.inv(&b[db]).ok_or(Error::DivisionByZero)?;
    let mut r = a.to_vec();
    trim(f, &mut r);
    if r.len() < b.len() {
        return Ok((Vec::new(), r));
    }
    let mut q = vec![f.zero(); r.len() - db];
    for i in (db..r.len()).rev() {
        if f.is_zero(&r[i]) {
            continue;
        }
        let c = f.mul(&r[i], &lc_inv);
        for j in 0..db {
            let t = f.mul(&c, &b[j]);
            r[i - db + j] = f.sub(&r[i - db + j], &t);
        }
        r[i] = f.zero();
        q[i - db] = c;
    }
    trim(f, &mut r);
    trim(f, &mut q);
    Ok((q, r))
}

pub fn rem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    divrem(f, a, b).expect("nonzero divisor").1
}

/// Exact quotient; panics if `b` does not divide `a`.
pub fn exact_div<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let (q, r) = divrem(f, a, b).expect("nonzero divisor");
    assert!(r.is_empty(), "exact_div: nonzero remainder");
    q
}

/// Returns (leading coefficient, monic associate); the zero polynomial maps to (0, 0).
pub fn make_monic<F: Field>(f: &F, a: &[F::Elem]) -> (F::Elem, Poly<F::Elem>) {
    match a.last() {
        None => (f.zero(), Vec::new()),
        Some(lc) => {
            let inv = f.inv(lc).unwrap();
            (lc.clone(), scale(f, a, &inv))
        }
    }
}

pub fn is_one<F: Ring>(f: &F, a: &[F::Elem]) -> bool {
    a.len() == 1 && f.is_one(&a[0])
}

/// Monic greatest common divisor.
pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let mut u = a.to_vec();
    let mut v = b.to_vec();
    trim(f, &mut u);
    trim(f, &mut v);
    while !v.is_empty() {
        let r = rem(f, &u, &v);
        u = v;
        v = r;
    }
    make_monic(f, &u).1
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g monic.
pub fn ext_gcd<F: Field>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    trim(f, &mut r0);
    trim(f, &mut r1);
    let (mut s0, mut s1) = (constant(f, f.one()), Vec::new());
    let (mut t0, mut t1) = (Vec::new(), constant(f, f.one()));
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1).unwrap();
        let s2 = sub(f, &s0, &mul(f, &q, &s1));
        let t2 = sub(f, &t0, &mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_empty() {
        return (r0, s0, t0);
    }
    let inv = f.inv(r0.last().unwrap()).unwrap();
    (scale(f, &r0, &inv), scale(f, &s0, &inv), scale(f, &t0, &inv))
}

pub fn eval<F: Ring>(f: &F, a: &[F::Elem], x0: &F::Elem) -> F::Elem {
    a.iter()
        .rev()
        .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x0), c))
}

/// The composition a(b(x)).
pub fn compose<F: Ring>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    a.iter()
        .rev()
        .fold(Vec::new(), |acc, c| add(f, &mul(f, &acc, b), &constant(f, c.clone())))
}

pub fn derivative<F: Ring>(f: &F, a: &[F::Elem]) -> Poly<F::Elem> {
    let mut out: Vec<_> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| f.mul(&f.from_int(i as i64), c))
        .collect();
    trim(f, &mut out);
    out
}

pub fn mulmod<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem], m: &[F::Elem]) -> Poly<F::Elem> {
    rem(f, &mul(f, a, b), m)
}

pub fn powmod<F: Field>(f: &F, a: &[F::Elem], mut e: u64, m: &[F::Elem]) -> Poly<F::Elem> {
    let mut acc = rem(f, &constant(f, f.one()), m);
    let mut base = rem(f, a, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &base, m);
        }
        e >>= 1;
        if e > 0 {
            base = mulmod(f, &base, &base, m);
        }
    }
    acc
}

/// The binomial x^n - s.
pub fn binomial<F: Ring>(f: &F, n: usize, s: &F::Elem) -> Poly<F::Elem> {
    let mut v = vec![f.zero(); n + 1];
    v[0] = f.neg(s);
    v[n] = f.add(&v[n], &f.one());
    trim(f, &mut v);
    v
}

fn field_size<F: Field>(f: &F) -> Result<u64> {
    f.order()
        .ok_or_else(|| Error::UnsupportedField(format!("{} is not finite", f.name())))
}

/// a^Q mod m applied `times` times.
fn frobenius_mod<F: Field>(f: &F, a: &[F::Elem], m: &[F::Elem], q: u64, times: usize) -> Poly<F::Elem> {
    let mut out = a.to_vec();
    for _ in 0..times {
        out = powmod(f, &out, q, m);
    }
    out
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test over a finite field.
pub fn is_irreducible<F: Field>(f: &F, a: &[F::Elem]) -> bool {
    let q = match f.order() {
        Some(q) => q,
        None => return false,
    };
    let n = match degree(a) {
        Some(0) | None => return false,
        Some(n) => n,
    };
    if n == 1 {
        return true;
    }
    let m = make_monic(f, a).1;
    let xx = x(f);
    let xq = |k: usize| frobenius_mod(f, &xx, &m, q, k);
    if sub(f, &xq(n), &rem(f, &xx, &m)).iter().any(|c| !f.is_zero(c)) {
        return false;
    }
    for r in prime_factors(n as u64) {
        let g = gcd(f, &sub(f, &xq(n / r as usize), &xx), &m);
        if !is_one(f, &g) {
            return false;
        }
    }
    true
}

/// A factorization: leading constant and sorted (monic irreducible, exponent) pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<E> {
    pub unit: E,
    pub factors: Vec<(Poly<E>, u32)>,
}

impl<E: Clone> Factorization<E> {
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (g, e) in &self.factors {
            for _ in 0..*e {
                out.push(g.len() - 1);
            }
        }
        out
    }
}

fn poly_key<F: Field>(f: &F, a: &[F::Elem]) -> (usize, Vec<Vec<u64>>) {
    (a.len(), a.iter().rev().map(|c| f.order_key(c)).collect())
}

fn normalize_factors<F: Field>(f: &F, mut fs: Vec<(Poly<F::Elem>, u32)>) -> Vec<(Poly<F::Elem>, u32)> {
    fs.sort_by_key(|(g, _)| poly_key(f, g));
    let mut out: Vec<(Poly<F::Elem>, u32)> = Vec::new();
    for (g, e) in fs {
        match out.last_mut() {
            Some((h, k)) if *h == g => *k += e,
            _ => out.push((g, e)),
        }
    }
    out
}

/// p-th root of a polynomial whose derivative vanishes.
fn poly_pth_root<F: Field>(f: &F, a: &[F::Elem]) -> Poly<F::Elem> {
    let p = f.characteristic() as usize;
    let q = f.order().unwrap();
    let e = q / p as u64;
    let mut out = Vec::new();
    for i in (0..a.len()).step_by(p) {
        out.push(f.pow(&a[i], e));
    }
    trim(f, &mut out);
    out
}

/// Squarefree decomposition of a monic polynomial.
pub fn squarefree<F: Field>(f: &F, a: &[F::Elem]) -> Vec<(Poly<F::Elem>, u32)> {
    let mut out = Vec::new();
    if degree(a).unwrap_or(0) == 0 {
        return out;
    }
    let p = f.characteristic() as u32;
    let mut c = gcd(f, a, &derivative(f, a));
    let mut w = exact_div(f, a, &c);
    let mut i = 1;
    while !is_one(f, &w) {
        let y = gcd(f, &w, &c);
        let fac = exact_div(f, &w, &y);
        if !is_one(f, &fac) {
            out.push((fac, i));
        }
        w = y;
        c = exact_div(f, &c, &w);
        i += 1;
    }
    if !is_one(f, &c) {
        let root = poly_pth_root(f, &c);
        for (g, e) in squarefree(f, &root) {
            out.push((g, e * p));
        }
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial.
pub fn distinct_degree<F: Field>(f: &F, a: &[F::Elem]) -> Vec<(Poly<F::Elem>, usize)> {
    let q = f.order().unwrap();
    let mut out = Vec::new();
    let mut rest = a.to_vec();
    let xx = x(f);
    let mut h = rem(f, &xx, &rest);
    let mut d = 0;
    while degree(&rest).unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = powmod(f, &h, q, &rest);
        let g = gcd(f, &sub(f, &h, &xx), &rest);
        if !is_one(f, &g) {
            rest = exact_div(f, &rest, &g);
            h = rem(f, &h, &rest);
            out.push((g, d));
        }
    }
    if degree(&rest).unwrap_or(0) > 0 {
        let dr = rest.len() - 1;
        out.push((rest, dr));
    }
    out
}

fn random_poly<F: Field>(f: &F, rng: &mut dyn RngCore, len: usize) -> Poly<F::Elem> {
    let mut v: Vec<_> = (0..len).map(|_| f.random(rng, 0)).collect();
    trim(f, &mut v);
    v
}

/// Equal-degree splitting of a monic squarefree product of degree-d irreducibles.
pub fn equal_degree<F: Field>(f: &F, a: &[F::Elem], d: usize, rng: &mut dyn RngCore) -> Vec<Poly<F::Elem>> {
    let n = a.len() - 1;
    if n == d {
        return vec![a.to_vec()];
    }
    let q = f.order().unwrap();
    let p = f.characteristic();
    loop {
        let r = random_poly(f, rng, n);
        if degree(&r).unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map r + r^2 + ... + r^(2^(kd-1)) for Q = 2^k
            let k = q.trailing_zeros() as usize;
            let mut t = r.clone();
            let mut acc = r.clone();
            for _ in 1..k * d {
                t = mulmod(f, &t, &t, a);
                acc = add(f, &acc, &t);
            }
            acc
        } else {
            // r^((Q^d - 1)/2) = (r^(1 + Q + ... + Q^(d-1)))^((Q-1)/2)
            let mut t = rem(f, &r, a);
            let mut acc = t.clone();
            for _ in 1..d {
                t = powmod(f, &t, q, a);
                acc = mulmod(f, &acc, &t, a);
            }
            let pw = powmod(f, &acc, (q - 1) / 2, a);
            sub(f, &pw, &constant(f, f.one()))
        };
        let g = gcd(f, &b, a);
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let h = exact_div(f, a, &g);
            let mut out = equal_degree(f, &g, d, rng);
            out.extend(equal_degree(f, &h, d, rng));
            return out;
        }
    }
}

/// Complete factorization over a finite field.
pub fn factor<F: Field>(f: &F, a: &[F::Elem]) -> Result<Factorization<F::Elem>> {
    field_size(f)?;
    if a.is_empty() {
        return Err(Error::ZeroInput);
    }
    let (unit, m) = make_monic(f, a);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut fs = Vec::new();
    for (g, e) in squarefree(f, &m) {
        for (h, d) in distinct_degree(f, &g) {
            for irr in equal_degree(f, &h, d, &mut rng) {
                fs.push((irr, e));
            }
        }
    }
    Ok(Factorization {
        unit,
        factors: normalize_factors(f, fs),
    })
}

/// Iterates over all monic polynomials of degree d in canonical order.
pub fn monic_of_degree<F: Field>(f: &F, d: usize) -> impl Iterator<Item = Poly<F::Elem>> + '_ {
    let q = f.order().expect("finite field");
    let total = q.checked_pow(d as u32).expect("enumeration too large");
    (0..total).map(move |mut idx| {
        let mut v = Vec::with_capacity(d + 1);
        for _ in 0..d {
            v.push(f.element(idx % q));
            idx /= q;
        }
        v.push(f.one());
        v
    })
}

/// Remainder of `a` modulo monic `b`, written into `buf`; true when it vanishes.
fn divides_monic<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem], buf: &mut Vec<F::Elem>) -> bool {
    buf.clear();
    buf.extend_from_slice(a);
    let db = b.len() - 1;
    for i in (db..buf.len()).rev() {
        if f.is_zero(&buf[i]) {
            continue;
        }
        let c = buf[i].clone();
        for j in 0..db {
            let t = f.mul(&c, &b[j]);
            buf[i - db + j] = f.sub(&buf[i - db + j], &t);
        }
        buf[i] = f.zero();
    }
    buf[..db.min(buf.len())].iter().all(|c| f.is_zero(c))
}

/// The first monic divisor of degree d in enumeration order, stepping the
/// coefficients in place like an odometer.
fn first_monic_divisor<F: Field>(f: &F, a: &[F::Elem], d: usize, buf: &mut Vec<F::Elem>) -> Option<Poly<F::Elem>> {
    let q = f.order().expect("finite field");
    let elems: Vec<F::Elem> = (0..q).map(|i| f.element(i)).collect();
    let mut digits = vec![0usize; d];
    let mut g: Poly<F::Elem> = (0..d).map(|_| elems[0].clone()).chain([f.one()]).collect();
    loop {
        if divides_monic(f, a, &g, buf) {
            return Some(g);
        }
        let mut k = 0;
        loop {
            if k == d {
                return None;
            }
            digits[k] += 1;
            if (digits[k] as u64) < q {
                g[k] = elems[digits[k]].clone();
                break;
            }
            digits[k] = 0;
            g[k] = elems[0].clone();
            k += 1;
        }
    }
}

/// Exhaustive trial-division factorization; the oracle for the fast path.
pub fn trial_factor<F: Field>(f: &F, a: &[F::Elem]) -> Result<Factorization<F::Elem>> {
    field_size(f)?;
    if a.is_empty() {
        return Err(Error::ZeroInput);
    }
    let (unit, mut m) = make_monic(f, a);
    let mut fs = Vec::new();
    let mut buf = Vec::new();
    let mut d = 1;
    while 2 * d <= m.len().saturating_sub(1) {
        match first_monic_divisor(f, &m, d, &mut buf) {
            Some(g) => {
                m = exact_div(f, &m, &g);
                fs.push((g, 1));
            }
            None => d += 1,
        }
    }
    if m.len() > 1 {
        fs.push((m, 1));
    }
    Ok(Factorization {
        unit,
        factors: normalize_factors(f, fs),
    })
}

/// Distinct roots in the field, sorted canonically.
pub fn roots<F: Field>(f: &F, a: &[F::Elem]) -> Result<Vec<F::Elem>> {
    let q = field_size(f)?;
    if a.is_empty() {
        return Err(Error::ZeroInput);
    }
    let m = make_monic(f, a).1;
    if m.len() == 1 {
        return Ok(Vec::new());
    }
    let xq = powmod(f, &x(f), q, &m);
    let g = gcd(f, &sub(f, &xq, &x(f)), &m);
    if is_one(f, &g) {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out: Vec<F::Elem> = equal_degree(f, &g, 1, &mut rng)
        .into_iter()
        .map(|l| f.neg(&l[0]))
        .collect();
    out.sort_by_key(|c| f.order_key(c));
    Ok(out)
}

/// m-th root in a finite field: exhaustive for |F| <= 10^4, root finding otherwise.
/// Returns the smallest root in canonical order.
pub fn finite_mth_root<F: Field>(f: &F, a: &F::Elem, m: u64) -> Option<F::Elem> {
    if m == 1 || f.is_zero(a) {
        return Some(a.clone());
    }
    let q = f.order()?;
    if q <= 10_000 {
        return (0..q).map(|i| f.element(i)).find(|b| f.pow(b, m) == *a);
    }
    roots(f, &binomial(f, m as usize, a)).ok()?.into_iter().next()
}

/// First monic irreducible polynomial of degree k in canonical order.
pub fn first_irreducible<F: Field>(f: &F, k: usize) -> Poly<F::Elem> {
    monic_of_degree(f, k)
        .find(|g| is_irreducible(f, g))
        .expect("irreducible polynomials exist in every degree")
}

/// Irreducibility of h^n - s decided through m-th power tests over divisors m of n.
pub fn binomial_irreducible<F: Field>(f: &F, n: usize, s: &F::Elem) -> bool {
    divisors(n)
        .into_iter()
        .filter(|&m| m != 1)
        .all(|m| crate::field::mth_power_test(f, s, m as u64).is_none())
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn format_coeffs<F: Ring>(f: &F, a: &[F::Elem], var: &str) -> String {
    let mut parts = Vec::new();
    for (i, c) in a.iter().enumerate() {
        if f.is_zero(c) {
            continue;
        }
        let mut cs = f.format(c);
        if cs.contains(['+', '-', '/']) && i > 0 {
            cs = format!("({cs})");
        }
        parts.push(match i {
            0 => cs,
            1 if f.is_one(c) => var.to_string(),
            1 => format!("{cs}*{var}"),
            _ if f.is_one(c) => format!("{var}^{i}"),
            _ => format!("{cs}*{var}^{i}"),
        });
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

/// The polynomial ring F[x], used to parse polynomial text through the expression parser.
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    pub field: F,
}

impl<F: Field> Ring for PolyRing<F> {
    type Elem = Poly<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Vec::new()
    }
    fn one(&self) -> Self::Elem {
        constant(&self.field, self.field.one())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        add(&self.field, a, b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        sub(&self.field, a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        neg(&self.field, a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        mul(&self.field, a, b)
    }
    fn from_int(&self, k: i64) -> Self::Elem {
        constant(&self.field, self.field.from_int(k))
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.len() == 1 {
            self.field.inv(&a[0]).map(|c| vec![c])
        } else {
            None
        }
    }
    fn format(&self, a: &Self::Elem) -> String {
        format_coeffs(&self.field, a, "x")
    }
}

/// Parses `c0+c1*x+c2*x^2` or the coefficient-list form `c0,c1,c2`.
pub fn parse_poly<F: Field>(f: &F, s: &str, var: &str) -> Result<Poly<F::Elem>> {
    let ring = PolyRing { field: f.clone() };
    let mut vars: Vec<(&str, Poly<F::Elem>)> = vec![(var, x(f))];
    for (name, v) in f.variables() {
        vars.push((name, constant(f, v)));
    }
    parse_expr(&ring, s, &vars)
}

#[cfg(test)]
mod tests;
