//! The ring E(s) = F[h]/(h^n - s) with the automorphism sigma: h -> q h,
//! its norm, the invariants m(s), m(s, a) and the reduction idempotents.

use crate::error::{Error, Result};
use crate::field::{mth_power_test, Field, Ring, RootedField};
use crate::poly::{self, divisors, Poly};

/// E(s) over a rooted field; `root.n` is the degree n and `root.q` drives sigma.
#[derive(Clone, Debug)]
pub struct ExtRing<F: Field> {
    pub root: RootedField<F>,
    pub s: F::Elem,
    is_field: bool,
}

impl<F: Field> ExtRing<F> {
    pub fn new(root: RootedField<F>, s: F::Elem) -> Self {
        let f = &root.field;
        let is_field = !f.is_zero(&s) && poly::binomial_irreducible(f, root.n, &s)
            || (root.n == 1);
        ExtRing { root, s, is_field }
    }

    pub fn field(&self) -> &F {
        &self.root.field
    }

    pub fn n(&self) -> usize {
        self.root.n
    }

    pub fn is_field(&self) -> bool {
        self.is_field
    }

    pub fn scalar(&self, c: &F::Elem) -> Vec<F::Elem> {
        let mut v = vec![self.field().zero(); self.n()];
        v[0] = c.clone();
        v
    }

    /// The monomial c h^i, reduced with h^n = s.
    pub fn monomial(&self, c: &F::Elem, i: usize) -> Vec<F::Elem> {
        let f = self.field();
        let n = self.n();
        let mut v = vec![f.zero(); n];
        v[i % n] = f.mul(c, &f.pow(&self.s, (i / n) as u64));
        v
    }

    pub fn h(&self) -> Vec<F::Elem> {
        self.monomial(&self.field().one(), 1)
    }

    /// Reduces a polynomial in h modulo h^n - s.
    pub fn from_poly(&self, p: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        let n = self.n();
        let mut v = vec![f.zero(); n];
        for (i, c) in p.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let t = f.mul(c, &f.pow(&self.s, (i / n) as u64));
            v[i % n] = f.add(&v[i % n], &t);
        }
        v
    }

    pub fn to_poly(&self, a: &[F::Elem]) -> Poly<F::Elem> {
        let mut v = a.to_vec();
        poly::trim(self.field(), &mut v);
        v
    }

    /// sigma^k: sum c_i h^i -> sum c_i q^{ik} h^i.
    pub fn sigma_pow(&self, a: &[F::Elem], k: i64) -> Vec<F::Elem> {
        let f = self.field();
        a.iter()
            .enumerate()
            .map(|(i, c)| f.mul(c, &self.root.q_pow(i as i64 * k)))
            .collect()
    }

    pub fn sigma(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        self.sigma_pow(a, 1)
    }

    /// Returns the F-coefficient when `a` lies in F h^0.
    pub fn as_scalar(&self, a: &[F::Elem]) -> Option<F::Elem> {
        let f = self.field();
        if a[1..].iter().all(|c| f.is_zero(c)) {
            Some(a[0].clone())
        } else {
            None
        }
    }

    /// N(e) = e sigma(e) ... sigma^{n-1}(e), computed inside E(s).
    pub fn norm(&self, a: &[F::Elem]) -> Result<F::Elem> {
        let mut acc = self.one();
        for i in 0..self.n() {
            acc = self.mul(&acc, &self.sigma_pow(a, i as i64));
        }
        self.as_scalar(&acc).ok_or(Error::NormNotScalar)
    }

    pub fn order(&self) -> Option<u64> {
        let q = self.field().order()?;
        q.checked_pow(self.n() as u32)
    }

    pub fn element(&self, mut index: u64) -> Vec<F::Elem> {
        let f = self.field();
        let q = f.order().expect("finite base field");
        (0..self.n())
            .map(|_| {
                let c = f.element(index % q);
                index /= q;
                c
            })
            .collect()
    }

    pub fn index_of(&self, a: &[F::Elem]) -> u64 {
        let f = self.field();
        let q = f.order().expect("finite base field");
        a.iter().rev().fold(0, |acc, c| acc * q + f.index_of(c))
    }

    /// The image of the norm map, by enumeration of E(s); `bound` caps |E|.
    pub fn norm_image(&self, bound: u64) -> Result<Vec<F::Elem>> {
        let size = self
            .order()
            .filter(|&sz| sz <= bound)
            .ok_or_else(|| Error::TooLarge(format!("|E| exceeds the bound {bound}")))?;
        let f = self.field();
        let mut seen = std::collections::BTreeSet::new();
        for i in 0..size {
            let v = self.norm(&self.element(i))?;
            seen.insert(f.index_of(&v));
        }
        Ok(seen.into_iter().map(|i| f.element(i)).collect())
    }

    /// Idempotent family attached to m | n and a root r of y^m = s with y = h^{n/m}:
    /// e_i is the Lagrange idempotent at y = zeta^i r where zeta = q^{n/m}.
    pub fn idempotents(&self, m: usize, r: &F::Elem) -> Result<Vec<Vec<F::Elem>>> {
        let zeta = self.root.q_pow((self.n() / m) as i64);
        lagrange_family(self, m, &zeta, r)
    }

    /// The second closed form of e_i: q^{in/m} prod_{j != i}(y - zeta^j r) divided by
    /// r^{m-1} prod_{nu=1}^{m-1} (1 - zeta^nu).
    pub fn idempotents_alt_form(&self, m: usize, r: &F::Elem) -> Result<Vec<Vec<F::Elem>>> {
        let f = self.field();
        let n = self.n();
        let zeta = self.root.q_pow((n / m) as i64);
        let mut den = f.pow(r, m as u64 - 1);
        for nu in 1..m {
            den = f.mul(&den, &f.sub(&f.one(), &f.pow(&zeta, nu as u64)));
        }
        let den_inv = f.inv(&den).ok_or(Error::ZeroInput)?;
        (0..m)
            .map(|i| {
                let num = lagrange_numerator(self, m, &zeta, r, i);
                let c = f.mul(&self.root.q_pow((i * n / m) as i64), &den_inv);
                Ok(num.iter().map(|x| f.mul(x, &c)).collect())
            })
            .collect()
    }
}

fn lagrange_numerator<F: Field>(
    ring: &ExtRing<F>,
    m: usize,
    zeta: &F::Elem,
    r: &F::Elem,
    i: usize,
) -> Vec<F::Elem> {
    let f = ring.field();
    let y = ring.monomial(&f.one(), ring.n() / m);
    let mut acc = ring.one();
    for j in (0..m).filter(|&j| j != i) {
        let root = f.mul(&f.pow(zeta, j as u64), r);
        acc = ring.mul(&acc, &ring.sub(&y, &ring.scalar(&root)));
    }
    acc
}

/// Lagrange idempotents for y^m = r^m with y = Z^{N/m} inside a binomial ring.
pub fn lagrange_family<F: Field>(
    ring: &ExtRing<F>,
    m: usize,
    zeta: &F::Elem,
    r: &F::Elem,
) -> Result<Vec<Vec<F::Elem>>> {
    let f = ring.field();
    if f.is_zero(r) {
        return Err(Error::ZeroInput);
    }
    if !ring.n().is_multiple_of(m) {
        return Err(Error::DimensionMismatch(format!("{m} does not divide {}", ring.n())));
    }
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let ri = f.mul(&f.pow(zeta, i as u64), r);
        let mut den = f.one();
        for j in (0..m).filter(|&j| j != i) {
            let rj = f.mul(&f.pow(zeta, j as u64), r);
            den = f.mul(&den, &f.sub(&ri, &rj));
        }
        let den_inv = f.inv(&den).ok_or(Error::ZeroInput)?;
        let num = lagrange_numerator(ring, m, zeta, r, i);
        out.push(num.iter().map(|x| f.mul(x, &den_inv)).collect());
    }
    Ok(out)
}

impl<F: Field> Ring for ExtRing<F> {
    type Elem = Vec<F::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.field().zero(); self.n()]
    }
    fn one(&self) -> Self::Elem {
        self.scalar(&self.field().one())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let f = self.field();
        a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let f = self.field();
        a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.field().neg(x)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let f = self.field();
        let n = self.n();
        let mut lo = vec![f.zero(); n];
        let mut hi = vec![f.zero(); n];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let t = f.mul(x, y);
                let k = i + j;
                if k < n {
                    lo[k] = f.add(&lo[k], &t);
                } else {
                    hi[k - n] = f.add(&hi[k - n], &t);
                }
            }
        }
        if !f.is_zero(&self.s) {
            for k in 0..n {
                if !f.is_zero(&hi[k]) {
                    lo[k] = f.add(&lo[k], &f.mul(&hi[k], &self.s));
                }
            }
        }
        lo
    }
    fn from_int(&self, k: i64) -> Self::Elem {
        self.scalar(&self.field().from_int(k))
    }
    /// Units are exactly the elements coprime to h^n - s.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let f = self.field();
        let p = self.to_poly(a);
        if p.is_empty() {
            return None;
        }
        let modulus = poly::binomial(f, self.n(), &self.s);
        let (g, u, _) = poly::ext_gcd(f, &p, &modulus);
        if poly::is_one(f, &g) {
            Some(self.from_poly(&u))
        } else {
            None
        }
    }
    fn format(&self, a: &Self::Elem) -> String {
        poly::format_coeffs(self.field(), a, "h")
    }
}

/// m(s): the largest divisor m of n with s an m-th power, and the root s^{1/m}.
/// Also checks that every divisor m' of n with s an m'-th power divides m(s).
pub fn m_of<F: Field>(f: &F, s: &F::Elem, n: usize) -> Result<(usize, F::Elem)> {
    if f.is_zero(s) {
        return Err(Error::ZeroInput);
    }
    let hits: Vec<(usize, F::Elem)> = divisors(n)
        .into_iter()
        .filter_map(|m| mth_power_test(f, s, m as u64).map(|r| (m, r)))
        .collect();
    let (m, r) = hits.last().cloned().expect("m = 1 always succeeds");
    if let Some((bad, _)) = hits.iter().find(|(d, _)| m % d != 0) {
        return Err(Error::HypothesisFailed(format!(
            "{bad} does not divide m = {m}"
        )));
    }
    Ok((m, r))
}

/// m(s, a): m(a) computed relative to n / m(s).
pub fn m_of2<F: Field>(f: &F, s: &F::Elem, a: &F::Elem, n: usize) -> Result<(usize, F::Elem)> {
    let (ms, _) = m_of(f, s, n)?;
    m_of(f, a, n / ms)
}

#[cfg(test)]
mod tests;
