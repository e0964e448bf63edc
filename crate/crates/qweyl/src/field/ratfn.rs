use rand::RngCore;

use super::{parse_expr, Field, Ring};
use crate::error::{Error, Result};
use crate::poly::{self, Poly};

/// A reduced fraction num/den with monic den.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatElem<E> {
    pub num: Poly<E>,
    pub den: Poly<E>,
}

/// The rational function field K(t) over a finite field K.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn<K: Field> {
    inner: K,
}

impl<K: Field> RatFn<K> {
    pub fn new(inner: K) -> Result<Self> {
        if !inner.is_finite() {
            return Err(Error::UnsupportedField(
                "rational function fields are built over finite fields only".into(),
            ));
        }
        Ok(RatFn { inner })
    }

    pub fn inner(&self) -> &K {
        &self.inner
    }

    /// Builds num/den in reduced form.
    pub fn frac(&self, num: &[K::Elem], den: &[K::Elem]) -> Result<RatElem<K::Elem>> {
        let k = &self.inner;
        let mut d = den.to_vec();
        poly::trim(k, &mut d);
        if d.is_empty() {
            return Err(Error::DivisionByZero);
        }
        let mut nu = num.to_vec();
        poly::trim(k, &mut nu);
        if nu.is_empty() {
            return Ok(self.zero());
        }
        let g = poly::gcd(k, &nu, &d);
        let nu = poly::exact_div(k, &nu, &g);
        let d = poly::exact_div(k, &d, &g);
        let lc_inv = k.inv(d.last().unwrap()).unwrap();
        Ok(RatElem {
            num: poly::scale(k, &nu, &lc_inv),
            den: poly::scale(k, &d, &lc_inv),
        })
    }

    pub fn from_poly(&self, p: &[K::Elem]) -> RatElem<K::Elem> {
        self.frac(p, &poly::constant(&self.inner, self.inner.one()))
            .unwrap()
    }

    pub fn from_inner(&self, c: &K::Elem) -> RatElem<K::Elem> {
        self.from_poly(&poly::constant(&self.inner, c.clone()))
    }

    /// The variable t.
    pub fn t(&self) -> RatElem<K::Elem> {
        self.from_poly(&poly::x(&self.inner))
    }

    /// All fractions num/den with deg num, deg den <= `deg`, den monic, in lowest terms.
    pub fn enumerate_bounded(&self, deg: usize) -> Vec<RatElem<K::Elem>> {
        let k = &self.inner;
        let q = k.order().unwrap();
        let mut dens = Vec::new();
        for d in 0..=deg {
            dens.extend(poly::monic_of_degree(k, d));
        }
        let total = q.pow(deg as u32 + 1);
        let mut out = vec![self.zero()];
        for idx in 1..total {
            let mut v = Vec::with_capacity(deg + 1);
            let mut rest = idx;
            for _ in 0..=deg {
                v.push(k.element(rest % q));
                rest /= q;
            }
            poly::trim(k, &mut v);
            for den in &dens {
                if poly::is_one(k, &poly::gcd(k, &v, den)) {
                    out.push(RatElem {
                        num: v.clone(),
                        den: den.clone(),
                    });
                }
            }
        }
        out
    }

    /// Order of vanishing of `a` at the monic irreducible `p`.
    pub fn valuation(&self, a: &RatElem<K::Elem>, p: &[K::Elem]) -> i64 {
        let k = &self.inner;
        let count = |mut f: Poly<K::Elem>| {
            let mut v = 0i64;
            while !f.is_empty() {
                let (qt, r) = poly::divrem(k, &f, p).unwrap();
                if !r.is_empty() {
                    break;
                }
                f = qt;
                v += 1;
            }
            v
        };
        count(a.num.clone()) - count(a.den.clone())
    }

    /// Image of a p-adic unit in the residue field K[t]/(p).
    pub fn residue(&self, a: &RatElem<K::Elem>, p: &[K::Elem]) -> Option<Poly<K::Elem>> {
        let k = &self.inner;
        let n = poly::rem(k, &a.num, p);
        let d = poly::rem(k, &a.den, p);
        let (g, u, _) = poly::ext_gcd(k, &d, p);
        if n.is_empty() || !poly::is_one(k, &g) {
            return None;
        }
        Some(poly::mulmod(k, &n, &u, p))
    }

    /// Evaluation at t = c; `None` when c is a pole.
    pub fn eval(&self, a: &RatElem<K::Elem>, c: &K::Elem) -> Option<K::Elem> {
        let k = &self.inner;
        let d = poly::eval(k, &a.den, c);
        k.inv(&d).map(|di| k.mul(&poly::eval(k, &a.num, c), &di))
    }
}

impl<K: Field> Ring for RatFn<K> {
    type Elem = RatElem<K::Elem>;

    fn zero(&self) -> Self::Elem {
        RatElem {
            num: Vec::new(),
            den: poly::constant(&self.inner, self.inner.one()),
        }
    }
    fn one(&self) -> Self::Elem {
        self.from_inner(&self.inner.one())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let k = &self.inner;
        if a.den == b.den {
            return self.frac(&poly::add(k, &a.num, &b.num), &a.den).unwrap();
        }
        let num = poly::add(k, &poly::mul(k, &a.num, &b.den), &poly::mul(k, &b.num, &a.den));
        self.frac(&num, &poly::mul(k, &a.den, &b.den)).unwrap()
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        RatElem {
            num: poly::neg(&self.inner, &a.num),
            den: a.den.clone(),
        }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let k = &self.inner;
        if a.num.is_empty() || b.num.is_empty() {
            return self.zero();
        }
        // cross-cancel before multiplying to keep degrees small
        let g1 = poly::gcd(k, &a.num, &b.den);
        let g2 = poly::gcd(k, &b.num, &a.den);
        let num = poly::mul(
            k,
            &poly::exact_div(k, &a.num, &g1),
            &poly::exact_div(k, &b.num, &g2),
        );
        let den = poly::mul(
            k,
            &poly::exact_div(k, &a.den, &g2),
            &poly::exact_div(k, &b.den, &g1),
        );
        self.frac(&num, &den).unwrap()
    }
    fn from_int(&self, v: i64) -> Self::Elem {
        self.from_inner(&self.inner.from_int(v))
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.num.is_empty() {
            None
        } else {
            Some(self.frac(&a.den, &a.num).unwrap())
        }
    }
    fn format(&self, a: &Self::Elem) -> String {
        let k = &self.inner;
        let num = poly::format_coeffs(k, &a.num, "t");
        if poly::is_one(k, &a.den) {
            return num;
        }
        let den = poly::format_coeffs(k, &a.den, "t");
        let wrap = |s: String, p: &[K::Elem]| {
            if p.iter().filter(|c| !k.is_zero(c)).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(num, &a.num), wrap(den, &a.den))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.num.is_empty()
    }
}

impl<K: Field> Field for RatFn<K> {
    fn characteristic(&self) -> u64 {
        self.inner.characteristic()
    }
    fn order(&self) -> Option<u64> {
        None
    }
    /// Polynomials are indexed by their base-|K| coefficient digits.
    fn element(&self, mut index: u64) -> Self::Elem {
        let k = &self.inner;
        let q = k.order().unwrap();
        let mut v = Vec::new();
        while index > 0 {
            v.push(k.element(index % q));
            index /= q;
        }
        poly::trim(k, &mut v);
        self.from_poly(&v)
    }
    fn index_of(&self, a: &Self::Elem) -> u64 {
        let q = self.inner.order().unwrap();
        a.num
            .iter()
            .rev()
            .fold(0u64, |acc, c| acc.wrapping_mul(q).wrapping_add(self.inner.index_of(c)))
    }
    fn random(&self, rng: &mut dyn RngCore, degree_bound: usize) -> Self::Elem {
        let k = &self.inner;
        let span = degree_bound as u64 + 1;
        let dn = (rng.next_u64() % span) as usize;
        let dd = (rng.next_u64() % span) as usize;
        let num: Vec<_> = (0..=dn).map(|_| k.random(rng, 0)).collect();
        let mut den: Vec<_> = (0..dd).map(|_| k.random(rng, 0)).collect();
        den.push(k.one());
        self.frac(&num, &den).unwrap()
    }
    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        let vars = self.variables();
        parse_expr(self, s, &vars)
    }
    fn variables(&self) -> Vec<(&'static str, Self::Elem)> {
        let mut v = vec![("t", self.t())];
        for (name, e) in self.inner.variables() {
            v.push((name, self.from_inner(&e)));
        }
        v
    }
    /// Root extraction through factorization of numerator and denominator.
    fn mth_root(&self, a: &Self::Elem, m: u64) -> Option<Self::Elem> {
        let k = &self.inner;
        if m == 1 || a.num.is_empty() {
            return Some(a.clone());
        }
        let fnum = poly::factor(k, &a.num).ok()?;
        let fden = poly::factor(k, &a.den).ok()?;
        let c = k.mth_root(&fnum.unit, m)?;
        let root_of = |fs: &poly::Factorization<K::Elem>| -> Option<Poly<K::Elem>> {
            let mut acc = poly::constant(k, k.one());
            for (g, e) in &fs.factors {
                if !(*e as u64).is_multiple_of(m) {
                    return None;
                }
                acc = poly::mul(k, &acc, &poly::pow(k, g, *e as u64 / m));
            }
            Some(acc)
        };
        let rn = poly::scale(k, &root_of(&fnum)?, &c);
        let rd = root_of(&fden)?;
        self.frac(&rn, &rd).ok()
    }
    fn name(&self) -> String {
        format!("{}(t)", self.inner.name())
    }
    fn bounded_elements(&self, degree_bound: usize) -> Vec<Self::Elem> {
        self.enumerate_bounded(degree_bound)
    }
    fn bounded_count(&self, degree_bound: usize) -> Option<u64> {
        let q = self.inner.order()?;
        let nums = q.checked_pow(degree_bound as u32 + 1)?;
        // monic denominators of degree <= bound: (q^{bound+1} - 1) / (q - 1)
        nums.checked_mul((nums - 1) / (q - 1))
    }
    /// Tame symbol (-1)^{v(a)v(b)} a^{v(b)} b^{-v(a)} reduced at each finite place dividing
    /// a or b; a non-square residue means (a, b) ramifies there.
    fn quaternion_obstruction(&self, a: &Self::Elem, b: &Self::Elem) -> Option<String> {
        let k = &self.inner;
        if k.characteristic() == 2 || self.is_zero(a) || self.is_zero(b) {
            return None;
        }
        let mut places: Vec<Poly<K::Elem>> = Vec::new();
        for p in [&a.num, &a.den, &b.num, &b.den] {
            if p.len() < 2 {
                continue;
            }
            for (g, _) in poly::factor(k, p).ok()?.factors {
                if !places.contains(&g) {
                    places.push(g);
                }
            }
        }
        let q = k.order()?;
        for p in places {
            let (va, vb) = (self.valuation(a, &p), self.valuation(b, &p));
            let sign = if (va * vb) % 2 != 0 { self.from_int(-1) } else { self.one() };
            let w = self.mul(
                &sign,
                &self.mul(&self.pow_signed(a, vb)?, &self.pow_signed(b, -va)?),
            );
            let r = self.residue(&w, &p)?;
            let Some(size) = q.checked_pow(p.len() as u32 - 1) else {
                continue;
            };
            if !poly::is_one(k, &poly::powmod(k, &r, (size - 1) / 2, &p)) {
                return Some(format!("place {}", poly::format_coeffs(k, &p, "t")));
            }
        }
        None
    }
    /// Orders by degree, then by coefficients from the top.
    fn order_key(&self, a: &Self::Elem) -> Vec<u64> {
        let k = &self.inner;
        let deg = |p: &Poly<K::Elem>| p.len() as u64;
        let mut key = vec![deg(&a.num).max(deg(&a.den)), deg(&a.den), deg(&a.num)];
        key.extend(a.den.iter().rev().map(|c| k.index_of(c)));
        key.extend(a.num.iter().rev().map(|c| k.index_of(c)));
        key
    }
}
