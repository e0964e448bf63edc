//! Normal forms in the quantum plane, the quantum Weyl algebra and their localizations.
//!
//! Every element is a finite sum of monomials `h^i v_j` where `v_j = x^j` for `j >= 0`
//! and, in the quantum Weyl algebra, `v_{-m} = y^m`. In the localized algebras a
//! negative grade is a power of `x^{-1}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{parse_expr, Field, Ring, RootedField};
use crate::poly::{self, Poly};

mod factor;
mod identities;
mod words;

pub use factor::*;
pub use identities::*;
pub use words::*;

#[cfg(test)]
mod tests;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Tag {
    /// K[h][x; sigma], the quantum plane xh = q hx.
    Plane,
    /// The quantum Weyl algebra xy - q yx = 1.
    Weyl,
    /// K[h][x^{±1}; sigma].
    LaurentX,
    /// The quantum torus K[h^{±1}][x^{±1}; sigma].
    Torus,
}

impl Tag {
    pub const ALL: [Tag; 4] = [Tag::Plane, Tag::Weyl, Tag::LaurentX, Tag::Torus];

    pub fn name(self) -> &'static str {
        match self {
            Tag::Plane => "A",
            Tag::Weyl => "A1",
            Tag::LaurentX => "CA",
            Tag::Torus => "B",
        }
    }

    pub fn parse(s: &str) -> Result<Tag> {
        match s.trim() {
            "A" | "plane" | "Plane" => Ok(Tag::Plane),
            "A1" | "weyl" | "Weyl" => Ok(Tag::Weyl),
            "CA" | "laurent" | "LaurentX" => Ok(Tag::LaurentX),
            "B" | "torus" | "Torus" => Ok(Tag::Torus),
            other => Err(Error::Parse(format!("unknown algebra '{other}' (expected A, A1, CA or B)"))),
        }
    }

    pub fn h_invertible(self) -> bool {
        self == Tag::Torus
    }

    pub fn x_invertible(self) -> bool {
        matches!(self, Tag::LaurentX | Tag::Torus)
    }

    pub fn has_y(self) -> bool {
        self == Tag::Weyl
    }
}

impl std::fmt::Display for Tag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Coefficients keyed by (h exponent, grade).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GwaElem<E> {
    pub tag: Tag,
    pub terms: BTreeMap<(i64, i64), E>,
}

impl<E> GwaElem<E> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Grades that carry a nonzero coefficient.
    pub fn grades(&self) -> Vec<i64> {
        let mut g: Vec<i64> = self.terms.keys().map(|k| k.1).collect();
        g.sort_unstable();
        g.dedup();
        g
    }
}

#[derive(Clone, Debug)]
pub struct Gwa<F: Field> {
    pub tag: Tag,
    pub root: RootedField<F>,
    /// When set, h^n is replaced by this nonzero scalar, so the coefficient ring
    /// becomes K[h]/(h^n - c).
    pub h_power: Option<F::Elem>,
    /// Printed name of the grading generator.
    pub x_name: &'static str,
    c1: F::Elem,
}

impl<F: Field> Gwa<F> {
    pub fn new(tag: Tag, root: RootedField<F>) -> Result<Self> {
        if root.n < 2 {
            return Err(Error::HypothesisFailed("q must be a primitive n-th root with n >= 2".into()));
        }
        let f = &root.field;
        let c1 = f.div(&f.one(), &f.sub(&root.q, &f.one()))?;
        Ok(Gwa {
            tag,
            root,
            h_power: None,
            x_name: "x",
            c1,
        })
    }

    /// The same algebra over K[h]/(h^n - c).
    pub fn with_h_power(mut self, c: F::Elem) -> Result<Self> {
        if self.field().is_zero(&c) {
            return Err(Error::ZeroInput);
        }
        self.h_power = Some(c);
        Ok(self)
    }

    pub fn field(&self) -> &F {
        &self.root.field
    }

    pub fn n(&self) -> usize {
        self.root.n
    }

    /// 1/(q - 1).
    pub fn c1(&self) -> &F::Elem {
        &self.c1
    }

    /// (q - 1)^{-n}, the constant in rt = (-1)^{n-1}(s - (q-1)^{-n}).
    pub fn c_n(&self) -> F::Elem {
        self.field().pow(&self.c1, self.n() as u64)
    }

    pub fn same_algebra(&self, other: &Gwa<F>) -> bool {
        self.tag == other.tag
            && self.root.n == other.root.n
            && self.root.q == other.root.q
            && self.field().name() == other.field().name()
            && self.h_power == other.h_power
    }

    pub fn describe(&self) -> String {
        match &self.h_power {
            None => format!("{} over {}", self.tag, self.root.describe()),
            Some(c) => format!(
                "{} over {} with h^{} = {}",
                self.tag,
                self.root.describe(),
                self.n(),
                self.field().format(c)
            ),
        }
    }

    fn allowed(&self, i: i64, j: i64) -> bool {
        (i >= 0 || self.tag.h_invertible() || self.h_power.is_some())
            && (j >= 0 || self.tag.has_y() || self.tag.x_invertible())
    }

    fn insert(&self, acc: &mut BTreeMap<(i64, i64), F::Elem>, i: i64, j: i64, c: F::Elem) {
        let f = self.field();
        if f.is_zero(&c) {
            return;
        }
        let (i, c) = match &self.h_power {
            Some(hp) => {
                let n = self.n() as i64;
                let k = i.div_euclid(n);
                let scale = f.pow_signed(hp, k).expect("h^n is a nonzero constant");
                (i.rem_euclid(n), f.mul(&c, &scale))
            }
            None => (i, c),
        };
        let slot = acc.entry((i, j)).or_insert_with(|| f.zero());
        *slot = f.add(slot, &c);
        if f.is_zero(slot) {
            acc.remove(&(i, j));
        }
    }

    fn from_map(&self, terms: BTreeMap<(i64, i64), F::Elem>) -> GwaElem<F::Elem> {
        GwaElem { tag: self.tag, terms }
    }

    pub fn zero(&self) -> GwaElem<F::Elem> {
        self.from_map(BTreeMap::new())
    }

    pub fn one(&self) -> GwaElem<F::Elem> {
        self.scalar(&self.field().one())
    }

    pub fn scalar(&self, c: &F::Elem) -> GwaElem<F::Elem> {
        self.mono_unchecked(c.clone(), 0, 0)
    }

    fn mono_unchecked(&self, c: F::Elem, i: i64, j: i64) -> GwaElem<F::Elem> {
        let mut acc = BTreeMap::new();
        self.insert(&mut acc, i, j, c);
        self.from_map(acc)
    }

    /// c h^i v_j; fails when the monomial does not exist in this algebra.
    pub fn monomial(&self, c: F::Elem, i: i64, j: i64) -> Result<GwaElem<F::Elem>> {
        if !self.allowed(i, j) {
            return Err(Error::HypothesisFailed(format!(
                "h^{i} v_{j} is not a monomial of {}",
                self.tag
            )));
        }
        Ok(self.mono_unchecked(c, i, j))
    }

    pub fn h(&self) -> GwaElem<F::Elem> {
        self.mono_unchecked(self.field().one(), 1, 0)
    }

    pub fn x(&self) -> GwaElem<F::Elem> {
        self.mono_unchecked(self.field().one(), 0, 1)
    }

    /// y in the quantum Weyl algebra; x^{-1} in the localized algebras.
    pub fn y(&self) -> Result<GwaElem<F::Elem>> {
        self.monomial(self.field().one(), 0, -1)
    }

    pub fn h_inv(&self) -> Result<GwaElem<F::Elem>> {
        self.monomial(self.field().one(), -1, 0)
    }

    /// s = h^n.
    pub fn s(&self) -> GwaElem<F::Elem> {
        self.mono_unchecked(self.field().one(), self.n() as i64, 0)
    }

    /// t = x^n.
    pub fn t(&self) -> GwaElem<F::Elem> {
        self.mono_unchecked(self.field().one(), 0, self.n() as i64)
    }

    /// r = y^n.
    pub fn r(&self) -> Result<GwaElem<F::Elem>> {
        self.monomial(self.field().one(), 0, -(self.n() as i64))
    }

    /// The element sum c_k h^k.
    pub fn from_h_poly(&self, p: &[F::Elem]) -> GwaElem<F::Elem> {
        let mut acc = BTreeMap::new();
        for (k, c) in p.iter().enumerate() {
            self.insert(&mut acc, k as i64, 0, c.clone());
        }
        self.from_map(acc)
    }

    /// Coefficient polynomial in h (exponents shifted by `lowest`) of grade `j`.
    pub fn h_poly_at(&self, u: &GwaElem<F::Elem>, j: i64) -> (i64, Poly<F::Elem>) {
        let f = self.field();
        let exps: Vec<i64> = u.terms.keys().filter(|k| k.1 == j).map(|k| k.0).collect();
        let lowest = exps.iter().copied().min().unwrap_or(0);
        let mut p = Vec::new();
        for ((i, g), c) in &u.terms {
            if *g != j {
                continue;
            }
            let k = (i - lowest) as usize;
            if p.len() <= k {
                p.resize(k + 1, f.zero());
            }
            p[k] = c.clone();
        }
        (lowest, p)
    }

    /// sigma^k(a) = q^k h - 1/(q-1).
    fn sigma_a(&self, k: i64) -> Poly<F::Elem> {
        vec![self.field().neg(&self.c1), self.root.q_pow(k)]
    }

    fn product_of(&self, ks: impl Iterator<Item = i64>) -> Poly<F::Elem> {
        let f = self.field();
        ks.fold(vec![f.one()], |acc, k| poly::mul(f, &acc, &self.sigma_a(k)))
    }

    /// v_j v_l = P(h) v_{j+l}; P = 1 outside the quantum Weyl algebra.
    pub fn pair(&self, j: i64, l: i64) -> Poly<F::Elem> {
        let f = self.field();
        if !self.tag.has_y() || (j >= 0) == (l >= 0) || j == 0 || l == 0 {
            return vec![f.one()];
        }
        if j > 0 {
            let m = -l;
            if m <= j {
                self.product_of((1..=m).map(|i| i + j - m))
            } else {
                self.product_of(1..=j)
            }
        } else {
            let m = -j;
            if l <= m {
                self.product_of((0..l).map(|i| -i - (m - l)))
            } else {
                self.product_of((0..m).map(|i| -i))
            }
        }
    }

    fn check(&self, u: &GwaElem<F::Elem>) -> Result<()> {
        if u.tag != self.tag {
            return Err(Error::MixedAlgebras);
        }
        Ok(())
    }

    pub fn checked_add(&self, u: &GwaElem<F::Elem>, v: &GwaElem<F::Elem>) -> Result<GwaElem<F::Elem>> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.add(u, v))
    }

    pub fn checked_mul(&self, u: &GwaElem<F::Elem>, v: &GwaElem<F::Elem>) -> Result<GwaElem<F::Elem>> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.mul(u, v))
    }

    pub fn add(&self, u: &GwaElem<F::Elem>, v: &GwaElem<F::Elem>) -> GwaElem<F::Elem> {
        let mut acc = u.terms.clone();
        for (&(i, j), c) in &v.terms {
            self.insert(&mut acc, i, j, c.clone());
        }
        self.from_map(acc)
    }

    pub fn scale(&self, u: &GwaElem<F::Elem>, c: &F::Elem) -> GwaElem<F::Elem> {
        let f = self.field();
        let mut acc = BTreeMap::new();
        for (&(i, j), d) in &u.terms {
            self.insert(&mut acc, i, j, f.mul(c, d));
        }
        self.from_map(acc)
    }

    pub fn neg(&self, u: &GwaElem<F::Elem>) -> GwaElem<F::Elem> {
        self.scale(u, &self.field().neg(&self.field().one()))
    }

    pub fn sub(&self, u: &GwaElem<F::Elem>, v: &GwaElem<F::Elem>) -> GwaElem<F::Elem> {
        self.add(u, &self.neg(v))
    }

    pub fn mul(&self, u: &GwaElem<F::Elem>, v: &GwaElem<F::Elem>) -> GwaElem<F::Elem> {
        let f = self.field();
        let mut acc = BTreeMap::new();
        for (&(i, j), c) in &u.terms {
            for (&(k, l), d) in &v.terms {
                let coef = f.mul(&f.mul(c, d), &self.root.q_pow(j * k));
                let p = self.pair(j, l);
                for (e, pe) in p.iter().enumerate() {
                    if !f.is_zero(pe) {
                        self.insert(&mut acc, i + k + e as i64, j + l, f.mul(&coef, pe));
                    }
                }
            }
        }
        self.from_map(acc)
    }

    pub fn mul_all(&self, factors: &[GwaElem<F::Elem>]) -> GwaElem<F::Elem> {
        factors.iter().fold(self.one(), |acc, u| self.mul(&acc, u))
    }

    pub fn pow(&self, u: &GwaElem<F::Elem>, e: u64) -> GwaElem<F::Elem> {
        Ring::pow(self, u, e)
    }

    pub fn commutator(&self, u: &GwaElem<F::Elem>, v: &GwaElem<F::Elem>) -> GwaElem<F::Elem> {
        self.sub(&self.mul(u, v), &self.mul(v, u))
    }

    /// Inverse of a single-term unit c h^a v_b; (c h^a x^b)^{-1} = c^{-1} q^{ab} h^{-a} x^{-b}.
    pub fn inverse(&self, u: &GwaElem<F::Elem>) -> Option<GwaElem<F::Elem>> {
        if u.terms.len() != 1 {
            return None;
        }
        let (&(a, b), c) = u.terms.iter().next().unwrap();
        let h_ok = a == 0 || self.tag.h_invertible() || self.h_power.is_some();
        let x_ok = b == 0 || self.tag.x_invertible();
        if !h_ok || !x_ok {
            return None;
        }
        let f = self.field();
        let ci = f.mul(&f.inv(c)?, &self.root.q_pow(a * b));
        let w = self.mono_unchecked(ci, -a, -b);
        debug_assert_eq!(self.mul(u, &w), self.one());
        Some(w)
    }

    /// Generators bound by the element parser.
    pub fn variables(&self) -> Vec<(&'static str, GwaElem<F::Elem>)> {
        let mut vars = vec![("h", self.h()), (self.x_name, self.x())];
        if self.tag.has_y() {
            vars.push(("y", self.y().unwrap()));
        }
        for (name, v) in self.field().variables() {
            vars.push((name, self.scalar(&v)));
        }
        vars
    }

    /// Parses text such as `h^2*x + 3*y` or `x^-1*h`.
    pub fn parse(&self, s: &str) -> Result<GwaElem<F::Elem>> {
        parse_expr(self, s, &self.variables())
    }

    fn format_mono(&self, i: i64, j: i64) -> String {
        let mut parts = Vec::new();
        match i {
            0 => {}
            1 => parts.push("h".to_string()),
            _ => parts.push(format!("h^{i}")),
        }
        let (name, e) = if j < 0 && self.tag.has_y() {
            ("y", -j)
        } else {
            (self.x_name, j)
        };
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
        parts.join("*")
    }

    pub fn format_elem(&self, u: &GwaElem<F::Elem>) -> String {
        let f = self.field();
        if u.terms.is_empty() {
            return "0".into();
        }
        let mut keys: Vec<_> = u.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| (j.abs(), -j, i));
        let parts: Vec<String> = keys
            .into_iter()
            .map(|(i, j)| {
                let c = &u.terms[&(i, j)];
                let m = self.format_mono(i, j);
                let mut cs = f.format(c);
                if m.is_empty() {
                    return cs;
                }
                if f.is_one(c) {
                    return m;
                }
                if cs.contains(['+', '-', '/', ' ']) {
                    cs = format!("({cs})");
                }
                format!("{cs}*{m}")
            })
            .collect();
        parts.join(" + ")
    }
}

impl<F: Field> Ring for Gwa<F> {
    type Elem = GwaElem<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Gwa::zero(self)
    }
    fn one(&self) -> Self::Elem {
        Gwa::one(self)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Gwa::add(self, a, b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Gwa::sub(self, a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Gwa::neg(self, a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Gwa::mul(self, a, b)
    }
    fn from_int(&self, k: i64) -> Self::Elem {
        self.scalar(&self.field().from_int(k))
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.inverse(a)
    }
    fn format(&self, a: &Self::Elem) -> String {
        self.format_elem(a)
    }
}
