//! Exact base fields: prime fields, finite extensions and rational function fields,
//! each carrying a designated primitive n-th root of unity.

mod any;
mod fp;
mod fq;
mod parse;
mod ratfn;
mod rooted;

pub use any::{parse_field, AnyField};
pub use fp::Fp;
pub use fq::Fq;
pub use parse::parse_expr;
pub use ratfn::{RatElem, RatFn};
pub use rooted::RootedField;

use rand::RngCore;
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::Result;

/// A commutative ring with identity whose elements are plain values.
pub trait Ring: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_int(&self, k: i64) -> Self::Elem;
    /// Inverse of a unit, `None` otherwise.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Power with a signed exponent; negative exponents need a unit.
    fn pow_signed(&self, a: &Self::Elem, e: i64) -> Option<Self::Elem> {
        if e >= 0 {
            Some(self.pow(a, e as u64))
        } else {
            self.inv(a).map(|b| self.pow(&b, e.unsigned_abs()))
        }
    }

    fn scale_sum(&self, terms: &[(Self::Elem, Self::Elem)]) -> Self::Elem {
        terms
            .iter()
            .fold(self.zero(), |acc, (a, b)| self.add(&acc, &self.mul(a, b)))
    }
}

/// A field. Finite fields expose a canonical enumeration of their elements.
pub trait Field: Ring {
    fn characteristic(&self) -> u64;

    /// Number of elements, or `None` for an infinite field.
    fn order(&self) -> Option<u64>;

    /// Element with the given canonical index (finite fields only).
    fn element(&self, index: u64) -> Self::Elem;

    /// Canonical index of an element (finite fields only).
    fn index_of(&self, a: &Self::Elem) -> u64;

    /// A random element; `degree_bound` limits numerator/denominator degrees
    /// in function fields and is ignored otherwise.
    fn random(&self, rng: &mut dyn RngCore, degree_bound: usize) -> Self::Elem;

    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;

    /// Some `b` with `b^m = a`, or `None` when `a` is not an m-th power.
    fn mth_root(&self, a: &Self::Elem, m: u64) -> Option<Self::Elem>;

    /// Human-readable name such as `F_13` or `F_3(t)`.
    fn name(&self) -> String;

    /// Named generators accepted by the element parser.
    fn variables(&self) -> Vec<(&'static str, Self::Elem)> {
        Vec::new()
    }

    fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        let bi = self.inv(b).ok_or(crate::error::Error::DivisionByZero)?;
        Ok(self.mul(a, &bi))
    }

    /// Canonical ordering key used to pick deterministic witnesses.
    fn order_key(&self, a: &Self::Elem) -> Vec<u64> {
        vec![self.index_of(a)]
    }

    /// A place at which the quaternion symbol (a, b) is nontrivial, so that
    /// u^2 - a v^2 = b has no solution. Finite fields have no such place.
    fn quaternion_obstruction(&self, _a: &Self::Elem, _b: &Self::Elem) -> Option<String> {
        None
    }

    /// Candidates for bounded searches: every element of a finite field, or the
    /// fractions with numerator and denominator degree at most `degree_bound`.
    fn bounded_elements(&self, _degree_bound: usize) -> Vec<Self::Elem> {
        self.all_elements()
    }

    /// An upper bound on `bounded_elements(degree_bound).len()` computed without
    /// enumerating; `None` on overflow.
    fn bounded_count(&self, _degree_bound: usize) -> Option<u64> {
        self.order()
    }

    fn all_elements(&self) -> Vec<Self::Elem> {
        let q = self.order().expect("enumeration requires a finite field");
        (0..q).map(|i| self.element(i)).collect()
    }
}

/// `mth_root` as a standalone operation: returns `Some(s)` for `m = 1`.
pub fn mth_power_test<F: Field>(f: &F, s: &F::Elem, m: u64) -> Option<F::Elem> {
    if m == 1 {
        return Some(s.clone());
    }
    let b = f.mth_root(s, m)?;
    debug_assert!(f.pow(&b, m) == *s);
    Some(b)
}

#[cfg(test)]
mod tests;
