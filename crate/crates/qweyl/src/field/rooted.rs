use super::Field;
use crate::error::{Error, Result};

/// A field together with a designated primitive n-th root of unity q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedField<F: Field> {
    pub field: F,
    pub n: usize,
    pub q: F::Elem,
    q_pows: Vec<F::Elem>,
}

impl<F: Field> RootedField<F> {
    /// Validates that q has multiplicative order exactly n.
    pub fn new(field: F, n: usize, q: F::Elem) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("n must be positive".into()));
        }
        let p = field.characteristic();
        if (n as u64).is_multiple_of(p) {
            return Err(Error::CharacteristicDividesN { p, n });
        }
        let mut q_pows = vec![field.one()];
        for k in 1..=n {
            let next = field.mul(&q_pows[k - 1], &q);
            if k < n && field.is_one(&next) {
                return Err(Error::NotPrimitiveRoot { n, k });
            }
            q_pows.push(next);
        }
        if !field.is_one(&q_pows[n]) {
            return Err(Error::Parse(format!(
                "q = {} does not satisfy q^{n} = 1",
                field.format(&q)
            )));
        }
        q_pows.pop();
        Ok(RootedField {
            field,
            n,
            q,
            q_pows,
        })
    }

    /// q^i for any integer i.
    pub fn q_pow(&self, i: i64) -> F::Elem {
        self.q_pows[i.rem_euclid(self.n as i64) as usize].clone()
    }

    pub fn q_inv(&self) -> F::Elem {
        self.q_pow(-1)
    }

    /// The same field with root q^k, which must again be primitive of order n / gcd(n, k)
    /// when `order` is given as that quotient.
    pub fn with_root(&self, order: usize, k: i64) -> Result<RootedField<F>> {
        RootedField::new(self.field.clone(), order, self.q_pow(k))
    }

    pub fn describe(&self) -> String {
        format!(
            "{} with n={}, q={}",
            self.field.name(),
            self.n,
            self.field.format(&self.q)
        )
    }
}
