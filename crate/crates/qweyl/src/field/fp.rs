use rand::RngCore;

use super::{parse_expr, Field, Ring};
use crate::error::{Error, Result};

/// The prime field F_p with residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u32,
}

impl Fp {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || !is_prime(p as u64) {
            return Err(Error::Parse(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::Parse(format!("prime {p} is too large")));
        }
        Ok(Fp { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, k: i64) -> u32 {
        k.rem_euclid(self.p as i64) as u32
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring for Fp {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn from_int(&self, k: i64) -> u32 {
        self.reduce(k)
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let qt = r0 / r1;
            (r0, r1) = (r1, r0 - qt * r1);
            (t0, t1) = (t1, t0 - qt * t1);
        }
        Some(self.reduce(t0))
    }
    fn format(&self, a: &u32) -> String {
        a.to_string()
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
}

impl Field for Fp {
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn order(&self) -> Option<u64> {
        Some(self.p as u64)
    }
    fn element(&self, index: u64) -> u32 {
        (index % self.p as u64) as u32
    }
    fn index_of(&self, a: &u32) -> u64 {
        *a as u64
    }
    fn random(&self, rng: &mut dyn RngCore, _degree_bound: usize) -> u32 {
        (rng.next_u64() % self.p as u64) as u32
    }
    fn parse_elem(&self, s: &str) -> Result<u32> {
        parse_expr(self, s, &[])
    }
    fn mth_root(&self, a: &u32, m: u64) -> Option<u32> {
        crate::poly::finite_mth_root(self, a, m)
    }
    fn name(&self) -> String {
        format!("F_{}", self.p)
    }
}
