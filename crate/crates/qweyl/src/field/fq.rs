use rand::RngCore;

use super::{parse_expr, Field, Fp, Ring};
use crate::error::{Error, Result};
use crate::poly;

/// The finite field F_p[z]/(g) for a monic irreducible g of degree k.
/// Elements are coefficient vectors of length k, low degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fq {
    base: Fp,
    modulus: Vec<u32>,
    k: usize,
    order: u64,
}

impl Fq {
    /// Builds the extension; `modulus` is given low-to-high and is made monic.
    pub fn new(p: u32, modulus: &[i64]) -> Result<Self> {
        let base = Fp::new(p)?;
        let mut m: Vec<u32> = modulus.iter().map(|&c| base.reduce(c)).collect();
        poly::trim(&base, &mut m);
        if m.len() < 2 {
            return Err(Error::Parse("modulus must have degree at least 1".into()));
        }
        let lc_inv = base.inv(m.last().unwrap()).unwrap();
        for c in m.iter_mut() {
            *c = base.mul(c, &lc_inv);
        }
        if !poly::is_irreducible(&base, &m) {
            return Err(Error::ReducibleModulus);
        }
        let k = m.len() - 1;
        let order = (p as u64)
            .checked_pow(k as u32)
            .ok_or_else(|| Error::TooLarge("extension field order overflows u64".into()))?;
        Ok(Fq {
            base,
            modulus: m,
            k,
            order,
        })
    }

    /// First monic irreducible polynomial of degree k in canonical order.
    pub fn with_degree(p: u32, k: usize) -> Result<Self> {
        let base = Fp::new(p)?;
        let g = poly::first_irreducible(&base, k);
        let coeffs: Vec<i64> = g.iter().map(|&c| c as i64).collect();
        Fq::new(p, &coeffs)
    }

    pub fn base(&self) -> &Fp {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The class of z.
    pub fn generator(&self) -> Vec<u32> {
        let mut v = vec![0; self.k];
        if self.k == 1 {
            v[0] = self.base.neg(&self.modulus[0]);
        } else {
            v[1] = 1;
        }
        v
    }

    pub fn embed(&self, c: u32) -> Vec<u32> {
        let mut v = vec![0; self.k];
        v[0] = c;
        v
    }

    /// Returns the prime-field value when the element lies in F_p.
    pub fn as_prime(&self, a: &[u32]) -> Option<u32> {
        if a[1..].iter().all(|&c| c == 0) {
            Some(a[0])
        } else {
            None
        }
    }

    fn reduce_full(&self, mut prod: Vec<u32>) -> Vec<u32> {
        let p = &self.base;
        let k = self.k;
        for i in (k..prod.len()).rev() {
            let c = prod[i];
            if c != 0 {
                for j in 0..k {
                    let t = p.mul(&c, &self.modulus[j]);
                    prod[i - k + j] = p.sub(&prod[i - k + j], &t);
                }
                prod[i] = 0;
            }
        }
        prod.truncate(k);
        prod.resize(k, 0);
        prod
    }

    /// Frobenius a -> a^p.
    pub fn frobenius(&self, a: &[u32]) -> Vec<u32> {
        self.pow(&a.to_vec(), self.base.p() as u64)
    }
}

impl Ring for Fq {
    type Elem = Vec<u32>;

    fn zero(&self) -> Vec<u32> {
        vec![0; self.k]
    }
    fn one(&self) -> Vec<u32> {
        self.embed(1)
    }
    fn add(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }
    fn sub(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }
    fn neg(&self, a: &Vec<u32>) -> Vec<u32> {
        a.iter().map(|x| self.base.neg(x)).collect()
    }
    fn mul(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        let p = self.base.p() as u64;
        let mut prod = vec![0u64; 2 * self.k - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        self.reduce_full(prod.into_iter().map(|c| c as u32).collect())
    }
    fn from_int(&self, k: i64) -> Vec<u32> {
        self.embed(self.base.reduce(k))
    }
    fn inv(&self, a: &Vec<u32>) -> Option<Vec<u32>> {
        if self.is_zero(a) {
            return None;
        }
        Some(self.pow(a, self.order - 2))
    }
    fn format(&self, a: &Vec<u32>) -> String {
        poly::format_coeffs(&self.base, a, "z")
    }
}

impl Field for Fq {
    fn characteristic(&self) -> u64 {
        self.base.p() as u64
    }
    fn order(&self) -> Option<u64> {
        Some(self.order)
    }
    fn element(&self, mut index: u64) -> Vec<u32> {
        let p = self.base.p() as u64;
        let mut v = vec![0; self.k];
        for c in v.iter_mut() {
            *c = (index % p) as u32;
            index /= p;
        }
        v
    }
    fn index_of(&self, a: &Vec<u32>) -> u64 {
        let p = self.base.p() as u64;
        a.iter().rev().fold(0u64, |acc, &c| acc * p + c as u64)
    }
    fn random(&self, rng: &mut dyn RngCore, _degree_bound: usize) -> Vec<u32> {
        (0..self.k)
            .map(|_| (rng.next_u64() % self.base.p() as u64) as u32)
            .collect()
    }
    fn parse_elem(&self, s: &str) -> Result<Vec<u32>> {
        parse_expr(self, s, &[("z", self.generator())])
    }
    fn variables(&self) -> Vec<(&'static str, Vec<u32>)> {
        vec![("z", self.generator())]
    }
    fn mth_root(&self, a: &Vec<u32>, m: u64) -> Option<Vec<u32>> {
        poly::finite_mth_root(self, a, m)
    }
    fn name(&self) -> String {
        format!("F_{}^{}", self.base.p(), self.k)
    }
}
