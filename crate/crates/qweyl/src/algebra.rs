//! Finite-dimensional associative algebras given by structure constants.

use rand::SeedableRng;
use rand::RngCore;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{self, Matrix};
use crate::poly;

/// Triples checked exhaustively up to this dimension, sampled above it.
const FULL_ASSOC_DIM: usize = 64;
const SAMPLED_TRIPLES: usize = 4096;

type Sparse<E> = Vec<(usize, E)>;

#[derive(Clone, Debug)]
pub struct StructureAlgebra<F: Field> {
    pub field: F,
    pub labels: Vec<String>,
    table: Vec<Sparse<F::Elem>>,
    unit: Vec<F::Elem>,
}

impl<F: Field> StructureAlgebra<F> {
    /// Builds the algebra with `prod(i, j)` the coordinate vector of b_i b_j and checks
    /// the unit axioms and associativity.
    pub fn new(
        field: F,
        labels: Vec<String>,
        unit: Vec<F::Elem>,
        prod: impl FnMut(usize, usize) -> Vec<F::Elem>,
    ) -> Result<Self> {
        let a = Self::new_unchecked(field, labels, unit, prod);
        a.check_unit()?;
        a.check_associative()?;
        Ok(a)
    }

    pub fn new_unchecked(
        field: F,
        labels: Vec<String>,
        unit: Vec<F::Elem>,
        mut prod: impl FnMut(usize, usize) -> Vec<F::Elem>,
    ) -> Self {
        let n = labels.len();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = prod(i, j);
                assert_eq!(v.len(), n, "product vector has the wrong length");
                table.push(
                    v.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !field.is_zero(c))
                        .collect(),
                );
            }
        }
        StructureAlgebra {
            field,
            labels,
            table,
            unit,
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn zero(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn one(&self) -> Vec<F::Elem> {
        self.unit.clone()
    }

    pub fn basis(&self, i: usize) -> Vec<F::Elem> {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    pub fn scalar(&self, c: &F::Elem) -> Vec<F::Elem> {
        self.scale(&self.unit, c)
    }

    /// Raw structure constant row for b_i b_j.
    pub fn product_of_basis(&self, i: usize, j: usize) -> Vec<F::Elem> {
        let mut v = self.zero();
        for (k, c) in &self.table[i * self.dim() + j] {
            v[*k] = c.clone();
        }
        v
    }

    pub fn add(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.sub(x, y)).collect()
    }

    pub fn scale(&self, a: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
        a.iter().map(|x| self.field.mul(x, c)).collect()
    }

    pub fn is_zero(&self, a: &[F::Elem]) -> bool {
        a.iter().all(|x| self.field.is_zero(x))
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let n = self.dim();
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k, c) in &self.table[i * n + j] {
                    out[*k] = f.add(&out[*k], &f.mul(&xy, c));
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[F::Elem], e: u64) -> Vec<F::Elem> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn commutator(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim() {
            let b = self.basis(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::NoUnit(i));
            }
        }
        Ok(())
    }

    fn check_triple(&self, i: usize, j: usize, k: usize) -> Result<()> {
        let bi = self.basis(i);
        let bk = self.basis(k);
        let left = self.mul(&self.product_of_basis(i, j), &bk);
        let right = self.mul(&bi, &self.product_of_basis(j, k));
        if left != right {
            return Err(Error::NotAssociative(i, j, k));
        }
        Ok(())
    }

    pub fn check_associative(&self) -> Result<()> {
        let n = self.dim();
        if n <= FULL_ASSOC_DIM {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        self.check_triple(i, j, k)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0xa55);
            for _ in 0..SAMPLED_TRIPLES {
                let pick = |r: &mut ChaCha8Rng| (r.next_u64() % n as u64) as usize;
                let (i, j, k) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
                self.check_triple(i, j, k)?;
            }
        }
        Ok(())
    }

    /// Matrix of x -> a x (columns are images of basis vectors).
    pub fn left_matrix(&self, a: &[F::Elem]) -> Matrix<F::Elem> {
        let cols: Vec<_> = (0..self.dim()).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_fn(self.dim(), self.dim(), |i, j| cols[j][i].clone())
    }

    pub fn right_matrix(&self, a: &[F::Elem]) -> Matrix<F::Elem> {
        let cols: Vec<_> = (0..self.dim()).map(|j| self.mul(&self.basis(j), a)).collect();
        Matrix::from_fn(self.dim(), self.dim(), |i, j| cols[j][i].clone())
    }

    /// Solutions x of x g = g x for all g in `gens`.
    pub fn centralizer(&self, gens: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
        let n = self.dim();
        let mut rows = Vec::new();
        for g in gens {
            let cols: Vec<_> = (0..n).map(|k| self.commutator(&self.basis(k), g)).collect();
            for l in 0..n {
                rows.push((0..n).map(|k| cols[k][l].clone()).collect::<Vec<_>>());
            }
        }
        let m = Matrix::from_fn(rows.len(), n, |i, j| rows[i][j].clone());
        matrix::nullspace(&self.field, &m)
    }

    pub fn centre(&self) -> Vec<Vec<F::Elem>> {
        let gens: Vec<_> = (0..self.dim()).map(|i| self.basis(i)).collect();
        self.centralizer(&gens)
    }

    /// Echelon basis of the span of `vs`.
    pub fn span(&self, vs: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
        matrix::span_basis(&self.field, vs, self.dim())
    }

    /// Dimension of the unital subalgebra generated by `gens`.
    pub fn subalgebra_dim(&self, gens: &[Vec<F::Elem>]) -> usize {
        self.subalgebra(gens).len()
    }

    pub fn subalgebra(&self, gens: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
        let mut basis = self.span(&[vec![self.one()], gens.to_vec()].concat());
        loop {
            let mut all = basis.clone();
            for b in &basis {
                for g in gens {
                    all.push(self.mul(b, g));
                }
            }
            let next = self.span(&all);
            if next.len() == basis.len() {
                return basis;
            }
            basis = next;
        }
    }

    /// Echelon basis of the two-sided ideal generated by `gens`.
    pub fn ideal(&self, gens: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
        let n = self.dim();
        let mut basis = self.span(gens);
        loop {
            let mut all = basis.clone();
            for v in &basis {
                for i in 0..n {
                    let b = self.basis(i);
                    all.push(self.mul(&b, v));
                    all.push(self.mul(v, &b));
                }
            }
            let next = self.span(&all);
            if next.len() == basis.len() {
                return basis;
            }
            basis = next;
        }
    }

    /// Basis of e A f.
    pub fn corner(&self, e: &[F::Elem], f: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        let vs: Vec<_> = (0..self.dim())
            .map(|i| self.mul(&self.mul(e, &self.basis(i)), f))
            .collect();
        self.span(&vs)
    }

    /// A / I for an ideal with echelon basis `ideal`; returns the quotient and the
    /// indices of the original basis vectors that survive as its basis.
    pub fn quotient(&self, ideal: &[Vec<F::Elem>]) -> Result<(StructureAlgebra<F>, Vec<usize>)> {
        let f = &self.field;
        let ideal = self.span(ideal);
        let pivots: Vec<usize> = ideal
            .iter()
            .map(|r| r.iter().position(|c| !f.is_zero(c)).unwrap())
            .collect();
        let keep: Vec<usize> = (0..self.dim()).filter(|c| !pivots.contains(c)).collect();
        if keep.is_empty() {
            return Err(Error::DimensionMismatch("quotient by the whole algebra".into()));
        }
        let reduce = |v: &[F::Elem]| -> Vec<F::Elem> {
            let mut v = v.to_vec();
            for (row, &p) in ideal.iter().zip(&pivots) {
                if !f.is_zero(&v[p]) {
                    let c = v[p].clone();
                    for (x, y) in v.iter_mut().zip(row) {
                        *x = f.sub(x, &f.mul(&c, y));
                    }
                }
            }
            keep.iter().map(|&k| v[k].clone()).collect()
        };
        let labels = keep.iter().map(|&k| self.labels[k].clone()).collect();
        let unit = reduce(&self.unit);
        let q = StructureAlgebra::new_unchecked(f.clone(), labels, unit, |i, j| {
            reduce(&self.product_of_basis(keep[i], keep[j]))
        });
        q.check_unit()?;
        Ok((q, keep))
    }

    /// Coordinates of `v` in the basis `basis`, which must be linearly independent.
    pub fn coords(&self, basis: &[Vec<F::Elem>], v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        let m = Matrix::from_fn(self.dim(), basis.len(), |i, j| basis[j][i].clone());
        let x = matrix::solve(&self.field, &m, v)?;
        let back = matrix::mat_vec(&self.field, &m, &x);
        if back != v {
            return Err(Error::Singular);
        }
        Ok(x)
    }

    /// The same algebra presented on a new basis.
    pub fn change_basis(
        &self,
        basis: &[Vec<F::Elem>],
        labels: Vec<String>,
    ) -> Result<StructureAlgebra<F>> {
        if basis.len() != self.dim() || self.span(basis).len() != self.dim() {
            return Err(Error::DimensionMismatch("new basis does not span".into()));
        }
        let p = Matrix::from_fn(self.dim(), self.dim(), |i, j| basis[j][i].clone());
        let pinv = matrix::inv(&self.field, &p)?;
        let to_new = |v: &[F::Elem]| matrix::mat_vec(&self.field, &pinv, v);
        let unit = to_new(&self.unit);
        Ok(StructureAlgebra::new_unchecked(
            self.field.clone(),
            labels,
            unit,
            |i, j| to_new(&self.mul(&basis[i], &basis[j])),
        ))
    }

    /// Expresses an element given in a new basis back in the original coordinates.
    pub fn combine(&self, basis: &[Vec<F::Elem>], coeffs: &[F::Elem]) -> Vec<F::Elem> {
        let mut acc = self.zero();
        for (b, c) in basis.iter().zip(coeffs) {
            if !self.field.is_zero(c) {
                acc = self.add(&acc, &self.scale(b, c));
            }
        }
        acc
    }

    /// Dimension of the span of all x -> b_i x b_j.
    pub fn multiplication_algebra_dim(&self) -> usize {
        let n = self.dim();
        let lefts: Vec<_> = (0..n).map(|i| self.left_matrix(&self.basis(i))).collect();
        let rights: Vec<_> = (0..n).map(|i| self.right_matrix(&self.basis(i))).collect();
        let mut rows = Vec::with_capacity(n * n);
        for l in &lefts {
            for r in &rights {
                rows.push(matrix::mul(&self.field, l, r).unwrap().data);
            }
        }
        matrix::span_basis(&self.field, &rows, n * n).len()
    }

    /// Whether the commutative algebra spanned by `basis` (closed under products) is a field.
    /// Finite fields only: decided by minimal polynomials of sampled elements.
    pub fn commutative_span_is_field(&self, basis: &[Vec<F::Elem>]) -> Result<bool> {
        let z = basis.len();
        if z == 1 {
            return Ok(true);
        }
        if !self.field.is_finite() {
            return Err(Error::UnsupportedField(
                "field test for a centre of dimension > 1 needs a finite base".into(),
            ));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0xce17);
        for _ in 0..256 {
            let coeffs: Vec<_> = (0..z).map(|_| self.field.random(&mut rng, 0)).collect();
            let u = self.combine(basis, &coeffs);
            let mu = self.minimal_polynomial(&u);
            let fac = poly::factor(&self.field, &mu)?;
            if !fac.is_irreducible() {
                return Ok(false);
            }
            if mu.len() - 1 == z {
                return Ok(true);
            }
        }
        Err(Error::HypothesisFailed("no generator of the centre found".into()))
    }

    /// Minimal polynomial of an element, by linear dependence of its powers.
    pub fn minimal_polynomial(&self, a: &[F::Elem]) -> poly::Poly<F::Elem> {
        let f = &self.field;
        let mut powers = vec![self.one()];
        loop {
            let next = self.mul(powers.last().unwrap(), a);
            let k = powers.len();
            let m = Matrix::from_fn(self.dim(), k, |i, j| powers[j][i].clone());
            if let Ok(x) = matrix::solve(f, &m, &next) {
                if matrix::mat_vec(f, &m, &x) == next {
                    let mut p: Vec<F::Elem> = x.iter().map(|c| f.neg(c)).collect();
                    p.push(f.one());
                    return p;
                }
            }
            powers.push(next);
        }
    }

    /// Simplicity: the centre Z is a field and the multiplication algebra is all of End_Z(A).
    pub fn is_simple(&self) -> Result<bool> {
        let z = self.centre();
        if !self.commutative_span_is_field(&z)? {
            return Ok(false);
        }
        let n = self.dim();
        Ok(self.multiplication_algebra_dim() * z.len() == n * n)
    }

    /// Matrix units E_ij from orthogonal idempotents with one-dimensional corners.
    pub fn matrix_units_from_idempotents(
        &self,
        es: &[Vec<F::Elem>],
    ) -> Result<Vec<Vec<Vec<F::Elem>>>> {
        let f = &self.field;
        let n = es.len();
        if n * n != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{n} idempotents in an algebra of dimension {}",
                self.dim()
            )));
        }
        let mut sum = self.zero();
        for (i, a) in es.iter().enumerate() {
            for (j, b) in es.iter().enumerate() {
                let p = self.mul(a, b);
                let ok = if i == j { p == *a } else { self.is_zero(&p) };
                if !ok {
                    return Err(Error::NotOrthogonal(format!("e_{i} e_{j}")));
                }
            }
            if self.is_zero(a) {
                return Err(Error::NotOrthogonal(format!("e_{i} = 0")));
            }
            sum = self.add(&sum, a);
        }
        if sum != self.unit {
            return Err(Error::NotOrthogonal("idempotents do not sum to 1".into()));
        }
        let corner = |i: usize, j: usize| -> Result<Vec<F::Elem>> {
            let c = self.corner(&es[i], &es[j]);
            if c.len() != 1 {
                return Err(Error::CornerNotOneDimensional(i, j));
            }
            Ok(c[0].clone())
        };
        let mut row0 = vec![es[0].clone()];
        let mut col0 = vec![es[0].clone()];
        for j in 1..n {
            let e0j = corner(0, j)?;
            let w = corner(j, 0)?;
            // e0j w lies in e_0 A e_0 = F e_0
            let p = self.mul(&e0j, &w);
            let k = es[0].iter().position(|c| !f.is_zero(c)).unwrap();
            let c = f.div(&p[k], &es[0][k])?;
            if self.scale(&es[0], &c) != p {
                return Err(Error::CornerNotOneDimensional(0, 0));
            }
            let ci = f.inv(&c).ok_or(Error::CornerNotOneDimensional(j, 0))?;
            row0.push(e0j);
            col0.push(self.scale(&w, &ci));
        }
        let units: Vec<Vec<Vec<F::Elem>>> = (0..n)
            .map(|i| (0..n).map(|j| self.mul(&col0[i], &row0[j])).collect())
            .collect();
        if !self.verify_matrix_units(&units) {
            return Err(Error::HypothesisFailed("matrix unit relations fail".into()));
        }
        Ok(units)
    }

    /// All n^4 relations E_ij E_kl = delta_jk E_il, sum E_ii = 1, and spanning.
    pub fn verify_matrix_units(&self, units: &[Vec<Vec<F::Elem>>]) -> bool {
        let n = units.len();
        let zero = self.zero();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let p = self.mul(&units[i][j], &units[k][l]);
                        let want = if j == k { &units[i][l] } else { &zero };
                        if p != *want {
                            return false;
                        }
                    }
                }
            }
        }
        let diag = (0..n).fold(self.zero(), |acc, i| self.add(&acc, &units[i][i]));
        let all: Vec<_> = units.iter().flatten().cloned().collect();
        diag == self.unit && self.span(&all).len() == n * n && n * n == self.dim()
    }

    /// Matrix units from an element a with a^n = 0 and a^{n-1} != 0, where dim A = n^2.
    /// A rank-one idempotent p = a^{n-1} w is found from a^{n-1} w a^{n-1} = a^{n-1};
    /// the left ideal A p carries a Jordan chain v, a v, ..., a^{n-1} v whose coordinate
    /// projections are the diagonal matrix units.
    pub fn nilpotent_matrix_criterion(
        &self,
        a: &[F::Elem],
        n: usize,
    ) -> Result<Vec<Vec<Vec<F::Elem>>>> {
        let f = &self.field;
        if n * n != self.dim() || n == 0 {
            return Err(Error::HypothesisFailed(format!(
                "dimension {} is not {n}^2",
                self.dim()
            )));
        }
        let top = self.pow(a, n as u64 - 1);
        if !self.is_zero(&self.pow(a, n as u64)) || self.is_zero(&top) {
            return Err(Error::HypothesisFailed(format!(
                "need a^{n} = 0 and a^{} != 0",
                n - 1
            )));
        }
        let dim = self.dim();
        // w -> top w top is linear in w
        let cols: Vec<_> = (0..dim)
            .map(|k| self.mul(&self.mul(&top, &self.basis(k)), &top))
            .collect();
        let m = Matrix::from_fn(dim, dim, |i, j| cols[j][i].clone());
        let w = matrix::solve(f, &m, &top)
            .map_err(|_| Error::HypothesisFailed("no rank-one idempotent".into()))?;
        let p = self.mul(&top, &w);
        let left_ideal: Vec<_> = (0..dim).map(|k| self.mul(&self.basis(k), &p)).collect();
        let v = left_ideal
            .iter()
            .find(|u| !self.is_zero(&self.mul(&top, u)))
            .cloned()
            .ok_or_else(|| Error::HypothesisFailed("a^{n-1} kills A p".into()))?;
        let mut chain = vec![v];
        for _ in 1..n {
            let next = self.mul(a, chain.last().unwrap());
            chain.push(next);
        }
        // e_k: the element acting on A p as the projection onto chain[k]
        let stacked = |x: &[F::Elem]| -> Vec<F::Elem> {
            chain.iter().flat_map(|c| self.mul(x, c)).collect()
        };
        let sys_cols: Vec<_> = (0..dim).map(|k| stacked(&self.basis(k))).collect();
        let sys = Matrix::from_fn(n * dim, dim, |i, j| sys_cols[j][i].clone());
        let mut es = Vec::with_capacity(n);
        for k in 0..n {
            let mut rhs = vec![f.zero(); n * dim];
            rhs[k * dim..(k + 1) * dim].clone_from_slice(&chain[k]);
            let x = matrix::solve(f, &sys, &rhs)
                .map_err(|_| Error::HypothesisFailed("A does not act as End(A p)".into()))?;
            es.push(x);
        }
        self.matrix_units_from_idempotents(&es)
    }

    /// Facts about the subalgebra F[a] for nilpotent a of index n: its dimension, whether
    /// 1 + a has multiplicative order n, and the number of idempotents it contains.
    pub fn nilpotent_subalgebra_readings(&self, a: &[F::Elem], n: usize) -> NilpotentReadings {
        let sub = self.subalgebra(&[a.to_vec()]);
        let u = self.add(&self.one(), a);
        let unipotent_order_n = self.pow(&u, n as u64) == self.one()
            && (1..n).all(|k| self.pow(&u, k as u64) != self.one());
        let local = self.pow(a, n as u64) == self.zero();
        NilpotentReadings {
            subalgebra_dim: sub.len(),
            unipotent_order_n,
            local,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentReadings {
    pub subalgebra_dim: usize,
    /// (1 + a)^n = 1 with n minimal.
    pub unipotent_order_n: bool,
    /// F[a] = F[x]/(x^n) is local, so its only idempotents are 0 and 1.
    pub local: bool,
}

/// The matrix algebra M_n(F) on the basis E_ij (index i n + j).
pub fn matrix_algebra<F: Field>(f: &F, n: usize) -> StructureAlgebra<F> {
    let labels = (0..n * n).map(|k| format!("E{}{}", k / n, k % n)).collect();
    let mut unit = vec![f.zero(); n * n];
    for i in 0..n {
        unit[i * n + i] = f.one();
    }
    StructureAlgebra::new_unchecked(f.clone(), labels, unit, |a, b| {
        let mut v = vec![f.zero(); n * n];
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        if j == k {
            v[i * n + l] = f.one();
        }
        v
    })
}

#[cfg(test)]
mod tests;
