//! The simple module U = E^d, the division algebra D inside M_d(E), sigma-conjugacy
//! of module matrices and the prime-power tensor decomposition.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{ce_build, ce_monomial, index_search, invariants, CESpec, SearchOptions};
use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::ext::ExtRing;
use crate::field::{Field, Ring};
use crate::matrix::{self, Matrix};

/// U = E^d over F with basis h^k e_i at position i n + k.
#[derive(Clone, Debug)]
pub struct SimpleModule<F: Field> {
    pub d: usize,
    pub x_matrix: Matrix<Vec<F::Elem>>,
    pub h_action: Matrix<F::Elem>,
    pub x_action: Matrix<F::Elem>,
}

pub fn ce_simple_module<F: Field>(spec: &CESpec<F>, opts: &SearchOptions) -> Result<SimpleModule<F>> {
    let f = spec.field();
    if f.is_zero(&spec.s) || f.is_zero(&spec.a) {
        return Err(Error::NoModuleMatrix("s and a must be nonzero".into()));
    }
    let ring = spec.ext_ring();
    if !ring.is_field() {
        return Err(Error::NoModuleMatrix("E(s) is not a field".into()));
    }
    let inv = invariants(spec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let idx = index_search(&ring, &spec.a, inv.gcd_bound, opts, &mut rng)?;
    let x = idx
        .x
        .filter(|_| idx.d.is_some())
        .ok_or_else(|| Error::NoModuleMatrix("the index search produced no module matrix".into()))?;
    module_from_matrix(spec, &x)
}

/// Builds x: u -> u^sigma X and h: u -> h u on E^d and checks xh = q hx, h^n = s, x^n = a.
pub fn module_from_matrix<F: Field>(
    spec: &CESpec<F>,
    x: &Matrix<Vec<F::Elem>>,
) -> Result<SimpleModule<F>> {
    let ring = spec.ext_ring();
    let f = spec.field();
    let n = spec.n();
    let d = x.rows;
    if matrix::matrix_sigma_norm(&ring, x, n) != matrix::scalar(&ring, d, &ring.scalar(&spec.a)) {
        return Err(Error::NoModuleMatrix("X fails the matrix norm equation".into()));
    }
    let dim = n * d;
    let mut hm = matrix::zeros(f, dim, dim);
    let mut xm = matrix::zeros(f, dim, dim);
    for i in 0..d {
        for k in 0..n {
            let col = i * n + k;
            let hu = ring.monomial(&f.one(), k + 1);
            for (c, v) in hu.iter().enumerate() {
                hm.set(i * n + c, col, v.clone());
            }
            let su = ring.monomial(&spec.root.q_pow(k as i64), k);
            for j in 0..d {
                let v = ring.mul(&su, x.get(i, j));
                for (c, w) in v.iter().enumerate() {
                    xm.set(j * n + c, col, w.clone());
                }
            }
        }
    }
    let xh = matrix::mul(f, &xm, &hm)?;
    let hx = matrix::scale(f, &matrix::mul(f, &hm, &xm)?, &spec.root.q);
    if xh != hx {
        return Err(Error::RelationViolated("xh = q hx on U".into()));
    }
    if matrix::pow(f, &hm, n as u64) != matrix::scalar(f, dim, &spec.s) {
        return Err(Error::RelationViolated("h^n = s on U".into()));
    }
    if matrix::pow(f, &xm, n as u64) != matrix::scalar(f, dim, &spec.a) {
        return Err(Error::RelationViolated("x^n = a on U".into()));
    }
    Ok(SimpleModule {
        d,
        x_matrix: x.clone(),
        h_action: hm,
        x_action: xm,
    })
}

fn flatten<E: Clone>(m: &Matrix<Vec<E>>) -> Vec<E> {
    m.data.iter().flat_map(|c| c.iter().cloned()).collect()
}

fn unflatten<F: Field>(ring: &ExtRing<F>, d: usize, v: &[F::Elem]) -> Matrix<Vec<F::Elem>> {
    let n = ring.n();
    Matrix::from_fn(d, d, |a, b| v[(a * d + b) * n..(a * d + b + 1) * n].to_vec())
}

/// F-basis of the kernel of Lambda -> Lambda^sigma A - B Lambda on M_d(E).
fn twisted_kernel<F: Field>(
    ring: &ExtRing<F>,
    a: &Matrix<Vec<F::Elem>>,
    b: &Matrix<Vec<F::Elem>>,
) -> Result<Vec<Matrix<Vec<F::Elem>>>> {
    let f = ring.field();
    let n = ring.n();
    let d = a.rows;
    let unknowns = d * d * n;
    let mut cols = Vec::with_capacity(unknowns);
    for u in 0..unknowns {
        let (cell, k) = (u / n, u % n);
        let l = Matrix::from_fn(d, d, |r, c| {
            if r * d + c == cell {
                ring.monomial(&f.one(), k)
            } else {
                ring.zero()
            }
        });
        let lhs = matrix::mul(ring, &matrix::sigma_entries(ring, &l, 1), a)?;
        let rhs = matrix::mul(ring, b, &l)?;
        cols.push(flatten(&matrix::sub(ring, &lhs, &rhs)?));
    }
    let m = Matrix::from_fn(unknowns, unknowns, |r, c| cols[c][r].clone());
    Ok(matrix::nullspace(f, &m)
        .iter()
        .map(|v| unflatten(ring, d, v))
        .collect())
}

/// D = {Lambda in M_d(E) : Lambda^sigma X = X Lambda}, checked to have dimension d^2
/// and to be closed under products.
pub fn ce_division_basis<F: Field>(
    ring: &ExtRing<F>,
    x: &Matrix<Vec<F::Elem>>,
) -> Result<Vec<Matrix<Vec<F::Elem>>>> {
    let d = x.rows;
    let basis = twisted_kernel(ring, x, x)?;
    if basis.len() != d * d {
        return Err(Error::DimensionMismatch(format!(
            "solution space has dimension {}, expected {}",
            basis.len(),
            d * d
        )));
    }
    let in_d = |l: &Matrix<Vec<F::Elem>>| -> Result<bool> {
        let lhs = matrix::mul(ring, &matrix::sigma_entries(ring, l, 1), x)?;
        Ok(lhs == matrix::mul(ring, x, l)?)
    };
    for b1 in &basis {
        for b2 in &basis {
            if !in_d(&matrix::mul(ring, b1, b2)?)? {
                return Err(Error::DimensionMismatch("solution space is not closed".into()));
            }
        }
    }
    Ok(basis)
}

/// The structure constants of D on the given basis.
pub fn division_algebra<F: Field>(
    ring: &ExtRing<F>,
    basis: &[Matrix<Vec<F::Elem>>],
) -> Result<StructureAlgebra<F>> {
    let f = ring.field();
    let m = basis.len();
    let d = basis.first().map_or(0, |b| b.rows);
    let flat: Vec<Vec<F::Elem>> = basis.iter().map(flatten).collect();
    let len = flat.first().map_or(0, |v| v.len());
    let bm = Matrix::from_fn(len, m, |r, c| flat[c][r].clone());
    let coords = |v: &Matrix<Vec<F::Elem>>| {
        matrix::solve(f, &bm, &flatten(v))
            .map_err(|_| Error::DimensionMismatch("element outside the span of the basis".into()))
    };
    let mut table = Vec::with_capacity(m * m);
    for b1 in basis {
        for b2 in basis {
            table.push(coords(&matrix::mul(ring, b1, b2)?)?);
        }
    }
    let unit = coords(&matrix::identity(ring, d))?;
    let labels = (0..m).map(|i| format!("D{i}")).collect();
    StructureAlgebra::new(f.clone(), labels, unit, |i, j| table[i * m + j].clone())
}

/// An invertible Lambda with X2 = Lambda^sigma X Lambda^{-1}.
pub fn sigma_conjugator<F: Field>(
    ring: &ExtRing<F>,
    x: &Matrix<Vec<F::Elem>>,
    x2: &Matrix<Vec<F::Elem>>,
) -> Result<Matrix<Vec<F::Elem>>> {
    let f = ring.field();
    let kernel = twisted_kernel(ring, x, x2)?;
    if kernel.is_empty() {
        return Err(Error::Singular);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0de);
    let mut cands = kernel.clone();
    for _ in 0..64 {
        let mut acc = matrix::zeros(ring, x.rows, x.rows);
        for k in &kernel {
            let c = ring.scalar(&f.random(&mut rng, 1));
            acc = matrix::add(ring, &acc, &matrix::scale(ring, k, &c))?;
        }
        cands.push(acc);
    }
    for l in cands {
        if let Ok(conj) = matrix::sigma_conjugate(ring, &l, x) {
            if conj == *x2 {
                return Ok(l);
            }
        }
    }
    Err(Error::Singular)
}

/// The subalgebra generated by h^{n'} and x^{n'} with n = p^k n'.
#[derive(Clone, Debug)]
pub struct TensorFactor<F: Field> {
    pub prime: usize,
    pub degree: usize,
    pub cofactor: usize,
    pub spec: CESpec<F>,
}

fn prime_powers(mut n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while n > 1 {
        if n.is_multiple_of(p) {
            let mut pk = 1;
            while n.is_multiple_of(p) {
                n /= p;
                pk *= p;
            }
            out.push((p, pk));
        }
        p += 1;
    }
    out
}

pub fn ce_tensor_factor<F: Field>(spec: &CESpec<F>) -> Result<Vec<TensorFactor<F>>> {
    let f = spec.field();
    if f.is_zero(&spec.s) || f.is_zero(&spec.a) {
        return Err(Error::HypothesisFailed("tensor factors need s and a nonzero".into()));
    }
    let n = spec.n();
    if n == 1 {
        return Ok(vec![TensorFactor {
            prime: 1,
            degree: 1,
            cofactor: 1,
            spec: spec.clone(),
        }]);
    }
    prime_powers(n)
        .into_iter()
        .map(|(p, pk)| {
            let cofactor = n / pk;
            let root = spec.root.with_root(pk, (cofactor * cofactor) as i64)?;
            Ok(TensorFactor {
                prime: p,
                degree: pk,
                cofactor,
                spec: CESpec::new(root, spec.s.clone(), spec.a.clone()),
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorCheck {
    pub factor_dims: Vec<usize>,
    pub product: usize,
}

/// Checks the factor relations, pairwise commutation across factors and that the
/// factor dimensions multiply to n^2, all inside ce_build(spec).
pub fn verify_tensor_factors<F: Field>(
    spec: &CESpec<F>,
    factors: &[TensorFactor<F>],
) -> Result<TensorCheck> {
    let alg = ce_build(spec)?;
    let n = spec.n();
    let gens: Vec<(Vec<F::Elem>, Vec<F::Elem>)> = factors
        .iter()
        .map(|t| (ce_monomial(spec, t.cofactor, 0), ce_monomial(spec, 0, t.cofactor)))
        .collect();
    for (t, (h, x)) in factors.iter().zip(&gens) {
        let xh = alg.mul(x, h);
        if xh != alg.scale(&alg.mul(h, x), &t.spec.root.q) {
            return Err(Error::RelationViolated(format!("x_i h_i = q_i h_i x_i for p = {}", t.prime)));
        }
        if alg.pow(h, t.degree as u64) != alg.scalar(&spec.s)
            || alg.pow(x, t.degree as u64) != alg.scalar(&spec.a)
        {
            return Err(Error::RelationViolated(format!("power relations for p = {}", t.prime)));
        }
    }
    for (i, (hi, xi)) in gens.iter().enumerate() {
        for (hj, xj) in gens.iter().skip(i + 1) {
            for (u, v) in [(hi, hj), (hi, xj), (xi, hj), (xi, xj)] {
                if !alg.is_zero(&alg.commutator(u, v)) {
                    return Err(Error::RelationViolated("generators of distinct factors do not commute".into()));
                }
            }
        }
    }
    let factor_dims: Vec<usize> = gens
        .iter()
        .map(|(h, x)| alg.subalgebra_dim(&[h.clone(), x.clone()]))
        .collect();
    let product = factor_dims.iter().product();
    if product != n * n {
        return Err(Error::RelationViolated(format!(
            "factor dimensions {factor_dims:?} do not multiply to {}",
            n * n
        )));
    }
    Ok(TensorCheck {
        factor_dims,
        product,
    })
}
