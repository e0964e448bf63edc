//! Matrix units of E when a = N(b): E(s) is a faithful module with h acting by
//! multiplication and x by u -> sigma(u) b.

use serde::{Deserialize, Serialize};

use super::CESpec;
use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::field::{Field, Ring};
use crate::matrix::{self, Matrix};

/// Up to this degree the table is rebuilt from its diagonal through corners and
/// checked on structure constants; above it the checks run in the faithful image.
const DIRECT_LIMIT: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum UnitsCheck {
    StructureConstants,
    FaithfulRepresentation,
}

#[derive(Clone, Debug)]
pub struct MatrixUnits<F: Field> {
    pub table: Vec<Vec<Vec<F::Elem>>>,
    pub check: UnitsCheck,
}

/// The matrices of h and x on E(s) in the basis 1, h, ..., h^{n-1}; fails unless
/// xh = q hx, h^n = s and x^n = a hold, which needs N(b) = a.
pub fn regular_representation<F: Field>(
    spec: &CESpec<F>,
    b: &[F::Elem],
) -> Result<(Matrix<F::Elem>, Matrix<F::Elem>)> {
    let ring = spec.ext_ring();
    let f = spec.field();
    let n = spec.n();
    let basis: Vec<_> = (0..n).map(|k| ring.monomial(&f.one(), k)).collect();
    let hc: Vec<_> = basis.iter().map(|u| ring.mul(&ring.h(), u)).collect();
    let xc: Vec<_> = basis.iter().map(|u| ring.mul(&ring.sigma(u), &b.to_vec())).collect();
    let hm = Matrix::from_fn(n, n, |i, j| hc[j][i].clone());
    let xm = Matrix::from_fn(n, n, |i, j| xc[j][i].clone());
    let xh = matrix::mul(f, &xm, &hm)?;
    let hx = matrix::scale(f, &matrix::mul(f, &hm, &xm)?, &spec.root.q);
    if xh != hx {
        return Err(Error::RelationViolated("xh = q hx".into()));
    }
    if matrix::pow(f, &hm, n as u64) != matrix::scalar(f, n, &spec.s) {
        return Err(Error::RelationViolated("h^n = s".into()));
    }
    if matrix::pow(f, &xm, n as u64) != matrix::scalar(f, n, &spec.a) {
        return Err(Error::RelationViolated("x^n = a".into()));
    }
    Ok((hm, xm))
}

/// E_ij pulled back from the elementary matrices through the representation.
pub fn ce_matrix_units<F: Field>(
    spec: &CESpec<F>,
    alg: &StructureAlgebra<F>,
    b: &[F::Elem],
) -> Result<MatrixUnits<F>> {
    let f = spec.field();
    let n = spec.n();
    let n2 = n * n;
    let (hm, xm) = regular_representation(spec, b)?;
    let powers = |m: &Matrix<F::Elem>| -> Vec<Matrix<F::Elem>> {
        let mut v = vec![matrix::identity(f, n)];
        for j in 1..n {
            v.push(matrix::mul(f, &v[j - 1], m).unwrap());
        }
        v
    };
    let (hp, xp) = (powers(&hm), powers(&xm));
    let images: Vec<Matrix<F::Elem>> = (0..n2)
        .map(|idx| matrix::mul(f, &hp[idx % n], &xp[idx / n]).unwrap())
        .collect();
    let r = Matrix::from_fn(n2, n2, |row, col| images[col].data[row].clone());
    let rinv = matrix::inv(f, &r)
        .map_err(|_| Error::HypothesisFailed("the representation is not faithful".into()))?;
    let pulled: Vec<Vec<Vec<F::Elem>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n2).map(|row| rinv.get(row, i * n + j).clone()).collect())
                .collect()
        })
        .collect();
    if n <= DIRECT_LIMIT {
        let es: Vec<_> = (0..n).map(|k| pulled[k][k].clone()).collect();
        let table = alg.matrix_units_from_idempotents(&es)?;
        return Ok(MatrixUnits {
            table,
            check: UnitsCheck::StructureConstants,
        });
    }
    let image_of = |v: &[F::Elem]| -> Matrix<F::Elem> {
        let mut acc = matrix::zeros(f, n, n);
        for (c, m) in v.iter().zip(&images) {
            if !f.is_zero(c) {
                acc = matrix::add(f, &acc, &matrix::scale(f, m, c)).unwrap();
            }
        }
        acc
    };
    let unit_images: Vec<Vec<Matrix<F::Elem>>> = pulled
        .iter()
        .map(|row| row.iter().map(|v| image_of(v)).collect())
        .collect();
    let zero = matrix::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            let want = Matrix::from_fn(n, n, |a, c| if (a, c) == (i, j) { f.one() } else { f.zero() });
            if unit_images[i][j] != want {
                return Err(Error::HypothesisFailed(format!("image of E_{i}{j} is not elementary")));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let p = matrix::mul(f, &unit_images[i][j], &unit_images[k][l])?;
                    let want = if j == k { &unit_images[i][l] } else { &zero };
                    if p != *want {
                        return Err(Error::HypothesisFailed("matrix unit relations fail".into()));
                    }
                }
            }
        }
    }
    Ok(MatrixUnits {
        table: pulled,
        check: UnitsCheck::FaithfulRepresentation,
    })
}
