//! Dense row-major matrices over a commutative ring, with Gaussian elimination over fields
//! and the twisted operations over E(s).

use crate::error::{Error, Result};
use crate::ext::ExtRing;
use crate::field::{Field, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn map<T: Clone>(&self, f: impl Fn(&E) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

pub fn zeros<R: Ring>(r: &R, rows: usize, cols: usize) -> Matrix<R::Elem> {
    Matrix::from_fn(rows, cols, |_, _| r.zero())
}

pub fn identity<R: Ring>(r: &R, d: usize) -> Matrix<R::Elem> {
    Matrix::from_fn(d, d, |i, j| if i == j { r.one() } else { r.zero() })
}

pub fn scalar<R: Ring>(r: &R, d: usize, c: &R::Elem) -> Matrix<R::Elem> {
    Matrix::from_fn(d, d, |i, j| if i == j { c.clone() } else { r.zero() })
}

fn check_same(a_rows: usize, a_cols: usize, b_rows: usize, b_cols: usize) -> Result<()> {
    if a_rows != b_rows || a_cols != b_cols {
        return Err(Error::DimensionMismatch(format!(
            "{a_rows}x{a_cols} vs {b_rows}x{b_cols}"
        )));
    }
    Ok(())
}

pub fn add<R: Ring>(r: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    check_same(a.rows, a.cols, b.rows, b.cols)?;
    Ok(Matrix {
        rows: a.rows,
        cols: a.cols,
        data: a.data.iter().zip(&b.data).map(|(x, y)| r.add(x, y)).collect(),
    })
}

pub fn sub<R: Ring>(r: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    check_same(a.rows, a.cols, b.rows, b.cols)?;
    Ok(Matrix {
        rows: a.rows,
        cols: a.cols,
        data: a.data.iter().zip(&b.data).map(|(x, y)| r.sub(x, y)).collect(),
    })
}

pub fn scale<R: Ring>(r: &R, a: &Matrix<R::Elem>, c: &R::Elem) -> Matrix<R::Elem> {
    a.map(|x| r.mul(x, c))
}

pub fn mul<R: Ring>(r: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut out = zeros(r, a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let x = a.get(i, k);
            if r.is_zero(x) {
                continue;
            }
            for j in 0..b.cols {
                let y = b.get(k, j);
                if r.is_zero(y) {
                    continue;
                }
                let idx = i * out.cols + j;
                out.data[idx] = r.add(&out.data[idx], &r.mul(x, y));
            }
        }
    }
    Ok(out)
}

pub fn mat_vec<R: Ring>(r: &R, a: &Matrix<R::Elem>, v: &[R::Elem]) -> Vec<R::Elem> {
    (0..a.rows)
        .map(|i| {
            a.row(i)
                .iter()
                .zip(v)
                .fold(r.zero(), |acc, (x, y)| r.add(&acc, &r.mul(x, y)))
        })
        .collect()
}

pub fn pow<R: Ring>(r: &R, a: &Matrix<R::Elem>, mut e: u64) -> Matrix<R::Elem> {
    let mut acc = identity(r, a.rows);
    let mut base = a.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(r, &acc, &base).unwrap();
        }
        e >>= 1;
        if e > 0 {
            base = mul(r, &base, &base).unwrap();
        }
    }
    acc
}

pub fn kron<R: Ring>(r: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    Matrix::from_fn(a.rows * b.rows, a.cols * b.cols, |i, j| {
        r.mul(a.get(i / b.rows, j / b.cols), b.get(i % b.rows, j % b.cols))
    })
}

pub fn is_zero<R: Ring>(r: &R, a: &Matrix<R::Elem>) -> bool {
    a.data.iter().all(|x| r.is_zero(x))
}

/// Determinant over any commutative ring by cofactor expansion along the first row.
pub fn det_ring<R: Ring>(r: &R, a: &Matrix<R::Elem>) -> Result<R::Elem> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
    }
    Ok(det_rec(r, a))
}

fn det_rec<R: Ring>(r: &R, a: &Matrix<R::Elem>) -> R::Elem {
    match a.rows {
        0 => r.one(),
        1 => a.data[0].clone(),
        2 => r.sub(&r.mul(a.get(0, 0), a.get(1, 1)), &r.mul(a.get(0, 1), a.get(1, 0))),
        d => {
            let mut acc = r.zero();
            for j in 0..d {
                let c = a.get(0, j);
                if r.is_zero(c) {
                    continue;
                }
                let minor = Matrix::from_fn(d - 1, d - 1, |i, k| {
                    a.get(i + 1, if k < j { k } else { k + 1 }).clone()
                });
                let term = r.mul(c, &det_rec(r, &minor));
                acc = if j % 2 == 0 { r.add(&acc, &term) } else { r.sub(&acc, &term) };
            }
            acc
        }
    }
}

/// Adjugate over any commutative ring.
pub fn adjugate<R: Ring>(r: &R, a: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let d = a.rows;
    if d == 1 {
        return identity(r, 1);
    }
    Matrix::from_fn(d, d, |i, j| {
        let minor = Matrix::from_fn(d - 1, d - 1, |x, y| {
            a.get(if x < j { x } else { x + 1 }, if y < i { y } else { y + 1 })
                .clone()
        });
        let m = det_rec(r, &minor);
        if (i + j) % 2 == 0 {
            m
        } else {
            r.neg(&m)
        }
    })
}

/// Inverse over a commutative ring through the adjugate; fails unless det is a unit.
pub fn inv_ring<R: Ring>(r: &R, a: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    let d = det_ring(r, a)?;
    let di = r.inv(&d).ok_or(Error::Singular)?;
    Ok(scale(r, &adjugate(r, a), &di))
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref<F: Field>(f: &F, a: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&i| !f.is_zero(a.get(i, col))) else {
            continue;
        };
        if p != row {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, row * a.cols + j);
            }
        }
        let inv = f.inv(a.get(row, col)).unwrap();
        for j in col..a.cols {
            let v = f.mul(a.get(row, j), &inv);
            a.set(row, j, v);
        }
        for i in 0..a.rows {
            if i == row || f.is_zero(a.get(i, col)) {
                continue;
            }
            let factor = a.get(i, col).clone();
            for j in col..a.cols {
                let t = f.mul(&factor, a.get(row, j));
                let v = f.sub(a.get(i, j), &t);
                a.set(i, j, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, a: &Matrix<F::Elem>) -> usize {
    let mut m = a.clone();
    rref(f, &mut m).len()
}

/// Determinant over a field by elimination.
pub fn det<F: Field>(f: &F, a: &Matrix<F::Elem>) -> Result<F::Elem> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
    }
    let mut m = a.clone();
    let n = m.rows;
    let mut acc = f.one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !f.is_zero(m.get(i, col))) else {
            return Ok(f.zero());
        };
        if p != col {
            for j in 0..n {
                m.data.swap(p * n + j, col * n + j);
            }
            acc = f.neg(&acc);
        }
        let pv = m.get(col, col).clone();
        acc = f.mul(&acc, &pv);
        let inv = f.inv(&pv).unwrap();
        for i in col + 1..n {
            if f.is_zero(m.get(i, col)) {
                continue;
            }
            let factor = f.mul(m.get(i, col), &inv);
            for j in col..n {
                let t = f.mul(&factor, m.get(col, j));
                let v = f.sub(m.get(i, j), &t);
                m.set(i, j, v);
            }
        }
    }
    Ok(acc)
}

/// Inverse over a field by Gauss-Jordan elimination.
pub fn inv<F: Field>(f: &F, a: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
    }
    let n = a.rows;
    let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else if j - n == i {
            f.one()
        } else {
            f.zero()
        }
    });
    let piv = rref(f, &mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    Ok(Matrix::from_fn(n, n, |i, j| aug.get(i, n + j).clone()))
}

/// Basis of the solution space of the homogeneous system A x = 0.
pub fn nullspace<F: Field>(f: &F, a: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut m = a.clone();
    let pivots = rref(f, &mut m);
    let mut out = Vec::new();
    for free in (0..a.cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![f.zero(); a.cols];
        v[free] = f.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(m.get(row, free));
        }
        out.push(v);
    }
    out
}

/// One solution of A x = b, or `Singular` when inconsistent.
pub fn solve<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Result<Vec<F::Elem>> {
    let n = a.cols;
    let mut aug = Matrix::from_fn(a.rows, n + 1, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    let pivots = rref(f, &mut aug);
    if pivots.last() == Some(&n) {
        return Err(Error::Singular);
    }
    let mut x = vec![f.zero(); n];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.get(row, n).clone();
    }
    Ok(x)
}

/// Rows of `vs` reduced to an echelon basis of their span.
pub fn span_basis<F: Field>(f: &F, vs: &[Vec<F::Elem>], len: usize) -> Vec<Vec<F::Elem>> {
    if vs.is_empty() {
        return Vec::new();
    }
    let mut m = Matrix::from_fn(vs.len(), len, |i, j| vs[i][j].clone());
    let r = rref(f, &mut m).len();
    (0..r).map(|i| m.row(i).to_vec()).collect()
}

/// Entrywise sigma^k over E(s).
pub fn sigma_entries<F: Field>(e: &ExtRing<F>, y: &Matrix<Vec<F::Elem>>, k: i64) -> Matrix<Vec<F::Elem>> {
    y.map(|c| e.sigma_pow(c, k))
}

/// The matrix (sigma, i)-norm Y^{sigma^{i-1}} ... Y^sigma Y.
pub fn matrix_sigma_norm<F: Field>(
    e: &ExtRing<F>,
    y: &Matrix<Vec<F::Elem>>,
    i: usize,
) -> Matrix<Vec<F::Elem>> {
    let mut acc = y.clone();
    for k in 1..i {
        acc = mul(e, &sigma_entries(e, y, k as i64), &acc).unwrap();
    }
    acc
}

/// Lambda^sigma Y Lambda^{-1}.
pub fn sigma_conjugate<F: Field>(
    e: &ExtRing<F>,
    lambda: &Matrix<Vec<F::Elem>>,
    y: &Matrix<Vec<F::Elem>>,
) -> Result<Matrix<Vec<F::Elem>>> {
    let li = inv_ring(e, lambda)?;
    let ls = sigma_entries(e, lambda, 1);
    mul(e, &mul(e, &ls, y)?, &li)
}

#[cfg(test)]
mod tests;
