//! The idempotents of K[h]/(h^n - (q-1)^{-n}), the finite-dimensional factor algebras
//! of the quantum Weyl algebra, the module L and the localized matrix units.

use serde::{Deserialize, Serialize};

use super::{Gwa, GwaElem, Tag};
use crate::algebra::StructureAlgebra;
use crate::ce::{ce_build, ce_monomial, CESpec};
use crate::error::{Error, Result};
use crate::field::{Field, RootedField};
use crate::matrix::{self, Matrix};
use crate::poly::{self, Poly};

/// The roots q^i/(q-1), i = 0..n-1, of h^n - (q-1)^{-n}.
pub fn epsilon_roots<F: Field>(root: &RootedField<F>) -> Result<Vec<F::Elem>> {
    let f = &root.field;
    let c1 = f.div(&f.one(), &f.sub(&root.q, &f.one()))?;
    Ok((0..root.n as i64).map(|i| f.mul(&root.q_pow(i), &c1)).collect())
}

/// Lagrange idempotents: eps_i is 1 at q^i/(q-1) and 0 at the other roots.
pub fn epsilon_idempotents<F: Field>(root: &RootedField<F>) -> Result<Vec<Poly<F::Elem>>> {
    let f = &root.field;
    let rho = epsilon_roots(root)?;
    rho.iter()
        .enumerate()
        .map(|(i, ri)| {
            let mut num = vec![f.one()];
            let mut den = f.one();
            for (j, rj) in rho.iter().enumerate() {
                if j != i {
                    num = poly::mul(f, &num, &[f.neg(rj), f.one()]);
                    den = f.mul(&den, &f.sub(ri, rj));
                }
            }
            Ok(poly::scale(f, &num, &f.inv(&den).ok_or(Error::DivisionByZero)?))
        })
        .collect()
}

/// The coefficient ring K[h]/(h^n - (q-1)^{-n}) as the degree-zero part of `tag`.
pub fn kappa_gwa<F: Field>(tag: Tag, root: &RootedField<F>) -> Result<Gwa<F>> {
    let g = Gwa::new(tag, root.clone())?;
    let c = g.c_n();
    g.with_h_power(c)
}

/// p(q^k h).
pub fn sigma_poly<F: Field>(root: &RootedField<F>, p: &[F::Elem], k: i64) -> Poly<F::Elem> {
    let f = &root.field;
    p.iter()
        .enumerate()
        .map(|(e, c)| f.mul(c, &root.q_pow(k * e as i64)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentCheck {
    pub orthogonal: bool,
    pub sum_is_one: bool,
    pub nonzero: bool,
    /// sigma(eps_i) = eps_{i-1}
    pub sigma_shift: bool,
}

impl IdempotentCheck {
    pub fn passed(&self) -> bool {
        self.orthogonal && self.sum_is_one && self.nonzero && self.sigma_shift
    }
}

pub fn check_idempotents<F: Field>(root: &RootedField<F>, eps: &[Poly<F::Elem>]) -> Result<IdempotentCheck> {
    let n = root.n;
    let k = kappa_gwa(Tag::Plane, root)?;
    let es: Vec<_> = eps.iter().map(|e| k.from_h_poly(e)).collect();
    let mut orthogonal = true;
    for i in 0..n {
        for j in 0..n {
            let p = k.mul(&es[i], &es[j]);
            orthogonal &= if i == j { p == es[i] } else { p.is_zero() };
        }
    }
    let sum = es.iter().fold(k.zero(), |acc, e| k.add(&acc, e));
    let sigma_shift = (0..n).all(|i| {
        let s = k.from_h_poly(&sigma_poly(root, &eps[i], 1));
        s == es[(i + n - 1) % n]
    });
    Ok(IdempotentCheck {
        orthogonal,
        sum_is_one: sum == k.one(),
        nonzero: es.iter().all(|e| !e.is_zero()),
        sigma_shift,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorIdeal<E> {
    /// (t, r)
    TR,
    /// (r, f(t)) with f irreducible, f != t.
    RF(Poly<E>),
    /// (t, g(r)) with g irreducible, g != r.
    TG(Poly<E>),
    /// (h, f(x)) with f irreducible, f != x.
    HF(Poly<E>),
    /// The maximal ideal over the centre point (r0, t0) with t0 != 0, giving the
    /// cyclic algebra with s = (-1)^{n-1} r0 t0 + (q-1)^{-n} and a = t0.
    Maximal { r0: E, t0: E },
}

/// A factor algebra with the images of the generators h, x, y.
#[derive(Clone, Debug)]
pub struct FactorAlgebra<F: Field> {
    pub ideal: String,
    pub algebra: StructureAlgebra<F>,
    pub h: Vec<F::Elem>,
    pub x: Vec<F::Elem>,
    pub y: Vec<F::Elem>,
}

impl<F: Field> FactorAlgebra<F> {
    /// xy - q yx = 1, yx = h - 1/(q-1) and xh = q hx on the images.
    pub fn relations_hold(&self, root: &RootedField<F>) -> Result<bool> {
        let a = &self.algebra;
        let f = &root.field;
        let c1 = f.div(&f.one(), &f.sub(&root.q, &f.one()))?;
        let xy = a.mul(&self.x, &self.y);
        let yx = a.mul(&self.y, &self.x);
        let w = a.sub(&xy, &a.scale(&yx, &root.q));
        let xh = a.mul(&self.x, &self.h);
        let hx = a.scale(&a.mul(&self.h, &self.x), &root.q);
        Ok(w == a.one() && yx == a.sub(&self.h, &a.scalar(&c1)) && xh == hx)
    }
}

fn check_modulus<F: Field>(f: &F, m: &[F::Elem], var: &str, excluded: &str) -> Result<Poly<F::Elem>> {
    let (_, m) = poly::make_monic(f, m);
    let deg = poly::degree(&m).unwrap_or(0);
    if deg == 0 {
        return Err(Error::HypothesisFailed(format!("modulus in {var} must have positive degree")));
    }
    if f.is_finite() && !poly::is_irreducible(f, &m) {
        return Err(Error::ReducibleModulus);
    }
    if f.is_zero(&m[0]) {
        return Err(Error::ExcludedModulus(format!("{excluded} is excluded")));
    }
    Ok(m)
}

fn inverse_mod<F: Field>(f: &F, a: &[F::Elem], m: &[F::Elem]) -> Result<Poly<F::Elem>> {
    let (g, s, _) = poly::ext_gcd(f, a, m);
    if !poly::is_one(f, &g) {
        return Err(Error::NotAUnit);
    }
    Ok(poly::rem(f, &s, m))
}

/// K[h]/(h^n - c)[z^{±1}; h -> qq h] modulo f(z^n), basis h^k z^j w^l with w = z^n,
/// k, j < n and l < deg f.
fn skew_laurent_quotient<F: Field>(
    root: &RootedField<F>,
    qq: &F::Elem,
    c: &F::Elem,
    m: &[F::Elem],
    names: (&str, &str, &str),
) -> Result<StructureAlgebra<F>> {
    let f = &root.field;
    let n = root.n;
    let d = m.len() - 1;
    let dim = n * n * d;
    let idx = |k: usize, j: usize, l: usize| (l * n + j) * n + k;
    let w_pows: Vec<Poly<F::Elem>> = (0..2 * d + 1)
        .map(|e| poly::powmod(f, &[f.zero(), f.one()], e as u64, m))
        .collect();
    let qp: Vec<F::Elem> = (0..n * n).map(|e| f.pow(qq, e as u64)).collect();
    let mut labels = Vec::with_capacity(dim);
    for l in 0..d {
        for j in 0..n {
            for k in 0..n {
                let mut parts = Vec::new();
                for (name, e) in [(names.0, k), (names.1, j), (names.2, l)] {
                    match e {
                        0 => {}
                        1 => parts.push(name.to_string()),
                        _ => parts.push(format!("{name}^{e}")),
                    }
                }
                labels.push(if parts.is_empty() { "1".into() } else { parts.join("*") });
            }
        }
    }
    let decode = |b: usize| (b % n, (b / n) % n, b / (n * n));
    let mut unit = vec![f.zero(); dim];
    unit[0] = f.one();
    StructureAlgebra::new(f.clone(), labels, unit, |a, b| {
        let (k, j, l) = decode(a);
        let (k2, j2, l2) = decode(b);
        let mut coef = qp[j * k2].clone();
        let mut hk = k + k2;
        if hk >= n {
            hk -= n;
            coef = f.mul(&coef, c);
        }
        let mut zj = j + j2;
        let mut wl = l + l2;
        if zj >= n {
            zj -= n;
            wl += 1;
        }
        let mut v = vec![f.zero(); dim];
        for (e, pc) in w_pows[wl].iter().enumerate() {
            v[idx(hk, zj, e)] = f.mul(&coef, pc);
        }
        v
    })
}

/// The h^e v_g coordinates of a graded quotient in which grade g survives modulo
/// the polynomial `moduli[g]`.
struct GradedQuotient<F: Field> {
    grades: Vec<(i64, Poly<F::Elem>)>,
    offsets: Vec<usize>,
    len: usize,
    field: F,
}

impl<F: Field> GradedQuotient<F> {
    fn new(field: F, grades: Vec<(i64, Poly<F::Elem>)>) -> Self {
        let mut offsets = Vec::new();
        let mut len = 0;
        for (_, m) in &grades {
            offsets.push(len);
            len += m.len() - 1;
        }
        GradedQuotient {
            grades,
            offsets,
            len,
            field,
        }
    }

    fn coords(&self, gwa: &Gwa<F>, u: &GwaElem<F::Elem>) -> Vec<F::Elem> {
        let f = &self.field;
        let mut v = vec![f.zero(); self.len];
        for (k, (g, m)) in self.grades.iter().enumerate() {
            let (low, p) = gwa.h_poly_at(u, *g);
            debug_assert!(low >= 0);
            let shifted = poly::mul(f, &poly::monomial(f, f.one(), low.max(0) as usize), &p);
            let r = poly::rem(f, &shifted, m);
            for (e, c) in r.into_iter().enumerate() {
                v[self.offsets[k] + e] = c;
            }
        }
        v
    }
}

fn weyl_label(i: usize, j: usize) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("x", i), ("y", j)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// The n^2-dimensional algebra A1/(t, r) on the basis x^i y^j, i, j < n.
fn mod_t_r<F: Field>(root: &RootedField<F>) -> Result<FactorAlgebra<F>> {
    let f = &root.field;
    let n = root.n as i64;
    let g = kappa_gwa(Tag::Weyl, root)?;
    let prod = |ks: Vec<i64>| -> Poly<F::Elem> {
        ks.into_iter().fold(vec![f.one()], |acc, k| {
            poly::mul(f, &acc, &[f.neg(g.c1()), root.q_pow(k)])
        })
    };
    let mut grades = Vec::new();
    for gr in -(n - 1)..n {
        let m = if gr >= 0 {
            prod((0..n - gr).map(|i| -i).collect())
        } else {
            prod((1..=n + gr).collect())
        };
        grades.push((gr, m));
    }
    let gq = GradedQuotient::new(f.clone(), grades);
    let (x, y) = (g.x(), g.y()?);
    let mut elems = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n as u64 {
        for j in 0..n as u64 {
            elems.push(g.mul(&g.pow(&x, i), &g.pow(&y, j)));
            labels.push(weyl_label(i as usize, j as usize));
        }
    }
    let dim = elems.len();
    if gq.len != dim {
        return Err(Error::DimensionMismatch(format!("graded quotient has dimension {}", gq.len)));
    }
    let cols: Vec<Vec<F::Elem>> = elems.iter().map(|u| gq.coords(&g, u)).collect();
    let bm = Matrix::from_fn(dim, dim, |r, c| cols[c][r].clone());
    let binv = matrix::inv(f, &bm)?;
    let to_basis = |u: &GwaElem<F::Elem>| matrix::mat_vec(f, &binv, &gq.coords(&g, u));
    let algebra = StructureAlgebra::new(f.clone(), labels, to_basis(&g.one()), |a, b| {
        to_basis(&g.mul(&elems[a], &elems[b]))
    })?;
    Ok(FactorAlgebra {
        ideal: "(t, r)".into(),
        h: to_basis(&g.h()),
        x: to_basis(&x),
        y: to_basis(&y),
        algebra,
    })
}

/// The quotient of the quantum Weyl algebra by the given ideal, on its stated basis.
pub fn factor_algebra<F: Field>(root: &RootedField<F>, ideal: &FactorIdeal<F::Elem>) -> Result<FactorAlgebra<F>> {
    let f = &root.field;
    let n = root.n;
    let g = Gwa::new(Tag::Weyl, root.clone())?;
    let c1 = g.c1().clone();
    let cn = g.c_n();
    match ideal {
        FactorIdeal::TR => mod_t_r(root),
        FactorIdeal::RF(m) | FactorIdeal::TG(m) => {
            let is_rf = matches!(ideal, FactorIdeal::RF(_));
            let (var, zname) = if is_rf { ("t", "x") } else { ("r", "y") };
            let m = check_modulus(f, m, var, var)?;
            let qq = if is_rf { root.q.clone() } else { root.q_inv() };
            let algebra = skew_laurent_quotient(root, &qq, &cn, &m, ("h", zname, var))?;
            let d = m.len() - 1;
            let dim = n * n * d;
            let basis = |k: usize, j: usize, l: usize| {
                let mut v = vec![f.zero(); dim];
                v[(l * n + j) * n + k] = f.one();
                v
            };
            let h = basis(1, 0, 0);
            let z = basis(0, 1, 0);
            // z^{-1} = w^{-1} z^{n-1}
            let wi = inverse_mod(f, &[f.zero(), f.one()], &m)?;
            let wi_elem = wi
                .iter()
                .enumerate()
                .fold(algebra.zero(), |acc, (l, c)| algebra.add(&acc, &algebra.scale(&basis(0, 0, l), c)));
            let z_inv = algebra.mul(&wi_elem, &basis(0, n - 1, 0));
            // y = (h - 1/(q-1)) x^{-1} in the x-form, x = (q h - 1/(q-1)) y^{-1} in the y-form
            let (x, y) = if is_rf {
                let a = algebra.sub(&h, &algebra.scalar(&c1));
                (z.clone(), algebra.mul(&a, &z_inv))
            } else {
                let sa = algebra.sub(&algebra.scale(&h, &root.q), &algebra.scalar(&c1));
                (algebra.mul(&sa, &z_inv), z.clone())
            };
            Ok(FactorAlgebra {
                ideal: format!("({}, {})", if is_rf { "r" } else { "t" }, poly::format_coeffs(f, &m, var)),
                algebra,
                h,
                x,
                y,
            })
        }
        FactorIdeal::HF(m) => {
            let m = check_modulus(f, m, "x", "x")?;
            let d = m.len() - 1;
            let labels: Vec<String> = (0..d)
                .map(|i| match i {
                    0 => "1".to_string(),
                    1 => "x".to_string(),
                    _ => format!("x^{i}"),
                })
                .collect();
            let to_vec = |p: Poly<F::Elem>| {
                let mut v = vec![f.zero(); d];
                for (i, c) in p.into_iter().enumerate() {
                    v[i] = c;
                }
                v
            };
            let mut unit = vec![f.zero(); d];
            unit[0] = f.one();
            let algebra = StructureAlgebra::new(f.clone(), labels, unit, |a, b| {
                to_vec(poly::rem(f, &poly::monomial(f, f.one(), a + b), &m))
            })?;
            let xi = inverse_mod(f, &[f.zero(), f.one()], &m)?;
            Ok(FactorAlgebra {
                ideal: format!("(h, {})", poly::format_coeffs(f, &m, "x")),
                h: algebra.zero(),
                x: to_vec(poly::rem(f, &[f.zero(), f.one()], &m)),
                y: to_vec(poly::scale(f, &xi, &f.neg(&c1))),
                algebra,
            })
        }
        FactorIdeal::Maximal { r0, t0 } => {
            if f.is_zero(t0) {
                return Err(Error::InvalidCoordinates("the cyclic-algebra form needs t0 != 0".into()));
            }
            let sign = if n % 2 == 1 { f.one() } else { f.neg(&f.one()) };
            let s0 = f.add(&f.mul(&sign, &f.mul(r0, t0)), &cn);
            let spec = CESpec::new(root.clone(), s0, t0.clone());
            let algebra = ce_build(&spec)?;
            let h = ce_monomial(&spec, 1, 0);
            let x = ce_monomial(&spec, 0, 1);
            let ti = f.inv(t0).ok_or(Error::DivisionByZero)?;
            let x_inv = algebra.scale(&ce_monomial(&spec, 0, n - 1), &ti);
            let y = algebra.mul(&algebra.sub(&h, &algebra.scalar(&c1)), &x_inv);
            Ok(FactorAlgebra {
                ideal: format!("(r - {}, t - {})", f.format(r0), f.format(t0)),
                algebra,
                h,
                x,
                y,
            })
        }
    }
}

/// The module L = A1/A1(t, y) on the basis x^i 1, i < n.
#[derive(Clone, Debug)]
pub struct ModuleL<F: Field> {
    pub h: Matrix<F::Elem>,
    pub x: Matrix<F::Elem>,
    pub y: Matrix<F::Elem>,
    pub checks: ModuleLChecks,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleLChecks {
    /// XY - qYX = I
    pub weyl_relation: bool,
    /// YX = H - 1/(q-1)
    pub yx_relation: bool,
    /// XH = qHX
    pub xh_relation: bool,
    pub x_nilpotent: bool,
    pub y_nilpotent: bool,
    pub generated_dim: usize,
    pub irreducible: bool,
}

impl ModuleLChecks {
    pub fn passed(&self) -> bool {
        self.weyl_relation
            && self.yx_relation
            && self.xh_relation
            && self.x_nilpotent
            && self.y_nilpotent
            && self.irreducible
    }
}

/// Dimension of the unital algebra generated by square matrices.
pub fn generated_algebra_dim<F: Field>(f: &F, gens: &[Matrix<F::Elem>]) -> usize {
    let d = gens.first().map_or(0, |g| g.rows);
    let mut echelon: Vec<(usize, Vec<F::Elem>)> = Vec::new();
    let accept = |v: &[F::Elem], echelon: &mut Vec<(usize, Vec<F::Elem>)>| -> bool {
        let mut w = v.to_vec();
        for (p, row) in echelon.iter() {
            if !f.is_zero(&w[*p]) {
                let c = w[*p].clone();
                for (a, b) in w.iter_mut().zip(row) {
                    *a = f.sub(a, &f.mul(&c, b));
                }
            }
        }
        match w.iter().position(|c| !f.is_zero(c)) {
            None => false,
            Some(p) => {
                let inv = f.inv(&w[p]).unwrap();
                let w: Vec<_> = w.iter().map(|c| f.mul(c, &inv)).collect();
                for (_, row) in echelon.iter_mut() {
                    if !f.is_zero(&row[p]) {
                        let c = row[p].clone();
                        for (a, b) in row.iter_mut().zip(&w) {
                            *a = f.sub(a, &f.mul(&c, b));
                        }
                    }
                }
                echelon.push((p, w));
                true
            }
        }
    };
    let id = matrix::identity(f, d);
    let mut queue = vec![id.clone()];
    accept(&id.data, &mut echelon);
    while let Some(m) = queue.pop() {
        for g in gens {
            let p = matrix::mul(f, &m, g).expect("square generators");
            if accept(&p.data, &mut echelon) {
                queue.push(p);
            }
        }
    }
    echelon.len()
}

pub fn module_l<F: Field>(root: &RootedField<F>) -> Result<ModuleL<F>> {
    let f = &root.field;
    let n = root.n;
    let g = Gwa::new(Tag::Weyl, root.clone())?;
    let c1 = g.c1().clone();
    let mut h = matrix::zeros(f, n, n);
    let mut x = matrix::zeros(f, n, n);
    let mut y = matrix::zeros(f, n, n);
    for i in 0..n {
        h.set(i, i, f.mul(&root.q_pow(-(i as i64) - 1), &c1));
        if i + 1 < n {
            x.set(i + 1, i, f.one());
        }
        if i > 0 {
            // y x^i 1 = (q^-i - 1)/(q - 1) x^{i-1} 1
            y.set(i - 1, i, f.mul(&f.sub(&root.q_pow(-(i as i64)), &f.one()), &c1));
        }
    }
    let id = matrix::identity(f, n);
    let xy = matrix::mul(f, &x, &y)?;
    let yx = matrix::mul(f, &y, &x)?;
    let weyl_relation = matrix::sub(f, &xy, &matrix::scale(f, &yx, &root.q))? == id;
    let yx_relation = yx == matrix::sub(f, &h, &matrix::scalar(f, n, &c1))?;
    let xh_relation = matrix::mul(f, &x, &h)? == matrix::scale(f, &matrix::mul(f, &h, &x)?, &root.q);
    let zero = matrix::zeros(f, n, n);
    let generated_dim = generated_algebra_dim(f, &[h.clone(), x.clone(), y.clone()]);
    let checks = ModuleLChecks {
        weyl_relation,
        yx_relation,
        xh_relation,
        x_nilpotent: matrix::pow(f, &x, n as u64) == zero,
        y_nilpotent: matrix::pow(f, &y, n as u64) == zero,
        generated_dim,
        irreducible: generated_dim == n * n,
    };
    Ok(ModuleL { h, x, y, checks })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum UnitForm {
    /// E_ij = eps_i x^{j-i} eps_j in the localization at t.
    X,
    /// E_ij = eps_i y^{i-j} eps_j in the localization at r.
    Y,
}

/// Matrix units of K[h]/(h^n - (q-1)^{-n})[x^{±1}; sigma] (or of the y-form).
pub fn localized_matrix_units<F: Field>(
    root: &RootedField<F>,
    form: UnitForm,
) -> Result<(Gwa<F>, Vec<Vec<GwaElem<F::Elem>>>)> {
    let n = root.n;
    let cn = Gwa::new(Tag::Weyl, root.clone())?.c_n();
    let mut g = match form {
        UnitForm::X => Gwa::new(Tag::LaurentX, root.clone())?,
        UnitForm::Y => Gwa::new(Tag::LaurentX, RootedField::new(root.field.clone(), n, root.q_inv())?)?,
    };
    if form == UnitForm::Y {
        g.x_name = "y";
    }
    let g = g.with_h_power(cn)?;
    let eps: Vec<_> = epsilon_idempotents(root)?
        .iter()
        .map(|e| g.from_h_poly(e))
        .collect();
    let one = root.field.one();
    let units = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = match form {
                        UnitForm::X => j as i64 - i as i64,
                        UnitForm::Y => i as i64 - j as i64,
                    };
                    let z = g.monomial(one.clone(), 0, e)?;
                    Ok(g.mul_all(&[eps[i].clone(), z, eps[j].clone()]))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((g, units))
}

/// All n^4 products E_ij E_kl = delta_jk E_il, sum E_ii = 1 and E_ij != 0.
pub fn verify_localized_units<F: Field>(g: &Gwa<F>, units: &[Vec<GwaElem<F::Elem>>]) -> bool {
    let n = units.len();
    let mut sum = g.zero();
    for i in 0..n {
        sum = g.add(&sum, &units[i][i]);
        for j in 0..n {
            if units[i][j].is_zero() {
                return false;
            }
            for k in 0..n {
                for l in 0..n {
                    let p = g.mul(&units[i][j], &units[k][l]);
                    let ok = if j == k { p == units[i][l] } else { p.is_zero() };
                    if !ok {
                        return false;
                    }
                }
            }
        }
    }
    sum == g.one()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedComponent {
    pub grade: i64,
    pub generator: String,
    /// Indices j of the idempotents eps_j spanning the component over K[h]/(h^n - c).
    pub idempotents: Vec<usize>,
    pub dim: usize,
    /// The polynomial M(h) in (component) * t = M(h) * (shifted monomial).
    pub multiplier: String,
    pub multiplier_values: Vec<String>,
    pub injective: bool,
    /// The surviving idempotents read off from the ideal agree with the listed ones.
    pub ideal_agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityReport {
    pub quotient: String,
    pub regular_element: String,
    pub n: usize,
    pub degree_bound: usize,
    pub components: Vec<GradedComponent>,
    pub free_part: String,
    pub certified: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ModGenerator {
    R,
    T,
}

/// The graded decomposition of A1/(r) (or A1/(t)) and the certificate that t
/// (or r) is regular on every finite component.
pub fn basis_of_a1_mod<F: Field>(
    root: &RootedField<F>,
    which: ModGenerator,
    degree_bound: usize,
) -> Result<RegularityReport> {
    let f = &root.field;
    let n = root.n;
    if n > degree_bound {
        return Err(Error::TooLarge(format!("n = {n} exceeds the degree bound {degree_bound}")));
    }
    let g = Gwa::new(Tag::Weyl, root.clone())?;
    let rho = epsilon_roots(root)?;
    let ni = n as i64;
    let (sgn, zname, reg, quot) = match which {
        ModGenerator::R => (-1i64, "y", "t", "A1/(r)"),
        ModGenerator::T => (1, "x", "r", "A1/(t)"),
    };
    let mut components = vec![GradedComponent {
        grade: 0,
        generator: "1".into(),
        idempotents: (0..n).collect(),
        dim: n,
        multiplier: "1".into(),
        multiplier_values: vec![],
        injective: true,
        ideal_agrees: true,
    }];
    for i in 1..ni {
        let grade = sgn * i;
        // the ideal meets this grade in K[h]/(h^n - c) P(h) with P from the generator
        // times v_{grade - sgn n}; eps_j survives iff P(rho_j) = 0
        let ideal_poly = g.pair(sgn * ni, grade - sgn * ni);
        let kept: Vec<usize> = (0..n)
            .filter(|&j| f.is_zero(&poly::eval(f, &ideal_poly, &rho[j])))
            .collect();
        let listed: Vec<usize> = match which {
            ModGenerator::R => (i as usize..n).collect(),
            ModGenerator::T => (0..n - i as usize).collect(),
        };
        // v_grade * (regular element) = M(h) v_{grade + sgn' n}
        let mult = g.pair(grade, -sgn * ni);
        let values: Vec<F::Elem> = kept.iter().map(|&j| poly::eval(f, &mult, &rho[j])).collect();
        components.push(GradedComponent {
            grade,
            generator: if i == 1 { zname.into() } else { format!("{zname}^{i}") },
            dim: kept.len(),
            multiplier: poly::format_coeffs(f, &mult, "h"),
            multiplier_values: values.iter().map(|v| f.format(v)).collect(),
            injective: values.iter().all(|v| !f.is_zero(v)),
            ideal_agrees: kept == listed,
            idempotents: kept,
        });
    }
    let other = if zname == "y" { "x" } else { "y" };
    for k in 1..=degree_bound {
        components.push(GradedComponent {
            grade: -sgn * k as i64,
            generator: if k == 1 { other.into() } else { format!("{other}^{k}") },
            idempotents: (0..n).collect(),
            dim: n,
            multiplier: "1".into(),
            multiplier_values: vec![],
            injective: true,
            ideal_agrees: true,
        });
    }
    let certified = components.iter().all(|c| c.injective && c.ideal_agrees);
    Ok(RegularityReport {
        quotient: quot.into(),
        regular_element: reg.into(),
        n,
        degree_bound,
        components,
        free_part: match which {
            ModGenerator::R => "K[h]/(h^n - (q-1)^-n)[x; sigma]".into(),
            ModGenerator::T => "K[h]/(h^n - (q-1)^-n)[y; sigma^-1]".into(),
        },
        certified,
    })
}
