//! Prime ideals of the quantum plane, the quantum Weyl algebra and their localizations,
//! sorted into strata by the centre primes they lie over.
//!
//! A maximal centre ideal is given as a point with coordinates in a residue field F'
//! of degree e over K. For A1 the coordinates are (r0, t0) with r = y^n and t = x^n;
//! for the other algebras they are (s0, t0) with s = h^n.

use serde::{Deserialize, Serialize};

use crate::ce::{ce_classify, CESpec, CEStructureReport, SearchOptions};
use crate::error::{Error, Result};
use crate::field::{Field, Ring, RootedField};
use crate::poly::{self, Poly};
use crate::quantum::Tag;

mod atlas;

pub use atlas::*;

#[cfg(test)]
mod tests;

/// Generator data of a height one centre prime.
#[derive(Clone, Debug)]
pub enum Height1<E> {
    /// One of the named generators t, r, s, h or x.
    Named(String),
    /// f(v) for a single centre variable v, which must be irreducible.
    Univariate { var: String, poly: Poly<E> },
    /// Any other generator, taken to be irreducible on trust.
    Asserted(String),
}

#[derive(Clone, Debug)]
pub enum PrimeKind<E> {
    Zero,
    Height1(Height1<E>),
    /// A maximal centre ideal given by a point over the residue field.
    Point { coords: (E, E), ext_degree: usize },
}

/// A prime of the centre. For points the field is the residue field F'; otherwise K.
#[derive(Clone, Debug)]
pub struct CentrePrime<F: Field> {
    pub tag: Tag,
    pub field: RootedField<F>,
    pub kind: PrimeKind<F::Elem>,
}

impl<F: Field> CentrePrime<F> {
    pub fn zero(tag: Tag, field: RootedField<F>) -> Self {
        CentrePrime { tag, field, kind: PrimeKind::Zero }
    }

    pub fn height1(tag: Tag, field: RootedField<F>, gen: Height1<F::Elem>) -> Self {
        CentrePrime { tag, field, kind: PrimeKind::Height1(gen) }
    }

    pub fn point(tag: Tag, field: RootedField<F>, u: F::Elem, v: F::Elem, ext_degree: usize) -> Self {
        CentrePrime {
            tag,
            field,
            kind: PrimeKind::Point { coords: (u, v), ext_degree },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CompletelyPrime {
    Yes,
    No,
    Unknown,
}

impl CompletelyPrime {
    fn from_bool(b: bool) -> Self {
        if b {
            CompletelyPrime::Yes
        } else {
            CompletelyPrime::No
        }
    }
}

/// The factor algebra, or its quotient ring when the factor algebra is not artinian.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum Quotient {
    Field { field: String, degree_over_base: usize },
    MatrixOverField { n: usize, field: String, degree_over_base: usize },
    CEAlgebra { spec: String, structure: CEStructureReport },
    DomainNonArtinian { ring: String, quotient_ring: String },
}

/// One prime of the algebra lying over the given centre prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeClass {
    pub ideal: String,
    pub stratum: String,
    pub quotient: Quotient,
    /// Dimension of the factor algebra over K, when finite.
    pub dim_over_base: Option<usize>,
    pub simple_module: Option<String>,
    pub module_dim_over_base: Option<usize>,
    pub endomorphism: Option<String>,
    pub completely_prime: CompletelyPrime,
    pub primitive: bool,
    pub maximal: bool,
    /// The irreducible factor cutting out this prime inside its fiber.
    pub fiber_factor: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointReport {
    pub residue_field: String,
    pub ext_degree: usize,
    pub coords: Vec<(String, String)>,
    /// s0 = (-1)^{n-1} r0 t0 + (q-1)^{-n}, for A1 only.
    pub s0: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub algebra: String,
    pub field: String,
    pub centre_prime: String,
    pub point: Option<PointReport>,
    pub stratum: String,
    /// "verified", "unverified" or absent when no irreducibility claim is involved.
    pub irreducibility: Option<String>,
    pub primes: Vec<PrimeClass>,
}

/// Strata of Spec(algebra), non-maximal first.
pub fn strata(tag: Tag) -> &'static [&'static str] {
    match tag {
        Tag::Weyl => &["{0}", "(t)", "(r)", "(h)", "N''", "(t,r)", "T", "R", "M''", "H''"],
        Tag::Plane => &["{0}", "(x)", "(h)", "N", "(x,h)", "X", "M", "H"],
        Tag::LaurentX => &["{0}", "(h)", "N'", "M'", "H'"],
        Tag::Torus => &["Br'"],
    }
}

/// Strata made of maximal ideals.
pub fn maximal_strata(tag: Tag) -> &'static [&'static str] {
    match tag {
        Tag::Weyl => &["(t,r)", "T", "R", "M''", "H''"],
        Tag::Plane => &["(x,h)", "X", "M", "H"],
        Tag::LaurentX => &["M'", "H'"],
        Tag::Torus => &["Br'"],
    }
}

/// Strata whose maximal members come one per irreducible factor of a binomial.
pub fn fiber_strata(tag: Tag) -> &'static [&'static str] {
    match tag {
        Tag::Weyl => &["H''"],
        Tag::Plane => &["X", "H"],
        Tag::LaurentX => &["H'"],
        Tag::Torus => &[],
    }
}

/// Strata whose factor algebras are cyclic algebras over the residue field.
pub fn ce_strata(tag: Tag) -> &'static [&'static str] {
    match tag {
        Tag::Weyl => &["M''"],
        Tag::Plane => &["M"],
        Tag::LaurentX => &["M'"],
        Tag::Torus => &["Br'"],
    }
}

/// Names of the point coordinates.
pub fn coordinate_names(tag: Tag) -> [&'static str; 2] {
    match tag {
        Tag::Weyl => ["r", "t"],
        _ => ["s", "t"],
    }
}

/// The stratum of a maximal point from its vanishing pattern (u, v, s0 zero or not).
/// For algebras other than A1, `s0_zero` is ignored.
pub fn point_stratum(tag: Tag, u_zero: bool, v_zero: bool, s0_zero: bool) -> Result<&'static str> {
    Ok(match tag {
        Tag::Weyl => match (u_zero, v_zero) {
            (true, true) => "(t,r)",
            (false, true) => "T",
            (true, false) => "R",
            (false, false) if s0_zero => "H''",
            (false, false) => "M''",
        },
        Tag::Plane => match (u_zero, v_zero) {
            (true, true) => "(x,h)",
            (false, true) => "X",
            (true, false) => "H",
            (false, false) => "M",
        },
        Tag::LaurentX => {
            if v_zero {
                return Err(Error::InvalidCoordinates("t is a unit of CA, so t0 must be nonzero".into()));
            }
            if u_zero {
                "H'"
            } else {
                "M'"
            }
        }
        Tag::Torus => {
            if u_zero || v_zero {
                return Err(Error::InvalidCoordinates("s and t are units of B, so s0 and t0 must be nonzero".into()));
            }
            "Br'"
        }
    })
}

/// (q - 1)^{-n}.
pub fn c_n<F: Field>(root: &RootedField<F>) -> Result<F::Elem> {
    let f = &root.field;
    let c1 = f.inv(&f.sub(&root.q, &f.one())).ok_or(Error::DivisionByZero)?;
    Ok(f.pow(&c1, root.n as u64))
}

/// s0 = (-1)^{n-1} r0 t0 + (q-1)^{-n} at a point of Spec Z(A1).
pub fn weyl_s0<F: Field>(root: &RootedField<F>, r0: &F::Elem, t0: &F::Elem) -> Result<F::Elem> {
    let f = &root.field;
    let mut rt = f.mul(r0, t0);
    if root.n.is_multiple_of(2) {
        rt = f.neg(&rt);
    }
    Ok(f.add(&rt, &c_n(root)?))
}

/// Number of elements of K when the residue field F' has degree e over K.
fn base_order<F: Field>(f: &F, e: usize) -> Option<u64> {
    let big = f.order()?;
    let mut k = (big as f64).powf(1.0 / e as f64).round() as u64;
    for cand in [k.saturating_sub(1), k, k + 1] {
        if cand.checked_pow(e as u32) == Some(big) {
            k = cand;
            return Some(k);
        }
    }
    None
}

/// Galois conjugates of a over K: a, a^Q, a^{Q^2}, ... until the orbit closes.
fn conjugates<F: Field>(f: &F, a: &F::Elem, q_base: u64) -> Vec<F::Elem> {
    let mut out = vec![a.clone()];
    let mut b = f.pow(a, q_base);
    while b != *a {
        out.push(b.clone());
        b = f.pow(&b, q_base);
    }
    out
}

/// Minimal polynomial over K of an element of F', written with coefficients in F'.
fn min_poly<F: Field>(f: &F, a: &F::Elem, q_base: Option<u64>) -> Poly<F::Elem> {
    let conj = match q_base {
        Some(qb) => conjugates(f, a, qb),
        None => vec![a.clone()],
    };
    conj.iter()
        .fold(vec![f.one()], |acc, c| poly::mul(f, &acc, &[f.neg(c), f.one()]))
}

fn lcm(a: usize, b: usize) -> usize {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

/// Checks that the coordinates generate F' over K.
fn check_residue_degree<F: Field>(f: &F, coords: &[&F::Elem], e: usize) -> Result<Option<u64>> {
    if e == 1 {
        return Ok(None);
    }
    let qb = base_order(f, e).ok_or_else(|| {
        Error::InvalidCoordinates(format!("{} is not a degree {e} extension of a finite field", f.name()))
    })?;
    let deg = coords.iter().fold(1, |acc, c| lcm(acc, conjugates(f, c, qb).len()));
    if deg != e {
        return Err(Error::InvalidCoordinates(format!(
            "the coordinates generate a subfield of degree {deg}, not {e}; give the point over that subfield"
        )));
    }
    Ok(Some(qb))
}

/// Classifies a centre prime and every prime of the algebra lying over it.
pub fn classify_prime<F: Field>(p: &CentrePrime<F>, opts: &SearchOptions) -> Result<SpectrumReport> {
    match &p.kind {
        PrimeKind::Zero => Ok(classify_zero(p.tag, &p.field)),
        PrimeKind::Height1(g) => classify_height1(p.tag, &p.field, g),
        PrimeKind::Point { coords, ext_degree } => classify_point(p.tag, &p.field, &coords.0, &coords.1, *ext_degree, opts),
    }
}

fn non_artinian(ideal: &str, stratum: &str, ring: &str, quotient_ring: &str, cp: CompletelyPrime) -> PrimeClass {
    PrimeClass {
        ideal: ideal.into(),
        stratum: stratum.into(),
        quotient: Quotient::DomainNonArtinian {
            ring: ring.into(),
            quotient_ring: quotient_ring.into(),
        },
        dim_over_base: None,
        simple_module: None,
        module_dim_over_base: None,
        endomorphism: None,
        completely_prime: cp,
        primitive: false,
        maximal: false,
        fiber_factor: None,
    }
}

fn cyclic_over(field: &str) -> String {
    format!("cyclic algebra (E(s), sigma, t) over {field}, central simple of dimension n^2")
}

fn classify_zero<F: Field>(tag: Tag, root: &RootedField<F>) -> SpectrumReport {
    let k = root.field.name();
    let q = format!("{}, a division algebra", cyclic_over(&format!("{k}(s,t)")));
    let stratum = strata(tag)[0];
    SpectrumReport {
        algebra: tag.name().into(),
        field: root.describe(),
        centre_prime: "0".into(),
        point: None,
        stratum: stratum.into(),
        irreducibility: None,
        primes: vec![non_artinian("0", stratum, tag.name(), &q, CompletelyPrime::Yes)],
    }
}

/// Resolves a named height one generator to its stratum, the ideal it generates,
/// the factor ring and its quotient ring.
fn named_height1(tag: Tag, k: &str, name: &str) -> Result<(&'static str, String, String, CompletelyPrime)> {
    let units = || Err(Error::InvalidCoordinates(format!("{name} is a unit of {}", tag.name())));
    Ok(match (tag, name) {
        (Tag::Weyl, "t") | (Tag::Weyl, "x") => ("(t)", "A1/(t)".into(), format!("M_n({k}(r))"), CompletelyPrime::No),
        (Tag::Weyl, "r") | (Tag::Weyl, "y") => ("(r)", "A1/(r)".into(), format!("M_n({k}(t))"), CompletelyPrime::No),
        (Tag::Weyl, "h") | (Tag::Weyl, "s") => ("(h)", format!("{k}[x^±1]"), format!("{k}(x)"), CompletelyPrime::Yes),
        (Tag::Plane, "x") | (Tag::Plane, "t") => ("(x)", format!("{k}[h]"), format!("{k}(h)"), CompletelyPrime::Yes),
        (Tag::Plane, "h") | (Tag::Plane, "s") => ("(h)", format!("{k}[x]"), format!("{k}(x)"), CompletelyPrime::Yes),
        (Tag::LaurentX, "h") | (Tag::LaurentX, "s") => ("(h)", format!("{k}[x^±1]"), format!("{k}(x)"), CompletelyPrime::Yes),
        (Tag::LaurentX, "x") | (Tag::LaurentX, "t") => return units(),
        (Tag::Torus, "h") | (Tag::Torus, "s") | (Tag::Torus, "x") | (Tag::Torus, "t") => return units(),
        _ => {
            return Err(Error::InvalidCoordinates(format!(
                "'{name}' is not a named height one generator of {}",
                tag.name()
            )))
        }
    })
}

fn n_stratum(tag: Tag) -> &'static str {
    match tag {
        Tag::Weyl => "N''",
        Tag::Plane => "N",
        Tag::LaurentX => "N'",
        Tag::Torus => "Br'",
    }
}

fn classify_height1<F: Field>(tag: Tag, root: &RootedField<F>, g: &Height1<F::Elem>) -> Result<SpectrumReport> {
    let f = &root.field;
    let k = f.name();
    let named = |name: &str, irr: Option<String>| -> Result<SpectrumReport> {
        let (stratum, ring, q, cp) = named_height1(tag, &k, name)?;
        Ok(SpectrumReport {
            algebra: tag.name().into(),
            field: root.describe(),
            centre_prime: format!("({})", centre_generator(tag, name)),
            point: None,
            stratum: stratum.into(),
            irreducibility: irr,
            primes: vec![non_artinian(stratum, stratum, &ring, &q, cp)],
        })
    };
    let generic = |gen: String, irr: &str| {
        let stratum = n_stratum(tag);
        let kp = format!("k(p) = Frac(Z/({gen}))");
        SpectrumReport {
            algebra: tag.name().into(),
            field: root.describe(),
            centre_prime: format!("({gen})"),
            point: None,
            stratum: stratum.into(),
            irreducibility: Some(irr.into()),
            primes: vec![non_artinian(
                &format!("{}*({gen})", tag.name()),
                stratum,
                &format!("{}/({gen})", tag.name()),
                &cyclic_over(&kp),
                CompletelyPrime::Unknown,
            )],
        }
    };
    match g {
        Height1::Named(name) => named(name.trim(), None),
        Height1::Asserted(expr) => Ok(generic(expr.clone(), "unverified")),
        Height1::Univariate { var, poly: p } => {
            let var = var.trim();
            let allowed: &[&str] = match tag {
                Tag::Weyl => &["r", "t"],
                _ => &["s", "t"],
            };
            if !allowed.contains(&var) {
                return Err(Error::InvalidCoordinates(format!(
                    "'{var}' is not a centre variable of {} (expected one of {allowed:?})",
                    tag.name()
                )));
            }
            let mut p = p.clone();
            poly::trim(f, &mut p);
            let d = poly::degree(&p).ok_or(Error::ZeroInput)?;
            if d == 0 {
                return Err(Error::InvalidCoordinates("a nonzero constant generates the unit ideal".into()));
            }
            let irr = if f.is_finite() {
                if !poly::is_irreducible(f, &p) {
                    return Err(Error::HypothesisFailed(format!(
                        "{} is reducible over {k}",
                        poly::format_coeffs(f, &p, var)
                    )));
                }
                "verified"
            } else {
                "unverified"
            };
            if d == 1 && f.is_zero(&p[0]) {
                return named(var, Some(irr.into()));
            }
            Ok(generic(poly::format_coeffs(f, &poly::make_monic(f, &p).1, var), irr))
        }
    }
}

fn centre_generator(tag: Tag, name: &str) -> &'static str {
    match (tag, name) {
        (Tag::Weyl, "t" | "x") => "t",
        (Tag::Weyl, "r" | "y") => "r",
        (Tag::Plane, "x" | "t") => "t",
        _ => "s",
    }
}

fn classify_point<F: Field>(
    tag: Tag,
    root: &RootedField<F>,
    u: &F::Elem,
    v: &F::Elem,
    e: usize,
    opts: &SearchOptions,
) -> Result<SpectrumReport> {
    let f = &root.field;
    if e == 0 {
        return Err(Error::InvalidCoordinates("extension degree must be positive".into()));
    }
    let qb = check_residue_degree(f, &[u, v], e)?;
    let n = root.n;
    let names = coordinate_names(tag);
    let s0 = match tag {
        Tag::Weyl => Some(weyl_s0(root, u, v)?),
        _ => None,
    };
    let s0_zero = s0.as_ref().map(|s| f.is_zero(s)).unwrap_or(false);
    let stratum = point_stratum(tag, f.is_zero(u), f.is_zero(v), s0_zero)?;
    let kf = if e == 1 { f.name() } else { format!("{} (degree {e} over K)", f.name()) };
    let point = PointReport {
        residue_field: f.name(),
        ext_degree: e,
        coords: vec![
            (names[0].to_string(), f.format(u)),
            (names[1].to_string(), f.format(v)),
        ],
        s0: s0.as_ref().map(|s| f.format(s)),
    };
    let centre_prime = format!("m at ({}, {}) = ({}, {})", names[0], names[1], f.format(u), f.format(v));
    let mut report = SpectrumReport {
        algebra: tag.name().into(),
        field: root.describe(),
        centre_prime,
        point: Some(point),
        stratum: stratum.into(),
        irreducibility: None,
        primes: Vec::new(),
    };

    let maximal = |ideal: String, quotient: Quotient, dim: Option<usize>, module: String, mdim: Option<usize>, endo: String, cp, fiber| PrimeClass {
        ideal,
        stratum: stratum.into(),
        quotient,
        dim_over_base: dim,
        simple_module: Some(module),
        module_dim_over_base: mdim,
        endomorphism: Some(endo),
        completely_prime: cp,
        primitive: true,
        maximal: true,
        fiber_factor: fiber,
    };

    match stratum {
        "(t,r)" => {
            report.primes.push(maximal(
                "(t, r)".into(),
                Quotient::MatrixOverField { n, field: kf.clone(), degree_over_base: e },
                Some(n * n * e),
                "L = A1/A1(t, y)".into(),
                Some(n * e),
                kf,
                CompletelyPrime::from_bool(n == 1),
                None,
            ));
        }
        "T" | "R" => {
            let (zero_var, var, unit, c) = if stratum == "T" { ("t", "r", "y", u) } else { ("r", "t", "x", v) };
            let g = poly::format_coeffs(f, &min_poly(f, c, qb), var);
            let field = format!("K[{var}]/({g}) = {kf}");
            report.primes.push(maximal(
                format!("({zero_var}, {g})"),
                Quotient::MatrixOverField { n, field: field.clone(), degree_over_base: e },
                Some(n * n * e),
                format!("A1/({zero_var}, {g}) e_0, the columns of M_n over K[{var}]/({g}) with {unit} invertible"),
                Some(n * e),
                field,
                CompletelyPrime::from_bool(n == 1),
                None,
            ));
        }
        "(x,h)" => {
            report.primes.push(maximal(
                "(x, h)".into(),
                Quotient::Field { field: kf.clone(), degree_over_base: e },
                Some(e),
                kf.clone(),
                Some(e),
                kf,
                CompletelyPrime::Yes,
                None,
            ));
        }
        "H''" | "H'" | "H" | "X" => {
            let (var, zero, c) = if stratum == "X" { ("h", "x", u) } else { ("x", "h", v) };
            if !f.is_finite() {
                return Err(Error::UnsupportedFiberEnumeration(format!(
                    "factoring {var}^{n} - c over {} needs a finite field",
                    f.name()
                )));
            }
            let fac = poly::factor(f, &poly::binomial(f, n, c))?;
            for (g, _) in fac.factors {
                let dg = g.len() - 1;
                let gs = poly::format_coeffs(f, &g, var);
                let field = format!("{kf}[{var}]/({gs})");
                report.primes.push(maximal(
                    format!("({zero}, {gs})"),
                    Quotient::Field { field: field.clone(), degree_over_base: e * dg },
                    Some(e * dg),
                    field.clone(),
                    Some(e * dg),
                    field,
                    CompletelyPrime::Yes,
                    Some(gs),
                ));
            }
        }
        _ => {
            let s = s0.clone().unwrap_or_else(|| u.clone());
            let spec = CESpec::new(root.clone(), s, v.clone());
            let st = ce_classify(&spec, opts)?;
            let structure = st.report();
            let (module, mdim, endo, cp) = match st.d {
                Some(1) => (
                    format!("{kf}^{n}, columns of M_{n}({kf})"),
                    Some(n * e),
                    kf.clone(),
                    CompletelyPrime::from_bool(n == 1),
                ),
                Some(d) => (
                    format!("simple module of M_{}(D), D of degree {d} over {kf}", n / d),
                    Some(n * d * e),
                    format!("division algebra D of degree {d} over {kf}"),
                    CompletelyPrime::from_bool(d == n),
                ),
                None => (
                    "simple module of an algebra of undetermined index".into(),
                    None,
                    "division algebra of undetermined degree".into(),
                    CompletelyPrime::Unknown,
                ),
            };
            report.primes.push(maximal(
                format!("{}*m", tag.name()),
                Quotient::CEAlgebra { spec: spec.describe(), structure },
                Some(n * n * e),
                module,
                mdim,
                endo,
                cp,
                None,
            ));
        }
    }
    Ok(report)
}
