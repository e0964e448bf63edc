//! The cyclic algebra (E(s), sigma, a) = E[x; sigma]/(x^n - a) on the basis h^i x^j,
//! its classification and the index computation through the matrix sigma-norm.

mod module;
mod search;
mod units;

pub use module::{
    ce_division_basis, ce_simple_module, ce_tensor_factor, division_algebra, module_from_matrix,
    sigma_conjugator, verify_tensor_factors, SimpleModule, TensorCheck, TensorFactor,
};
pub use search::{
    companion_matrix, index_search, norm_witness, Attempt, AttemptOutcome, IndexOutcome,
    NormSearch,
};
pub use units::{ce_matrix_units, regular_representation, MatrixUnits, UnitsCheck};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::ext::{m_of, m_of2, ExtRing};
use crate::field::{Field, Ring, RootedField};
use crate::matrix::Matrix;
use crate::poly;

/// xh = q hx, h^n = s, x^n = a over a rooted field.
#[derive(Clone, Debug)]
pub struct CESpec<F: Field> {
    pub root: RootedField<F>,
    pub s: F::Elem,
    pub a: F::Elem,
}

impl<F: Field> CESpec<F> {
    pub fn new(root: RootedField<F>, s: F::Elem, a: F::Elem) -> Self {
        CESpec { root, s, a }
    }

    pub fn n(&self) -> usize {
        self.root.n
    }

    pub fn field(&self) -> &F {
        &self.root.field
    }

    pub fn ext_ring(&self) -> ExtRing<F> {
        ExtRing::new(self.root.clone(), self.s.clone())
    }

    /// The same algebra presented as (E(a), tau, s) with tau(x) = q^{-1} x.
    pub fn swapped(&self) -> Result<CESpec<F>> {
        Ok(CESpec {
            root: self.root.with_root(self.n(), -1)?,
            s: self.a.clone(),
            a: self.s.clone(),
        })
    }

    pub fn describe(&self) -> String {
        let f = self.field();
        format!(
            "{}, s={}, a={}",
            self.root.describe(),
            f.format(&self.s),
            f.format(&self.a)
        )
    }
}

/// Position of h^i x^j in the basis.
pub fn basis_index(n: usize, i: usize, j: usize) -> usize {
    j * n + i
}

pub fn monomial_label(i: usize, j: usize) -> String {
    let part = |v: &str, e: usize| match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    };
    let parts: Vec<String> = [part("h", i), part("x", j)].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// The n^2-dimensional structure-constant algebra with (h^i x^j)(h^k x^l) = q^{jk} h^{i+k} x^{j+l}.
pub fn ce_build<F: Field>(spec: &CESpec<F>) -> Result<StructureAlgebra<F>> {
    let n = spec.n();
    let f = spec.field();
    let labels = (0..n * n).map(|b| monomial_label(b % n, b / n)).collect();
    let mut unit = vec![f.zero(); n * n];
    unit[0] = f.one();
    StructureAlgebra::new(f.clone(), labels, unit, |b1, b2| {
        let (i, j) = (b1 % n, b1 / n);
        let (k, l) = (b2 % n, b2 / n);
        let mut c = spec.root.q_pow((j * k) as i64);
        if i + k >= n {
            c = f.mul(&c, &spec.s);
        }
        if j + l >= n {
            c = f.mul(&c, &spec.a);
        }
        let mut v = vec![f.zero(); n * n];
        v[basis_index(n, (i + k) % n, (j + l) % n)] = c;
        v
    })
}

/// h^i x^j for arbitrary exponents, reduced with h^n = s and x^n = a.
pub fn ce_monomial<F: Field>(spec: &CESpec<F>, i: usize, j: usize) -> Vec<F::Elem> {
    let n = spec.n();
    let f = spec.field();
    let c = f.mul(
        &f.pow(&spec.s, (i / n) as u64),
        &f.pow(&spec.a, (j / n) as u64),
    );
    let mut v = vec![f.zero(); n * n];
    v[basis_index(n, i % n, j % n)] = c;
    v
}

pub fn format_element<F: Field>(spec: &CESpec<F>, v: &[F::Elem]) -> String {
    let f = spec.field();
    let n = spec.n();
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !f.is_zero(c))
        .map(|(b, c)| {
            let m = monomial_label(b % n, b / n);
            match (m.as_str(), f.is_one(c)) {
                ("1", _) => f.format(c),
                (_, true) => m,
                _ => {
                    let cs = f.format(c);
                    if cs.contains(['+', '-', '/']) {
                        format!("({cs})*{m}")
                    } else {
                        format!("{cs}*{m}")
                    }
                }
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Bounds and seed for the norm-equation and matrix searches.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(default)]
pub struct SearchOptions {
    /// Spaces of at most this many candidates are enumerated completely.
    pub exhaustive_limit: u64,
    /// Random trials when the space is larger.
    pub budget: u64,
    /// Numerator/denominator degree bound for function-field candidates.
    pub degree_bound: usize,
    pub seed: u64,
    /// Build the matrix-unit table when d = 1.
    pub units: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            exhaustive_limit: 1_000_000,
            budget: 100_000,
            degree_bound: 4,
            seed: 0,
            units: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Determined,
    Unknown,
}

/// m(s), m(s, a), m(a), m(a, s) with the chosen roots and the gcd bound on d.
#[derive(Clone, Debug)]
pub struct Invariants<F: Field> {
    pub m_s: usize,
    pub s1: F::Elem,
    pub m_sa: usize,
    pub a1: F::Elem,
    pub m_a: usize,
    pub m_as: usize,
    pub gcd_bound: usize,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn invariants<F: Field>(spec: &CESpec<F>) -> Result<Invariants<F>> {
    let f = spec.field();
    let n = spec.n();
    let (m_s, s1) = m_of(f, &spec.s, n)?;
    let (m_sa, a1) = m_of2(f, &spec.s, &spec.a, n)?;
    let (m_a, _) = m_of(f, &spec.a, n)?;
    let (m_as, _) = m_of2(f, &spec.a, &spec.s, n)?;
    Ok(Invariants {
        gcd_bound: gcd(n / (m_s * m_sa), n / (m_a * m_as)),
        m_s,
        s1,
        m_sa,
        a1,
        m_a,
        m_as,
    })
}

/// The reduced cyclic algebra: E' = F[X]/(X^{n'} - a1) with X -> q^{-m(s)m(s,a)} X,
/// and the skew generator H with H^{n'} = s1, where n' = n / (m(s) m(s,a)).
pub fn reduced_spec<F: Field>(spec: &CESpec<F>, inv: &Invariants<F>) -> Result<CESpec<F>> {
    let k = inv.m_s * inv.m_sa;
    Ok(CESpec {
        root: spec.root.with_root(spec.n() / k, -(k as i64))?,
        s: inv.a1.clone(),
        a: inv.s1.clone(),
    })
}

/// A prime ideal of a non-simple algebra and the simple module it annihilates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeReport {
    pub generators: Vec<String>,
    pub residue_field: String,
    pub module_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonSimple {
    pub radical_generators: Vec<String>,
    pub radical_dim: usize,
    pub quotient: String,
    pub primes: Vec<PrimeReport>,
}

/// Monic irreducible factors y^{n/m} - zeta^i r of y^n - c, with m = m(c) and zeta = q^{n/m}.
pub fn binomial_factors<F: Field>(root: &RootedField<F>, c: &F::Elem) -> Result<Vec<poly::Poly<F::Elem>>> {
    let f = &root.field;
    let n = root.n;
    let (m, r) = m_of(f, c, n)?;
    let zeta = root.q_pow((n / m) as i64);
    let factors: Vec<_> = (0..m)
        .map(|i| poly::binomial(f, n / m, &f.mul(&f.pow(&zeta, i as u64), &r)))
        .collect();
    let prod = factors
        .iter()
        .fold(poly::constant(f, f.one()), |acc, g| poly::mul(f, &acc, g));
    if prod != poly::binomial(f, n, c) {
        return Err(Error::HypothesisFailed("binomial factors do not multiply back".into()));
    }
    if f.is_finite() {
        let fac = poly::factor(f, &poly::binomial(f, n, c))?;
        if fac.degrees() != vec![n / m; m] {
            return Err(Error::HypothesisFailed(format!(
                "factorization degrees {:?} disagree with m = {m}",
                fac.degrees()
            )));
        }
    }
    Ok(factors)
}

fn nonsimple<F: Field>(spec: &CESpec<F>, alg: &StructureAlgebra<F>) -> Result<NonSimple> {
    let f = spec.field();
    let n = spec.n();
    let h = ce_monomial(spec, 1, 0);
    let x = ce_monomial(spec, 0, 1);
    let (zs, za) = (f.is_zero(&spec.s), f.is_zero(&spec.a));
    let primes_of = |c: &F::Elem, var: &str, other: &str| -> Result<Vec<PrimeReport>> {
        let fs = binomial_factors(&spec.root, c)?;
        Ok(fs
            .iter()
            .map(|g| {
                let gs = poly::format_coeffs(f, g, var);
                PrimeReport {
                    generators: vec![other.to_string(), gs.clone()],
                    residue_field: format!("{}[{var}]/({gs})", f.name()),
                    module_dim: g.len() - 1,
                }
            })
            .collect())
    };
    let (gens, names, quotient, primes) = match (zs, za) {
        (true, true) => (
            vec![h, x],
            vec!["h", "x"],
            f.name(),
            vec![PrimeReport {
                generators: vec!["h".into(), "x".into()],
                residue_field: f.name(),
                module_dim: 1,
            }],
        ),
        (false, true) => (
            vec![x],
            vec!["x"],
            format!(
                "{}[h]/({})",
                f.name(),
                poly::format_coeffs(f, &poly::binomial(f, n, &spec.s), "h")
            ),
            primes_of(&spec.s, "h", "x")?,
        ),
        (true, false) => (
            vec![h],
            vec!["h"],
            format!(
                "{}[x]/({})",
                f.name(),
                poly::format_coeffs(f, &poly::binomial(f, n, &spec.a), "x")
            ),
            primes_of(&spec.a, "x", "h")?,
        ),
        (false, false) => unreachable!("simple case"),
    };
    let radical_dim = alg.ideal(&gens).len();
    let expected = if zs && za { n * n - 1 } else { n * n - n };
    if radical_dim != expected {
        return Err(Error::HypothesisFailed(format!(
            "radical has dimension {radical_dim}, expected {expected}"
        )));
    }
    Ok(NonSimple {
        radical_generators: names.into_iter().map(String::from).collect(),
        radical_dim,
        quotient,
        primes,
    })
}

/// Everything ce_classify determines, with elements kept in their field.
#[derive(Clone, Debug)]
pub struct CEStructure<F: Field> {
    pub spec: CESpec<F>,
    pub simple: bool,
    pub verdict: Verdict,
    pub centre_dim: usize,
    pub nonsimple: Option<NonSimple>,
    pub invariants: Option<Invariants<F>>,
    pub reduced: Option<CESpec<F>>,
    pub index: Option<IndexOutcome<F>>,
    pub d: Option<usize>,
    pub m: Option<usize>,
    /// b in E(s) with N(b) = a, when d = 1.
    pub witness: Option<Vec<F::Elem>>,
    pub units: Option<MatrixUnits<F>>,
}

impl<F: Field> CEStructure<F> {
    pub fn module_matrix(&self) -> Option<&Matrix<Vec<F::Elem>>> {
        self.index.as_ref().and_then(|i| i.x.as_ref())
    }
}

pub fn ce_classify<F: Field>(spec: &CESpec<F>, opts: &SearchOptions) -> Result<CEStructure<F>> {
    let f = spec.field();
    let n = spec.n();
    let alg = ce_build(spec)?;
    let centre_dim = alg
        .centralizer(&[ce_monomial(spec, 1, 0), ce_monomial(spec, 0, 1)])
        .len();
    let mut out = CEStructure {
        spec: spec.clone(),
        simple: false,
        verdict: Verdict::Determined,
        centre_dim,
        nonsimple: None,
        invariants: None,
        reduced: None,
        index: None,
        d: None,
        m: None,
        witness: None,
        units: None,
    };
    if f.is_zero(&spec.s) || f.is_zero(&spec.a) {
        out.nonsimple = Some(nonsimple(spec, &alg)?);
        return Ok(out);
    }
    if centre_dim != 1 {
        return Err(Error::HypothesisFailed(format!(
            "centre has dimension {centre_dim} although s and a are nonzero"
        )));
    }
    out.simple = true;
    let inv = invariants(spec)?;
    let reduced = reduced_spec(spec, &inv)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let index = index_search(&reduced.ext_ring(), &reduced.a, inv.gcd_bound, opts, &mut rng)?;
    if index.d.is_none() {
        if f.is_finite() {
            return Err(Error::SearchExhausted {
                lower: index.lower,
                upper: index.upper,
            });
        }
        out.verdict = Verdict::Unknown;
    }
    out.d = index.d;
    out.m = index.d.map(|d| n / d);
    if index.d == Some(1) && opts.units {
        let search = norm_witness(&spec.ext_ring(), &spec.a, opts, &mut rng)?;
        if let Some(b) = search.witness {
            out.units = Some(ce_matrix_units(spec, &alg, &b)?);
            out.witness = Some(b);
        }
    }
    out.invariants = Some(inv);
    out.reduced = Some(reduced);
    out.index = Some(index);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedReport {
    pub degree: usize,
    pub q: String,
    pub s: String,
    pub a: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttemptReport {
    pub d_prime: usize,
    pub method: String,
    pub examined: u64,
    pub solutions: u64,
    pub outcome: AttemptOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitsReport {
    pub size: usize,
    pub verified: bool,
    pub check: UnitsCheck,
    pub table: Vec<Vec<String>>,
}

/// The JSON form of a classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CEStructureReport {
    pub field: String,
    pub n: usize,
    pub q: String,
    pub s: String,
    pub a: String,
    pub simple: bool,
    pub verdict: Verdict,
    pub centre_dim: usize,
    pub radical_generators: Vec<String>,
    pub radical_dim: Option<usize>,
    pub semisimple_quotient: Option<String>,
    pub primes: Vec<PrimeReport>,
    pub m_s: Option<usize>,
    pub m_sa: Option<usize>,
    pub m_a: Option<usize>,
    pub m_as: Option<usize>,
    pub gcd_bound: Option<usize>,
    pub reduced: Option<ReducedReport>,
    pub matrix_size: Option<usize>,
    pub index: Option<usize>,
    pub index_bounds: Option<[usize; 2]>,
    pub module_matrix: Option<Vec<Vec<String>>>,
    pub attempts: Vec<AttemptReport>,
    pub obstruction: Option<String>,
    pub witnesses: Vec<String>,
    pub matrix_units: Option<UnitsReport>,
}

impl<F: Field> CEStructure<F> {
    pub fn report(&self) -> CEStructureReport {
        let spec = &self.spec;
        let f = spec.field();
        let ns = self.nonsimple.as_ref();
        let inv = self.invariants.as_ref();
        let ring = spec.ext_ring();
        let reduced_ring = self.reduced.as_ref().map(|r| r.ext_ring());
        let mut witnesses = Vec::new();
        if let Some(b) = &self.witness {
            witnesses.push(ring.format(b));
        }
        CEStructureReport {
            field: f.name(),
            n: spec.n(),
            q: f.format(&spec.root.q),
            s: f.format(&spec.s),
            a: f.format(&spec.a),
            simple: self.simple,
            verdict: self.verdict,
            centre_dim: self.centre_dim,
            radical_generators: ns.map(|x| x.radical_generators.clone()).unwrap_or_default(),
            radical_dim: ns.map(|x| x.radical_dim),
            semisimple_quotient: ns.map(|x| x.quotient.clone()),
            primes: ns.map(|x| x.primes.clone()).unwrap_or_default(),
            m_s: inv.map(|i| i.m_s),
            m_sa: inv.map(|i| i.m_sa),
            m_a: inv.map(|i| i.m_a),
            m_as: inv.map(|i| i.m_as),
            gcd_bound: inv.map(|i| i.gcd_bound),
            reduced: self.reduced.as_ref().map(|r| ReducedReport {
                degree: r.n(),
                q: f.format(&r.root.q),
                s: f.format(&r.s),
                a: f.format(&r.a),
            }),
            matrix_size: self.m,
            index: self.d,
            index_bounds: self.index.as_ref().map(|i| [i.lower, i.upper]),
            module_matrix: self.module_matrix().zip(reduced_ring.as_ref()).map(|(x, r)| {
                x.to_rows()
                    .iter()
                    .map(|row| row.iter().map(|c| poly_in(r, c, "X")).collect())
                    .collect()
            }),
            attempts: self
                .index
                .as_ref()
                .map(|i| {
                    i.attempts
                        .iter()
                        .map(|a| AttemptReport {
                            d_prime: a.d_prime,
                            method: a.method.clone(),
                            examined: a.examined,
                            solutions: a.solutions,
                            outcome: a.outcome,
                        })
                        .collect()
                })
                .unwrap_or_default(),
            obstruction: self.index.as_ref().and_then(|i| i.obstruction.clone()),
            witnesses,
            matrix_units: self.units.as_ref().map(|u| UnitsReport {
                size: u.table.len(),
                verified: true,
                check: u.check,
                table: u
                    .table
                    .iter()
                    .map(|row| row.iter().map(|e| format_element(spec, e)).collect())
                    .collect(),
            }),
        }
    }
}

fn poly_in<F: Field>(ring: &ExtRing<F>, c: &[F::Elem], var: &str) -> String {
    poly::format_coeffs(ring.field(), c, var)
}
