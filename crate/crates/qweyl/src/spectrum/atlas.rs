use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::*;
use crate::field::{Fp, Fq};

/// A containment between a named non-maximal prime and the members of a stratum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Containment {
    pub lower: String,
    pub upper: String,
    /// Enumerated members of `upper` that contain `lower`.
    pub count: usize,
    /// Enumerated members of `upper`.
    pub members: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasChecks {
    pub one_stratum_each: bool,
    pub primitive_iff_maximal: bool,
    pub completely_prime_matches_index: bool,
    pub fibers_match_factorization: bool,
    pub dimensions: bool,
    pub solid_edges_realized: bool,
    pub forbidden_respected: bool,
}

impl AtlasChecks {
    pub fn passed(&self) -> bool {
        self.one_stratum_each
            && self.primitive_iff_maximal
            && self.completely_prime_matches_index
            && self.fibers_match_factorization
            && self.dimensions
            && self.solid_edges_realized
            && self.forbidden_respected
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atlas {
    pub algebra: String,
    pub field: String,
    pub n: usize,
    pub max_ext_degree: usize,
    /// Maximal centre points (one per Frobenius orbit) by degree.
    pub points_by_degree: BTreeMap<usize, usize>,
    pub point_counts: BTreeMap<String, usize>,
    pub prime_counts: BTreeMap<String, usize>,
    pub solid_edges: Vec<[String; 2]>,
    /// Possible containments drawn dotted; reported, never asserted.
    pub dotted_edges: Vec<[String; 2]>,
    pub containments: Vec<Containment>,
    /// (lower, upper, violations) for containments that must not occur.
    pub forbidden: Vec<Containment>,
    pub checks: AtlasChecks,
    pub reports: Vec<SpectrumReport>,
}

fn pairs(v: &[(&str, &str)]) -> Vec<[String; 2]> {
    v.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect()
}

/// Solid edges of the containment diagram.
pub fn solid_edges(tag: Tag) -> Vec<[String; 2]> {
    pairs(match tag {
        Tag::Weyl => &[
            ("{0}", "(t)"),
            ("{0}", "(r)"),
            ("{0}", "(h)"),
            ("{0}", "N''"),
            ("(t)", "T"),
            ("(t)", "(t,r)"),
            ("(r)", "(t,r)"),
            ("(r)", "R"),
            ("(h)", "H''"),
        ][..],
        Tag::Plane => &[
            ("{0}", "(x)"),
            ("{0}", "(h)"),
            ("{0}", "N"),
            ("(x)", "X"),
            ("(x)", "(x,h)"),
            ("(h)", "(x,h)"),
            ("(h)", "H"),
        ][..],
        Tag::LaurentX => &[("{0}", "(h)"), ("{0}", "N'"), ("(h)", "H'")][..],
        Tag::Torus => &[][..],
    })
}

pub fn dotted_edges(tag: Tag) -> Vec<[String; 2]> {
    pairs(match tag {
        Tag::Weyl => &[("N''", "T"), ("N''", "(t,r)"), ("N''", "R"), ("N''", "M''"), ("N''", "H''")][..],
        Tag::Plane => &[("N", "M"), ("N", "X"), ("N", "H")][..],
        Tag::LaurentX => &[("N'", "M'"), ("N'", "H'")][..],
        Tag::Torus => &[][..],
    })
}

/// Pairs (named prime, stratum) with no member of the stratum containing the prime.
pub fn forbidden_containments(tag: Tag) -> Vec<[String; 2]> {
    pairs(match tag {
        Tag::Weyl => &[
            ("(t)", "R"),
            ("(t)", "M''"),
            ("(t)", "H''"),
            ("(r)", "T"),
            ("(r)", "M''"),
            ("(r)", "H''"),
            ("(h)", "T"),
            ("(h)", "R"),
            ("(h)", "(t,r)"),
            ("(h)", "M''"),
        ][..],
        Tag::Plane => &[("(x)", "H"), ("(x)", "M"), ("(h)", "X"), ("(h)", "M")][..],
        Tag::LaurentX => &[("(h)", "M'")][..],
        Tag::Torus => &[][..],
    })
}

/// Named height one primes of the algebra.
pub fn named_primes(tag: Tag) -> &'static [&'static str] {
    match tag {
        Tag::Weyl => &["(t)", "(r)", "(h)"],
        Tag::Plane => &["(x)", "(h)"],
        Tag::LaurentX => &["(h)"],
        Tag::Torus => &[],
    }
}

/// Whether the named prime lies in a maximal prime over the point; the generators are
/// central or normal, so this is read off the vanishing of the centre coordinates.
fn contains<F: Field>(tag: Tag, name: &str, f: &F, u: &F::Elem, v: &F::Elem, s0: Option<&F::Elem>) -> bool {
    match (tag, name) {
        (Tag::Weyl, "(t)") => f.is_zero(v),
        (Tag::Weyl, "(r)") => f.is_zero(u),
        (Tag::Weyl, "(h)") => s0.map(|s| f.is_zero(s)).unwrap_or(false),
        (Tag::Plane, "(x)") => f.is_zero(v),
        (_, "(h)") => f.is_zero(u),
        _ => false,
    }
}

struct Accumulator {
    tag: Tag,
    n: usize,
    points_by_degree: BTreeMap<usize, usize>,
    point_counts: BTreeMap<String, usize>,
    prime_counts: BTreeMap<String, usize>,
    contain: BTreeMap<(String, String), usize>,
    checks: AtlasChecks,
    reports: Vec<SpectrumReport>,
}

impl Accumulator {
    fn add_point<F: Field>(
        &mut self,
        root: &RootedField<F>,
        u: &F::Elem,
        v: &F::Elem,
        e: usize,
        opts: &SearchOptions,
    ) -> Result<()> {
        let f = &root.field;
        let tag = self.tag;
        let rep = classify_prime(&CentrePrime::point(tag, root.clone(), u.clone(), v.clone(), e), opts)?;
        let s0 = match tag {
            Tag::Weyl => Some(weyl_s0(root, u, v)?),
            _ => None,
        };

        // independent membership predicates for the maximal strata
        let (uz, vz) = (f.is_zero(u), f.is_zero(v));
        let sz = s0.as_ref().map(|s| f.is_zero(s)).unwrap_or(false);
        let preds: Vec<(&str, bool)> = match tag {
            Tag::Weyl => vec![
                ("(t,r)", uz && vz),
                ("T", vz && !uz),
                ("R", uz && !vz),
                ("H''", sz),
                ("M''", !uz && !vz && !sz),
            ],
            Tag::Plane => vec![("(x,h)", uz && vz), ("X", vz && !uz), ("H", uz && !vz), ("M", !uz && !vz)],
            Tag::LaurentX => vec![("H'", uz), ("M'", !uz)],
            Tag::Torus => vec![("Br'", true)],
        };
        let hits: Vec<&str> = preds.iter().filter(|p| p.1).map(|p| p.0).collect();
        if hits.len() != 1 || hits[0] != rep.stratum {
            self.checks.one_stratum_each = false;
        }

        let n = self.n;
        for pc in &rep.primes {
            if pc.primitive != pc.maximal || pc.stratum != rep.stratum {
                self.checks.primitive_iff_maximal = false;
            }
            if ce_strata(tag).contains(&pc.stratum.as_str()) {
                let d = match &pc.quotient {
                    Quotient::CEAlgebra { structure, .. } => structure.index,
                    _ => None,
                };
                let ok = match (pc.completely_prime, d) {
                    (CompletelyPrime::Unknown, None) => true,
                    (CompletelyPrime::Yes, Some(d)) => d == n,
                    (CompletelyPrime::No, Some(d)) => d != n,
                    _ => false,
                };
                if !ok {
                    self.checks.completely_prime_matches_index = false;
                }
                if pc.dim_over_base != Some(n * n * e) {
                    self.checks.dimensions = false;
                }
            }
            if matches!(pc.stratum.as_str(), "T" | "R" | "(t,r)") && pc.dim_over_base != Some(n * n * e) {
                self.checks.dimensions = false;
            }
        }

        if fiber_strata(tag).contains(&rep.stratum.as_str()) {
            let (var, c) = if rep.stratum == "X" { ("h", u) } else { ("x", v) };
            let brute = poly::trial_factor(f, &poly::binomial(f, n, c))?;
            let mut expect: Vec<String> = brute
                .factors
                .iter()
                .map(|(g, _)| poly::format_coeffs(f, g, var))
                .collect();
            let mut got: Vec<String> = rep.primes.iter().filter_map(|p| p.fiber_factor.clone()).collect();
            expect.sort();
            got.sort();
            if expect != got || brute.factors.iter().any(|(_, m)| *m != 1) {
                self.checks.fibers_match_factorization = false;
            }
            let total: usize = rep.primes.iter().map(|p| p.dim_over_base.unwrap_or(0)).sum();
            if total != n * e {
                self.checks.dimensions = false;
            }
        }

        for name in named_primes(tag) {
            if contains(tag, name, f, u, v, s0.as_ref()) {
                *self.contain.entry((name.to_string(), rep.stratum.clone())).or_default() += rep.primes.len();
            }
        }
        *self.points_by_degree.entry(e).or_default() += 1;
        *self.point_counts.entry(rep.stratum.clone()).or_default() += 1;
        *self.prime_counts.entry(rep.stratum.clone()).or_default() += rep.primes.len();
        self.reports.push(rep);
        Ok(())
    }
}

/// Enumerates every maximal centre point whose residue field has degree at most
/// `max_ext_degree` over the prime field, one point per Frobenius orbit, and
/// classifies the primes over each.
pub fn enumerate_spectrum(
    tag: Tag,
    root: &RootedField<Fp>,
    max_ext_degree: usize,
    max_points: u64,
    opts: &SearchOptions,
) -> Result<Atlas> {
    let p = root.field.p() as u64;
    let total: u64 = (1..=max_ext_degree)
        .map(|e| p.checked_pow(2 * e as u32).unwrap_or(u64::MAX))
        .fold(0u64, |a, b| a.saturating_add(b));
    if max_ext_degree == 0 || total > max_points {
        return Err(Error::TooLarge(format!(
            "{total} candidate points over extensions of degree <= {max_ext_degree} exceed the bound {max_points}"
        )));
    }
    let mut acc = Accumulator {
        tag,
        n: root.n,
        points_by_degree: BTreeMap::new(),
        point_counts: BTreeMap::new(),
        prime_counts: BTreeMap::new(),
        contain: BTreeMap::new(),
        checks: AtlasChecks {
            one_stratum_each: true,
            primitive_iff_maximal: true,
            completely_prime_matches_index: true,
            fibers_match_factorization: true,
            dimensions: true,
            solid_edges_realized: true,
            forbidden_respected: true,
        },
        reports: Vec::new(),
    };
    let f = &root.field;
    for u in f.all_elements() {
        for v in f.all_elements() {
            match (tag, f.is_zero(&u), f.is_zero(&v)) {
                (Tag::LaurentX, _, true) | (Tag::Torus, true, _) | (Tag::Torus, _, true) => continue,
                _ => {}
            }
            acc.add_point(root, &u, &v, 1, opts)?;
        }
    }
    for e in 2..=max_ext_degree {
        let fq = Fq::with_degree(root.field.p(), e)?;
        let rq = RootedField::new(fq.clone(), root.n, fq.embed(root.q))?;
        let elems = fq.all_elements();
        for u in &elems {
            for v in &elems {
                if (tag == Tag::LaurentX && fq.is_zero(v)) || (tag == Tag::Torus && (fq.is_zero(u) || fq.is_zero(v))) {
                    continue;
                }
                // keep the orbit representative with the smallest index pair
                let key = |a: &Vec<u32>, b: &Vec<u32>| (fq.index_of(a), fq.index_of(b));
                let (mut a, mut b) = (fq.frobenius(u), fq.frobenius(v));
                let mut size = 1;
                let mut minimal = true;
                while (&a, &b) != (u, v) {
                    if key(&a, &b) < key(u, v) {
                        minimal = false;
                    }
                    size += 1;
                    a = fq.frobenius(&a);
                    b = fq.frobenius(&b);
                }
                if size == e && minimal {
                    acc.add_point(&rq, u, v, e, opts)?;
                }
            }
        }
    }

    let containments: Vec<Containment> = acc
        .contain
        .iter()
        .map(|((l, u), c)| Containment {
            lower: l.clone(),
            upper: u.clone(),
            count: *c,
            members: acc.prime_counts.get(u).copied().unwrap_or(0),
        })
        .collect();
    let observed = |l: &str, u: &str| acc.contain.get(&(l.to_string(), u.to_string())).copied().unwrap_or(0);
    let mut forbidden = Vec::new();
    for [l, u] in forbidden_containments(tag) {
        let c = observed(&l, &u);
        if c > 0 {
            acc.checks.forbidden_respected = false;
        }
        forbidden.push(Containment {
            members: acc.prime_counts.get(&u).copied().unwrap_or(0),
            lower: l,
            upper: u,
            count: c,
        });
    }
    for [l, u] in solid_edges(tag) {
        if named_primes(tag).contains(&l.as_str()) && maximal_strata(tag).contains(&u.as_str()) {
            let members = acc.prime_counts.get(&u).copied().unwrap_or(0);
            if observed(&l, &u) != members {
                acc.checks.solid_edges_realized = false;
            }
        }
    }
    Ok(Atlas {
        algebra: tag.name().into(),
        field: root.describe(),
        n: root.n,
        max_ext_degree,
        points_by_degree: acc.points_by_degree,
        point_counts: acc.point_counts,
        prime_counts: acc.prime_counts,
        solid_edges: solid_edges(tag),
        dotted_edges: dotted_edges(tag),
        containments,
        forbidden,
        checks: acc.checks,
        reports: acc.reports,
    })
}

impl Atlas {
    /// The containment diagram in DOT format: solid edges only, maximal strata
    /// labelled with their enumerated prime counts.
    pub fn dot(&self) -> String {
        let tag = Tag::parse(&self.algebra).unwrap_or(Tag::Weyl);
        let mut s = String::new();
        let _ = writeln!(s, "graph \"Spec({}) over {}\" {{", self.algebra, self.field);
        let _ = writeln!(s, "  rankdir=BT;\n  node [shape=plaintext];");
        for st in strata(tag) {
            let label = match self.prime_counts.get(*st) {
                Some(c) => format!("{st} [{c}]"),
                None if maximal_strata(tag).contains(st) => format!("{st} [0]"),
                None => st.to_string(),
            };
            let _ = writeln!(s, "  \"{st}\" [label=\"{label}\"];");
        }
        for [a, b] in &self.solid_edges {
            let _ = writeln!(s, "  \"{a}\" -- \"{b}\";");
        }
        s.push_str("}\n");
        s
    }
}
