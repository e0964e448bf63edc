//! Norm equations N(b) = c and the search for the least d' admitting a matrix X in
//! M_{d'}(E) with X^{sigma^{n-1}} ... X^sigma X = c.

use std::collections::HashMap;

use rand::RngCore;
use serde::{Deserialize, Serialize};

use super::SearchOptions;
use crate::error::{Error, Result};
use crate::ext::ExtRing;
use crate::field::{Field, Ring};
use crate::matrix::{self, Matrix};
use crate::poly::divisors;

#[derive(Clone, Debug)]
pub struct NormSearch<F: Field> {
    pub witness: Option<Vec<F::Elem>>,
    /// Candidates b examined (pairs (u, v) for the quadratic-form search).
    pub examined: u64,
    pub method: String,
    /// True when the whole candidate space was covered, so a miss is a proof.
    pub complete: bool,
}

impl<F: Field> NormSearch<F> {
    fn hit(b: Vec<F::Elem>, examined: u64, method: &str) -> Self {
        NormSearch {
            witness: Some(b),
            examined,
            method: method.into(),
            complete: true,
        }
    }

    fn miss(examined: u64, method: &str, complete: bool) -> Self {
        NormSearch {
            witness: None,
            examined,
            method: method.into(),
            complete,
        }
    }
}

/// Looks for b in E with N(b) = target. Finite rings are scanned in canonical order
/// (so the first witness is the smallest) or sampled; function fields use
/// bounded-degree candidates.
pub fn norm_witness<F: Field>(
    ring: &ExtRing<F>,
    target: &F::Elem,
    opts: &SearchOptions,
    rng: &mut dyn RngCore,
) -> Result<NormSearch<F>> {
    let f = ring.field();
    let n = ring.n();
    if f.is_zero(target) {
        return Err(Error::ZeroInput);
    }
    if n == 1 {
        return Ok(NormSearch::hit(ring.scalar(target), 1, "degree one"));
    }
    if f.is_finite() {
        if let Some(size) = ring.order().filter(|&sz| sz <= opts.exhaustive_limit) {
            for idx in 1..size {
                let b = ring.element(idx);
                if ring.norm(&b)? == *target {
                    return Ok(NormSearch::hit(b, idx, "exhaustive"));
                }
            }
            return Ok(NormSearch::miss(size - 1, "exhaustive", true));
        }
        for t in 1..=opts.budget {
            let b: Vec<_> = (0..n).map(|_| f.random(rng, 0)).collect();
            if ring.norm(&b)? == *target {
                return Ok(NormSearch::hit(b, t, "random"));
            }
        }
        return Ok(NormSearch::miss(opts.budget, "random", false));
    }
    if n == 2 {
        return quadratic_form_search(ring, target, opts.degree_bound);
    }
    tuple_search(ring, target, opts)
}

/// For n = 2, N(u + vX) = u^2 - alpha v^2 with alpha = X^2; every pair (u, v) of bounded
/// candidates is covered by matching target + alpha v^2 against the table of squares.
fn quadratic_form_search<F: Field>(
    ring: &ExtRing<F>,
    target: &F::Elem,
    degree_bound: usize,
) -> Result<NormSearch<F>> {
    let f = ring.field();
    let cands = f.bounded_elements(degree_bound);
    let len = cands.len() as u64;
    let squares: HashMap<F::Elem, F::Elem> =
        cands.iter().map(|u| (f.mul(u, u), u.clone())).collect();
    let method = format!("quadratic form, degrees <= {degree_bound}");
    for (k, v) in cands.iter().enumerate() {
        let rhs = f.add(target, &f.mul(&ring.s, &f.mul(v, v)));
        if let Some(u) = squares.get(&rhs) {
            let b = vec![u.clone(), v.clone()];
            if ring.norm(&b)? != *target {
                return Err(Error::HypothesisFailed("quadratic norm form mismatch".into()));
            }
            return Ok(NormSearch::hit(b, (k as u64 + 1) * len, &method));
        }
    }
    Ok(NormSearch::miss(len * len, &method, false))
}

/// Coordinate tuples over bounded candidates, with the degree lowered until the
/// tuple count fits the budget.
fn tuple_search<F: Field>(
    ring: &ExtRing<F>,
    target: &F::Elem,
    opts: &SearchOptions,
) -> Result<NormSearch<F>> {
    let f = ring.field();
    let n = ring.n() as u32;
    let mut deg = opts.degree_bound;
    let fits = |c: Option<u64>| c.and_then(|c| c.checked_pow(n)).is_some_and(|c| c <= opts.budget);
    while deg > 0 && !fits(f.bounded_count(deg)) {
        deg -= 1;
    }
    let mut cands = f.bounded_elements(deg);
    while deg > 0 && (cands.len() as u64).checked_pow(n).is_none_or(|c| c > opts.budget) {
        deg -= 1;
        cands = f.bounded_elements(deg);
    }
    let len = cands.len() as u64;
    let total = len.saturating_pow(n).min(opts.budget);
    let method = format!("coordinate tuples, degrees <= {deg}");
    for idx in 1..total {
        let mut rest = idx;
        let b: Vec<_> = (0..n)
            .map(|_| {
                let c = cands[(rest % len) as usize].clone();
                rest /= len;
                c
            })
            .collect();
        if ring.norm(&b)? == *target {
            return Ok(NormSearch::hit(b, idx, &method));
        }
    }
    Ok(NormSearch::miss(total, &method, false))
}

/// The matrix of x on the E-basis 1, x, ..., x^{d-1}: e_i -> e_{i+1}, e_{d-1} -> c e_0.
/// Its (sigma, d)-norm is c times the identity.
pub fn companion_matrix<F: Field>(ring: &ExtRing<F>, d: usize, c: &F::Elem) -> Matrix<Vec<F::Elem>> {
    let mut m = matrix::zeros(ring, d, d);
    for i in 0..d {
        if i + 1 < d {
            m.set(i, i + 1, ring.one());
        } else {
            m.set(i, 0, ring.scalar(c));
        }
    }
    m
}

fn satisfies_norm<F: Field>(ring: &ExtRing<F>, x: &Matrix<Vec<F::Elem>>, target: &F::Elem) -> bool {
    matrix::matrix_sigma_norm(ring, x, ring.n()) == matrix::scalar(ring, x.rows, &ring.scalar(target))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AttemptOutcome {
    Satisfied,
    Excluded,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Attempt {
    pub d_prime: usize,
    pub method: String,
    pub examined: u64,
    pub solutions: u64,
    pub outcome: AttemptOutcome,
}

#[derive(Clone, Debug)]
pub struct IndexOutcome<F: Field> {
    /// The index, when every smaller admissible degree was excluded.
    pub d: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    /// A module matrix of size d, when one was found.
    pub x: Option<Matrix<Vec<F::Elem>>>,
    pub attempts: Vec<Attempt>,
    pub obstruction: Option<String>,
}

fn matrix_search<F: Field>(
    ring: &ExtRing<F>,
    dp: usize,
    target: &F::Elem,
    opts: &SearchOptions,
    rng: &mut dyn RngCore,
) -> (Option<Matrix<Vec<F::Elem>>>, u64, bool) {
    let f = ring.field();
    let cells = (dp * dp) as u32;
    let space = ring.order().and_then(|e| e.checked_pow(cells));
    if let (Some(size), Some(e)) = (space.filter(|&s| s <= opts.exhaustive_limit), ring.order()) {
        for idx in 0..size {
            let mut rest = idx;
            let x = Matrix::from_fn(dp, dp, |_, _| {
                let c = ring.element(rest % e);
                rest /= e;
                c
            });
            if satisfies_norm(ring, &x, target) {
                return (Some(x), idx + 1, true);
            }
        }
        return (None, size, true);
    }
    for t in 1..=opts.budget {
        let x = Matrix::from_fn(dp, dp, |_, _| (0..ring.n()).map(|_| f.random(rng, 0)).collect());
        if satisfies_norm(ring, &x, target) {
            return (Some(x), t, false);
        }
    }
    (None, opts.budget, false)
}

/// Walks d' over the divisors of n that divide `bound`, in ascending order.
/// Requires E to be a field.
pub fn index_search<F: Field>(
    ring: &ExtRing<F>,
    target: &F::Elem,
    bound: usize,
    opts: &SearchOptions,
    rng: &mut dyn RngCore,
) -> Result<IndexOutcome<F>> {
    let f = ring.field();
    let n = ring.n();
    if !ring.is_field() {
        return Err(Error::HypothesisFailed("the index search needs E to be a field".into()));
    }
    let cands: Vec<usize> = divisors(n).into_iter().filter(|d| bound.is_multiple_of(*d)).collect();
    let mut attempts = Vec::new();
    let mut obstruction = None;
    let mut found = None;
    for &dp in &cands {
        let (outcome, x, method, examined) = if dp == 1 {
            let s = norm_witness(ring, target, opts, rng)?;
            match s.witness {
                Some(b) => (
                    AttemptOutcome::Satisfied,
                    Some(Matrix::from_rows(vec![vec![b]])),
                    s.method,
                    s.examined,
                ),
                None if s.complete => (AttemptOutcome::Excluded, None, s.method, s.examined),
                None => {
                    let place = (n == 2)
                        .then(|| f.quaternion_obstruction(&ring.s, target))
                        .flatten();
                    match place {
                        Some(p) => {
                            obstruction = Some(format!(
                                "u^2 - ({}) v^2 = {} has no solution: ramified at {p}",
                                f.format(&ring.s),
                                f.format(target)
                            ));
                            (AttemptOutcome::Excluded, None, s.method, s.examined)
                        }
                        None => (AttemptOutcome::Undecided, None, s.method, s.examined),
                    }
                }
            }
        } else if dp == n {
            let x = companion_matrix(ring, n, target);
            if !satisfies_norm(ring, &x, target) {
                return Err(Error::HypothesisFailed("companion matrix fails the norm equation".into()));
            }
            (AttemptOutcome::Satisfied, Some(x), "companion matrix".into(), 1)
        } else if f.is_finite() {
            let (x, examined, complete) = matrix_search(ring, dp, target, opts, rng);
            let outcome = match (&x, complete) {
                (Some(_), _) => AttemptOutcome::Satisfied,
                (None, true) => AttemptOutcome::Excluded,
                (None, false) => AttemptOutcome::Undecided,
            };
            let method = if complete { "exhaustive matrices" } else { "random matrices" };
            (outcome, x, method.into(), examined)
        } else {
            (AttemptOutcome::Undecided, None, "no search over function fields".into(), 0)
        };
        let satisfied = outcome == AttemptOutcome::Satisfied;
        attempts.push(Attempt {
            d_prime: dp,
            method,
            examined,
            solutions: u64::from(satisfied),
            outcome,
        });
        if satisfied {
            found = Some((dp, x.unwrap()));
            break;
        }
    }
    let first_open = attempts
        .iter()
        .find(|a| a.outcome != AttemptOutcome::Excluded)
        .map(|a| a.d_prime)
        .ok_or_else(|| Error::HypothesisFailed("every admissible degree was excluded".into()))?;
    let upper = found.as_ref().map_or(bound, |(d, _)| *d);
    let (d, x) = match found {
        Some((fd, x)) if fd == first_open => (Some(fd), Some(x)),
        // d divides the bound, so the bound itself is forced once all smaller degrees fail
        _ if Some(&first_open) == cands.last() => (Some(first_open), None),
        _ => (None, None),
    };
    Ok(IndexOutcome {
        d,
        lower: first_open,
        upper,
        x,
        attempts,
        obstruction,
    })
}
