//! Automorphisms of the quantum plane A, the quantum Weyl algebra A1, the localization
//! CA = K[h][x^{±1}; sigma] and the quantum torus B, in canonical parameters.
//!
//! - A: t_{λ,μ}: h -> λh, x -> μx, and for n = 2 also t'_{λ,μ}: h -> λx, x -> μh.
//! - A1: t_λ: x -> λx, y -> λ^{-1}y, and for n = 2 also t'_λ: x -> λy, y -> λ^{-1}x.
//! - CA: σ_{λx^i,μ}: h -> λx^i h, x -> μx, and for n = 2 also σ'_{λx^i,μ} with x -> μx^{-1}.
//! - B: τ_{A,λ,μ}: h -> λh^a x^b, x -> μh^c x^d.
//!
//! Every constructed automorphism is checked against the defining relations in normal form.

use rand::{Rng, RngCore};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::quantum::{Gwa, GwaElem, Letter, Morphism, Tag};

#[cfg(test)]
mod tests;

/// Canonical parameters of an automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutoRep<E> {
    Plane { lambda: E, mu: E, swap: bool },
    Weyl { lambda: E, swap: bool },
    Laurent { lambda: E, i: i64, mu: E, invert: bool },
    Torus { a: [[i64; 2]; 2], lambda: E, mu: E },
}

impl<E> AutoRep<E> {
    pub fn tag(&self) -> Tag {
        match self {
            AutoRep::Plane { .. } => Tag::Plane,
            AutoRep::Weyl { .. } => Tag::Weyl,
            AutoRep::Laurent { .. } => Tag::LaurentX,
            AutoRep::Torus { .. } => Tag::Torus,
        }
    }
}

pub fn det(a: &[[i64; 2]; 2]) -> i64 {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

/// The generators whose images determine a map: (x, y) for A1, (h, x) otherwise.
pub fn generator_letters(tag: Tag) -> [Letter; 2] {
    if tag.has_y() {
        [Letter::X, Letter::Y]
    } else {
        [Letter::H, Letter::X]
    }
}

/// A single-term element c h^i v_j as (c, i, j).
pub fn single_term<E: Clone>(u: &GwaElem<E>) -> Option<(E, i64, i64)> {
    if u.terms.len() != 1 {
        return None;
    }
    let (&(i, j), c) = u.terms.iter().next()?;
    Some((c.clone(), i, j))
}

/// c h^a x^b in the quantum torus, multiplied and raised to integer powers exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Mono<E> {
    c: E,
    a: i64,
    b: i64,
}

fn mono_mul<F: Field>(g: &Gwa<F>, u: &Mono<F::Elem>, v: &Mono<F::Elem>) -> Mono<F::Elem> {
    let f = g.field();
    Mono {
        c: f.mul(&f.mul(&u.c, &v.c), &g.root.q_pow(u.b * v.a)),
        a: u.a + v.a,
        b: u.b + v.b,
    }
}

fn mono_pow<F: Field>(g: &Gwa<F>, u: &Mono<F::Elem>, k: i64) -> Result<Mono<F::Elem>> {
    let f = g.field();
    let base = if k >= 0 {
        u.clone()
    } else {
        Mono {
            c: f.mul(&f.inv(&u.c).ok_or(Error::NotAUnit)?, &g.root.q_pow(u.a * u.b)),
            a: -u.a,
            b: -u.b,
        }
    };
    let mut acc = Mono { c: f.one(), a: 0, b: 0 };
    for _ in 0..k.unsigned_abs() {
        acc = mono_mul(g, &acc, &base);
    }
    Ok(acc)
}

/// The outcome of testing a matrix against the relation xh = q hx in B.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusCheck {
    pub matrix: [[i64; 2]; 2],
    pub det: i64,
    /// q^{da-bc-1} = 1.
    pub condition: bool,
    /// The image of xh - q hx vanishes in normal form.
    pub relation_preserved: bool,
    /// det A = ±1, so the induced map on B^x / K^x is onto.
    pub invertible: bool,
    pub automorphism: bool,
    /// n = 2 and det A = -1: admitted by the relation although A is not in SL_2(Z).
    pub det_minus_one_anomaly: bool,
}

/// Tests τ_{A,λ,μ} both through the exponent condition and by normal-form reduction.
pub fn torus_check<F: Field>(g: &Gwa<F>, a: [[i64; 2]; 2], lambda: &F::Elem, mu: &F::Elem) -> Result<TorusCheck> {
    if g.tag != Tag::Torus {
        return Err(Error::MixedAlgebras);
    }
    let d = det(&a);
    let n = g.n() as i64;
    let condition = (d - 1).rem_euclid(n) == 0;
    let rep = AutoRep::Torus { a, lambda: lambda.clone(), mu: mu.clone() };
    let m = Morphism::new(g.clone(), g.clone(), images(g, &rep)?, false)?;
    let relation_preserved = m.preserves_relations()?;
    let invertible = d.abs() == 1;
    Ok(TorusCheck {
        matrix: a,
        det: d,
        condition,
        relation_preserved,
        invertible,
        automorphism: relation_preserved && invertible,
        det_minus_one_anomaly: n == 2 && d == -1 && relation_preserved,
    })
}

/// Images of the generators named by `generator_letters`.
pub fn images<F: Field>(g: &Gwa<F>, rep: &AutoRep<F::Elem>) -> Result<Vec<(Letter, GwaElem<F::Elem>)>> {
    let f = g.field();
    let q = |k: i64| g.root.q_pow(k);
    Ok(match rep {
        AutoRep::Plane { lambda, mu, swap } => {
            let (hi, xi) = if *swap { (g.x(), g.h()) } else { (g.h(), g.x()) };
            vec![(Letter::H, g.scale(&hi, lambda)), (Letter::X, g.scale(&xi, mu))]
        }
        AutoRep::Weyl { lambda, swap } => {
            let li = f.inv(lambda).ok_or(Error::NotAUnit)?;
            let (x, y) = (g.x(), g.y()?);
            let (xi, yi) = if *swap { (y, x) } else { (x, y) };
            vec![(Letter::X, g.scale(&xi, lambda)), (Letter::Y, g.scale(&yi, &li))]
        }
        AutoRep::Laurent { lambda, i, mu, invert } => {
            // λ x^i h = λ q^i h x^i
            let hi = g.monomial(f.mul(lambda, &q(*i)), 1, *i)?;
            let xi = g.monomial(mu.clone(), 0, if *invert { -1 } else { 1 })?;
            vec![(Letter::H, hi), (Letter::X, xi)]
        }
        AutoRep::Torus { a, lambda, mu } => vec![
            (Letter::H, g.monomial(lambda.clone(), a[0][0], a[0][1])?),
            (Letter::X, g.monomial(mu.clone(), a[1][0], a[1][1])?),
        ],
    })
}

/// An automorphism in canonical form with its generator images.
#[derive(Clone, Debug)]
pub struct Automorphism<F: Field> {
    pub rep: AutoRep<F::Elem>,
    pub morphism: Morphism<F>,
}

impl<F: Field> Automorphism<F> {
    /// Validates the parameters and checks every defining relation in normal form.
    pub fn new(g: &Gwa<F>, rep: AutoRep<F::Elem>) -> Result<Self> {
        if rep.tag() != g.tag {
            return Err(Error::MixedAlgebras);
        }
        let f = g.field();
        let scalars: Vec<&F::Elem> = match &rep {
            AutoRep::Plane { lambda, mu, .. } | AutoRep::Laurent { lambda, mu, .. } | AutoRep::Torus { lambda, mu, .. } => {
                vec![lambda, mu]
            }
            AutoRep::Weyl { lambda, .. } => vec![lambda],
        };
        if scalars.iter().any(|c| f.is_zero(c)) {
            return Err(Error::NotAUnit);
        }
        if let AutoRep::Torus { a, .. } = &rep {
            let d = det(a);
            if d.abs() != 1 {
                return Err(Error::HypothesisFailed(format!(
                    "det A = {d} is not ±1, so the map is not onto"
                )));
            }
        }
        let morphism = Morphism::new(g.clone(), g.clone(), images(g, &rep)?, false)?;
        let bad: Vec<String> = morphism
            .relation_images()?
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(name, v)| format!("{name} -> {}", g.format_elem(&v)))
            .collect();
        if !bad.is_empty() {
            return Err(Error::RelationViolated(bad.join("; ")));
        }
        Ok(Automorphism { rep, morphism })
    }

    pub fn identity(g: &Gwa<F>) -> Result<Self> {
        let one = g.field().one();
        let rep = match g.tag {
            Tag::Plane => AutoRep::Plane { lambda: one.clone(), mu: one, swap: false },
            Tag::Weyl => AutoRep::Weyl { lambda: one, swap: false },
            Tag::LaurentX => AutoRep::Laurent { lambda: one.clone(), i: 0, mu: one, invert: false },
            Tag::Torus => AutoRep::Torus { a: [[1, 0], [0, 1]], lambda: one.clone(), mu: one },
        };
        Automorphism::new(g, rep)
    }

    pub fn gwa(&self) -> &Gwa<F> {
        &self.morphism.source
    }

    pub fn apply(&self, u: &GwaElem<F::Elem>) -> Result<GwaElem<F::Elem>> {
        self.morphism.apply(u)
    }

    /// Whether both maps send the generators to the same elements.
    pub fn same_map(&self, other: &Automorphism<F>) -> Result<bool> {
        for l in generator_letters(self.gwa().tag) {
            if self.morphism.image(l)? != other.morphism.image(l)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// self ∘ other by parameter arithmetic.
    pub fn compose(&self, other: &Automorphism<F>) -> Result<Automorphism<F>> {
        let g = self.gwa();
        if !g.same_algebra(other.gwa()) {
            return Err(Error::MixedAlgebras);
        }
        let f = g.field();
        let rep = match (&self.rep, &other.rep) {
            (AutoRep::Plane { lambda: la, mu: ma, swap: sa }, AutoRep::Plane { lambda: lb, mu: mb, swap: sb }) => {
                // other(h) = lb * (h or x); then self scales h by la and x by ma
                let (lh, lx) = if *sb { (ma, la) } else { (la, ma) };
                AutoRep::Plane {
                    lambda: f.mul(lb, lh),
                    mu: f.mul(mb, lx),
                    swap: sa != sb,
                }
            }
            (AutoRep::Weyl { lambda: la, swap: sa }, AutoRep::Weyl { lambda: lb, swap: sb }) => {
                let l = if *sb {
                    f.mul(lb, &f.inv(la).ok_or(Error::NotAUnit)?)
                } else {
                    f.mul(la, lb)
                };
                AutoRep::Weyl { lambda: l, swap: sa != sb }
            }
            (
                AutoRep::Laurent { lambda: la, i: ia, mu: ma, invert: va },
                AutoRep::Laurent { lambda: lb, i: ib, mu: mb, invert: vb },
            ) => {
                let ea = if *va { -1 } else { 1 };
                let eb = if *vb { -1 } else { 1 };
                let pow = |c: &F::Elem, k: i64| f.pow_signed(c, k).ok_or(Error::NotAUnit);
                AutoRep::Laurent {
                    lambda: f.mul(&f.mul(la, lb), &pow(ma, *ib)?),
                    i: ia + ea * ib,
                    mu: f.mul(mb, &pow(ma, eb)?),
                    invert: va != vb,
                }
            }
            (AutoRep::Torus { a: aa, lambda: la, mu: ma }, AutoRep::Torus { a: ab, lambda: lb, mu: mb }) => {
                let img = [
                    Mono { c: la.clone(), a: aa[0][0], b: aa[0][1] },
                    Mono { c: ma.clone(), a: aa[1][0], b: aa[1][1] },
                ];
                let image_of = |c: &F::Elem, row: [i64; 2]| -> Result<Mono<F::Elem>> {
                    let m = mono_mul(g, &mono_pow(g, &img[0], row[0])?, &mono_pow(g, &img[1], row[1])?);
                    Ok(Mono { c: f.mul(c, &m.c), ..m })
                };
                let h = image_of(lb, ab[0])?;
                let x = image_of(mb, ab[1])?;
                AutoRep::Torus {
                    a: [[h.a, h.b], [x.a, x.b]],
                    lambda: h.c,
                    mu: x.c,
                }
            }
            _ => return Err(Error::MixedAlgebras),
        };
        Automorphism::new(g, rep)
    }

    /// The inverse: the shape is fixed by the discrete data and the scalars enter the
    /// composite linearly, so one composition with unit scalars determines them.
    pub fn inverse(&self) -> Result<Automorphism<F>> {
        let g = self.gwa();
        let f = g.field();
        let one = f.one();
        let shape = match &self.rep {
            AutoRep::Plane { swap, .. } => AutoRep::Plane { lambda: one.clone(), mu: one.clone(), swap: *swap },
            AutoRep::Weyl { swap, .. } => AutoRep::Weyl { lambda: one.clone(), swap: *swap },
            AutoRep::Laurent { i, invert, .. } => AutoRep::Laurent {
                lambda: one.clone(),
                i: if *invert { *i } else { -*i },
                mu: one.clone(),
                invert: *invert,
            },
            AutoRep::Torus { a, .. } => {
                let d = det(a);
                AutoRep::Torus {
                    a: [[d * a[1][1], -d * a[0][1]], [-d * a[1][0], d * a[0][0]]],
                    lambda: one.clone(),
                    mu: one.clone(),
                }
            }
        };
        let probe = self.compose(&Automorphism::new(g, shape.clone())?)?;
        let inv = |c: &F::Elem| f.inv(c).ok_or(Error::NotAUnit);
        let rep = match (shape, probe.rep) {
            (AutoRep::Plane { swap, .. }, AutoRep::Plane { lambda, mu, .. }) => {
                AutoRep::Plane { lambda: inv(&lambda)?, mu: inv(&mu)?, swap }
            }
            (AutoRep::Weyl { swap: false, .. }, AutoRep::Weyl { lambda, .. }) => {
                AutoRep::Weyl { lambda: inv(&lambda)?, swap: false }
            }
            // t'_a o t'_b = t_{b/a}
            (AutoRep::Weyl { swap: true, .. }, AutoRep::Weyl { lambda, .. }) => {
                AutoRep::Weyl { lambda: inv(&lambda)?, swap: true }
            }
            (AutoRep::Laurent { i, invert, .. }, AutoRep::Laurent { lambda, mu, .. }) => {
                AutoRep::Laurent { lambda: inv(&lambda)?, i, mu: inv(&mu)?, invert }
            }
            (AutoRep::Torus { a, .. }, AutoRep::Torus { lambda, mu, .. }) => {
                AutoRep::Torus { a, lambda: inv(&lambda)?, mu: inv(&mu)? }
            }
            _ => return Err(Error::MixedAlgebras),
        };
        Automorphism::new(g, rep)
    }

    /// Whether the map is conjugation by a unit.
    pub fn is_inner(&self) -> bool {
        let g = self.gwa();
        let f = g.field();
        let in_q = |c: &F::Elem| (0..g.n() as i64).any(|k| g.root.q_pow(k) == *c);
        match &self.rep {
            AutoRep::Plane { lambda, mu, swap } => !swap && f.is_one(lambda) && f.is_one(mu),
            AutoRep::Weyl { lambda, swap } => !swap && f.is_one(lambda),
            AutoRep::Laurent { lambda, i, mu, invert } => !invert && *i == 0 && f.is_one(mu) && in_q(lambda),
            AutoRep::Torus { a, lambda, mu } => *a == [[1, 0], [0, 1]] && in_q(lambda) && in_q(mu),
        }
    }

    pub fn describe(&self) -> String {
        let f = self.gwa().field();
        let s = |c: &F::Elem| f.format(c);
        let one = |c: &F::Elem| f.is_one(c);
        match &self.rep {
            AutoRep::Plane { lambda, mu, swap: true } if one(lambda) && one(mu) => "iota".into(),
            AutoRep::Plane { lambda, mu, swap } => {
                format!("t{}_{{{},{}}}", if *swap { "'" } else { "" }, s(lambda), s(mu))
            }
            AutoRep::Weyl { lambda, swap: true } if one(lambda) => "zeta".into(),
            AutoRep::Weyl { lambda, swap } => format!("t{}_{{{}}}", if *swap { "'" } else { "" }, s(lambda)),
            AutoRep::Laurent { lambda, i: 0, mu, invert: true } if one(lambda) && one(mu) => "kappa".into(),
            AutoRep::Laurent { lambda, i, mu, invert: false } if one(lambda) && one(mu) && *i != 0 => format!("xi_{i}"),
            AutoRep::Laurent { lambda, i, mu, invert } => format!(
                "sigma{}_{{{}*x^{i},{}}}",
                if *invert { "'" } else { "" },
                s(lambda),
                s(mu)
            ),
            AutoRep::Torus { a, lambda, mu } => format!(
                "tau_{{[[{},{}],[{},{}]],{},{}}}",
                a[0][0],
                a[0][1],
                a[1][0],
                a[1][1],
                s(lambda),
                s(mu)
            ),
        }
    }

    pub fn report(&self) -> AutoReport {
        let g = self.gwa();
        let imgs = generator_letters(g.tag)
            .iter()
            .map(|&l| {
                let name = match l {
                    Letter::H => "h",
                    Letter::X => "x",
                    _ => "y",
                };
                let img = self.morphism.image(l).map(|v| g.format_elem(&v)).unwrap_or_default();
                (name.to_string(), img)
            })
            .collect();
        AutoReport {
            algebra: g.tag.name().into(),
            field: g.root.describe(),
            canonical: self.describe(),
            images: imgs,
            relations_preserved: true,
            inner: self.is_inner(),
            h_image: self.morphism.image(Letter::H).map(|v| g.format_elem(&v)).unwrap_or_default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutoReport {
    pub algebra: String,
    pub field: String,
    pub canonical: String,
    pub images: Vec<(String, String)>,
    pub relations_preserved: bool,
    pub inner: bool,
    pub h_image: String,
}

/// The canonical automorphism with the given generator images, or `None` when the
/// images match none of the normal forms or the induced map breaks a relation.
/// For A1 pass the images of x and y, otherwise those of h and x.
pub fn recognize<F: Field>(g: &Gwa<F>, first: &GwaElem<F::Elem>, second: &GwaElem<F::Elem>) -> Option<Automorphism<F>> {
    let f = g.field();
    let (c1, i1, j1) = single_term(first)?;
    let (c2, i2, j2) = single_term(second)?;
    let rep = match g.tag {
        Tag::Plane => match ((i1, j1), (i2, j2)) {
            ((1, 0), (0, 1)) => AutoRep::Plane { lambda: c1, mu: c2, swap: false },
            ((0, 1), (1, 0)) => AutoRep::Plane { lambda: c1, mu: c2, swap: true },
            _ => return None,
        },
        Tag::Weyl => {
            let swap = match ((i1, j1), (i2, j2)) {
                ((0, 1), (0, -1)) => false,
                ((0, -1), (0, 1)) => true,
                _ => return None,
            };
            if f.mul(&c1, &c2) != f.one() {
                return None;
            }
            AutoRep::Weyl { lambda: c1, swap }
        }
        Tag::LaurentX => {
            if i1 != 1 || i2 != 0 || j2.abs() != 1 {
                return None;
            }
            let lambda = f.mul(&c1, &g.root.q_pow(-j1));
            AutoRep::Laurent { lambda, i: j1, mu: c2, invert: j2 == -1 }
        }
        Tag::Torus => AutoRep::Torus {
            a: [[i1, j1], [i2, j2]],
            lambda: c1,
            mu: c2,
        },
    };
    Automorphism::new(g, rep).ok()
}

/// The inner automorphism v -> u v u^{-1} for a unit u, as a map on generators.
pub fn conjugation<F: Field>(g: &Gwa<F>, u: &GwaElem<F::Elem>) -> Result<[GwaElem<F::Elem>; 2]> {
    let ui = g.inverse(u).ok_or(Error::NotAUnit)?;
    let [a, b] = generator_letters(g.tag);
    let gen = |l: Letter| -> Result<GwaElem<F::Elem>> {
        Ok(match l {
            Letter::H => g.h(),
            Letter::X => g.x(),
            _ => g.y()?,
        })
    };
    Ok([g.mul_all(&[u.clone(), gen(a)?, ui.clone()]), g.mul_all(&[u.clone(), gen(b)?, ui])])
}

fn mat_mul(a: &[[i64; 2]; 2], b: &[[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// Random canonical parameters that define an automorphism of `g`: random units,
/// swap and inversion forms only for n = 2, and for B a word of length `steps`
/// in the elementary generators of SL_2(Z).
pub fn random_rep<F: Field>(g: &Gwa<F>, rng: &mut dyn RngCore, steps: usize) -> AutoRep<F::Elem> {
    let f = g.field();
    let mut unit = || loop {
        let c = f.random(rng, 1);
        if !f.is_zero(&c) {
            return c;
        }
    };
    let (lambda, mu) = (unit(), unit());
    let two = g.n() == 2;
    match g.tag {
        Tag::Plane => AutoRep::Plane { lambda, mu, swap: two && rng.gen() },
        Tag::Weyl => AutoRep::Weyl { lambda, swap: two && rng.gen() },
        Tag::LaurentX => AutoRep::Laurent { lambda, i: rng.gen_range(-4..=4), mu, invert: two && rng.gen() },
        Tag::Torus => {
            let gens = [[[1, 1], [0, 1]], [[1, 0], [1, 1]], [[1, -1], [0, 1]], [[1, 0], [-1, 1]], [[0, -1], [1, 0]]];
            let a = (0..steps).fold([[1, 0], [0, 1]], |acc, _| mat_mul(&acc, &gens[rng.gen_range(0..gens.len())]));
            AutoRep::Torus { a, lambda, mu }
        }
    }
}
