//! Words in the free algebra on h, h^{-1}, x, x^{-1}, y, an independent rewriting
//! reduction to normal form, and algebra maps given by generator images.

use std::collections::HashMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{Gwa, GwaElem, Tag};
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    H,
    HInv,
    X,
    XInv,
    Y,
}

impl Letter {
    pub fn allowed(self, tag: Tag) -> bool {
        match self {
            Letter::H | Letter::X => true,
            Letter::HInv => tag.h_invertible(),
            Letter::XInv => tag.x_invertible(),
            Letter::Y => tag.has_y(),
        }
    }

    pub fn letters(tag: Tag) -> Vec<Letter> {
        [Letter::H, Letter::HInv, Letter::X, Letter::XInv, Letter::Y]
            .into_iter()
            .filter(|l| l.allowed(tag))
            .collect()
    }
}

pub type Word = Vec<Letter>;

/// A linear combination of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreePoly<E> {
    pub terms: Vec<(E, Word)>,
}

impl<E: Clone> FreePoly<E> {
    pub fn word(c: E, w: Word) -> Self {
        FreePoly { terms: vec![(c, w)] }
    }

    pub fn plus(mut self, c: E, w: Word) -> Self {
        self.terms.push((c, w));
        self
    }
}

/// The defining relations of the algebra as elements of the free algebra that
/// vanish in it.
pub fn defining_relations<F: Field>(gwa: &Gwa<F>) -> Vec<(String, FreePoly<F::Elem>)> {
    use Letter::*;
    let f = gwa.field();
    let one = f.one();
    let mone = f.neg(&one);
    let q = gwa.root.q.clone();
    let mq = f.neg(&q);
    let mut rels = Vec::new();
    match gwa.tag {
        Tag::Weyl => {
            rels.push((
                "xy - q yx - 1".to_string(),
                FreePoly::word(one.clone(), vec![X, Y])
                    .plus(mq, vec![Y, X])
                    .plus(mone.clone(), vec![]),
            ));
        }
        _ => {
            rels.push((
                "xh - q hx".to_string(),
                FreePoly::word(one.clone(), vec![X, H]).plus(mq, vec![H, X]),
            ));
        }
    }
    if gwa.tag.x_invertible() {
        rels.push((
            "x x^-1 - 1".into(),
            FreePoly::word(one.clone(), vec![X, XInv]).plus(mone.clone(), vec![]),
        ));
        rels.push((
            "x^-1 x - 1".into(),
            FreePoly::word(one.clone(), vec![XInv, X]).plus(mone.clone(), vec![]),
        ));
    }
    if gwa.tag.h_invertible() {
        rels.push((
            "h h^-1 - 1".into(),
            FreePoly::word(one.clone(), vec![H, HInv]).plus(mone.clone(), vec![]),
        ));
        rels.push((
            "h^-1 h - 1".into(),
            FreePoly::word(one, vec![HInv, H]).plus(mone, vec![]),
        ));
    }
    rels
}

/// Right-hand side of the rewriting rule for the adjacent pair (a, b), if any.
fn rule<F: Field>(gwa: &Gwa<F>, a: Letter, b: Letter) -> Option<Vec<(F::Elem, Word)>> {
    use Letter::*;
    let f = gwa.field();
    let q = gwa.root.q.clone();
    let qi = gwa.root.q_inv();
    let one = f.one();
    let mc1 = f.neg(gwa.c1());
    Some(match (a, b) {
        (X, H) => vec![(q, vec![H, X])],
        (Y, H) => vec![(qi, vec![H, Y])],
        (Y, X) => vec![(one, vec![H]), (mc1, vec![])],
        (X, Y) => vec![(q, vec![H]), (mc1, vec![])],
        (XInv, H) => vec![(qi, vec![H, XInv])],
        (X, HInv) => vec![(qi, vec![HInv, X])],
        (XInv, HInv) => vec![(q, vec![HInv, XInv])],
        (X, XInv) | (XInv, X) | (H, HInv) | (HInv, H) => vec![(one, vec![])],
        _ => return None,
    })
}

fn redexes<F: Field>(gwa: &Gwa<F>, w: &[Letter]) -> Vec<usize> {
    (0..w.len().saturating_sub(1))
        .filter(|&k| rule(gwa, w[k], w[k + 1]).is_some())
        .collect()
}

/// Reduces a free polynomial by the rewriting rules, contracting a randomly chosen
/// redex at every step. Only valid for algebras without an h^n reduction.
pub fn rewrite_reduce<F: Field, R: Rng>(
    gwa: &Gwa<F>,
    p: &FreePoly<F::Elem>,
    rng: &mut R,
) -> Result<GwaElem<F::Elem>> {
    if gwa.h_power.is_some() {
        return Err(Error::HypothesisFailed("rewriting needs the free coefficient ring K[h]".into()));
    }
    let f = gwa.field();
    for (_, w) in &p.terms {
        if let Some(l) = w.iter().find(|l| !l.allowed(gwa.tag)) {
            return Err(Error::HypothesisFailed(format!("{l:?} is not a generator of {}", gwa.tag)));
        }
    }
    let mut pending: HashMap<Word, F::Elem> = HashMap::new();
    let add = |map: &mut HashMap<Word, F::Elem>, w: Word, c: F::Elem| {
        let slot = map.entry(w).or_insert_with(|| f.zero());
        *slot = f.add(slot, &c);
    };
    for (c, w) in &p.terms {
        add(&mut pending, w.clone(), c.clone());
    }
    let mut done: HashMap<Word, F::Elem> = HashMap::new();
    loop {
        pending.retain(|_, c| !f.is_zero(c));
        if pending.is_empty() {
            break;
        }
        let mut keys: Vec<Word> = pending.keys().cloned().collect();
        keys.sort();
        let w = keys.swap_remove(rng.gen_range(0..keys.len()));
        let c = pending.remove(&w).unwrap();
        let spots = redexes(gwa, &w);
        if spots.is_empty() {
            add(&mut done, w, c);
            continue;
        }
        let k = spots[rng.gen_range(0..spots.len())];
        for (d, mid) in rule(gwa, w[k], w[k + 1]).unwrap() {
            let mut nw = w[..k].to_vec();
            nw.extend(mid);
            nw.extend_from_slice(&w[k + 2..]);
            add(&mut pending, nw, f.mul(&c, &d));
        }
    }
    let mut out = gwa.zero();
    for (w, c) in done {
        if f.is_zero(&c) {
            continue;
        }
        let mut i = 0i64;
        let mut j = 0i64;
        for l in &w {
            match l {
                Letter::H => i += 1,
                Letter::HInv => i -= 1,
                Letter::X => j += 1,
                Letter::XInv | Letter::Y => j -= 1,
            }
        }
        out = gwa.add(&out, &gwa.monomial(c, i, j)?);
    }
    Ok(out)
}

/// Evaluates words letter by letter with the normal-form product.
pub fn eval_free<F: Field>(gwa: &Gwa<F>, p: &FreePoly<F::Elem>) -> Result<GwaElem<F::Elem>> {
    let images: Vec<(Letter, GwaElem<F::Elem>)> = Letter::letters(gwa.tag)
        .into_iter()
        .map(|l| Ok((l, letter_elem(gwa, l)?)))
        .collect::<Result<_>>()?;
    let mut out = gwa.zero();
    for (c, w) in &p.terms {
        let mut acc = gwa.scalar(c);
        for l in w {
            let img = images
                .iter()
                .find(|(k, _)| k == l)
                .ok_or_else(|| Error::HypothesisFailed(format!("{l:?} is not a generator of {}", gwa.tag)))?;
            acc = gwa.mul(&acc, &img.1);
        }
        out = gwa.add(&out, &acc);
    }
    Ok(out)
}

pub fn letter_elem<F: Field>(gwa: &Gwa<F>, l: Letter) -> Result<GwaElem<F::Elem>> {
    match l {
        Letter::H => Ok(gwa.h()),
        Letter::HInv => gwa.h_inv(),
        Letter::X => Ok(gwa.x()),
        Letter::XInv | Letter::Y => gwa.y(),
    }
}

/// An algebra map (or, with `anti`, an anti-homomorphism) fixed by generator images.
#[derive(Clone, Debug)]
pub struct Morphism<F: Field> {
    pub source: Gwa<F>,
    pub target: Gwa<F>,
    pub images: Vec<(Letter, GwaElem<F::Elem>)>,
    pub anti: bool,
}

impl<F: Field> Morphism<F> {
    /// `h_img` and `x_img` are the images of h and x; for the quantum Weyl algebra
    /// pass the images of x and y, and h is sent to phi(y)phi(x) + 1/(q-1).
    pub fn new(
        source: Gwa<F>,
        target: Gwa<F>,
        gens: Vec<(Letter, GwaElem<F::Elem>)>,
        anti: bool,
    ) -> Result<Self> {
        let mut m = Morphism {
            source,
            target,
            images: gens,
            anti,
        };
        for (_, v) in &m.images {
            if v.tag != m.target.tag {
                return Err(Error::MixedAlgebras);
            }
        }
        let has = |m: &Morphism<F>, l: Letter| m.images.iter().any(|(k, _)| *k == l);
        if m.source.tag.has_y() && !has(&m, Letter::H) {
            let (x, y) = (m.image(Letter::X)?, m.image(Letter::Y)?);
            let yx = if anti { m.target.mul(&x, &y) } else { m.target.mul(&y, &x) };
            let h = m.target.add(&yx, &m.target.scalar(m.source.c1()));
            m.images.push((Letter::H, h));
        }
        for inv in [Letter::HInv, Letter::XInv] {
            if inv.allowed(m.source.tag) && !has(&m, inv) {
                let base = if inv == Letter::HInv { Letter::H } else { Letter::X };
                let b = m.image(base)?;
                let bi = m.target.inverse(&b).ok_or(Error::NotAUnit)?;
                m.images.push((inv, bi));
            }
        }
        Ok(m)
    }

    pub fn image(&self, l: Letter) -> Result<GwaElem<F::Elem>> {
        self.images
            .iter()
            .find(|(k, _)| *k == l)
            .map(|(_, v)| v.clone())
            .ok_or_else(|| Error::HypothesisFailed(format!("no image for {l:?}")))
    }

    fn chain(&self, factors: Vec<GwaElem<F::Elem>>) -> GwaElem<F::Elem> {
        let t = &self.target;
        if self.anti {
            factors.iter().rev().fold(t.one(), |acc, u| t.mul(&acc, u))
        } else {
            t.mul_all(&factors)
        }
    }

    pub fn apply_word(&self, w: &[Letter]) -> Result<GwaElem<F::Elem>> {
        let factors = w.iter().map(|&l| self.image(l)).collect::<Result<Vec<_>>>()?;
        Ok(self.chain(factors))
    }

    pub fn apply_free(&self, p: &FreePoly<F::Elem>) -> Result<GwaElem<F::Elem>> {
        let t = &self.target;
        let mut out = t.zero();
        for (c, w) in &p.terms {
            out = t.add(&out, &t.scale(&self.apply_word(w)?, c));
        }
        Ok(out)
    }

    fn power_image(&self, l: Letter, inv: Letter, e: i64) -> Result<Vec<GwaElem<F::Elem>>> {
        let g = if e >= 0 { self.image(l)? } else { self.image(inv)? };
        Ok(vec![self.target.pow(&g, e.unsigned_abs())])
    }

    /// Image of a normal-form element of the source.
    pub fn apply(&self, u: &GwaElem<F::Elem>) -> Result<GwaElem<F::Elem>> {
        if u.tag != self.source.tag {
            return Err(Error::MixedAlgebras);
        }
        let t = &self.target;
        let neg_x = if self.source.tag.has_y() { Letter::Y } else { Letter::XInv };
        let mut out = t.zero();
        for (&(i, j), c) in &u.terms {
            let mut factors = self.power_image(Letter::H, Letter::HInv, i)?;
            factors.extend(self.power_image(Letter::X, neg_x, j)?);
            out = t.add(&out, &t.scale(&self.chain(factors), c));
        }
        Ok(out)
    }

    /// Images of the defining relations of the source; all vanish iff the map is
    /// well defined.
    pub fn relation_images(&self) -> Result<Vec<(String, GwaElem<F::Elem>)>> {
        defining_relations(&self.source)
            .into_iter()
            .map(|(name, rel)| Ok((name, self.apply_free(&rel)?)))
            .collect()
    }

    pub fn preserves_relations(&self) -> Result<bool> {
        Ok(self.relation_images()?.iter().all(|(_, v)| v.is_zero()))
    }
}
