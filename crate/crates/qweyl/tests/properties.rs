//! Property tests for normal forms, cyclic-algebra invariants, automorphism groups
//! and the spectrum.

use proptest::prelude::*;
use qweyl::aut::{self, AutoRep, Automorphism};
use qweyl::ce::{ce_classify, invariants, CESpec, SearchOptions, Verdict};
use qweyl::field::{Field, Fp, RatFn, Ring, RootedField};
use qweyl::quantum::{Gwa, GwaElem, Tag};
use qweyl::spectrum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// (p, n, q) with q of exact order n in F_p.
const FIELDS: [(u32, usize, u32); 3] = [(5, 2, 4), (7, 3, 2), (13, 4, 5)];

fn root(k: usize) -> RootedField<Fp> {
    let (p, n, q) = FIELDS[k];
    RootedField::new(Fp::new(p).unwrap(), n, q).unwrap()
}

fn gwa(tag: Tag, k: usize) -> Gwa<Fp> {
    Gwa::new(tag, root(k)).unwrap()
}

type Terms = Vec<(u32, i64, i64)>;

fn terms() -> impl Strategy<Value = Terms> {
    prop::collection::vec((1u32..13, -3i64..=3, -3i64..=3), 1..5)
}

/// Folds exponents into the range the algebra allows.
fn element(g: &Gwa<Fp>, t: &Terms) -> GwaElem<u32> {
    let mut u = g.zero();
    for &(c, i, j) in t {
        let i = if g.tag.h_invertible() { i } else { i.abs() };
        let j = if g.tag.x_invertible() || g.tag.has_y() { j } else { j.abs() };
        let m = g.monomial(g.field().from_int(c as i64), i, j).unwrap();
        u = g.add(&u, &m);
    }
    u
}

fn cases(n: u32) -> ProptestConfig {
    ProptestConfig { cases: n, failure_persistence: None, ..ProptestConfig::default() }
}

fn tag_of(k: usize) -> Tag {
    Tag::ALL[k % 4]
}

proptest! {
    #![proptest_config(cases(500))]

    #[test]
    fn normal_form_is_associative(t in 0usize..4, k in 0usize..3, a in terms(), b in terms(), c in terms()) {
        let g = gwa(tag_of(t), k);
        let (u, v, w) = (element(&g, &a), element(&g, &b), element(&g, &c));
        prop_assert_eq!(g.mul(&g.mul(&u, &v), &w), g.mul(&u, &g.mul(&v, &w)));
    }

    #[test]
    fn distributive_and_unital(t in 0usize..4, k in 0usize..3, a in terms(), b in terms(), c in terms()) {
        let g = gwa(tag_of(t), k);
        let (u, v, w) = (element(&g, &a), element(&g, &b), element(&g, &c));
        prop_assert_eq!(g.mul(&u, &g.add(&v, &w)), g.add(&g.mul(&u, &v), &g.mul(&u, &w)));
        prop_assert_eq!(g.mul(&g.one(), &u), u.clone());
        prop_assert_eq!(g.mul(&u, &g.one()), u);
    }

    #[test]
    fn central_generators_commute(t in 0usize..4, k in 0usize..3, a in terms()) {
        let g = gwa(tag_of(t), k);
        let u = element(&g, &a);
        let mut central = vec![g.s(), g.t()];
        if g.tag.has_y() {
            central.push(g.r().unwrap());
        }
        for z in central {
            prop_assert_eq!(g.mul(&z, &u), g.mul(&u, &z));
        }
    }
}

proptest! {
    #![proptest_config(cases(200))]

    /// h^i x^j is an eigenvector of conjugation: x m = q^i m x and h m = q^{-j} m h.
    #[test]
    fn monomials_are_eigenvectors(t in 0usize..4, k in 0usize..3, c in 1u32..13, i in -3i64..=3, j in -3i64..=3) {
        let g = gwa(tag_of(t), k);
        prop_assume!(g.tag != Tag::Weyl && !(c as usize).is_multiple_of(FIELDS[k].0 as usize));
        let m = element(&g, &vec![(c, i, j)]);
        let (i, j) = m.terms.keys().next().copied().unwrap();
        let q = |e: i64| g.root.q_pow(e);
        prop_assert_eq!(g.mul(&g.x(), &m), g.scale(&g.mul(&m, &g.x()), &q(i)));
        prop_assert_eq!(g.mul(&g.h(), &m), g.scale(&g.mul(&m, &g.h()), &q(-j)));
    }

    /// In A1, (q - 1) h = x y - y x and x h = q h x and h y = q y h.
    #[test]
    fn weyl_grading_element(k in 0usize..3, a in terms()) {
        let g = gwa(Tag::Weyl, k);
        let (x, y) = (g.x(), g.y().unwrap());
        let h = g.sub(&g.mul(&x, &y), &g.mul(&y, &x));
        let q = g.root.q_pow(1);
        prop_assert_eq!(h, g.scale(&g.h(), &g.field().sub(&q, &g.field().one())));
        let h = g.h();
        prop_assert_eq!(g.mul(&x, &h), g.scale(&g.mul(&h, &x), &q));
        prop_assert_eq!(g.mul(&h, &y), g.scale(&g.mul(&y, &h), &q));
        let u = element(&g, &a);
        for j in u.grades() {
            let part = GwaElem { tag: u.tag, terms: u.terms.iter().filter(|e| e.0 .1 == j).map(|(k, v)| (*k, *v)).collect() };
            prop_assert_eq!(g.mul(&h, &part), g.scale(&g.mul(&part, &h), &g.root.q_pow(-j)));
        }
    }
}

fn ce_opts() -> SearchOptions {
    SearchOptions::default()
}

proptest! {
    #![proptest_config(cases(120))]

    #[test]
    fn cyclic_algebra_invariants(k in 0usize..3, s in 0u32..13, a in 0u32..13) {
        let r = root(k);
        let f = r.field.clone();
        let (s, a) = (f.from_int(s as i64), f.from_int(a as i64));
        let spec = CESpec::new(r.clone(), s, a);
        let st = ce_classify(&spec, &ce_opts()).unwrap();
        let n = r.n;
        let nonzero = !f.is_zero(&s) && !f.is_zero(&a);
        prop_assert_eq!(st.simple, nonzero);
        prop_assert_eq!(st.centre_dim == 1, !(f.is_zero(&s) && f.is_zero(&a)));
        if nonzero {
            let (d, m) = (st.d.unwrap(), st.m.unwrap());
            prop_assert_eq!(n, m * d);
            let inv = invariants(&spec).unwrap();
            prop_assert_eq!(m % (inv.m_s * inv.m_sa), 0);
            prop_assert_eq!(inv.gcd_bound % d, 0);
            prop_assert_eq!(d, 1);
            let sw = ce_classify(&spec.swapped().unwrap(), &ce_opts()).unwrap();
            prop_assert_eq!((sw.m, sw.d), (st.m, st.d));
        } else {
            prop_assert!(st.nonsimple.is_some());
        }
    }
}

proptest! {
    #![proptest_config(cases(12))]

    /// Over F_3(t) the index is no longer forced to be 1.
    #[test]
    fn cyclic_invariants_over_function_field(seed in any::<u64>()) {
        let k = RatFn::new(Fp::new(3).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (s, a) = (k.random(&mut rng, 1), k.random(&mut rng, 1));
        prop_assume!(!k.is_zero(&s) && !k.is_zero(&a));
        let spec = CESpec::new(RootedField::new(k.clone(), 2, k.from_int(2)).unwrap(), s, a);
        let st = ce_classify(&spec, &ce_opts()).unwrap();
        prop_assert!(st.simple);
        if st.verdict == Verdict::Determined {
            let (d, m) = (st.d.unwrap(), st.m.unwrap());
            prop_assert_eq!(2, m * d);
            let sw = ce_classify(&spec.swapped().unwrap(), &ce_opts()).unwrap();
            if sw.verdict == Verdict::Determined {
                prop_assert_eq!((sw.m, sw.d), (st.m, st.d));
            }
        }
    }
}

fn random_auto(g: &Gwa<Fp>, seed: u64) -> Automorphism<Fp> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Automorphism::new(g, aut::random_rep(g, &mut rng, 4)).unwrap()
}

fn images(a: &Automorphism<Fp>) -> Vec<GwaElem<u32>> {
    aut::generator_letters(a.gwa().tag).iter().map(|&l| a.morphism.image(l).unwrap()).collect()
}

proptest! {
    #![proptest_config(cases(100))]

    #[test]
    fn torus_composition(k in 0usize..3, s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let g = gwa(Tag::Torus, k);
        let (a, b, c) = (random_auto(&g, s1), random_auto(&g, s2), random_auto(&g, s3));
        let ab = a.compose(&b).unwrap();
        let by_images: Vec<_> = images(&b).iter().map(|u| a.apply(u).unwrap()).collect();
        prop_assert_eq!(images(&ab), by_images);
        let left = ab.compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert!(left.same_map(&right).unwrap());
        prop_assert_eq!(&left.rep, &right.rep);
        let id = Automorphism::identity(&g).unwrap();
        prop_assert!(a.compose(&a.inverse().unwrap()).unwrap().same_map(&id).unwrap());
    }

    #[test]
    fn recognition_recovers_parameters(t in 0usize..4, k in 0usize..3, seed in any::<u64>()) {
        let g = gwa(tag_of(t), k);
        let a = random_auto(&g, seed);
        let im = images(&a);
        let back = aut::recognize(&g, &im[0], &im[1]).unwrap();
        prop_assert_eq!(back.rep, a.rep);
    }

    /// Modulo U = {sigma_{lambda, mu}}, Aut(CA) composes through (i, mu, invert) alone.
    #[test]
    fn laurent_quotient_by_scalings(k in 0usize..3, s1 in any::<u64>(), s2 in any::<u64>()) {
        let g = gwa(Tag::LaurentX, k);
        let (a, b) = (random_auto(&g, s1), random_auto(&g, s2));
        let key = |r: &AutoRep<u32>| match *r {
            AutoRep::Laurent { i, mu, invert, .. } => (i, mu, invert),
            _ => unreachable!(),
        };
        let (i1, mu1, e1) = key(&a.rep);
        let (i2, mu2, e2) = key(&b.rep);
        let f = g.field();
        let sign = if e1 { -1 } else { 1 };
        let mu = f.mul(&f.pow_signed(&mu1, if e2 { -1 } else { 1 }).unwrap(), &mu2);
        prop_assert_eq!(key(&a.compose(&b).unwrap().rep), (i1 + sign * i2, mu, e1 != e2));
    }
}

#[test]
fn scalings_form_a_normal_subgroup_but_xi_does_not() {
    let g = gwa(Tag::LaurentX, 2);
    let laurent = |lambda, i, mu| Automorphism::new(&g, AutoRep::Laurent { lambda, i, mu, invert: false }).unwrap();
    let t = laurent(1, 0, 2);
    let xi = laurent(1, 1, 1);
    let conj = t.compose(&xi).unwrap().compose(&t.inverse().unwrap()).unwrap();
    assert_eq!(conj.rep, AutoRep::Laurent { lambda: 2, i: 1, mu: 1, invert: false });
    for seed in 0..40 {
        let a = random_auto(&g, seed);
        let u = laurent(3, 0, 7);
        let c = a.compose(&u).unwrap().compose(&a.inverse().unwrap()).unwrap();
        assert!(matches!(c.rep, AutoRep::Laurent { i: 0, invert: false, .. }), "{}", c.describe());
    }
}

/// Exponents divisible by n: the centre of B is spanned by these monomials.
fn central_part(g: &Gwa<Fp>, u: &GwaElem<u32>) -> GwaElem<u32> {
    let n = g.n() as i64;
    GwaElem {
        tag: u.tag,
        terms: u.terms.iter().filter(|((i, j), _)| i % n == 0 && j % n == 0).map(|(k, v)| (*k, *v)).collect(),
    }
}

fn is_central(g: &Gwa<Fp>, u: &GwaElem<u32>) -> bool {
    g.mul(&g.h(), u) == g.mul(u, &g.h()) && g.mul(&g.x(), u) == g.mul(u, &g.x())
}

proptest! {
    #![proptest_config(cases(200))]

    /// For a central ideal a = (z), every central element of B a lies in a:
    /// the central part of b z equals (central part of b) z.
    #[test]
    fn torus_ideal_correspondence(k in 0usize..3, ideal in 0usize..4, c0 in 1u32..13, b in terms()) {
        let g = gwa(Tag::Torus, k);
        let (s, t) = (g.s(), g.t());
        let c = g.scalar(&g.field().from_int(c0 as i64));
        let z = match ideal {
            0 => g.sub(&s, &c),
            1 => g.sub(&t, &c),
            2 => g.mul(&g.sub(&s, &g.one()), &g.sub(&t, &c)),
            _ => g.add(&g.mul(&s, &t), &c),
        };
        let b = element(&g, &b);
        let bz = g.mul(&b, &z);
        let cz = central_part(&g, &bz);
        prop_assert!(is_central(&g, &cz));
        prop_assert_eq!(&cz, &g.mul(&central_part(&g, &b), &z));
        prop_assert_eq!(is_central(&g, &bz), bz == cz);
    }
}

#[test]
fn primitive_iff_maximal_across_atlases() {
    for tag in Tag::ALL {
        for (p, n, q) in [(3u32, 2usize, 2u32), (5, 4, 2), (7, 3, 2)] {
            let r = RootedField::new(Fp::new(p).unwrap(), n, q).unwrap();
            let atlas = spectrum::enumerate_spectrum(tag, &r, 1, 10_000, &SearchOptions::default()).unwrap();
            assert!(atlas.checks.passed(), "{tag} over F_{p}: {:?}", atlas.checks);
            for rep in &atlas.reports {
                for pc in &rep.primes {
                    assert_eq!(pc.primitive, pc.maximal, "{tag} {}: {}", rep.centre_prime, pc.ideal);
                    if let spectrum::Quotient::MatrixOverField { n: size, .. } = pc.quotient {
                        assert!(size == n || size == 1, "{tag} {}: M_{size}", pc.ideal);
                    }
                }
            }
        }
    }
}
