use super::*;
use crate::field::{Fp, Ring, RootedField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gwa(tag: Tag, p: u32, n: usize, q: u32) -> Gwa<Fp> {
    Gwa::new(tag, RootedField::new(Fp::new(p).unwrap(), n, q).unwrap()).unwrap()
}

fn unit(rng: &mut ChaCha8Rng, p: u32) -> u32 {
    rng.gen_range(1..p)
}

/// Composition through generator images, independent of the parameter formulas.
fn compose_images(a: &Automorphism<Fp>, b: &Automorphism<Fp>) -> Vec<GwaElem<u32>> {
    generator_letters(a.gwa().tag)
        .iter()
        .map(|&l| a.apply(&b.morphism.image(l).unwrap()).unwrap())
        .collect()
}

fn images_of(a: &Automorphism<Fp>) -> Vec<GwaElem<u32>> {
    generator_letters(a.gwa().tag).iter().map(|&l| a.morphism.image(l).unwrap()).collect()
}

#[test]
fn involutions_square_to_identity() {
    let pl = gwa(Tag::Plane, 5, 2, 4);
    let iota = Automorphism::new(&pl, AutoRep::Plane { lambda: 1, mu: 1, swap: true }).unwrap();
    assert_eq!(iota.describe(), "iota");
    let id = iota.compose(&iota).unwrap();
    assert_eq!(id.rep, AutoRep::Plane { lambda: 1, mu: 1, swap: false });

    let w = gwa(Tag::Weyl, 5, 2, 4);
    let zeta = Automorphism::new(&w, AutoRep::Weyl { lambda: 1, swap: true }).unwrap();
    assert_eq!(zeta.morphism.image(Letter::H).unwrap(), w.neg(&w.h()));
    assert_eq!(zeta.compose(&zeta).unwrap().rep, AutoRep::Weyl { lambda: 1, swap: false });

    let ca = gwa(Tag::LaurentX, 5, 2, 4);
    let kappa = Automorphism::new(&ca, AutoRep::Laurent { lambda: 1, i: 0, mu: 1, invert: true }).unwrap();
    assert_eq!(kappa.describe(), "kappa");
    let k2 = kappa.compose(&kappa).unwrap();
    assert_eq!(k2.rep, AutoRep::Laurent { lambda: 1, i: 0, mu: 1, invert: false });
    assert!(k2.is_inner());
}

#[test]
fn swaps_need_n_two() {
    let pl = gwa(Tag::Plane, 7, 3, 2);
    let e = Automorphism::new(&pl, AutoRep::Plane { lambda: 1, mu: 1, swap: true }).unwrap_err();
    assert_eq!(e.kind(), "RelationViolated");
    assert!(recognize(&pl, &pl.x(), &pl.h()).is_none());
    let w = gwa(Tag::Weyl, 7, 3, 2);
    assert!(Automorphism::new(&w, AutoRep::Weyl { lambda: 3, swap: true }).is_err());
    let ca = gwa(Tag::LaurentX, 7, 3, 2);
    assert!(Automorphism::new(&ca, AutoRep::Laurent { lambda: 1, i: 0, mu: 1, invert: true }).is_err());
}

#[test]
fn weyl_torus_law() {
    let w = gwa(Tag::Weyl, 13, 4, 5);
    let t = |l: u32| Automorphism::new(&w, AutoRep::Weyl { lambda: l, swap: false }).unwrap();
    let f = w.field();
    for (a, b) in [(2, 3), (5, 7), (12, 12)] {
        let c = t(a).compose(&t(b)).unwrap();
        assert!(c.same_map(&t(f.mul(&a, &b))).unwrap());
    }
    assert!(t(1).is_inner());
    assert!(!t(2).is_inner());
}

#[test]
fn torus_shear_is_automorphism() {
    let b = gwa(Tag::Torus, 13, 4, 5);
    let tau = Automorphism::new(&b, AutoRep::Torus { a: [[1, 1], [0, 1]], lambda: 1, mu: 1 }).unwrap();
    assert_eq!(tau.apply(&b.h()).unwrap(), b.monomial(1, 1, 1).unwrap());
    let chk = torus_check(&b, [[1, 1], [0, 1]], &1, &1).unwrap();
    assert!(chk.condition && chk.relation_preserved && chk.automorphism);
    // det 5 = 1 mod 4 preserves the relation but is not onto
    let chk = torus_check(&b, [[5, 0], [0, 1]], &1, &1).unwrap();
    assert!(chk.relation_preserved && !chk.invertible && !chk.automorphism);
    assert_eq!(
        Automorphism::new(&b, AutoRep::Torus { a: [[5, 0], [0, 1]], lambda: 1, mu: 1 }).unwrap_err().kind(),
        "HypothesisFailed"
    );
}

#[test]
fn torus_det_minus_one_for_n_two() {
    let b = gwa(Tag::Torus, 5, 2, 4);
    let chk = torus_check(&b, [[0, 1], [1, 0]], &1, &1).unwrap();
    assert!(chk.relation_preserved && chk.automorphism && chk.det_minus_one_anomaly);
    let b4 = gwa(Tag::Torus, 13, 4, 5);
    let chk = torus_check(&b4, [[0, 1], [1, 0]], &1, &1).unwrap();
    assert!(!chk.condition && !chk.relation_preserved);
}

#[test]
fn torus_condition_matches_normal_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (n, q) in [(4, 5), (3, 3), (6, 4)] {
        let b = gwa(Tag::Torus, 13, n, q);
        for _ in 0..50 {
            let a = [[0; 2]; 2].map(|r: [i64; 2]| r.map(|_| rng.gen_range(-3..=3)));
            let (l, m) = (unit(&mut rng, 13), unit(&mut rng, 13));
            let chk = torus_check(&b, a, &l, &m).unwrap();
            assert_eq!(chk.condition, chk.relation_preserved, "n={n} A={a:?}");
        }
    }
}

#[test]
fn recognition() {
    let ca = gwa(Tag::LaurentX, 13, 4, 5);
    let xh = ca.mul(&ca.x(), &ca.h());
    let xi = recognize(&ca, &xh, &ca.x()).unwrap();
    assert_eq!(xi.describe(), "xi_1");
    assert!(!xi.is_inner());
    assert!(recognize(&ca, &ca.add(&ca.h(), &ca.one()), &ca.x()).is_none());

    let pl = gwa(Tag::Plane, 13, 3, 3);
    let t = recognize(&pl, &pl.scale(&pl.h(), &2), &pl.scale(&pl.x(), &5)).unwrap();
    assert_eq!(t.describe(), "t_{2,5}");

    let w = gwa(Tag::Weyl, 13, 4, 5);
    let t = recognize(&w, &w.scale(&w.x(), &3), &w.scale(&w.y().unwrap(), &9)).unwrap();
    assert_eq!(t.rep, AutoRep::Weyl { lambda: 3, swap: false });
    assert!(recognize(&w, &w.scale(&w.x(), &3), &w.scale(&w.y().unwrap(), &3)).is_none());
}

#[test]
fn conjugation_by_powers_of_x() {
    let ca = gwa(Tag::LaurentX, 13, 4, 5);
    for i in 1..4 {
        let xi = ca.monomial(1, 0, i).unwrap();
        let [h, x] = conjugation(&ca, &xi).unwrap();
        let w = recognize(&ca, &h, &x).unwrap();
        // x^i h x^{-i} = q^i h
        assert_eq!(w.rep, AutoRep::Laurent { lambda: ca.root.q_pow(i), i: 0, mu: 1, invert: false });
        assert!(w.is_inner());
    }
    let b = gwa(Tag::Torus, 13, 4, 5);
    let [h, x] = conjugation(&b, &b.h()).unwrap();
    let w = recognize(&b, &h, &x).unwrap();
    assert!(w.is_inner());
    assert_eq!(w.rep, AutoRep::Torus { a: [[1, 0], [0, 1]], lambda: 1, mu: 8 });
}

fn random_rep(rng: &mut ChaCha8Rng, tag: Tag, p: u32, n: usize) -> AutoRep<u32> {
    let two = n == 2;
    match tag {
        Tag::Plane => AutoRep::Plane { lambda: unit(rng, p), mu: unit(rng, p), swap: two && rng.gen() },
        Tag::Weyl => AutoRep::Weyl { lambda: unit(rng, p), swap: two && rng.gen() },
        Tag::LaurentX => AutoRep::Laurent {
            lambda: unit(rng, p),
            i: rng.gen_range(-3..=3),
            mu: unit(rng, p),
            invert: two && rng.gen(),
        },
        Tag::Torus => {
            let gens = [[[1, 1], [0, 1]], [[1, 0], [1, 1]], [[1, -1], [0, 1]], [[0, -1], [1, 0]]];
            let mut a = [[1i64, 0], [0, 1]];
            for _ in 0..3 {
                let s = gens[rng.gen_range(0..4)];
                a = [
                    [a[0][0] * s[0][0] + a[0][1] * s[1][0], a[0][0] * s[0][1] + a[0][1] * s[1][1]],
                    [a[1][0] * s[0][0] + a[1][1] * s[1][0], a[1][0] * s[0][1] + a[1][1] * s[1][1]],
                ];
            }
            AutoRep::Torus { a, lambda: unit(rng, p), mu: unit(rng, p) }
        }
    }
}

#[test]
fn parameter_composition_matches_images() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (p, n, q) in [(5, 2, 4), (13, 4, 5), (7, 3, 2)] {
        for tag in Tag::ALL {
            let g = gwa(tag, p, n, q);
            for _ in 0..200 {
                let a = Automorphism::new(&g, random_rep(&mut rng, tag, p, n)).unwrap();
                let b = Automorphism::new(&g, random_rep(&mut rng, tag, p, n)).unwrap();
                let c = a.compose(&b).unwrap();
                assert_eq!(images_of(&c), compose_images(&a, &b), "{tag} {:?} {:?}", a.rep, b.rep);
                let ai = a.inverse().unwrap();
                assert_eq!(compose_images(&a, &ai), images_of(&a.compose(&ai).unwrap()));
                let id = Automorphism::identity(&g).unwrap();
                assert_eq!(a.compose(&ai).unwrap().rep, id.rep);
                assert_eq!(ai.compose(&a).unwrap().rep, id.rep);
            }
        }
    }
}

#[test]
fn normal_subgroups_in_laurent() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let ca = gwa(Tag::LaurentX, 13, 4, 5);
    for _ in 0..50 {
        let g = Automorphism::new(&ca, random_rep(&mut rng, Tag::LaurentX, 13, 4)).unwrap();
        let gi = g.inverse().unwrap();
        assert!(g.compose(&gi).unwrap().same_map(&Automorphism::identity(&ca).unwrap()).unwrap());
        assert!(gi.compose(&g).unwrap().same_map(&Automorphism::identity(&ca).unwrap()).unwrap());
        // U = {sigma_{lambda,1}} is normal
        let u = Automorphism::new(&ca, AutoRep::Laurent { lambda: unit(&mut rng, 13), i: 0, mu: 1, invert: false }).unwrap();
        let c = g.compose(&u).unwrap().compose(&gi).unwrap();
        assert!(matches!(c.rep, AutoRep::Laurent { i: 0, mu: 1, invert: false, .. }));
    }
    // conjugating xi_1 by a torus element leaves the subgroup {xi_i}
    let t = Automorphism::new(&ca, AutoRep::Laurent { lambda: 1, i: 0, mu: 2, invert: false }).unwrap();
    let ti = Automorphism::new(&ca, AutoRep::Laurent { lambda: 1, i: 0, mu: 7, invert: false }).unwrap();
    let xi = Automorphism::new(&ca, AutoRep::Laurent { lambda: 1, i: 1, mu: 1, invert: false }).unwrap();
    let c = t.compose(&xi).unwrap().compose(&ti).unwrap();
    assert_eq!(c.rep, AutoRep::Laurent { lambda: 2, i: 1, mu: 1, invert: false });
}

#[test]
fn rejects_bad_parameters() {
    let pl = gwa(Tag::Plane, 5, 2, 4);
    assert_eq!(Automorphism::new(&pl, AutoRep::Plane { lambda: 0, mu: 1, swap: false }).unwrap_err(), Error::NotAUnit);
    assert_eq!(
        Automorphism::new(&pl, AutoRep::Weyl { lambda: 1, swap: false }).unwrap_err(),
        Error::MixedAlgebras
    );
}
