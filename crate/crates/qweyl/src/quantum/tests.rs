use super::*;
use crate::field::Fp;
use crate::matrix::{self, Matrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn root(p: u32, n: usize, q: u32) -> RootedField<Fp> {
    RootedField::new(Fp::new(p).unwrap(), n, q).unwrap()
}

#[test]
fn weyl_products() {
    let g = Gwa::new(Tag::Weyl, root(7, 3, 2)).unwrap();
    let (x, y) = (g.x(), g.y().unwrap());
    let w = g.sub(&g.mul(&x, &y), &g.scale(&g.mul(&y, &x), &2));
    assert_eq!(w, g.one());
    let p = g.mul(&g.pow(&y, 3), &g.pow(&x, 3));
    assert_eq!(p, g.parse("h^3 - 1").unwrap());
    assert_eq!(g.format_elem(&p), "6 + h^3");
    let pl = Gwa::new(Tag::Plane, root(7, 3, 2)).unwrap();
    assert_eq!(pl.mul(&pl.x(), &pl.h()), pl.scale(&pl.mul(&pl.h(), &pl.x()), &2));
    assert_eq!(pl.format_elem(&pl.mul(&pl.x(), &pl.h())), "2*h*x");
}

#[test]
fn parse_and_units() {
    let g = Gwa::new(Tag::Torus, root(13, 4, 5)).unwrap();
    let u = g.parse("3*h^-2*x^3").unwrap();
    let ui = g.inverse(&u).unwrap();
    assert_eq!(g.mul(&u, &ui), g.one());
    assert_eq!(g.mul(&ui, &u), g.one());
    assert!(g.inverse(&g.add(&g.h(), &g.one())).is_none());
    let ca = Gwa::new(Tag::LaurentX, root(13, 4, 5)).unwrap();
    assert!(ca.inverse(&ca.h()).is_none());
    assert!(ca.parse("h^-1").is_err());
    assert!(ca.inverse(&ca.x()).is_some());
    let pl = Gwa::new(Tag::Plane, root(13, 4, 5)).unwrap();
    assert_eq!(pl.checked_add(&pl.h(), &g.h()), Err(Error::MixedAlgebras));
}

#[test]
fn rewriting_matches_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for tag in Tag::ALL {
        let g = Gwa::new(tag, root(7, 3, 2)).unwrap();
        let letters = Letter::letters(tag);
        for k in 0..30 {
            let w: Vec<Letter> = (0..5).map(|i| letters[(k * 7 + i * 3) % letters.len()]).collect();
            let p = FreePoly::word(1, w);
            let a = rewrite_reduce(&g, &p, &mut rng).unwrap();
            assert_eq!(a, eval_free(&g, &p).unwrap(), "{tag} word {k}");
        }
    }
}

#[test]
fn identity_suites_pass() {
    for (p, n, q) in [(5, 2, 4), (7, 3, 2), (13, 4, 5), (7, 6, 3)] {
        for tag in Tag::ALL {
            let rep = verify_identities(tag, &root(p, n, q)).unwrap();
            // only the displayed closed form of [x, y^i] is false
            let bad: Vec<_> = rep.checks.iter().filter(|c| !c.passed).collect();
            assert!(bad.iter().all(|c| c.as_stated && c.name.starts_with("[x, y^")), "{tag} p={p} n={n}: {bad:?}");
            assert_eq!(bad.len(), if tag == Tag::Weyl { n - 1 } else { 0 });
        }
    }
}

#[test]
fn catalogue_tau_a1_needs_n_two() {
    let cat = isomorphism_catalogue(&root(5, 2, 4)).unwrap();
    assert!(cat.iter().all(|e| e.passed), "{cat:?}");
    let cat = isomorphism_catalogue(&root(7, 3, 2)).unwrap();
    let tau = cat.iter().find(|e| e.name == "tau_A1").unwrap();
    assert!(!tau.passed);
    // the residue is q^2 - 1 = 3
    assert_eq!(tau.residues, vec!["xy - q yx - 1 -> 3"]);
    assert!(cat.iter().filter(|e| e.name != "tau_A1").all(|e| e.passed));
}

#[test]
fn epsilon_for_n_two() {
    let r = root(3, 2, 2);
    let eps = epsilon_idempotents(&r).unwrap();
    assert_eq!(eps[0], vec![2, 2]);
    assert!(check_idempotents(&r, &eps).unwrap().passed());
    for (p, n, q) in [(7, 3, 2), (7, 6, 3), (13, 4, 5), (13, 6, 4)] {
        let r = root(p, n, q);
        assert!(check_idempotents(&r, &epsilon_idempotents(&r).unwrap()).unwrap().passed());
    }
}

#[test]
fn module_l_small() {
    let l = module_l(&root(3, 2, 2)).unwrap();
    assert_eq!(l.x, Matrix::from_rows(vec![vec![0, 0], vec![1, 0]]));
    assert_eq!(l.y, Matrix::from_rows(vec![vec![0, 1], vec![0, 0]]));
    assert_eq!(l.h, Matrix::from_rows(vec![vec![2, 0], vec![0, 1]]));
    let f = Fp::new(3).unwrap();
    let s = matrix::add(&f, &matrix::mul(&f, &l.x, &l.y).unwrap(), &matrix::mul(&f, &l.y, &l.x).unwrap()).unwrap();
    assert_eq!(s, matrix::identity(&f, 2));
    assert!(l.checks.passed());
    for (p, n, q) in [(7, 3, 2), (13, 4, 5), (13, 12, 2)] {
        let l = module_l(&root(p, n, q)).unwrap();
        assert!(l.checks.passed(), "p={p} n={n}");
    }
}

#[test]
fn factor_algebras() {
    let r = root(3, 2, 2);
    let fa = factor_algebra(&r, &FactorIdeal::TR).unwrap();
    assert_eq!(fa.algebra.dim(), 4);
    assert!(!fa.algebra.is_zero(&fa.x));
    assert!(fa.algebra.is_zero(&fa.algebra.pow(&fa.x, 2)));
    assert!(fa.relations_hold(&r).unwrap());
    assert!(fa.algebra.is_simple().unwrap());

    let r5 = root(5, 2, 4);
    let fa = factor_algebra(&r5, &FactorIdeal::RF(vec![4, 1])).unwrap();
    assert_eq!(fa.algebra.dim(), 4);
    assert!(fa.relations_hold(&r5).unwrap());
    let a = &fa.algebra;
    let eps: Vec<Vec<u32>> = epsilon_idempotents(&r5)
        .unwrap()
        .iter()
        .map(|e| a.add(&a.scalar(&e[0]), &a.scale(&fa.h, &e[1])))
        .collect();
    // x^{-1} = x since t = 1
    let xp = |k: i64| a.pow(&fa.x, k.rem_euclid(2) as u64);
    let table: Vec<Vec<Vec<u32>>> = (0..2)
        .map(|i| (0..2).map(|j| a.mul(&a.mul(&eps[i], &xp(j as i64 - i as i64)), &eps[j])).collect())
        .collect();
    assert!(a.verify_matrix_units(&table));

    let fa = factor_algebra(&r5, &FactorIdeal::HF(vec![4, 1])).unwrap();
    assert_eq!(fa.algebra.dim(), 1);
    assert!(fa.relations_hold(&r5).unwrap());

    let fa = factor_algebra(&r5, &FactorIdeal::TG(vec![3, 0, 1])).unwrap();
    assert_eq!(fa.algebra.dim(), 8);
    assert!(fa.relations_hold(&r5).unwrap());
    assert_eq!(fa.algebra.centre().len(), 2);

    let fa = factor_algebra(&r5, &FactorIdeal::Maximal { r0: 2, t0: 1 }).unwrap();
    assert!(fa.relations_hold(&r5).unwrap());

    assert!(matches!(factor_algebra(&r5, &FactorIdeal::RF(vec![0, 1])), Err(Error::ExcludedModulus(_))));
    assert_eq!(factor_algebra(&r5, &FactorIdeal::RF(vec![4, 0, 1])).unwrap_err(), Error::ReducibleModulus);

    for (p, n, q) in [(7, 3, 2), (13, 4, 5)] {
        let r = root(p, n, q);
        let fa = factor_algebra(&r, &FactorIdeal::TR).unwrap();
        assert!(fa.relations_hold(&r).unwrap());
        let fa = factor_algebra(&r, &FactorIdeal::RF(vec![2, 1])).unwrap();
        assert!(fa.relations_hold(&r).unwrap());
    }
}

#[test]
fn localized_units() {
    for (n, q) in [(2, 12), (3, 3), (4, 5)] {
        let r = root(13, n, q);
        for form in [UnitForm::X, UnitForm::Y] {
            let (g, units) = localized_matrix_units(&r, form).unwrap();
            assert!(verify_localized_units(&g, &units), "n={n} {form:?}");
        }
    }
}

#[test]
fn graded_basis_mod_r_and_t() {
    let rep = basis_of_a1_mod(&root(5, 2, 4), ModGenerator::R, 4).unwrap();
    let y1 = rep.components.iter().find(|c| c.grade == -1).unwrap();
    assert_eq!(y1.idempotents, vec![1]);
    assert!(y1.injective && rep.certified);
    assert_eq!(rep.components[0].dim, 2);
    for (p, n, q) in [(7, 3, 2), (13, 4, 5), (13, 6, 4)] {
        for which in [ModGenerator::R, ModGenerator::T] {
            let rep = basis_of_a1_mod(&root(p, n, q), which, 8).unwrap();
            assert!(rep.certified, "{which:?} n={n}");
        }
    }
    assert!(matches!(basis_of_a1_mod(&root(13, 6, 4), ModGenerator::R, 4), Err(Error::TooLarge(_))));
}
