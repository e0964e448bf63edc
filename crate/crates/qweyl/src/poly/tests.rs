use super::*;
use crate::field::{Fp, Fq, RatFn};
use proptest::prelude::*;

fn fp(p: u32) -> Fp {
    Fp::new(p).unwrap()
}

fn p(f: &Fp, s: &str) -> Poly<u32> {
    parse_poly(f, s, "x").unwrap()
}

#[test]
fn arith_examples() {
    let f5 = fp(5);
    assert_eq!(gcd(&f5, &p(&f5, "x^2-1"), &p(&f5, "x-1")), p(&f5, "x-1"));
    let f13 = fp(13);
    assert_eq!(eval(&f13, &p(&f13, "x^4-3"), &2), 0);
    let f3 = fp(3);
    let (q, r) = divrem(&f3, &p(&f3, "x^3"), &p(&f3, "x-1")).unwrap();
    assert_eq!(q, p(&f3, "x^2+x+1"));
    assert_eq!(r, vec![1]);
    assert_eq!(divrem(&f3, &q, &[]), Err(Error::DivisionByZero));
    assert_eq!(compose(&f3, &p(&f3, "x^2"), &p(&f3, "x+1")), p(&f3, "x^2+2x+1"));
    assert_eq!(p(&f3, "1,0,2"), p(&f3, "2x^2+1"));
}

#[test]
fn factor_examples() {
    let f13 = fp(13);
    let fs = factor(&f13, &p(&f13, "x^4-3")).unwrap();
    let lin: Vec<_> = fs.factors.iter().map(|(g, e)| (g.clone(), *e)).collect();
    assert_eq!(
        lin,
        vec![
            (vec![2, 1], 1),
            (vec![3, 1], 1),
            (vec![10, 1], 1),
            (vec![11, 1], 1)
        ]
    );
    for r in [2u32, 3, 10, 11] {
        assert_eq!(eval(&f13, &p(&f13, "x^4-3"), &r), 0);
    }
    assert!(factor(&f13, &p(&f13, "x^4-2")).unwrap().is_irreducible());
    let f3 = fp(3);
    assert_eq!(factor(&f3, &p(&f3, "x^2-1")).unwrap().degrees(), vec![1, 1]);
    let k = RatFn::new(f3).unwrap();
    assert!(matches!(
        factor(&k, &[k.t(), k.one()]),
        Err(Error::UnsupportedField(_))
    ));
}

#[test]
fn quadratic_candidates_for_x4_minus_2() {
    let f13 = fp(13);
    let g = p(&f13, "x^4-2");
    let mut buf = Vec::new();
    let hits = monic_of_degree(&f13, 2)
        .chain(monic_of_degree(&f13, 1))
        .filter(|c| divides_monic(&f13, &g, c, &mut buf))
        .count();
    assert_eq!(hits, 0);
    assert_eq!(monic_of_degree(&f13, 2).count(), 169);
}

#[test]
fn binomial_examples() {
    let f13 = fp(13);
    assert!(binomial_irreducible(&f13, 4, &2));
    assert!(!binomial_irreducible(&f13, 4, &3));
    for n in 2..6 {
        assert!(!binomial_irreducible(&f13, n, &1));
    }
}

#[test]
fn repeated_factors_and_char_p_roots() {
    let f3 = fp(3);
    // (x+1)^3 (x^2+1)^2 has vanishing-derivative parts
    let a = mul(&f3, &pow(&f3, &p(&f3, "x+1"), 3), &pow(&f3, &p(&f3, "x^2+1"), 2));
    let fs = factor(&f3, &a).unwrap();
    assert_eq!(fs.factors, vec![(vec![1, 1], 3), (vec![1, 0, 1], 2)]);
    assert_eq!(trial_factor(&f3, &a).unwrap(), fs);
    let f2 = fp(2);
    let b = pow(&f2, &p(&f2, "x^2+x+1"), 4);
    assert_eq!(factor(&f2, &b).unwrap().factors, vec![(vec![1, 1, 1], 4)]);
}

#[test]
fn factor_over_extension() {
    let f = Fq::with_degree(2, 2).unwrap();
    // x^2 + x + 1 splits over F_4
    let g = vec![f.one(), f.one(), f.one()];
    let fs = factor(&f, &g).unwrap();
    assert_eq!(fs.degrees(), vec![1, 1]);
    assert_eq!(roots(&f, &g).unwrap().len(), 2);
    let f9 = Fq::with_degree(3, 2).unwrap();
    let h = binomial(&f9, 4, &f9.generator());
    assert_eq!(factor(&f9, &h).unwrap(), trial_factor(&f9, &h).unwrap());
}

#[test]
fn root_of_unity_products() {
    let f13 = fp(13);
    let q = 5u32;
    let n = 4;
    for mu in 0..13u32 {
        let mut acc = constant(&f13, 1);
        for i in 0..n {
            let c = f13.mul(&f13.pow(&q, i), &mu);
            acc = mul(&f13, &acc, &[f13.neg(&c), 1]);
        }
        assert_eq!(acc, binomial(&f13, n as usize, &f13.pow(&mu, n)));
    }
    let prod = (1..n).fold(1, |acc, i| f13.mul(&acc, &f13.pow(&q, i)));
    assert_eq!(prod, f13.neg(&1));
}

fn arb_poly(pr: u32, maxlen: usize) -> impl Strategy<Value = Poly<u32>> {
    proptest::collection::vec(0..pr, 0..maxlen).prop_map(move |mut v| {
        trim(&Fp::new(pr).unwrap(), &mut v);
        v
    })
}

proptest! {
    #[test]
    fn divrem_recomposes(a in arb_poly(7, 9), b in arb_poly(7, 5)) {
        let f = fp(7);
        prop_assume!(!b.is_empty());
        let (q, r) = divrem(&f, &a, &b).unwrap();
        prop_assert!(r.len() < b.len());
        prop_assert_eq!(add(&f, &mul(&f, &q, &b), &r), a);
    }

    #[test]
    fn factor_matches_trial(a in arb_poly(5, 8)) {
        let f = fp(5);
        prop_assume!(!a.is_empty());
        let fast = factor(&f, &a).unwrap();
        let slow = trial_factor(&f, &a).unwrap();
        prop_assert_eq!(&fast, &slow);
        let mut prod = constant(&f, fast.unit);
        for (g, e) in &fast.factors {
            prop_assert!(is_irreducible(&f, g));
            prod = mul(&f, &prod, &pow(&f, g, *e as u64));
        }
        prop_assert_eq!(prod, a);
    }

    #[test]
    fn ext_gcd_bezout(a in arb_poly(11, 7), b in arb_poly(11, 7)) {
        let f = fp(11);
        prop_assume!(!a.is_empty() || !b.is_empty());
        let (g, s, t) = ext_gcd(&f, &a, &b);
        prop_assert_eq!(add(&f, &mul(&f, &s, &a), &mul(&f, &t, &b)), g.clone());
        prop_assert_eq!(g, gcd(&f, &a, &b));
    }
}
