use super::*;
use crate::field::{Fp, RatFn};
use proptest::prelude::*;

fn e_ring(p: u32, n: usize, q: u32, s: u32) -> ExtRing<Fp> {
    ExtRing::new(RootedField::new(Fp::new(p).unwrap(), n, q).unwrap(), s)
}

#[test]
fn arith_examples() {
    let e = e_ring(5, 2, 4, 2);
    let h = e.h();
    assert_eq!(e.sigma(&h), vec![0, 4]);
    let a = e.add(&h, &e.one());
    let b = e.sub(&h, &e.one());
    assert_eq!(e.mul(&a, &b), e.one());
    assert_eq!(e.norm(&a).unwrap(), 4);
    assert!(e.is_field());
    let inv = e.inv(&a).unwrap();
    assert_eq!(e.mul(&a, &inv), e.one());
}

#[test]
fn sigma_has_order_n() {
    let e = e_ring(13, 4, 5, 2);
    let h = e.h();
    for k in 1..4 {
        assert_ne!(e.sigma_pow(&h, k), h);
    }
    assert_eq!(e.sigma_pow(&h, 4), h);
    for i in 0..20u64 {
        let a = e.element(i * 1337 % 28561);
        assert_eq!(e.sigma_pow(&a, 4), a);
    }
}

#[test]
fn norm_examples() {
    for (p, n, q) in [(5u32, 2usize, 4u32), (7, 3, 2), (13, 4, 5)] {
        let f = Fp::new(p).unwrap();
        for s in 0..p {
            let e = e_ring(p, n, q, s);
            let expect = if n % 2 == 1 { s } else { f.neg(&s) };
            assert_eq!(e.norm(&e.h()).unwrap(), expect);
            for lam in 0..p {
                assert_eq!(e.norm(&e.scalar(&lam)).unwrap(), f.pow(&lam, n as u64));
                // closed form for h - lambda
                let lin = e.sub(&e.h(), &e.scalar(&lam));
                let cf = f.sub(&s, &f.pow(&lam, n as u64));
                let cf = if n % 2 == 1 { cf } else { f.neg(&cf) };
                assert_eq!(e.norm(&lin).unwrap(), cf);
            }
        }
    }
}

#[test]
fn norm_image_examples() {
    let e = e_ring(5, 2, 4, 2);
    assert_eq!(e.norm_image(10_000).unwrap(), vec![0, 1, 2, 3, 4]);
    let z = e_ring(5, 2, 4, 0);
    assert!(z.norm_image(10_000).unwrap().contains(&0));
    let big = e_ring(13, 4, 5, 2);
    assert!(matches!(big.norm_image(10_000), Err(Error::TooLarge(_))));
    assert!(big.norm_image(30_000).unwrap().contains(&1));
}

#[test]
fn m_of_examples() {
    let f = Fp::new(13).unwrap();
    let (m, r) = m_of(&f, &3, 4).unwrap();
    assert_eq!(m, 4);
    assert_eq!(f.pow(&r, 4), 3);
    assert_eq!(m_of(&f, &2, 4).unwrap().0, 1);
    assert_eq!(m_of(&f, &1, 4).unwrap().0, 4);
    assert_eq!(m_of(&f, &0, 4), Err(Error::ZeroInput));
    // is_field iff m(s) = 1
    for s in 1..13 {
        let e = e_ring(13, 4, 5, s);
        assert_eq!(e.is_field(), m_of(&f, &s, 4).unwrap().0 == 1, "s={s}");
    }
}

#[test]
fn idempotent_example_n2() {
    let e = e_ring(5, 2, 4, 4);
    let f = e.field().clone();
    let (m, r) = m_of(&f, &4, 2).unwrap();
    assert_eq!((m, r), (2, 2));
    let es = e.idempotents(m, &r).unwrap();
    assert_eq!(es[0], vec![3, 4]);
    assert_eq!(es[1], vec![3, 1]);
    assert_eq!(e.sigma(&es[1]), es[0]);
    assert_eq!(e.sigma(&es[0]), es[1]);
    assert_eq!(e.idempotents(1, &4).unwrap(), vec![e.one()]);
}

fn check_family<F: Field>(e: &ExtRing<F>, es: &[Vec<F::Elem>], shift: i64) {
    let m = es.len() as i64;
    let mut sum = e.zero();
    for (i, a) in es.iter().enumerate() {
        for (j, b) in es.iter().enumerate() {
            let p = e.mul(a, b);
            if i == j {
                assert_eq!(&p, a);
            } else {
                assert_eq!(p, e.zero());
            }
        }
        sum = e.add(&sum, a);
        let target = (i as i64 + shift).rem_euclid(m) as usize;
        assert_eq!(e.sigma(a), es[target]);
    }
    assert_eq!(sum, e.one());
}

#[test]
fn idempotent_families_all_configs() {
    for (p, n, q) in [(5u32, 2usize, 4u32), (5, 4, 2), (7, 3, 2), (7, 6, 3), (13, 4, 5), (13, 6, 4)] {
        let f = Fp::new(p).unwrap();
        for s in 1..p {
            let e = e_ring(p, n, q, s);
            let (m, r) = m_of(&f, &s, n).unwrap();
            let es = e.idempotents(m, &r).unwrap();
            check_family(&e, &es, -1);
            assert_eq!(e.idempotents_alt_form(m, &r).unwrap(), es);
        }
    }
}

#[test]
fn function_field_ext() {
    let k = RatFn::new(Fp::new(3).unwrap()).unwrap();
    let t = k.t();
    let rf = RootedField::new(k.clone(), 2, k.from_int(2)).unwrap();
    let e = ExtRing::new(rf.clone(), t.clone());
    assert!(e.is_field());
    let t2 = k.mul(&t, &t);
    let e2 = ExtRing::new(rf, t2.clone());
    assert!(!e2.is_field());
    let (m, r) = m_of(&k, &t2, 2).unwrap();
    assert_eq!(m, 2);
    check_family(&e2, &e2.idempotents(m, &r).unwrap(), -1);
}

proptest! {
    #[test]
    fn norm_is_multiplicative(a in 0u64..28561, b in 0u64..28561, s in 0u32..13) {
        let e = e_ring(13, 4, 5, s);
        let (x, y) = (e.element(a), e.element(b));
        let f = e.field();
        prop_assert_eq!(e.norm(&e.mul(&x, &y)).unwrap(), f.mul(&e.norm(&x).unwrap(), &e.norm(&y).unwrap()));
    }

    #[test]
    fn units_invert(a in 1u64..625, s in 0u32..5) {
        let e = e_ring(5, 4, 2, s);
        let x = e.element(a);
        let f = e.field();
        match e.inv(&x) {
            Some(y) => prop_assert_eq!(e.mul(&x, &y), e.one()),
            None => prop_assert_eq!(e.norm(&x).unwrap(), f.zero()),
        }
    }
}
