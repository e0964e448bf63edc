use super::*;
use crate::error::Error;
use crate::with_field;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fp(p: u32) -> Fp {
    Fp::new(p).unwrap()
}

#[test]
fn make_field_examples() {
    let f = parse_field("Fp:13;n=4;q=5").unwrap();
    match &f {
        AnyField::Prime(rf) => {
            assert_eq!(rf.field.pow(&5, 4), 1);
            assert_eq!(rf.field.pow(&5, 2), 12);
        }
        _ => panic!("expected a prime field"),
    }
    assert!(parse_field("Fp:3;n=2;q=2").is_ok());
    assert!(matches!(
        parse_field("Fp:5;n=3;q=2"),
        Err(Error::Parse(_)) | Err(Error::NotPrimitiveRoot { .. })
    ));
    assert!(matches!(
        parse_field("Fp:13;n=4;q=12"),
        Err(Error::NotPrimitiveRoot { n: 4, k: 2 })
    ));
    assert!(matches!(
        parse_field("Fp:3;n=3;q=1"),
        Err(Error::CharacteristicDividesN { p: 3, n: 3 })
    ));
    assert!(matches!(parse_field("Q:;n=2;q=-1"), Err(Error::UnsupportedField(_))));
}

#[test]
fn extension_and_function_field_specs() {
    // z^2 + 2 = (z - 1)(z + 1) over F_3
    assert!(matches!(
        parse_field("Fq:3^2;mod=2,0,1;n=8;q=z"),
        Err(Error::ReducibleModulus)
    ));
    let f = parse_field("Fq:3^2;mod=1,0,1;n=4;q=z").unwrap();
    assert!(matches!(f, AnyField::Ext(_)));
    let g = parse_field("Frat:Fp:3;n=2;q=2").unwrap();
    assert_eq!(g.describe(), "F_3(t) with n=2, q=2");
}

#[test]
fn fp_arith_examples() {
    let f = fp(13);
    assert_eq!(f.pow(&5, 2), 12);
    for x in 1..13 {
        assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), 1);
    }
    assert_eq!(f.inv(&0), None);
    assert_eq!(f.div(&1, &0), Err(Error::DivisionByZero));
    assert_eq!(f.parse_elem("-1").unwrap(), 12);
    assert_eq!(f.parse_elem("2^-1").unwrap(), 7);
}

#[test]
fn ratfn_cancellation() {
    let f = RatFn::new(fp(3)).unwrap();
    let a = f.parse_elem("(t^2-1)/(t-1)").unwrap();
    assert_eq!(a, f.parse_elem("t+1").unwrap());
    assert_eq!(f.format(&a), "1+t");
    let b = f.parse_elem("1/(2t+2)").unwrap();
    assert_eq!(b.den, vec![1, 1]);
    assert_eq!(b.num, vec![2]);
}

#[test]
fn mth_power_examples() {
    let f = fp(13);
    let r = mth_power_test(&f, &3, 2).unwrap();
    assert_eq!(f.pow(&r, 2), 3);
    assert_eq!(mth_power_test(&f, &2, 2), None);
    let squares: Vec<u32> = (1..13).filter(|&s| mth_power_test(&f, &s, 2).is_some()).collect();
    assert_eq!(squares, vec![1, 3, 4, 9, 10, 12]);
    assert_eq!(mth_power_test(&f, &7, 1), Some(7));

    let k = RatFn::new(fp(3)).unwrap();
    let t2 = k.parse_elem("t^2").unwrap();
    let r = mth_power_test(&k, &t2, 2).unwrap();
    assert_eq!(k.mul(&r, &r), t2);
    assert_eq!(mth_power_test(&k, &k.t(), 2), None);
    let four = k.parse_elem("(t+1)^4/(t^2+1)^2").unwrap();
    assert!(mth_power_test(&k, &four, 4).is_none());
    assert!(mth_power_test(&k, &four, 2).is_some());
}

#[test]
fn frobenius_fixes_everything() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let fields = [
        AnyField::Prime(RootedField::new(fp(13), 4, 5).unwrap()),
        parse_field("Fq:3^2;mod=1,0,1;n=4;q=z").unwrap(),
        parse_field("Fq:5^3;n=2;q=4").unwrap(),
    ];
    for any in &fields {
        with_field!(any, |rf| {
            let f = &rf.field;
            if let Some(q) = f.order() {
                for _ in 0..1000 {
                    let x = f.random(&mut rng, 0);
                    assert_eq!(f.pow(&x, q), x);
                }
            }
        });
    }
}

#[test]
fn fq_roots_of_unity() {
    let f = Fq::with_degree(5, 2).unwrap();
    let g = (1..25).map(|i| f.element(i)).find(|x| {
        (1..24).all(|k| !f.is_one(&f.pow(x, k))) && f.is_one(&f.pow(x, 24))
    });
    assert!(g.is_some());
    let rf = RootedField::new(f.clone(), 24, g.unwrap()).unwrap();
    assert_eq!(rf.q_pow(24), f.one());
    assert_eq!(f.mul(&rf.q_pow(-1), &rf.q), f.one());
}

#[test]
fn exhaustive_root_oracle_ext() {
    let f = Fq::with_degree(3, 2).unwrap();
    for i in 0..9 {
        let a = f.element(i);
        for m in 1..5u64 {
            let brute = (0..9).map(|j| f.element(j)).find(|b| f.pow(b, m) == a);
            assert_eq!(f.mth_root(&a, m).is_some(), brute.is_some(), "a={a:?} m={m}");
        }
    }
}

#[test]
fn ratfn_enumeration_counts() {
    let f = RatFn::new(fp(2)).unwrap();
    let all = f.enumerate_bounded(1);
    // zero, three nonzero numerators over 1, two coprime numerators over t and over t+1
    assert_eq!(all.len(), 1 + 3 + 2 + 2);
    let mut keys: Vec<_> = all.iter().map(|e| f.order_key(e)).collect();
    keys.sort();
    keys.dedup();
    assert_eq!(keys.len(), all.len());
}
