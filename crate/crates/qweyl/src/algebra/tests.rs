use super::*;
use crate::field::{Fp, Ring};

fn f5() -> Fp {
    Fp::new(5).unwrap()
}

/// F[x]/(x^k - c) on the basis 1, x, ..., x^{k-1}.
fn binomial_algebra(f: &Fp, k: usize, c: u32) -> StructureAlgebra<Fp> {
    let labels = (0..k).map(|i| format!("x^{i}")).collect();
    let mut unit = vec![0; k];
    unit[0] = 1;
    StructureAlgebra::new(f.clone(), labels, unit, |i, j| {
        let mut v = vec![0; k];
        let e = i + j;
        v[e % k] = if e >= k { c } else { 1 };
        v
    })
    .unwrap()
}

#[test]
fn standard_matrix_units() {
    let f = f5();
    let a = matrix_algebra(&f, 2);
    a.check_associative().unwrap();
    let es = vec![a.basis(0), a.basis(3)];
    let units = a.matrix_units_from_idempotents(&es).unwrap();
    assert_eq!(units[0][0], a.basis(0));
    assert_eq!(units[1][1], a.basis(3));
    assert!(a.verify_matrix_units(&units));
    // E01 is determined only up to a scalar; E01 E10 = E00 pins the pair
    assert_eq!(a.mul(&units[0][1], &units[1][0]), a.basis(0));
}

#[test]
fn rejects_bad_input() {
    let f = f5();
    let a = matrix_algebra(&f, 2);
    let half = f.inv(&2).unwrap();
    let h = a.scalar(&half);
    assert!(matches!(
        a.matrix_units_from_idempotents(&[h.clone(), h]),
        Err(Error::NotOrthogonal(_))
    ));
    let corrupted = StructureAlgebra::new(f.clone(), a.labels.clone(), a.one(), |i, j| {
        let mut v = a.product_of_basis(i, j);
        if (i, j) == (1, 2) {
            v[0] = f.add(&v[0], &1);
        }
        v
    });
    assert!(matches!(corrupted, Err(Error::NotAssociative(..))));
}

#[test]
fn nilpotent_criterion() {
    let f = f5();
    let a = matrix_algebra(&f, 2);
    let units = a.nilpotent_matrix_criterion(&a.basis(1), 2).unwrap();
    assert!(a.verify_matrix_units(&units));
    assert!(matches!(
        a.nilpotent_matrix_criterion(&a.zero(), 2),
        Err(Error::HypothesisFailed(_))
    ));
    let f7 = Fp::new(7).unwrap();
    let m3 = matrix_algebra(&f7, 3);
    let shift = m3.add(&m3.basis(1), &m3.basis(5));
    let u3 = m3.nilpotent_matrix_criterion(&shift, 3).unwrap();
    assert!(m3.verify_matrix_units(&u3));
    let r = m3.nilpotent_subalgebra_readings(&shift, 3);
    assert_eq!(r.subalgebra_dim, 3);
    assert!(!r.unipotent_order_n);
    assert!(r.local);
}

#[test]
fn centres_and_simplicity() {
    let f = f5();
    let m2 = matrix_algebra(&f, 2);
    assert_eq!(m2.centre().len(), 1);
    assert!(m2.is_simple().unwrap());
    assert_eq!(m2.multiplication_algebra_dim(), 16);
    // F[x]/(x^2 - 1) = F x F, F[x]/(x^2) local, F[x]/(x^2 - 2) = F_25
    assert!(!binomial_algebra(&f, 2, 1).is_simple().unwrap());
    assert!(!binomial_algebra(&f, 2, 0).is_simple().unwrap());
    assert!(binomial_algebra(&f, 2, 2).is_simple().unwrap());
}

#[test]
fn ideals_and_quotients() {
    let f = f5();
    let a = binomial_algebra(&f, 4, 0);
    let x2 = a.basis(2);
    let i = a.ideal(&[x2]);
    assert_eq!(i.len(), 2);
    let (q, keep) = a.quotient(&i).unwrap();
    assert_eq!(keep, vec![0, 1]);
    assert_eq!(q.dim(), 2);
    let x = q.basis(1);
    assert!(q.is_zero(&q.mul(&x, &x)));
    let m2 = matrix_algebra(&f, 2);
    assert_eq!(m2.ideal(&[m2.basis(1)]).len(), 4);
}

#[test]
fn change_basis_preserves_products() {
    let f = f5();
    let a = matrix_algebra(&f, 2);
    let nb = vec![a.one(), a.basis(1), a.basis(2), a.add(&a.basis(0), &a.basis(1))];
    let b = a.change_basis(&nb, vec!["1".into(), "u".into(), "v".into(), "w".into()]).unwrap();
    b.check_associative().unwrap();
    assert_eq!(b.one(), vec![1, 0, 0, 0]);
    for i in 0..4 {
        for j in 0..4 {
            let p = b.product_of_basis(i, j);
            assert_eq!(a.combine(&nb, &p), a.mul(&nb[i], &nb[j]));
        }
    }
    assert_eq!(a.minimal_polynomial(&a.basis(1)), vec![0, 0, 1]);
}
