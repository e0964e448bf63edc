use super::*;
use crate::field::{Fp, RootedField};
use proptest::prelude::*;

fn f5() -> Fp {
    Fp::new(5).unwrap()
}

fn e_ring(p: u32, n: usize, q: u32, s: u32) -> ExtRing<Fp> {
    ExtRing::new(RootedField::new(Fp::new(p).unwrap(), n, q).unwrap(), s)
}

#[test]
fn basic_examples() {
    let f = f5();
    assert_eq!(det(&f, &identity(&f, 4)).unwrap(), 1);
    let a = Matrix::from_rows(vec![vec![1, 2], vec![3, 4]]);
    assert_eq!(det(&f, &a).unwrap(), 3);
    assert_eq!(det_ring(&f, &a).unwrap(), 3);
    let k = kron(&f, &Matrix::from_rows(vec![vec![2]]), &Matrix::from_rows(vec![vec![3]]));
    assert_eq!(k.data, vec![1]);
    let ai = inv(&f, &a).unwrap();
    assert_eq!(mul(&f, &a, &ai).unwrap(), identity(&f, 2));
    assert_eq!(inv_ring(&f, &a).unwrap(), ai);
    let sing = Matrix::from_rows(vec![vec![1, 2], vec![2, 4]]);
    assert_eq!(inv(&f, &sing), Err(Error::Singular));
    assert_eq!(nullspace(&f, &sing), vec![vec![3, 1]]);
    assert!(matches!(mul(&f, &a, &Matrix::from_rows(vec![vec![1, 2, 3]])), Err(Error::DimensionMismatch(_))));
}

#[test]
fn solve_consistency() {
    let f = f5();
    let a = Matrix::from_rows(vec![vec![1, 1, 0], vec![0, 1, 1]]);
    let x = solve(&f, &a, &[2, 3]).unwrap();
    assert_eq!(mat_vec(&f, &a, &x), vec![2, 3]);
    let b = Matrix::from_rows(vec![vec![1, 1], vec![2, 2]]);
    assert_eq!(solve(&f, &b, &[1, 1]), Err(Error::Singular));
}

#[test]
fn sigma_norm_small_cases() {
    let e = e_ring(5, 2, 4, 2);
    let y = Matrix::from_rows(vec![vec![e.add(&e.h(), &e.one())]]);
    let nrm = matrix_sigma_norm(&e, &y, 2);
    assert_eq!(e.as_scalar(nrm.get(0, 0)), Some(e.norm(y.get(0, 0)).unwrap()));
    assert_eq!(matrix_sigma_norm(&e, &y, 1), y);
}

#[test]
fn sigma_conjugate_trivial_cases() {
    let e = e_ring(13, 2, 12, 2);
    let y = Matrix::from_rows(vec![vec![e.h(), e.one()], vec![e.zero(), e.h()]]);
    assert_eq!(sigma_conjugate(&e, &identity(&e, 2), &y).unwrap(), y);
    let lam = scalar(&e, 2, &e.scalar(&7));
    assert_eq!(sigma_conjugate(&e, &lam, &y).unwrap(), y);
}

fn elem(e: &ExtRing<Fp>, idx: u64) -> Vec<u32> {
    e.element(idx % e.order().unwrap())
}

fn mat2(e: &ExtRing<Fp>, ids: [u64; 4]) -> Matrix<Vec<u32>> {
    Matrix::from_rows(vec![
        vec![elem(e, ids[0]), elem(e, ids[1])],
        vec![elem(e, ids[2]), elem(e, ids[3])],
    ])
}

proptest! {
    #[test]
    fn det_of_sigma_norm(ids in proptest::array::uniform4(0u64..1_000_000), p13 in any::<bool>()) {
        let e = if p13 { e_ring(13, 2, 12, 2) } else { e_ring(5, 2, 4, 2) };
        let y = mat2(&e, ids);
        let lhs = det_ring(&e, &matrix_sigma_norm(&e, &y, 2)).unwrap();
        let rhs = e.norm(&det_ring(&e, &y).unwrap()).unwrap();
        prop_assert_eq!(lhs, e.scalar(&rhs));
    }

    #[test]
    fn sigma_conjugate_det_law(a in proptest::array::uniform4(0u64..1_000_000), b in proptest::array::uniform4(0u64..1_000_000)) {
        let e = e_ring(13, 2, 12, 2);
        let lam = mat2(&e, a);
        let y = mat2(&e, b);
        let dl = det_ring(&e, &lam).unwrap();
        prop_assume!(e.inv(&dl).is_some());
        let c = sigma_conjugate(&e, &lam, &y).unwrap();
        let expect = e.mul(&e.mul(&e.sigma(&dl), &e.inv(&dl).unwrap()), &det_ring(&e, &y).unwrap());
        prop_assert_eq!(det_ring(&e, &c).unwrap(), expect);
    }

    #[test]
    fn conjugation_telescopes(seed in proptest::collection::vec(0u64..1_000_000, 16), i in 1usize..4, d in 1usize..3) {
        let e = e_ring(7, 3, 2, 3);
        let mk = |off: usize| Matrix::from_fn(d, d, |r, c| elem(&e, seed[(off + r * d + c) % 16]));
        let lam = mk(0);
        prop_assume!(e.inv(&det_ring(&e, &lam).unwrap()).is_some());
        let ys: Vec<_> = (0..i).map(|k| mk(4 + 3 * k)).collect();
        // left side: Lambda^{sigma^i} (Y_{i-1}^{sigma^{i-1}} ... Y_0) Lambda^{-1}
        let mut prod = identity(&e, d);
        for (k, y) in ys.iter().enumerate() {
            prod = mul(&e, &sigma_entries(&e, y, k as i64), &prod).unwrap();
        }
        let li = inv_ring(&e, &lam).unwrap();
        let lhs = mul(&e, &mul(&e, &sigma_entries(&e, &lam, i as i64), &prod).unwrap(), &li).unwrap();
        let mut rhs = identity(&e, d);
        for (k, y) in ys.iter().enumerate() {
            let c = sigma_conjugate(&e, &lam, y).unwrap();
            rhs = mul(&e, &sigma_entries(&e, &c, k as i64), &rhs).unwrap();
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_roundtrip(v in proptest::collection::vec(0u32..7, 9)) {
        let f = Fp::new(7).unwrap();
        let a = Matrix::from_fn(3, 3, |i, j| v[3 * i + j]);
        match inv(&f, &a) {
            Ok(b) => prop_assert_eq!(mul(&f, &a, &b).unwrap(), identity(&f, 3)),
            Err(_) => prop_assert_eq!(det(&f, &a).unwrap(), 0),
        }
        prop_assert_eq!(det(&f, &a).unwrap(), det_ring(&f, &a).unwrap());
    }
}
