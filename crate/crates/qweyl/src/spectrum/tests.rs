use super::*;
use crate::field::{Fp, Fq};

fn root(p: u32, n: usize, q: u32) -> RootedField<Fp> {
    RootedField::new(Fp::new(p).unwrap(), n, q).unwrap()
}

fn opts() -> SearchOptions {
    SearchOptions::default()
}

#[test]
fn weyl_generic_point_splits() {
    let r = root(5, 2, 4);
    assert_eq!(weyl_s0(&r, &2, &1).unwrap(), 2);
    let rep = classify_prime(&CentrePrime::point(Tag::Weyl, r, 2, 1, 1), &opts()).unwrap();
    assert_eq!(rep.stratum, "M''");
    let pc = &rep.primes[0];
    let Quotient::CEAlgebra { structure, .. } = &pc.quotient else { panic!("{pc:?}") };
    assert_eq!((structure.index, structure.matrix_size), (Some(1), Some(2)));
    assert_eq!(pc.module_dim_over_base, Some(2));
    assert_eq!(pc.endomorphism.as_deref(), Some("F_5"));
    assert_eq!(pc.completely_prime, CompletelyPrime::No);
    assert!(pc.primitive && pc.maximal);
}

#[test]
fn weyl_origin_and_axes() {
    let r = root(7, 3, 2);
    let rep = classify_prime(&CentrePrime::point(Tag::Weyl, r.clone(), 0, 0, 1), &opts()).unwrap();
    assert_eq!(rep.stratum, "(t,r)");
    assert_eq!(rep.primes[0].dim_over_base, Some(9));
    assert!(rep.primes[0].simple_module.as_deref().unwrap().starts_with("L = A1/A1(t, y)"));
    let rep = classify_prime(&CentrePrime::point(Tag::Weyl, r.clone(), 3, 0, 1), &opts()).unwrap();
    assert_eq!(rep.stratum, "T");
    assert_eq!(rep.primes[0].ideal, "(t, 4+r)");
    let rep = classify_prime(&CentrePrime::point(Tag::Weyl, r, 0, 5, 1), &opts()).unwrap();
    assert_eq!(rep.stratum, "R");
}

#[test]
fn weyl_h_fiber() {
    // over F_5 with q = 4 the constant (q-1)^{-2} is 4, so s0 = 0 iff r0 t0 = 4
    let r = root(5, 2, 4);
    let rep = classify_prime(&CentrePrime::point(Tag::Weyl, r.clone(), 1, 4, 1), &opts()).unwrap();
    assert_eq!(rep.stratum, "H''");
    assert_eq!(rep.primes.len(), 2);
    assert!(rep.primes.iter().all(|p| p.completely_prime == CompletelyPrime::Yes));
    let rep = classify_prime(&CentrePrime::point(Tag::Weyl, r, 2, 2, 1), &opts()).unwrap();
    assert_eq!(rep.stratum, "H''");
    assert_eq!(rep.primes.len(), 1);
    assert_eq!(rep.primes[0].ideal, "(h, 3+x^2)");
}

#[test]
fn plane_h_family() {
    let r = root(5, 2, 4);
    let rep = classify_prime(&CentrePrime::point(Tag::Plane, r.clone(), 0, 2, 1), &opts()).unwrap();
    assert_eq!(rep.stratum, "H");
    assert_eq!(rep.primes.len(), 1);
    assert_eq!(rep.primes[0].ideal, "(h, 3+x^2)");
    assert_eq!(
        rep.primes[0].quotient,
        Quotient::Field { field: "F_5[x]/(3+x^2)".into(), degree_over_base: 2 }
    );
    let rep = classify_prime(&CentrePrime::point(Tag::Plane, r, 0, 0, 1), &opts()).unwrap();
    assert_eq!(rep.stratum, "(x,h)");
}

#[test]
fn unit_constraints() {
    let r = root(5, 2, 4);
    let e = classify_prime(&CentrePrime::point(Tag::LaurentX, r.clone(), 1, 0, 1), &opts()).unwrap_err();
    assert_eq!(e.kind(), "InvalidCoordinates");
    let e = classify_prime(&CentrePrime::point(Tag::Torus, r.clone(), 0, 1, 1), &opts()).unwrap_err();
    assert_eq!(e.kind(), "InvalidCoordinates");
    assert!(classify_prime(&CentrePrime::height1(Tag::Torus, r, Height1::Named("t".into())), &opts()).is_err());
}

#[test]
fn height_one_families() {
    let r = root(5, 2, 4);
    let rep = classify_prime(&CentrePrime::height1(Tag::Weyl, r.clone(), Height1::Named("r".into())), &opts()).unwrap();
    assert_eq!(rep.stratum, "(r)");
    assert_eq!(
        rep.primes[0].quotient,
        Quotient::DomainNonArtinian { ring: "A1/(r)".into(), quotient_ring: "M_n(F_5(t))".into() }
    );
    let g = Height1::Univariate { var: "t".into(), poly: vec![3, 0, 1] };
    let rep = classify_prime(&CentrePrime::height1(Tag::Weyl, r.clone(), g), &opts()).unwrap();
    assert_eq!(rep.stratum, "N''");
    assert_eq!(rep.irreducibility.as_deref(), Some("verified"));
    assert_eq!(rep.primes[0].completely_prime, CompletelyPrime::Unknown);
    let g = Height1::Univariate { var: "t".into(), poly: vec![1, 0, 1] };
    assert!(classify_prime(&CentrePrime::height1(Tag::Weyl, r.clone(), g), &opts()).is_err());
    let g = Height1::Univariate { var: "s".into(), poly: vec![0, 3] };
    let rep = classify_prime(&CentrePrime::height1(Tag::Plane, r.clone(), g), &opts()).unwrap();
    assert_eq!(rep.stratum, "(h)");
    let g = Height1::Asserted("r*t - 2".into());
    let rep = classify_prime(&CentrePrime::height1(Tag::Weyl, r, g), &opts()).unwrap();
    assert_eq!(rep.irreducibility.as_deref(), Some("unverified"));
}

#[test]
fn degree_two_point() {
    let fq = Fq::with_degree(3, 2).unwrap();
    let rq = RootedField::new(fq.clone(), 2, fq.embed(2)).unwrap();
    let z = fq.generator();
    let rep = classify_prime(&CentrePrime::point(Tag::Weyl, rq.clone(), z.clone(), fq.one(), 2), &opts()).unwrap();
    assert_eq!(rep.point.as_ref().unwrap().ext_degree, 2);
    assert_eq!(rep.primes[0].dim_over_base, Some(8));
    // a rational point does not generate F_9
    let e = classify_prime(&CentrePrime::point(Tag::Weyl, rq, fq.one(), fq.one(), 2), &opts()).unwrap_err();
    assert_eq!(e.kind(), "InvalidCoordinates");
}

#[test]
fn atlas_weyl_f3() {
    let a = enumerate_spectrum(Tag::Weyl, &root(3, 2, 2), 1, 1 << 20, &opts()).unwrap();
    assert_eq!(a.points_by_degree[&1], 9);
    assert_eq!(a.point_counts["(t,r)"], 1);
    assert_eq!(a.point_counts["T"], 2);
    assert_eq!(a.point_counts["R"], 2);
    // s0 = 1 - r0 t0 vanishes at (1,1) and (2,2)
    assert_eq!(a.point_counts["H''"], 2);
    assert_eq!(a.point_counts["M''"], 2);
    assert!(a.checks.passed(), "{:?}", a.checks);
    let a = enumerate_spectrum(Tag::Weyl, &root(3, 2, 2), 2, 1 << 20, &opts()).unwrap();
    // (81 - 9) / 2 orbits of degree two
    assert_eq!(a.points_by_degree[&2], 36);
    assert!(a.checks.passed(), "{:?}", a.checks);
    assert!(a.dot().contains("\"(t)\" -- \"T\";"));
}

#[test]
fn atlas_other_algebras() {
    for tag in [Tag::Plane, Tag::LaurentX, Tag::Torus] {
        let a = enumerate_spectrum(tag, &root(5, 2, 4), 2, 1 << 20, &opts()).unwrap();
        assert!(a.checks.passed(), "{tag}: {:?}", a.checks);
    }
    let a = enumerate_spectrum(Tag::Torus, &root(5, 2, 4), 1, 1 << 20, &opts()).unwrap();
    assert_eq!(a.point_counts.len(), 1);
    assert_eq!(a.point_counts["Br'"], 16);
    assert!(a.solid_edges.is_empty());
    assert!(matches!(enumerate_spectrum(Tag::Weyl, &root(13, 2, 12), 3, 1 << 20, &opts()), Err(Error::TooLarge(_))));
}
