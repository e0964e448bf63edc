//! Classify the primes over one centre point of A1, then enumerate every maximal
//! point of Spec(B) over F_5 up to residue degree 2.

use qweyl::ce::SearchOptions;
use qweyl::field::{Fp, Ring, RootedField};
use qweyl::quantum::Tag;
use qweyl::spectrum::{classify_prime, enumerate_spectrum, CentrePrime};

fn main() -> qweyl::error::Result<()> {
    let opts = SearchOptions::default();
    let root = RootedField::new(Fp::new(7)?, 3, 2)?;
    let f = root.field.clone();
    let point = CentrePrime::point(Tag::Weyl, root, f.from_int(1), f.from_int(3), 1);
    let rep = classify_prime(&point, &opts)?;
    println!("{} in stratum {}", rep.centre_prime, rep.stratum);
    for p in &rep.primes {
        println!(
            "  {}: dim {:?}, completely prime {:?}, maximal {}",
            p.ideal, p.dim_over_base, p.completely_prime, p.maximal
        );
    }

    let root = RootedField::new(Fp::new(5)?, 2, 4)?;
    let atlas = enumerate_spectrum(Tag::Torus, &root, 2, 1 << 20, &opts)?;
    println!("Spec(B) over F_5: points {:?}", atlas.points_by_degree);
    println!("primes by stratum {:?}", atlas.prime_counts);
    println!("checks passed: {}", atlas.checks.passed());
    print!("{}", atlas.dot());
    Ok(())
}
