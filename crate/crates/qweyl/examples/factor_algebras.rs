//! Finite-dimensional factor algebras of A1 and the graded basis of A1/(r).

use qweyl::field::{Fp, Ring, RootedField};
use qweyl::quantum::{basis_of_a1_mod, factor_algebra, FactorIdeal, ModGenerator};

fn main() -> qweyl::error::Result<()> {
    let root = RootedField::new(Fp::new(7)?, 3, 2)?;
    let f = root.field.clone();
    let ideals = [
        ("(t, r)", FactorIdeal::TR),
        ("(t, r - 1)", FactorIdeal::TG(vec![f.from_int(-1), f.one()])),
        ("maximal r0=1 t0=3", FactorIdeal::Maximal { r0: f.from_int(1), t0: f.from_int(3) }),
    ];
    for (name, ideal) in ideals {
        let fa = factor_algebra(&root, &ideal)?;
        println!("A1/{name}: dim {} centre dim {}", fa.algebra.dim(), fa.algebra.centre().len());
    }
    let reg = basis_of_a1_mod(&root, ModGenerator::R, 8)?;
    println!("{}", serde_json::to_string_pretty(&reg).expect("serializable"));
    Ok(())
}
