//! Split a cyclic algebra of degree 12 into factors of prime-power degree and
//! check that they commute and multiply back to the whole algebra.

use qweyl::ce::{ce_tensor_factor, verify_tensor_factors, CESpec};
use qweyl::field::{Fp, Ring, RootedField};

fn main() -> qweyl::error::Result<()> {
    let f = Fp::new(13)?;
    let root = RootedField::new(f.clone(), 12, 2)?;
    let spec = CESpec::new(root, f.from_int(3), f.from_int(5));
    let factors = ce_tensor_factor(&spec)?;
    for t in &factors {
        println!("p={} degree={} cofactor={}: {}", t.prime, t.degree, t.cofactor, t.spec.describe());
    }
    let check = verify_tensor_factors(&spec, &factors)?;
    println!("factor dimensions {:?}, product {}", check.factor_dims, check.product);
    Ok(())
}
