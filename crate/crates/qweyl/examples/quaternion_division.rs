//! The quaternion algebra (t, t) over F_3(t) is a division algebra: no norm
//! solution exists, so d = 2, and D is built from the simple module.

use qweyl::ce::{ce_classify, ce_division_basis, division_algebra, CESpec, SearchOptions};
use qweyl::field::{RatFn, Ring, RootedField};

fn main() -> qweyl::error::Result<()> {
    let k = RatFn::new(qweyl::field::Fp::new(3)?)?;
    let spec = CESpec::new(RootedField::new(k.clone(), 2, k.from_int(2))?, k.t(), k.t());
    let st = ce_classify(&spec, &SearchOptions::default())?;
    println!("{}: d={:?} m={:?} verdict={:?}", spec.describe(), st.d, st.m, st.verdict);
    for a in &st.index.as_ref().expect("simple algebra").attempts {
        println!("  d'={} {} examined={} solutions={}", a.d_prime, a.method, a.examined, a.solutions);
    }
    let ring = st.reduced.as_ref().expect("reduced algebra").ext_ring();
    let basis = ce_division_basis(&ring, st.module_matrix().expect("module matrix"))?;
    let d = division_algebra(&ring, &basis)?;
    println!("dim D = {}, simple = {}", d.dim(), d.is_simple()?);
    Ok(())
}
