//! Classify the cyclic algebra (E(s), sigma, a) over F_13 with n = 4 and print the
//! matrix-unit table that realizes it as M_4(F_13).

use qweyl::ce::{ce_classify, format_element, CESpec, SearchOptions};
use qweyl::field::{Fp, Ring, RootedField};

fn main() -> qweyl::error::Result<()> {
    let f = Fp::new(13)?;
    let root = RootedField::new(f.clone(), 4, 5)?;
    let spec = CESpec::new(root, f.from_int(2), f.from_int(7));
    let st = ce_classify(&spec, &SearchOptions::default())?;
    println!("{}: simple={} d={:?} m={:?}", spec.describe(), st.simple, st.d, st.m);
    if let Some(units) = &st.units {
        println!("matrix units ({:?}):", units.check);
        for (j, e) in units.table[0].iter().enumerate() {
            println!("  e_1{} = {}", j + 1, format_element(&spec, e));
        }
    }
    Ok(())
}
