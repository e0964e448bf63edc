//! The norm image of E(s) = F_7[h]/(h^3 - s) for a few s.

use qweyl::ext::ExtRing;
use qweyl::field::{Fp, Ring, RootedField};

fn main() -> qweyl::error::Result<()> {
    let f = Fp::new(7)?;
    let root = RootedField::new(f.clone(), 3, 2)?;
    for s in [1, 2, 3] {
        let e = ExtRing::new(root.clone(), f.from_int(s));
        let image = e.norm_image(1 << 20)?;
        println!("s={s}: field={} norm image {:?}", e.is_field(), image);
    }
    Ok(())
}
