//! Matrix units of the localizations of A1 at x and at y over F_13.

use qweyl::field::{Fp, RootedField};
use qweyl::quantum::{localized_matrix_units, verify_localized_units, UnitForm};

fn main() -> qweyl::error::Result<()> {
    let root = RootedField::new(Fp::new(13)?, 3, 3)?;
    for form in [UnitForm::X, UnitForm::Y] {
        let (g, units) = localized_matrix_units(&root, form)?;
        println!("{form:?}-form, {} units, relations hold: {}", units.len() * units.len(), verify_localized_units(&g, &units));
        println!("  E_11 = {}", g.format_elem(&units[0][0]));
    }
    Ok(())
}
