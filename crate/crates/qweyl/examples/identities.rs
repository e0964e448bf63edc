//! Normal-form verification of the commutation identities and the catalogue of
//! isomorphisms between the algebras.

use qweyl::field::{Fp, RootedField};
use qweyl::quantum::{verify_identities, Tag};

fn main() -> qweyl::error::Result<()> {
    let root = RootedField::new(Fp::new(7)?, 3, 2)?;
    for tag in Tag::ALL {
        let rep = verify_identities(tag, &root)?;
        let passed = rep.checks.iter().filter(|c| c.passed).count();
        println!("{tag}: {passed}/{} identities hold", rep.checks.len());
        for c in rep.checks.iter().filter(|c| !c.passed) {
            println!("  fails as displayed: {} (residue {})", c.name, c.residue.as_deref().unwrap_or("-"));
        }
    }
    for e in qweyl::quantum::isomorphism_catalogue(&root)? {
        println!("{}: {} ({})", e.name, if e.passed { "ok" } else { "fails" }, e.residues.join(", "));
    }
    Ok(())
}
