//! Automorphisms in canonical form: composition, inverses, recognition from
//! generator images and the torus matrix condition.

use qweyl::aut::{self, AutoRep, Automorphism};
use qweyl::field::{Fp, RootedField};
use qweyl::quantum::{Gwa, Tag};

fn main() -> qweyl::error::Result<()> {
    let root = RootedField::new(Fp::new(13)?, 4, 5)?;
    let ca = Gwa::new(Tag::LaurentX, root.clone())?;
    let xi = Automorphism::new(&ca, AutoRep::Laurent { lambda: 1, i: 1, mu: 1, invert: false })?;
    let t = Automorphism::new(&ca, AutoRep::Laurent { lambda: 1, i: 0, mu: 2, invert: false })?;
    let c = t.compose(&xi)?.compose(&t.inverse()?)?;
    println!("{} o {} o {}^-1 = {}", t.describe(), xi.describe(), t.describe(), c.describe());

    let [h, x] = aut::conjugation(&ca, &ca.x())?;
    let inner = aut::recognize(&ca, &h, &x).expect("conjugation is an automorphism");
    println!("conjugation by x: {} (inner: {})", inner.describe(), inner.is_inner());

    let b = Gwa::new(Tag::Torus, root)?;
    for m in [[[1, 1], [0, 1]], [[2, 1], [1, 1]], [[3, 0], [0, 1]]] {
        let check = aut::torus_check(&b, m, &1, &1)?;
        println!("A = {m:?}: det {} automorphism {}", check.det, check.automorphism);
    }
    Ok(())
}
