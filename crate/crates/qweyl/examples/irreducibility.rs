//! The binomial criterion for h^n - s against trial factorization over F_13.

use qweyl::field::{Fp, Ring};
use qweyl::poly;

fn main() -> qweyl::error::Result<()> {
    let f = Fp::new(13)?;
    for n in [2, 3, 4, 6] {
        let irreducible: Vec<u32> = (0..13)
            .filter(|&s| poly::binomial_irreducible(&f, n, &f.from_int(s as i64)))
            .collect();
        let agree = (0..13).all(|s| {
            let s = f.from_int(s);
            let b = poly::binomial(&f, n, &s);
            poly::trial_factor(&f, &b).map(|fac| fac.is_irreducible()).unwrap_or(false)
                == poly::binomial_irreducible(&f, n, &s)
        });
        println!("n={n}: h^n - s irreducible for s in {irreducible:?}; factorization agrees: {agree}");
    }
    Ok(())
}
