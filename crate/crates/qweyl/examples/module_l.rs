//! The n-dimensional module L of A1 and the factor algebra A1/(t, r) = M_n(K).

use qweyl::field::{Fp, RootedField};
use qweyl::matrix;
use qweyl::quantum::{self, factor_algebra, FactorIdeal};

fn main() -> qweyl::error::Result<()> {
    let root = RootedField::new(Fp::new(13)?, 4, 5)?;
    let l = quantum::module_l(&root)?;
    println!("h on L: {:?}", l.h.to_rows());
    println!("x on L: {:?}", l.x.to_rows());
    println!("y on L: {:?}", l.y.to_rows());
    println!("{:?}", l.checks);
    assert!(matrix::is_zero(&root.field, &matrix::pow(&root.field, &l.x, root.n as u64)));
    let dim = quantum::generated_algebra_dim(&root.field, &[l.x.clone(), l.y.clone()]);
    println!("x and y generate an algebra of dimension {dim}");
    let fa = factor_algebra(&root, &FactorIdeal::TR)?;
    println!("A1/(t, r): dim {} simple {}", fa.algebra.dim(), fa.algebra.is_simple()?);
    Ok(())
}
