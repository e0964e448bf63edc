pub mod algebra;
pub mod ce;
pub mod cli;
pub mod config;
pub mod error;
pub mod field;
pub mod ext;
pub mod matrix;
pub mod poly;
pub mod quantum;
pub mod aut;
pub mod spectrum;

pub use error::{Error, Result};
