//! Support τ-tilting pairs over bound quiver algebras: exchange graphs,
//! endomorphism algebras and derived dimension bounds.

pub mod algebra;
pub mod cli;
pub mod endo;
pub mod error;
pub mod field;
pub mod matrix;
mod poly;
pub mod rep;
pub mod report;
pub mod rng;
pub mod tau;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
