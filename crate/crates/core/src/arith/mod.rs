//! Exact field arithmetic and canonical linear algebra.

mod field;
mod matrix;
mod subspace;
pub mod vector;

pub use field::{FieldSpec, Scalar};
pub use matrix::{Matrix, Rref};
pub use subspace::Subspace;
