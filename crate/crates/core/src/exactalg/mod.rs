//! Exact field arithmetic and dense matrix kernels.

mod field;
mod matrix;

pub use field::{is_prime, Field, FieldSpec, PrimeField, Rationals};
pub use matrix::{Echelon, Matrix};
