//! Prime-field arithmetic and dense linear algebra over `F_p`.

mod field;
mod matrix;
mod subspace;

pub(crate) use field::{is_prime_u64, pow_mod, prime_factors};
pub use field::{FieldCtx, FieldElem, SquareClass};
pub use matrix::{rref, Matrix};
pub use subspace::{orthogonal_complement, Subspace};
