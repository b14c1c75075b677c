//! Classification of quadratic presentations of 4-generator pro-p groups.
//!
//! A presentation is a 4x6 matrix of relator coefficients in the bracket basis
//! `x12 < x13 < x14 < x23 < x24 < x34`. Its orbit under the exterior-square action
//! of `GL_4(F_p)` is one of four types, two of which are mild.

pub mod classify;
pub mod cli;
pub mod error;
pub mod exterior;
pub mod field_linalg;
pub mod koch;
pub mod lie;
pub mod reduction;

pub use error::{Error, Result};
