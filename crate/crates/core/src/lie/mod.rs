//! Brute-force graded invariants of `g = L / r` for four quadratic relators
//! on four generators, computed inside the free associative algebra.

mod centralizer;
mod series;
mod tensor;

pub use centralizer::has_five_dim_centralizer;
pub use series::{
    enveloping_series, is_mild, poincare_residual, question_d_probe, series_check,
    strongly_free_target, witt_dim,
};
pub use tensor::{quotient_dims, quotient_dims_with_cap, TensorElem, DEFAULT_DEGREE_CAP};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field_linalg::{orthogonal_complement, FieldCtx, Matrix, Subspace};

/// Number of generators.
pub const GENERATORS: usize = 4;

/// Four degree-2 relators as rows of a 4x6 matrix over `x12 < x13 < x14 < x23 < x24 < x34`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticPresentation {
    ctx: FieldCtx,
    rel: Matrix,
}

impl QuadraticPresentation {
    /// Accepts any 4x6 matrix; rank is checked by the operations that need it.
    pub fn new(ctx: FieldCtx, rel: Matrix) -> Result<Self> {
        if rel.rows() != 4 || rel.cols() != 6 {
            return Err(Error::BadDimension {
                expected: 24,
                found: rel.rows() * rel.cols(),
            });
        }
        Ok(Self { ctx, rel })
    }

    pub fn from_int_rows(ctx: FieldCtx, rows: &[[i64; 6]; 4]) -> Self {
        let rel = Matrix::from_rows(&ctx, rows);
        Self { ctx, rel }
    }

    /// The presentation whose relator space is the complement of a plane.
    pub fn from_complement(ctx: FieldCtx, plane: &Subspace) -> Result<Self> {
        let rel_space = orthogonal_complement(&ctx, plane);
        if rel_space.dim() != 4 {
            return Err(Error::BadDimension {
                expected: 4,
                found: rel_space.dim(),
            });
        }
        Ok(Self {
            ctx,
            rel: rel_space.basis().clone(),
        })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn relators(&self) -> &Matrix {
        &self.rel
    }

    pub fn rank(&self) -> usize {
        self.rel.rank(&self.ctx)
    }

    pub fn relator_space(&self) -> Subspace {
        Subspace::row_space(&self.ctx, &self.rel)
    }

    /// Orthogonal complement of the relator space.
    pub fn complement(&self) -> Subspace {
        orthogonal_complement(&self.ctx, &self.relator_space())
    }

    pub fn require_full_rank(&self) -> Result<()> {
        match self.rank() {
            4 => Ok(()),
            rank => Err(Error::RankDeficient { rank }),
        }
    }
}

/// `a_n = dim g_n` for `n = 1..=c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct GradedDims {
    a: Vec<usize>,
}

impl GradedDims {
    pub fn new(a: Vec<usize>) -> Self {
        Self { a }
    }

    /// Highest degree computed.
    pub fn max_degree(&self) -> usize {
        self.a.len()
    }

    /// `a_n`, 1-based.
    pub fn get(&self, n: usize) -> Option<usize> {
        n.checked_sub(1).and_then(|i| self.a.get(i)).copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.a
    }
}
