//! Constructive normal forms for lines and planes in the bracket space.
//!
//! Every reduction returns a witness word `w` with `act(input, w) == canonical`,
//! checked before the result is handed out.

mod line;
mod plane;

pub use line::reduce_line;
pub use plane::reduce_plane;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exterior::{act, GroupWord};
use crate::field_linalg::{FieldCtx, FieldElem, Subspace};

/// Orbit of a line: spanned by a decomposable bracket (`Q = 0`) or not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LineLabel {
    /// Representative `(0,0,0,0,0,1)`.
    Decomposable,
    /// Representative `(0,0,1,1,0,0)`.
    Generic,
}

/// One of the four plane orbits, numbered as in the classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrbitLabel {
    O1,
    O2,
    O3,
    /// Carries the non-square parameter used in the representative.
    O4 {
        g: FieldElem,
    },
}

impl OrbitLabel {
    pub fn number(&self) -> u8 {
        match self {
            OrbitLabel::O1 => 1,
            OrbitLabel::O2 => 2,
            OrbitLabel::O3 => 3,
            OrbitLabel::O4 { .. } => 4,
        }
    }

    pub fn from_number(ctx: &FieldCtx, n: u8) -> Option<Self> {
        match n {
            1 => Some(OrbitLabel::O1),
            2 => Some(OrbitLabel::O2),
            3 => Some(OrbitLabel::O3),
            4 => Some(OrbitLabel::O4 {
                g: ctx.smallest_generator(),
            }),
            _ => None,
        }
    }

    /// Orbits 1 and 4 are the strongly free ones.
    pub fn is_mild(&self) -> bool {
        matches!(self, OrbitLabel::O1 | OrbitLabel::O4 { .. })
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl Serialize for OrbitLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.number())
    }
}

/// Canonical line representatives.
pub fn canonical_line(ctx: &FieldCtx, label: LineLabel) -> Subspace {
    match label {
        LineLabel::Decomposable => Subspace::from_int_rows(ctx, &[[0, 0, 0, 0, 0, 1]]),
        LineLabel::Generic => Subspace::from_int_rows(ctx, &[[0, 0, 1, 1, 0, 0]]),
    }
}

/// Canonical plane representatives (1)-(4).
pub fn canonical_plane(ctx: &FieldCtx, label: OrbitLabel) -> Subspace {
    match label {
        OrbitLabel::O1 => Subspace::from_int_rows(ctx, &[[0, 0, 0, 0, 0, 1], [1, 0, 0, 0, 0, 0]]),
        OrbitLabel::O2 => Subspace::from_int_rows(ctx, &[[0, 0, 0, 0, 0, 1], [0, 0, 1, 0, 0, 0]]),
        OrbitLabel::O3 => Subspace::from_int_rows(ctx, &[[0, 0, 0, 0, 0, 1], [0, 0, 1, 1, 0, 0]]),
        OrbitLabel::O4 { g } => {
            Subspace::from_int_rows(ctx, &[[0, 0, 1, 1, 0, 0], [0, 1, 0, 0, g as i64, 0]])
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult<L> {
    pub label: L,
    pub witness: GroupWord,
    pub canonical: Subspace,
}

impl<L> ReductionResult<L> {
    /// Builds a result after checking that the witness carries `input` onto `canonical`.
    pub(crate) fn checked(
        ctx: &FieldCtx,
        input: &Subspace,
        label: L,
        witness: GroupWord,
        canonical: Subspace,
    ) -> Result<Self> {
        let r = Self {
            label,
            witness,
            canonical,
        };
        if verify_witness(ctx, input, &r) {
            Ok(r)
        } else {
            Err(Error::InternalInvariantViolation(format!(
                "witness {} does not carry {:?} to {:?}",
                r.witness,
                input.basis(),
                r.canonical.basis()
            )))
        }
    }
}

pub fn verify_witness<L>(ctx: &FieldCtx, u: &Subspace, r: &ReductionResult<L>) -> bool {
    act(ctx, u, &r.witness) == r.canonical
}

/// A row vector together with the word applied to it so far.
#[derive(Debug, Clone)]
pub(crate) struct Tracked {
    pub rows: Vec<Vec<FieldElem>>,
    pub word: GroupWord,
}

impl Tracked {
    pub fn new(rows: Vec<Vec<FieldElem>>) -> Self {
        Self {
            rows,
            word: GroupWord::new(),
        }
    }

    pub fn apply(&mut self, ctx: &FieldCtx, t: crate::exterior::GenToken) {
        let m = crate::exterior::token_gl6(ctx, &t);
        for r in self.rows.iter_mut() {
            *r = m.vec_mul(ctx, r);
        }
        self.word.push(t);
    }

    pub fn apply_word(&mut self, ctx: &FieldCtx, w: &GroupWord) {
        for &t in w.tokens() {
            self.apply(ctx, t);
        }
    }

    pub fn scale_row(&mut self, ctx: &FieldCtx, r: usize, f: FieldElem) {
        for x in self.rows[r].iter_mut() {
            *x = ctx.mul(*x, f);
        }
    }

    /// `rows[dst] -= f * rows[src]`
    pub fn sub_row(&mut self, ctx: &FieldCtx, dst: usize, src: usize, f: FieldElem) {
        if f == 0 {
            return;
        }
        let src_row = self.rows[src].clone();
        for (x, s) in self.rows[dst].iter_mut().zip(src_row) {
            *x = ctx.sub(*x, ctx.mul(f, s));
        }
    }
}
