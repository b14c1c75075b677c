//! The exterior-square representation `psi: GL_4 -> GL_6` and its right
//! action on subspaces of the degree-2 bracket space.
//!
//! Coordinates on the bracket space are ordered `x12 < x13 < x14 < x23 < x24 < x34`.
//! A row vector `v` is identified with the alternating 4x4 matrix `X` having
//! `X[i][j] = v_ij` for `i < j`; right multiplication by `psi(A)` is then the
//! congruence `X -> A^T X A`.

mod word;

pub use word::{GenToken, GroupWord};

use crate::error::{Error, Result};
use crate::field_linalg::{FieldCtx, FieldElem, Matrix, Subspace};

/// The six index pairs in basis order, 1-based.
pub const PAIRS: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// Position of `x_ij` (`i < j`, 1-based) in the basis.
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    PAIRS
        .iter()
        .position(|&pr| pr == (i, j))
        .expect("pair indices lie in 1..=4")
}

/// Coefficient of `[x_i, x_j]` in `v`, with the antisymmetric sign when `i > j`.
pub fn bracket_coeff(ctx: &FieldCtx, v: &[FieldElem], i: usize, j: usize) -> FieldElem {
    match i.cmp(&j) {
        std::cmp::Ordering::Less => v[pair_index(i, j)],
        std::cmp::Ordering::Greater => ctx.neg(v[pair_index(j, i)]),
        std::cmp::Ordering::Equal => 0,
    }
}

/// `psi(A)` with entry `(rs, ij) = a_ri a_sj - a_si a_rj`.
pub fn psi(ctx: &FieldCtx, a: &Matrix) -> Result<Matrix> {
    if a.rows() != 4 || a.cols() != 4 {
        return Err(Error::BadDimension {
            expected: 4,
            found: a.rows().max(a.cols()),
        });
    }
    if a.det(ctx) == 0 {
        return Err(Error::SingularMatrix);
    }
    Ok(psi_unchecked(ctx, a))
}

pub(crate) fn psi_unchecked(ctx: &FieldCtx, a: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(6, 6);
    for (col, &(i, j)) in PAIRS.iter().enumerate() {
        for (row, &(r, s)) in PAIRS.iter().enumerate() {
            let (i, j, r, s) = (i - 1, j - 1, r - 1, s - 1);
            let v = ctx.sub(
                ctx.mul(a.get(r, i), a.get(s, j)),
                ctx.mul(a.get(s, i), a.get(r, j)),
            );
            out.set(row, col, v);
        }
    }
    out
}

/// The elementary 4x4 matrix of a generator token.
pub fn token_gl4(t: &GenToken) -> Matrix {
    let mut m = Matrix::identity(4);
    match *t {
        GenToken::AddCol { i, j, a } => m.set(i as usize - 1, j as usize - 1, a),
        GenToken::SwapCol { i, j } => {
            let (i, j) = (i as usize - 1, j as usize - 1);
            m.set(i, i, 0);
            m.set(j, j, 0);
            m.set(i, j, 1);
            m.set(j, i, 1);
        }
        GenToken::ScaleCol { i, a } => m.set(i as usize - 1, i as usize - 1, a),
    }
    m
}

pub fn token_gl6(ctx: &FieldCtx, t: &GenToken) -> Matrix {
    psi_unchecked(ctx, &token_gl4(t))
}

/// Product of the token matrices in `GL_4`, left to right.
pub fn word_gl4(ctx: &FieldCtx, w: &GroupWord) -> Matrix {
    w.tokens()
        .iter()
        .fold(Matrix::identity(4), |acc, t| acc.mul(ctx, &token_gl4(t)))
}

/// Product of the `psi`-images of the tokens, left to right.
pub fn word_gl6(ctx: &FieldCtx, w: &GroupWord) -> Matrix {
    w.tokens().iter().fold(Matrix::identity(6), |acc, t| {
        acc.mul(ctx, &token_gl6(ctx, t))
    })
}

/// `u . w`: right multiplication of every row by `word_gl6(w)`.
pub fn act(ctx: &FieldCtx, u: &Subspace, w: &GroupWord) -> Subspace {
    if w.is_empty() {
        return u.clone();
    }
    u.mul_right(ctx, &word_gl6(ctx, w))
}

/// The induced action on complements: `u_perp . w = u_perp (W^-1)^T`.
pub fn dual_act(ctx: &FieldCtx, u_perp: &Subspace, w: &GroupWord) -> Subspace {
    if w.is_empty() {
        return u_perp.clone();
    }
    let inv = word_gl6(ctx, w)
        .inverse(ctx)
        .expect("psi-images of generators are invertible");
    u_perp.mul_right(ctx, &inv.transpose())
}

/// The Pluecker quadratic form `v1 v6 - v2 v5 + v3 v4`, the Pfaffian of the
/// alternating matrix of `v`. It vanishes exactly on decomposable brackets.
pub fn pluecker_form(ctx: &FieldCtx, v: &[FieldElem]) -> FieldElem {
    assert_eq!(v.len(), 6);
    let t = ctx.sub(ctx.mul(v[0], v[5]), ctx.mul(v[1], v[4]));
    ctx.add(t, ctx.mul(v[2], v[3]))
}

/// Polarization `Q(u + v) - Q(u) - Q(v)`.
pub fn pluecker_polar(ctx: &FieldCtx, u: &[FieldElem], v: &[FieldElem]) -> FieldElem {
    let terms = [
        (0, 5, false),
        (5, 0, false),
        (1, 4, true),
        (4, 1, true),
        (2, 3, false),
        (3, 2, false),
    ];
    terms.iter().fold(0, |acc, &(a, b, negate)| {
        let t = ctx.mul(u[a], v[b]);
        if negate {
            ctx.sub(acc, t)
        } else {
            ctx.add(acc, t)
        }
    })
}
