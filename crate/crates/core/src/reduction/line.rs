use super::{canonical_line, LineLabel, ReductionResult, Tracked};
use crate::error::{Error, Result};
use crate::exterior::{pluecker_form, GenToken, GroupWord};
use crate::field_linalg::{FieldCtx, FieldElem, Subspace};

// Coordinates of the bracket basis.
const X12: usize = 0;
const X13: usize = 1;
const X14: usize = 2;
const X23: usize = 3;
const X24: usize = 4;
const X34: usize = 5;

/// Reduces the line spanned by `v` to one of the two canonical lines.
pub fn reduce_line(ctx: &FieldCtx, v: &[FieldElem]) -> Result<ReductionResult<LineLabel>> {
    if v.len() != 6 {
        return Err(Error::BadDimension {
            expected: 6,
            found: v.len(),
        });
    }
    if v.iter().all(|&x| x == 0) {
        return Err(Error::ZeroVector);
    }
    let (witness, label) = line_word(ctx, v);
    let input = Subspace::span(ctx, 6, &[v]);
    ReductionResult::checked(ctx, &input, label, witness, canonical_line(ctx, label))
}

/// Word carrying `v` to a multiple of its canonical line representative.
///
/// Applies every token to `tracked`, so callers reducing a plane see the
/// effect on their other basis row as well. `row` selects the vector.
pub(crate) fn normalize_line(ctx: &FieldCtx, tracked: &mut Tracked, row: usize) -> LineLabel {
    clear_leading_pair(ctx, tracked, row);
    let v = &tracked.rows[row];
    debug_assert!(v[X12] == 0 && v[X13] == 0);
    if v[X14] == 0 {
        // x1 lies in the radical; the form lives on span{x2, x3, x4}.
        clear_to_x34_without_x1(ctx, tracked, row);
        LineLabel::Decomposable
    } else if v[X23] == 0 {
        // Every surviving term involves x4.
        clear_to_x34_through_x4(ctx, tracked, row);
        LineLabel::Decomposable
    } else {
        reduce_generic(ctx, tracked, row);
        LineLabel::Generic
    }
}

fn line_word(ctx: &FieldCtx, v: &[FieldElem]) -> (GroupWord, LineLabel) {
    let mut t = Tracked::new(vec![v.to_vec()]);
    let label = normalize_line(ctx, &mut t, 0);
    debug_assert_eq!(label == LineLabel::Decomposable, pluecker_form(ctx, v) == 0);
    (t.word, label)
}

/// First stage: reach `[0 0 * * * *]`, by cases on how many of the first
/// three coordinates vanish.
fn clear_leading_pair(ctx: &FieldCtx, t: &mut Tracked, row: usize) {
    let v = &t.rows[row];
    let zeros = [v[X12], v[X13], v[X14]].iter().filter(|&&x| x == 0).count();
    match zeros {
        0 => {
            // M32^a: x12 += a x13, so a = -x12/x13.
            let a = ctx.neg(ctx.div(v[X12], v[X13]));
            t.apply(ctx, GenToken::add(3, 2, a));
            // M43^b: x13 += b x14, so b = -x13/x14.
            let v = &t.rows[row];
            let b = ctx.neg(ctx.div(v[X13], v[X14]));
            t.apply(ctx, GenToken::add(4, 3, b));
        }
        1 => {
            if v[X13] == 0 {
                t.apply(ctx, GenToken::swap(2, 3));
            } else if v[X14] == 0 {
                t.apply(ctx, GenToken::swap(3, 4));
                t.apply(ctx, GenToken::swap(2, 3));
            }
            // Now x12 = 0 with x13, x14 nonzero; M43^a: x13 += a x14.
            let v = &t.rows[row];
            let a = ctx.neg(ctx.div(v[X13], v[X14]));
            t.apply(ctx, GenToken::add(4, 3, a));
        }
        _ => {
            // At most one nonzero entry; push it into the x14 slot.
            if v[X12] != 0 {
                t.apply(ctx, GenToken::swap(2, 3));
                t.apply(ctx, GenToken::swap(3, 4));
            } else if v[X13] != 0 {
                t.apply(ctx, GenToken::swap(3, 4));
            }
        }
    }
}

/// `[0 0 0 * * *]` to a multiple of `e6` using `M32, M23, M43, M34`.
fn clear_to_x34_without_x1(ctx: &FieldCtx, t: &mut Tracked, row: usize) {
    if t.rows[row][X34] == 0 {
        if t.rows[row][X24] == 0 {
            // M34^1: x24 += x23
            t.apply(ctx, GenToken::add(3, 4, 1));
        }
        // M23^1: x34 += x24
        t.apply(ctx, GenToken::add(2, 3, 1));
    }
    if t.rows[row][X23] != 0 {
        if t.rows[row][X24] == 0 {
            t.apply(ctx, GenToken::add(3, 4, 1));
        }
        // M43^c: x23 += c x24
        let v = &t.rows[row];
        let c = ctx.neg(ctx.div(v[X23], v[X24]));
        t.apply(ctx, GenToken::add(4, 3, c));
    }
    if t.rows[row][X24] != 0 {
        // M32^a: x24 += a x34
        let v = &t.rows[row];
        let a = ctx.neg(ctx.div(v[X24], v[X34]));
        t.apply(ctx, GenToken::add(3, 2, a));
    }
}

/// `[0 0 * 0 * *]` to a multiple of `e6` using `M32, M23, M21, M12`.
///
/// On such vectors `M_ij^a` with `i, j < 4` acts as `x_j4 += a x_i4`.
fn clear_to_x34_through_x4(ctx: &FieldCtx, t: &mut Tracked, row: usize) {
    if t.rows[row][X34] == 0 {
        if t.rows[row][X24] == 0 {
            // M12^1: x24 += x14
            t.apply(ctx, GenToken::add(1, 2, 1));
        }
        // M23^1: x34 += x24
        t.apply(ctx, GenToken::add(2, 3, 1));
    }
    if t.rows[row][X14] != 0 {
        if t.rows[row][X24] == 0 {
            // M32^1: x24 += x34
            t.apply(ctx, GenToken::add(3, 2, 1));
        }
        // M21^a: x14 += a x24
        let v = &t.rows[row];
        let a = ctx.neg(ctx.div(v[X14], v[X24]));
        t.apply(ctx, GenToken::add(2, 1, a));
    }
    if t.rows[row][X24] != 0 {
        let v = &t.rows[row];
        let a = ctx.neg(ctx.div(v[X24], v[X34]));
        t.apply(ctx, GenToken::add(3, 2, a));
    }
}

/// `[0 0 c d * *]` with `c, d != 0` to a multiple of `(0,0,1,1,0,0)`.
fn reduce_generic(ctx: &FieldCtx, t: &mut Tracked, row: usize) {
    // With x12 = x13 = 0: M12^a adds a x14 to x24, M23^b adds b x24 to x34.
    if t.rows[row][X34] != 0 {
        if t.rows[row][X24] == 0 {
            t.apply(ctx, GenToken::add(1, 2, 1));
        }
        let v = &t.rows[row];
        let b = ctx.neg(ctx.div(v[X34], v[X24]));
        t.apply(ctx, GenToken::add(2, 3, b));
    }
    if t.rows[row][X24] != 0 {
        let v = &t.rows[row];
        let a = ctx.neg(ctx.div(v[X24], v[X14]));
        t.apply(ctx, GenToken::add(1, 2, a));
    }
    // Now proportional to (0,0,1,y,0,0); undo the chain that builds it from (0,0,1,1,0,0).
    let v = &t.rows[row];
    let y = ctx.div(v[X23], v[X14]);
    let chain = generic_chain(ctx, y);
    t.apply_word(ctx, &chain.inverse(ctx));
}

/// `M12^y S1^{-y} M21 T34 M12^{-1}`, carrying `(0,0,1,1,0,0)` to `(0,0,1,y,0,0)`.
pub(crate) fn generic_chain(ctx: &FieldCtx, y: FieldElem) -> GroupWord {
    GroupWord::from_tokens(vec![
        GenToken::add(1, 2, y),
        GenToken::scale(1, ctx.neg(y)),
        GenToken::add(2, 1, 1),
        GenToken::swap(3, 4),
        GenToken::add(1, 2, ctx.neg(1)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::act;
    use crate::reduction::verify_witness;

    fn f(p: u64) -> FieldCtx {
        FieldCtx::new(p).unwrap()
    }

    #[test]
    fn canonical_decomposable_needs_no_word() {
        let k = f(5);
        let r = reduce_line(&k, &[0, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(r.label, LineLabel::Decomposable);
        assert!(r.witness.is_empty());
    }

    #[test]
    fn x12_is_decomposable() {
        let k = f(7);
        let r = reduce_line(&k, &[1, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(r.label, LineLabel::Decomposable);
        let w = GroupWord::from_tokens(vec![GenToken::swap(1, 3), GenToken::swap(2, 4)]);
        let img = act(&k, &Subspace::span(&k, 6, &[[1, 0, 0, 0, 0, 0]]), &w);
        assert_eq!(img, canonical_line(&k, LineLabel::Decomposable));
    }

    #[test]
    fn all_ones_is_generic_mod_3() {
        let k = f(3);
        let r = reduce_line(&k, &[1, 1, 1, 1, 1, 1]).unwrap();
        assert_eq!(r.label, LineLabel::Generic);
    }

    #[test]
    fn zero_vector_rejected() {
        assert_eq!(reduce_line(&f(3), &[0; 6]), Err(Error::ZeroVector));
    }

    #[test]
    fn chain_matches_displayed_steps() {
        let k = f(11);
        let y = 4;
        let start = Subspace::span(&k, 6, &[[0, 0, 1, 1, 0, 0]]);
        let end = Subspace::span(&k, 6, &[[0, 0, 1, y, 0, 0]]);
        assert_eq!(act(&k, &start, &generic_chain(&k, y)), end);
        // the intermediate vector after T34
        let mut t = Tracked::new(vec![vec![0, 0, 1, 1, 0, 0]]);
        for tok in &generic_chain(&k, y).tokens()[..4] {
            t.apply(&k, *tok);
        }
        assert_eq!(t.rows[0], vec![0, 0, 1, y, 1, 0]);
    }

    #[test]
    fn every_line_mod_3_reduces_and_matches_pluecker() {
        let k = f(3);
        let mut v = [0u32; 6];
        for code in 1..729u32 {
            let mut c = code;
            for x in v.iter_mut() {
                *x = c % 3;
                c /= 3;
            }
            let r = reduce_line(&k, &v).unwrap();
            assert!(verify_witness(&k, &Subspace::span(&k, 6, &[v]), &r));
            assert_eq!(
                r.label == LineLabel::Decomposable,
                pluecker_form(&k, &v) == 0
            );
        }
    }
}
