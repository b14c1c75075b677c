use super::line::normalize_line;
use super::{canonical_plane, LineLabel, OrbitLabel, ReductionResult, Tracked};
use crate::error::{Error, Result};
use crate::exterior::{pluecker_form, pluecker_polar, GenToken, GroupWord};
use crate::field_linalg::{FieldCtx, FieldElem, SquareClass, Subspace};

const MAX_STEPS: usize = 64;

const E6: [FieldElem; 6] = [0, 0, 0, 0, 0, 1];
const U: [FieldElem; 6] = [0, 0, 1, 1, 0, 0];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Start,
    /// The plane contains a decomposable line.
    Decomposable,
    /// Every line of the plane is generic.
    Nondegenerate,
    Done(OrbitLabel),
}

/// Reduces a plane to one of the four canonical planes.
pub fn reduce_plane(ctx: &FieldCtx, u: &Subspace) -> Result<ReductionResult<OrbitLabel>> {
    run(ctx, u, State::Start)
}

/// Runs the machine from the non-degenerate branch regardless of the input,
/// so the fallback edges back to the decomposable branch get exercised.
#[cfg(test)]
pub(crate) fn reduce_plane_forcing_nondegenerate_entry(
    ctx: &FieldCtx,
    u: &Subspace,
) -> Result<ReductionResult<OrbitLabel>> {
    run(ctx, u, State::Nondegenerate)
}

fn run(ctx: &FieldCtx, u: &Subspace, start: State) -> Result<ReductionResult<OrbitLabel>> {
    if u.dim() != 2 || u.ambient_dim() != 6 {
        return Err(Error::BadDimension {
            expected: 2,
            found: u.dim(),
        });
    }
    let mut t = Tracked::new(u.basis().row_vecs());
    let mut state = start;
    for _ in 0..MAX_STEPS {
        state = match state {
            State::Start => {
                if find_decomposable(ctx, &t.rows).is_some() {
                    State::Decomposable
                } else {
                    State::Nondegenerate
                }
            }
            State::Decomposable => decomposable_case(ctx, &mut t)?,
            State::Nondegenerate => nondegenerate_case(ctx, &mut t)?,
            State::Done(label) => {
                return ReductionResult::checked(
                    ctx,
                    u,
                    label,
                    t.word,
                    canonical_plane(ctx, label),
                );
            }
        };
    }
    Err(Error::InternalInvariantViolation(format!(
        "plane reduction of {:?} exceeded {MAX_STEPS} steps",
        u.basis()
    )))
}

fn lin_comb(ctx: &FieldCtx, a: &[FieldElem], s: FieldElem, b: &[FieldElem]) -> Vec<FieldElem> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| ctx.add(x, ctx.mul(s, y)))
        .collect()
}

/// A nonzero decomposable vector in `span(rows)`, if any.
///
/// Solves `Q(r0 + s r1) = Q(r0) + s B(r0, r1) + s^2 Q(r1) = 0`, falling back to `r1` itself.
fn find_decomposable(ctx: &FieldCtx, rows: &[Vec<FieldElem>]) -> Option<Vec<FieldElem>> {
    let (r0, r1) = (&rows[0], &rows[1]);
    let a = pluecker_form(ctx, r1);
    if a == 0 {
        return Some(r1.clone());
    }
    let b = pluecker_polar(ctx, r0, r1);
    let c = pluecker_form(ctx, r0);
    let disc = ctx.sub(ctx.mul(b, b), ctx.mul(4, ctx.mul(a, c)));
    let root = ctx.sqrt(disc)?;
    let s = ctx.div(ctx.sub(root, b), ctx.mul(2, a));
    Some(lin_comb(ctx, r0, s, r1))
}

/// Rescales row 0 to exactly `target` (it must already be proportional).
fn pin_row(ctx: &FieldCtx, t: &mut Tracked, row: usize, target: &[FieldElem]) -> Result<()> {
    let lead = target.iter().position(|&x| x != 0).expect("nonzero target");
    let f = t.rows[row][lead];
    if f == 0 {
        return Err(drift(t, target));
    }
    t.scale_row(ctx, row, ctx.inv(f));
    if t.rows[row] != target {
        return Err(drift(t, target));
    }
    Ok(())
}

fn drift(t: &Tracked, target: &[FieldElem]) -> Error {
    Error::InternalInvariantViolation(format!(
        "basis row drifted from {target:?}: rows {:?} after {}",
        t.rows, t.word
    ))
}

/// Case where the plane holds a line equivalent to `e6`.
fn decomposable_case(ctx: &FieldCtx, t: &mut Tracked) -> Result<State> {
    let v = find_decomposable(ctx, &t.rows).ok_or_else(|| {
        Error::InternalInvariantViolation(format!("no decomposable line in {:?}", t.rows))
    })?;
    // Keep a second basis vector independent of v.
    let other = if Subspace::span(ctx, 6, &[&v, &t.rows[0]]).dim() == 2 {
        t.rows[0].clone()
    } else {
        t.rows[1].clone()
    };
    t.rows = vec![v, other];
    let label = normalize_line(ctx, t, 0);
    debug_assert_eq!(label, LineLabel::Decomposable);
    pin_row(ctx, t, 0, &E6)?;
    let r6 = t.rows[1][5];
    t.sub_row(ctx, 1, 0, r6);

    if t.rows[1][0] != 0 {
        leading_entry_subcase(ctx, t)
    } else {
        zero_leading_subcase(ctx, t)
    }
}

/// The four stabilizers of `e6` acting on `(1, a2, .., a6)`:
/// (i) `a2 += b`, (ii) `a3 += b`, (iii) `a4 -= b`, (iv) `a5 -= b`, each
/// also shifting `a6`, which is cleared against `e6` afterwards.
pub(crate) fn e6_stabilizer(ctx: &FieldCtx, which: u8, b: FieldElem) -> GroupWord {
    let binv = ctx.inv(b);
    let (i, j) = match which {
        1 => (2, 3),
        2 => (2, 4),
        3 => (1, 3),
        4 => (1, 4),
        _ => unreachable!("four stabilizers"),
    };
    // M_ji^{1/b} M_ij^{-b} T_ij S_i^{-1/b} S_j^b
    GroupWord::from_tokens(vec![
        GenToken::add(j, i, binv),
        GenToken::add(i, j, ctx.neg(b)),
        GenToken::swap(i, j),
        GenToken::scale(i, ctx.neg(binv)),
        GenToken::scale(j, b),
    ])
}

fn leading_entry_subcase(ctx: &FieldCtx, t: &mut Tracked) -> Result<State> {
    let lead = t.rows[1][0];
    t.scale_row(ctx, 1, ctx.inv(lead));
    // (iv) a5 -= b, (iii) a4 -= b, (ii) a3 += b, (i) a2 += b.
    for (which, coord, negate) in [
        (4u8, 4usize, false),
        (3, 3, false),
        (2, 2, true),
        (1, 1, true),
    ] {
        let a = t.rows[1][coord];
        if a != 0 {
            let b = if negate { ctx.neg(a) } else { a };
            t.apply_word(ctx, &e6_stabilizer(ctx, which, b));
            pin_row(ctx, t, 0, &E6)?;
            let lead = t.rows[1][0];
            t.scale_row(ctx, 1, ctx.inv(lead));
        }
    }
    let r6 = t.rows[1][5];
    t.sub_row(ctx, 1, 0, r6);
    Ok(State::Done(OrbitLabel::O1))
}

fn zero_leading_subcase(ctx: &FieldCtx, t: &mut Tracked) -> Result<State> {
    // r = (0, b1, b2, b3, b4, t). T12: (b1..b4) -> (b3, b4, b1, b2); T34: -> (b2, b1, b4, b3).
    let r = t.rows[1].clone();
    if r[2] != 0 {
        // already in the x14 slot
    } else if r[1] != 0 {
        t.apply(ctx, GenToken::swap(3, 4));
    } else if r[4] != 0 {
        t.apply(ctx, GenToken::swap(1, 2));
    } else if r[3] != 0 {
        t.apply(ctx, GenToken::swap(1, 2));
        t.apply(ctx, GenToken::swap(3, 4));
    } else {
        return Err(Error::InternalInvariantViolation(format!(
            "second basis row collapsed onto e6: {:?}",
            t.rows
        )));
    }
    pin_row(ctx, t, 0, &E6)?;
    let lead = t.rows[1][2];
    t.scale_row(ctx, 1, ctx.inv(lead));
    // M43^a: b1 += a b2 with b2 = 1.
    let b1 = t.rows[1][1];
    if b1 != 0 {
        t.apply(ctx, GenToken::add(4, 3, ctx.neg(b1)));
    }
    // M12^b: b4 += b b2.
    let b4 = t.rows[1][4];
    if b4 != 0 {
        t.apply(ctx, GenToken::add(1, 2, ctx.neg(b4)));
    }
    let r6 = t.rows[1][5];
    t.sub_row(ctx, 1, 0, r6);
    let b3 = t.rows[1][3];
    if b3 == 0 {
        return Ok(State::Done(OrbitLabel::O2));
    }
    // S2^a scales x23 and fixes x14, x34.
    t.apply(ctx, GenToken::scale(2, ctx.inv(b3)));
    Ok(State::Done(OrbitLabel::O3))
}

/// `S2^a S4^a`: `(0,x,0,y,z,0) -> (0,x,0,a y,a^2 z,0)`, fixing the line of `(0,0,1,1,0,0)`.
fn pair_scale(ctx: &FieldCtx, t: &mut Tracked, a: FieldElem) -> Result<()> {
    t.apply(ctx, GenToken::scale(2, a));
    t.apply(ctx, GenToken::scale(4, a));
    pin_row(ctx, t, 0, &U)
}

/// `M43^{-1} M34^1 M12^{-1} S1^{1-t} S2^a S4^a` with `a = (t-1)/2`, carrying
/// `span{U, (0,1,0,0,t,0)}` to `span{U, (0,1,0,1,(t-1)/4,0)}` for `t != 1`.
pub(crate) fn critical_chain(ctx: &FieldCtx, t: FieldElem) -> GroupWord {
    let half = ctx.inv(2);
    let a = ctx.mul(ctx.sub(t, 1), half);
    GroupWord::from_tokens(vec![
        GenToken::add(4, 3, ctx.neg(1)),
        GenToken::add(3, 4, 1),
        GenToken::add(1, 2, ctx.neg(1)),
        GenToken::scale(1, ctx.sub(1, t)),
        GenToken::scale(2, a),
        GenToken::scale(4, a),
    ])
}

/// `M42^1 M21^{-1} M13^1 T12 M24^{-2} M42^1 M21^1 M32^1`, which sends the
/// square-parameter plane into the decomposable case.
pub(crate) fn square_fallback(ctx: &FieldCtx) -> GroupWord {
    GroupWord::from_tokens(vec![
        GenToken::add(4, 2, 1),
        GenToken::add(2, 1, ctx.neg(1)),
        GenToken::add(1, 3, 1),
        GenToken::swap(1, 2),
        GenToken::add(2, 4, ctx.neg(2)),
        GenToken::add(4, 2, 1),
        GenToken::add(2, 1, 1),
        GenToken::add(3, 2, 1),
    ])
}

/// Case where no line of the plane is equivalent to `e6`.
fn nondegenerate_case(ctx: &FieldCtx, t: &mut Tracked) -> Result<State> {
    // Put a generic vector first.
    if pluecker_form(ctx, &t.rows[0]) == 0 {
        if pluecker_form(ctx, &t.rows[1]) == 0 {
            return Ok(State::Decomposable);
        }
        t.rows.swap(0, 1);
    }
    let label = normalize_line(ctx, t, 0);
    debug_assert_eq!(label, LineLabel::Generic);
    pin_row(ctx, t, 0, &U)?;

    let r = &t.rows[1];
    if r[0] == 0 && r[1] == 0 {
        // Clearing *3 against U leaves (0,0,0,*,*,*), decomposable.
        return Ok(State::Decomposable);
    }
    if r[1] == 0 {
        // T23 S2^{-1} swaps *1 and *2 and fixes U.
        t.apply(ctx, GenToken::swap(2, 3));
        t.apply(ctx, GenToken::scale(2, ctx.neg(1)));
        pin_row(ctx, t, 0, &U)?;
    }
    let lead = t.rows[1][1];
    t.scale_row(ctx, 1, ctx.inv(lead));
    // M32^a: x12 += a x13.
    let x12 = t.rows[1][0];
    if x12 != 0 {
        t.apply(ctx, GenToken::add(3, 2, ctx.neg(x12)));
    }
    // M14^b: x34 -= b x13.
    let x34 = t.rows[1][5];
    if x34 != 0 {
        t.apply(ctx, GenToken::add(1, 4, x34));
    }
    pin_row(ctx, t, 0, &U)?;
    let x14 = t.rows[1][2];
    t.sub_row(ctx, 1, 0, x14);

    // Second row is now (0, 1, 0, y, z, 0).
    let (y, z) = (t.rows[1][3], t.rows[1][4]);
    if z == 0 {
        // Q = -z vanishes, so the row is decomposable.
        return Ok(State::Decomposable);
    }
    if y != 0 {
        pair_scale(ctx, t, ctx.inv(y))?;
        let x = t.rows[1][4];
        // x = (t - 1)/4, so t = 4x + 1 and t != 1 because x != 0.
        let tt = ctx.add(ctx.mul(4, x), 1);
        t.apply_word(ctx, &critical_chain(ctx, tt).inverse(ctx));
        // Re-read the plane in the basis {U, (0,1,0,0,t,0)}.
        let plane = Subspace::span(ctx, 6, &t.rows);
        let expected = Subspace::span(ctx, 6, &[U.to_vec(), vec![0, 1, 0, 0, tt, 0]]);
        if plane != expected {
            return Err(Error::InternalInvariantViolation(format!(
                "critical chain landed on {:?}",
                plane.basis()
            )));
        }
        t.rows = vec![U.to_vec(), vec![0, 1, 0, 0, tt, 0]];
    }

    let z = t.rows[1][4];
    match ctx.square_class(z) {
        SquareClass::Square => {
            let s = ctx.sqrt(z).expect("square");
            pair_scale(ctx, t, ctx.inv(s))?;
            t.apply_word(ctx, &square_fallback(ctx));
            Ok(State::Decomposable)
        }
        SquareClass::NonSquare => {
            let g = ctx.smallest_generator();
            // z = g s^2; S2^a S4^a with a = 1/s.
            let s = ctx.sqrt(ctx.div(z, g)).expect("z/g is a square");
            pair_scale(ctx, t, ctx.inv(s))?;
            Ok(State::Done(OrbitLabel::O4 { g }))
        }
        // t = 0 leaves (0,1,0,0,0,0), which is decomposable.
        SquareClass::Zero => Ok(State::Decomposable),
    }
}
