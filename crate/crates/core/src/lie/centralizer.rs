use super::QuadraticPresentation;
use crate::error::Result;
use crate::exterior::bracket_coeff;
use crate::field_linalg::{FieldCtx, FieldElem, Matrix};

/// Whether `K = L / [[L, L], L]` has an element whose centralizer is 5-dimensional.
///
/// `K_2` is central, so the centralizer of `v` depends only on its degree-1 part
/// and has dimension `(4 - rank ad_v) + 2`, where `ad_v: K_1 -> K_2`. The pairing
/// with the two complement vectors `c` gives coordinates on `K_2`:
/// `<c, [v, w]> = v^T C w` with `C` the alternating matrix of `c`.
pub fn has_five_dim_centralizer(q: &QuadraticPresentation) -> Result<bool> {
    q.require_full_rank()?;
    let ctx = q.ctx();
    let comp = q.complement();
    let forms: Vec<Vec<FieldElem>> = comp.basis().row_vecs();
    Ok(projective_points(ctx).any(|v| ad_rank(ctx, &forms, &v) == 1))
}

fn ad_rank(ctx: &FieldCtx, forms: &[Vec<FieldElem>], v: &[FieldElem; 4]) -> usize {
    let mut m = Matrix::zeros(forms.len(), 4);
    for (r, c) in forms.iter().enumerate() {
        for j in 1..=4 {
            let mut acc = 0;
            for i in 1..=4 {
                let x = v[i - 1];
                if x != 0 {
                    acc = ctx.add(acc, ctx.mul(x, bracket_coeff(ctx, c, i, j)));
                }
            }
            m.set(r, j - 1, acc);
        }
    }
    m.rank(ctx)
}

/// Representatives of the points of `P^3(F_p)`: first nonzero coordinate 1.
fn projective_points(ctx: &FieldCtx) -> impl Iterator<Item = [FieldElem; 4]> + '_ {
    let p = ctx.p();
    (0..4usize).flat_map(move |lead| {
        let free = 3 - lead;
        (0..p.pow(free as u32)).map(move |mut code| {
            let mut v = [0; 4];
            v[lead] = 1;
            for x in v.iter_mut().skip(lead + 1) {
                *x = code % p;
                code /= p;
            }
            v
        })
    })
}
