use std::collections::BTreeMap;

use super::series::witt_dim;
use super::{GradedDims, QuadraticPresentation, GENERATORS};
use crate::error::{Error, Result};
use crate::exterior::PAIRS;
use crate::field_linalg::{FieldCtx, FieldElem};

pub const DEFAULT_DEGREE_CAP: usize = 6;

/// A homogeneous element of the free associative algebra on `x1..x4`.
///
/// Letters are 0-based. Only nonzero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElem {
    degree: usize,
    coeffs: BTreeMap<Vec<u8>, FieldElem>,
}

impl TensorElem {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The generator `x_{k+1}`.
    pub fn generator(k: u8) -> Self {
        let mut e = Self::zero(1);
        e.coeffs.insert(vec![k], 1);
        e
    }

    /// `[x_i, x_j] = x_i x_j - x_j x_i` for 1-based `i, j`.
    pub fn basis_bracket(ctx: &FieldCtx, i: usize, j: usize) -> Self {
        Self::generator(i as u8 - 1).bracket(ctx, &Self::generator(j as u8 - 1))
    }

    /// Embeds a degree-2 Lie element given in the bracket basis.
    pub fn from_quadratic(ctx: &FieldCtx, coeffs: &[FieldElem]) -> Self {
        let mut out = Self::zero(2);
        for (&(i, j), &c) in PAIRS.iter().zip(coeffs) {
            out = out.add(ctx, &Self::basis_bracket(ctx, i, j).scale(ctx, c));
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, word: &[u8]) -> FieldElem {
        self.coeffs.get(word).copied().unwrap_or(0)
    }

    pub fn add(&self, ctx: &FieldCtx, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "inhomogeneous sum");
        let mut out = self.clone();
        for (w, &c) in &other.coeffs {
            let v = ctx.add(out.coeff(w), c);
            if v == 0 {
                out.coeffs.remove(w);
            } else {
                out.coeffs.insert(w.clone(), v);
            }
        }
        out
    }

    pub fn scale(&self, ctx: &FieldCtx, f: FieldElem) -> Self {
        if f == 0 {
            return Self::zero(self.degree);
        }
        Self {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(w, &c)| (w.clone(), ctx.mul(c, f)))
                .collect(),
        }
    }

    /// Concatenation product.
    pub fn mul(&self, ctx: &FieldCtx, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (a, &ca) in &self.coeffs {
            for (b, &cb) in &other.coeffs {
                let mut w = a.clone();
                w.extend_from_slice(b);
                let v = ctx.add(out.coeff(&w), ctx.mul(ca, cb));
                if v == 0 {
                    out.coeffs.remove(&w);
                } else {
                    out.coeffs.insert(w, v);
                }
            }
        }
        out
    }

    /// `[u, v] = uv - vu`.
    pub fn bracket(&self, ctx: &FieldCtx, other: &Self) -> Self {
        let uv = self.mul(ctx, other);
        let vu = other.mul(ctx, self);
        uv.add(ctx, &vu.scale(ctx, ctx.neg(1)))
    }

    /// Dense coordinates indexed by the base-4 value of each word.
    pub fn to_dense(&self) -> Vec<FieldElem> {
        let mut out = vec![0; GENERATORS.pow(self.degree as u32)];
        for (w, &c) in &self.coeffs {
            out[word_index(w)] = c;
        }
        out
    }
}

fn word_index(w: &[u8]) -> usize {
    w.iter().fold(0, |acc, &l| acc * GENERATORS + l as usize)
}

/// Incrementally built row echelon basis (leading entry 1, not back-reduced).
struct Echelon {
    cols: usize,
    pivot_rows: Vec<Option<usize>>,
    rows: Vec<Vec<FieldElem>>,
}

impl Echelon {
    fn new(cols: usize) -> Self {
        Self {
            cols,
            pivot_rows: vec![None; cols],
            rows: Vec::new(),
        }
    }

    fn insert(&mut self, ctx: &FieldCtx, mut v: Vec<FieldElem>) {
        debug_assert_eq!(v.len(), self.cols);
        for c in 0..self.cols {
            let f = v[c];
            if f == 0 {
                continue;
            }
            match self.pivot_rows[c] {
                Some(r) => {
                    let row = &self.rows[r];
                    let nf = ctx.neg(f);
                    for k in c..self.cols {
                        if row[k] != 0 {
                            v[k] = ctx.add(v[k], ctx.mul(nf, row[k]));
                        }
                    }
                }
                None => {
                    let inv = ctx.inv(f);
                    for x in v[c..].iter_mut() {
                        *x = ctx.mul(*x, inv);
                    }
                    self.pivot_rows[c] = Some(self.rows.len());
                    self.rows.push(v);
                    return;
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// `[u, x_k]` for dense `u` of the given degree.
fn bracket_with_generator(
    ctx: &FieldCtx,
    u: &[FieldElem],
    degree: usize,
    k: usize,
) -> Vec<FieldElem> {
    let shift = GENERATORS.pow(degree as u32);
    let mut out = vec![0; shift * GENERATORS];
    for (w, &c) in u.iter().enumerate() {
        if c == 0 {
            continue;
        }
        // u x_k
        let right = w * GENERATORS + k;
        out[right] = ctx.add(out[right], c);
        // - x_k u
        let left = k * shift + w;
        out[left] = ctx.sub(out[left], c);
    }
    out
}

/// Graded dimensions through degree `c` with the default cap.
pub fn quotient_dims(q: &QuadraticPresentation, c: usize) -> Result<GradedDims> {
    quotient_dims_with_cap(q, c, DEFAULT_DEGREE_CAP)
}

/// `a_n = W(4, n) - dim r_n` for `n <= c`, where `r` is the ideal generated by the relators.
///
/// The ideal is generated in degree 2 and `L` is generated by `L_1`, so
/// `r_{n+1} = [r_n, L_1]`: by Jacobi, `[[r_n, x], y] = [r_n, [x, y]] + [[r_n, y], x]`,
/// and induction on the degree of the right argument shows brackets of `r_n`
/// with higher components already lie in the iterated span.
pub fn quotient_dims_with_cap(
    q: &QuadraticPresentation,
    c: usize,
    cap: usize,
) -> Result<GradedDims> {
    q.require_full_rank()?;
    if c > cap {
        return Err(Error::DegreeTooLarge { requested: c, cap });
    }
    let ctx = q.ctx();
    let mut a = Vec::with_capacity(c);
    if c >= 1 {
        a.push(GENERATORS);
    }
    if c < 2 {
        return Ok(GradedDims::new(a));
    }
    let mut ideal = Echelon::new(GENERATORS.pow(2));
    for r in 0..4 {
        let t = TensorElem::from_quadratic(ctx, q.relators().row(r));
        ideal.insert(ctx, t.to_dense());
    }
    a.push(witt_dim(GENERATORS as u64, 2) as usize - ideal.rank());
    for n in 3..=c {
        let mut next = Echelon::new(GENERATORS.pow(n as u32));
        for u in &ideal.rows {
            for k in 0..GENERATORS {
                next.insert(ctx, bracket_with_generator(ctx, u, n - 1, k));
            }
        }
        a.push(witt_dim(GENERATORS as u64, n as u32) as usize - next.rank());
        ideal = next;
    }
    Ok(GradedDims::new(a))
}
