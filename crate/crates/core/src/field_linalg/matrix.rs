use std::fmt;

use super::field::{FieldCtx, FieldElem};
use crate::error::{Error, Result};

/// Dense row-major matrix over `F_p`. Entries are always fully reduced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from already-reduced entries.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<FieldElem>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        Self { rows, cols, data }
    }

    /// Builds a matrix from signed integer rows, reducing each entry mod p.
    pub fn from_rows<R: AsRef<[i64]>>(ctx: &FieldCtx, rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| ctx.reduce(x)));
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [FieldElem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<FieldElem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let p = ctx.p() as u64;
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = 0u64;
                for k in 0..self.cols {
                    acc += self.get(r, k) as u64 * other.get(k, c) as u64;
                    if acc >= 1 << 62 {
                        acc %= p;
                    }
                }
                out.set(r, c, (acc % p) as FieldElem);
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, ctx: &FieldCtx, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(v.len(), self.rows);
        let p = ctx.p() as u64;
        (0..self.cols)
            .map(|c| {
                let acc: u64 = v
                    .iter()
                    .enumerate()
                    .map(|(k, &x)| x as u64 * self.get(k, c) as u64 % p)
                    .sum();
                (acc % p) as FieldElem
            })
            .collect()
    }

    pub fn rank(&self, ctx: &FieldCtx) -> usize {
        rref(ctx, self).1
    }

    pub fn det(&self, ctx: &FieldCtx) -> FieldElem {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| m.get(r, col) != 0) else {
                return 0;
            };
            if piv != col {
                m.swap_rows(piv, col);
                det = ctx.neg(det);
            }
            let d = m.get(col, col);
            det = ctx.mul(det, d);
            let dinv = ctx.inv(d);
            for r in col + 1..n {
                let f = ctx.mul(m.get(r, col), dinv);
                if f != 0 {
                    m.axpy_row(ctx, r, col, ctx.neg(f));
                }
            }
        }
        det
    }

    pub fn inverse(&self, ctx: &FieldCtx) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::BadDimension {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let (red, _) = rref(ctx, &aug);
        for i in 0..n {
            for c in 0..n {
                if red.get(i, c) != u32::from(i == c) {
                    return Err(Error::SingularMatrix);
                }
            }
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c));
            }
        }
        Ok(inv)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// `row[dst] += f * row[src]`
    pub(crate) fn axpy_row(&mut self, ctx: &FieldCtx, dst: usize, src: usize, f: FieldElem) {
        for c in 0..self.cols {
            let s = self.get(src, c);
            if s != 0 {
                let v = ctx.add(self.get(dst, c), ctx.mul(f, s));
                self.set(dst, c, v);
            }
        }
    }

    pub(crate) fn scale_row(&mut self, ctx: &FieldCtx, r: usize, f: FieldElem) {
        for x in self.row_mut(r) {
            *x = ctx.mul(*x, f);
        }
    }
}

/// Reduced row echelon form and rank. Zero rows are kept at the bottom.
pub fn rref(ctx: &FieldCtx, m: &Matrix) -> (Matrix, usize) {
    let mut a = m.clone();
    let mut rank = 0;
    for col in 0..a.cols {
        if rank == a.rows {
            break;
        }
        let Some(piv) = (rank..a.rows).find(|&r| a.get(r, col) != 0) else {
            continue;
        };
        a.swap_rows(piv, rank);
        let lead = a.get(rank, col);
        if lead != 1 {
            a.scale_row(ctx, rank, ctx.inv(lead));
        }
        for r in 0..a.rows {
            if r != rank {
                let f = a.get(r, col);
                if f != 0 {
                    a.axpy_row(ctx, r, rank, ctx.neg(f));
                }
            }
        }
        rank += 1;
    }
    (a, rank)
}
