use super::field::{FieldCtx, FieldElem};
use super::matrix::{rref, Matrix};

/// A subspace of `F_p^n` stored by its reduced row echelon basis.
///
/// The RREF basis is unique, so structural equality is subspace equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
}

impl Subspace {
    /// Row space of `m`.
    pub fn row_space(ctx: &FieldCtx, m: &Matrix) -> Self {
        let (r, rank) = rref(ctx, m);
        let mut data = r.entries().to_vec();
        data.truncate(rank * m.cols());
        Self {
            basis: Matrix::from_vec(rank, m.cols(), data),
        }
    }

    pub fn span<V: AsRef<[FieldElem]>>(ctx: &FieldCtx, ambient_dim: usize, vectors: &[V]) -> Self {
        let mut data = Vec::with_capacity(vectors.len() * ambient_dim);
        for v in vectors {
            let v = v.as_ref();
            assert_eq!(v.len(), ambient_dim);
            data.extend_from_slice(v);
        }
        Self::row_space(ctx, &Matrix::from_vec(vectors.len(), ambient_dim, data))
    }

    /// Span of signed integer rows, reduced mod p.
    pub fn from_int_rows<R: AsRef<[i64]>>(ctx: &FieldCtx, rows: &[R]) -> Self {
        Self::row_space(ctx, &Matrix::from_rows(ctx, rows))
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|r| {
                self.basis
                    .row(r)
                    .iter()
                    .position(|&x| x != 0)
                    .expect("RREF rows are nonzero")
            })
            .collect()
    }

    pub fn contains(&self, ctx: &FieldCtx, v: &[FieldElem]) -> bool {
        // Reduce v against the RREF basis; membership iff the remainder vanishes.
        let mut w = v.to_vec();
        for (r, piv) in self.pivots().into_iter().enumerate() {
            let f = w[piv];
            if f != 0 {
                for (x, &b) in w.iter_mut().zip(self.basis.row(r)) {
                    *x = ctx.sub(*x, ctx.mul(f, b));
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }

    /// Image under right multiplication by `m`.
    pub fn mul_right(&self, ctx: &FieldCtx, m: &Matrix) -> Self {
        Self::row_space(ctx, &self.basis.mul(ctx, m))
    }
}

/// Vectors orthogonal to every vector of `u` under the standard dot product.
pub fn orthogonal_complement(ctx: &FieldCtx, u: &Subspace) -> Subspace {
    let n = u.ambient_dim();
    let pivots = u.pivots();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    // Null space of the RREF basis: one vector per free column f, with
    // x_f = 1 and x_{pivot(r)} = -B[r][f].
    let mut rows = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![0; n];
        v[f] = 1;
        for (r, &piv) in pivots.iter().enumerate() {
            v[piv] = ctx.neg(u.basis().get(r, f));
        }
        rows.push(v);
    }
    Subspace::span(ctx, n, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u64) -> FieldCtx {
        FieldCtx::new(p).unwrap()
    }

    fn e(i: usize) -> Vec<i64> {
        let mut v = vec![0; 6];
        v[i - 1] = 1;
        v
    }

    #[test]
    fn complement_of_coordinate_plane() {
        let k = f(5);
        let u = Subspace::from_int_rows(&k, &[e(1), e(6)]);
        let c = orthogonal_complement(&k, &u);
        assert_eq!(c, Subspace::from_int_rows(&k, &[e(2), e(3), e(4), e(5)]));
    }

    #[test]
    fn complement_of_nonsplit_pair_gives_its_relators() {
        for p in [3u64, 5, 7, 11] {
            let k = f(p);
            let g = k.smallest_generator() as i64;
            let u = Subspace::from_int_rows(&k, &[[0, 0, 1, 1, 0, 0], [0, 1, 0, 0, g, 0]]);
            // x12, x34, x14 - x23, g x13 - x24
            let relators = Subspace::from_int_rows(
                &k,
                &[
                    [1, 0, 0, 0, 0, 0],
                    [0, 0, 0, 0, 0, 1],
                    [0, 0, 1, -1, 0, 0],
                    [0, g, 0, 0, -1, 0],
                ],
            );
            assert_eq!(orthogonal_complement(&k, &u), relators);
        }
    }

    #[test]
    fn zero_and_full() {
        let k = f(3);
        let zero = Subspace::span::<Vec<u32>>(&k, 6, &[]);
        assert_eq!(zero.dim(), 0);
        assert_eq!(orthogonal_complement(&k, &zero).dim(), 6);
        let full = orthogonal_complement(&k, &zero);
        assert_eq!(orthogonal_complement(&k, &full), zero);
    }

    #[test]
    fn contains_basis_and_not_outside() {
        let k = f(7);
        let u = Subspace::from_int_rows(&k, &[[1, 2, 3, 0, 0, 0], [0, 0, 1, 1, 5, 6]]);
        assert!(u.contains(&k, &[1, 2, 3, 0, 0, 0]));
        assert!(u.contains(&k, &[2, 4, 0, 1, 5, 6]));
        assert!(!u.contains(&k, &[0, 0, 0, 0, 0, 1]));
    }

    proptest! {
        #[test]
        fn complement_is_an_involution(data in proptest::collection::vec(0u32..3, 24)) {
            let k = f(3);
            let u = Subspace::row_space(&k, &Matrix::from_vec(4, 6, data));
            let c = orthogonal_complement(&k, &u);
            prop_assert_eq!(c.dim() + u.dim(), 6);
            prop_assert_eq!(orthogonal_complement(&k, &c), u.clone());
            for r in 0..c.dim() {
                for s in 0..u.dim() {
                    let dot = c.basis().row(r).iter().zip(u.basis().row(s))
                        .fold(0, |acc, (&a, &b)| k.add(acc, k.mul(a, b)));
                    prop_assert_eq!(dot, 0);
                }
            }
        }
    }
}
