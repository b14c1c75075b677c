#![allow(dead_code)]

use quadpres::exterior::{word_gl6, GenToken, GroupWord};
use quadpres::field_linalg::{FieldCtx, FieldElem, Matrix, Subspace};
use quadpres::lie::QuadraticPresentation;
use rand::Rng;

pub fn ctx(p: u64) -> FieldCtx {
    FieldCtx::new(p).unwrap()
}

pub fn random_elem<R: Rng>(k: &FieldCtx, rng: &mut R) -> FieldElem {
    rng.gen_range(0..k.p())
}

pub fn random_unit<R: Rng>(k: &FieldCtx, rng: &mut R) -> FieldElem {
    rng.gen_range(1..k.p())
}

pub fn random_vec<R: Rng>(k: &FieldCtx, n: usize, rng: &mut R) -> Vec<FieldElem> {
    (0..n).map(|_| random_elem(k, rng)).collect()
}

pub fn random_matrix<R: Rng>(k: &FieldCtx, rows: usize, cols: usize, rng: &mut R) -> Matrix {
    Matrix::from_vec(rows, cols, random_vec(k, rows * cols, rng))
}

pub fn random_invertible<R: Rng>(k: &FieldCtx, n: usize, rng: &mut R) -> Matrix {
    loop {
        let m = random_matrix(k, n, n, rng);
        if m.det(k) != 0 {
            return m;
        }
    }
}

pub fn random_token<R: Rng>(k: &FieldCtx, rng: &mut R) -> GenToken {
    let i = rng.gen_range(1..=4u8);
    let mut j = rng.gen_range(1..=3u8);
    if j >= i {
        j += 1;
    }
    match rng.gen_range(0..3) {
        0 => GenToken::add(i, j, random_elem(k, rng)),
        1 => GenToken::swap(i.min(j), i.max(j)),
        _ => GenToken::scale(i, random_unit(k, rng)),
    }
}

pub fn random_word<R: Rng>(k: &FieldCtx, len: usize, rng: &mut R) -> GroupWord {
    (0..len).map(|_| random_token(k, rng)).collect()
}

pub fn random_subspace<R: Rng>(k: &FieldCtx, dim: usize, rng: &mut R) -> Subspace {
    loop {
        let rows: Vec<Vec<FieldElem>> = (0..dim).map(|_| random_vec(k, 6, rng)).collect();
        let s = Subspace::span(k, 6, &rows);
        if s.dim() == dim {
            return s;
        }
    }
}

pub fn random_presentation<R: Rng>(k: &FieldCtx, rng: &mut R) -> QuadraticPresentation {
    loop {
        let q = QuadraticPresentation::new(*k, random_matrix(k, 4, 6, rng)).unwrap();
        if q.rank() == 4 {
            return q;
        }
    }
}

/// Number of Lyndon words of length `n` over an `m`-letter alphabet, by
/// Duval's generation algorithm.
pub fn lyndon_count(m: usize, n: usize) -> u64 {
    let mut w: Vec<usize> = vec![0];
    let mut count = 0;
    while !w.is_empty() {
        if w.len() == n {
            count += 1;
        }
        let len = w.len();
        while w.len() < n {
            w.push(w[w.len() - len]);
        }
        while w.last() == Some(&(m - 1)) {
            w.pop();
        }
        if let Some(last) = w.last_mut() {
            *last += 1;
        }
    }
    count
}

fn apply(k: &FieldCtx, w: &GroupWord, r: &[FieldElem]) -> Vec<FieldElem> {
    word_gl6(k, w).vec_mul(k, r)
}

/// The four stabilizers of `x12` for the pairs (2,3), (2,4), (1,3), (1,4):
/// `M_ji^{1/b} M_ij^{-b} T_ij S_i^{-1/b} S_j^b`.
pub fn case1_word(k: &FieldCtx, which: usize, b: FieldElem) -> GroupWord {
    let (i, j) = [(2u8, 3u8), (2, 4), (1, 3), (1, 4)][which];
    let bi = k.inv(b);
    GroupWord::from_tokens(vec![
        GenToken::add(j, i, bi),
        GenToken::add(i, j, k.neg(b)),
        GenToken::swap(i, j),
        GenToken::scale(i, k.neg(bi)),
        GenToken::scale(j, b),
    ])
}

/// Displayed image of `R = (1, a2, .., a6)` under stabilizer `which`.
pub fn case1_expected(
    k: &FieldCtx,
    which: usize,
    b: FieldElem,
    a: [FieldElem; 5],
) -> Vec<FieldElem> {
    let [a2, a3, a4, a5, a6] = a;
    match which {
        0 => vec![1, k.add(a2, b), a3, a4, a5, k.add(a6, k.mul(b, a5))],
        1 => vec![1, a2, k.add(a3, b), a4, a5, k.sub(a6, k.mul(b, a4))],
        2 => vec![1, a2, a3, k.sub(a4, b), a5, k.add(a6, k.mul(b, a3))],
        _ => vec![1, a2, a3, a4, k.sub(a5, b), k.sub(a6, k.mul(b, a2))],
    }
}

pub fn case1_holds(k: &FieldCtx, which: usize, b: FieldElem, a: [FieldElem; 5]) -> bool {
    let r = [1, a[0], a[1], a[2], a[3], a[4]];
    apply(k, &case1_word(k, which, b), &r) == case1_expected(k, which, b, a)
}

pub fn subcase_word(which: usize, a: FieldElem) -> GroupWord {
    GroupWord::from_tokens(vec![match which {
        0 => GenToken::swap(1, 2),
        1 => GenToken::swap(3, 4),
        2 => GenToken::add(1, 2, a),
        _ => GenToken::add(4, 3, a),
    }])
}

/// Displayed image of `R = (0, b1, b2, b3, b4, t)`.
pub fn subcase_expected(
    k: &FieldCtx,
    which: usize,
    a: FieldElem,
    b: [FieldElem; 4],
    t: FieldElem,
) -> Vec<FieldElem> {
    let [b1, b2, b3, b4] = b;
    match which {
        0 => vec![0, b3, b4, b1, b2, t],
        1 => vec![0, b2, b1, b4, b3, t],
        2 => vec![
            0,
            b1,
            b2,
            k.add(b3, k.mul(a, b1)),
            k.add(b4, k.mul(a, b2)),
            t,
        ],
        _ => vec![
            0,
            k.add(b1, k.mul(a, b2)),
            b2,
            k.add(b3, k.mul(a, b4)),
            b4,
            t,
        ],
    }
}

/// Outcome of one second-list check: exact vector equality, and equality of
/// the planes spanned together with the fixed vector `e6`.
pub struct SubcaseOutcome {
    pub exact: bool,
    pub with_e6: bool,
}

pub fn subcase_check(
    k: &FieldCtx,
    which: usize,
    a: FieldElem,
    b: [FieldElem; 4],
    t: FieldElem,
) -> SubcaseOutcome {
    let r = [0, b[0], b[1], b[2], b[3], t];
    let got = apply(k, &subcase_word(which, a), &r);
    let want = subcase_expected(k, which, a, b, t);
    let e6 = vec![0, 0, 0, 0, 0, 1];
    let plane = |v: &Vec<FieldElem>| Subspace::span(k, 6, &[e6.clone(), v.clone()]);
    SubcaseOutcome {
        exact: got == want,
        with_e6: got[..5] == want[..5] && plane(&got) == plane(&want),
    }
}

/// Canonical relator matrix files used by CLI tests.
pub fn canonical_matrix_text(orbit: u8) -> &'static str {
    match orbit {
        1 => "p 3\n0 1 0 0 0 0\n0 0 1 0 0 0\n0 0 0 1 0 0\n0 0 0 0 1 0\n",
        2 => "p 3\n1 0 0 0 0 0\n0 1 0 0 0 0\n0 0 0 1 0 0\n0 0 0 0 1 0\n",
        3 => "p 3\n1 0 0 0 0 0\n0 1 0 0 0 0\n0 0 1 -1 0 0\n0 0 0 0 1 0\n",
        _ => "p 3\n1 0 0 0 0 0\n0 0 0 0 0 1\n0 0 1 -1 0 0\n0 2 0 0 -1 0\n",
    }
}

pub const CYCLE_MATRIX: &str = "# cycle presentation x12, x23, x34, -x14\np 3\n1 0 0 0 0 0\n0 0 0 1 0 0\n0 0 0 0 0 1\n0 0 -1 0 0 0\n";
