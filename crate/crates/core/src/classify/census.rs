use std::collections::{HashSet, VecDeque};
use std::hash::{BuildHasherDefault, Hasher};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{token_gl6, GenToken};
use crate::field_linalg::{FieldCtx, FieldElem, Subspace};
use crate::reduction::{reduce_line, reduce_plane, LineLabel, OrbitLabel};

/// Largest Grassmannian the census will walk.
pub const CENSUS_LIMIT: u128 = 10_000_000;

const N: usize = 6;

type Row = [FieldElem; N];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CensusLabel {
    Line(#[serde(serialize_with = "line_name")] LineLabel),
    Plane(OrbitLabel),
}

fn line_name<S: serde::Serializer>(l: &LineLabel, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(match l {
        LineLabel::Decomposable => "decomposable",
        LineLabel::Generic => "generic",
    })
}

impl CensusLabel {
    fn rank(&self) -> u8 {
        match self {
            CensusLabel::Line(LineLabel::Decomposable) => 0,
            CensusLabel::Line(LineLabel::Generic) => 1,
            CensusLabel::Plane(o) => o.number(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitClass {
    pub size: u64,
    /// First member in enumeration order.
    #[serde(serialize_with = "rows")]
    pub representative: Subspace,
    /// Label the constructive reduction assigns to the representative.
    pub label: CensusLabel,
}

fn rows<S: serde::Serializer>(u: &Subspace, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(u.basis().row_vecs())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitCensus {
    pub p: u32,
    pub dim: usize,
    pub total: u64,
    /// Gaussian binomial `[6, dim]_p`.
    pub expected_total: u128,
    pub orbits: Vec<OrbitClass>,
}

/// Number of `k`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> u128 {
    let q = q as u128;
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

fn check_size(ctx: &FieldCtx, dim: usize) -> Result<u128> {
    if !(1..=2).contains(&dim) {
        return Err(Error::BadDimension {
            expected: 2,
            found: dim,
        });
    }
    let count = gaussian_binomial(N as u32, dim as u32, ctx.p() as u64);
    if count > CENSUS_LIMIT {
        return Err(Error::TooLarge {
            count,
            limit: CENSUS_LIMIT,
        });
    }
    Ok(count)
}

/// Calls `f` on every reduced echelon basis of a `k`-dimensional subspace of `F_p^6`.
fn for_each_rref(ctx: &FieldCtx, k: usize, mut f: impl FnMut(&[Row])) {
    let p = ctx.p();
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let piv = &pivots;
                (piv[r] + 1..N)
                    .filter(move |c| !piv.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let mut rows = vec![[0; N]; k];
        for (r, &c) in pivots.iter().enumerate() {
            rows[r][c] = 1;
        }
        let mut digits = vec![0; free.len()];
        loop {
            for (&(r, c), &d) in free.iter().zip(&digits) {
                rows[r][c] = d;
            }
            f(&rows);
            let mut i = 0;
            while i < digits.len() {
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == digits.len() {
                break;
            }
        }
        // next pivot combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pivots[i] < N - k + i {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// All `k`-dimensional subspaces of `F_p^6` in a fixed order, `k` in `1..=2`.
pub fn grassmannian(ctx: &FieldCtx, k: usize) -> Result<Vec<Subspace>> {
    let count = check_size(ctx, k)?;
    let mut out = Vec::with_capacity(count as usize);
    for_each_rref(ctx, k, |rows| out.push(Subspace::span(ctx, N, rows)));
    Ok(out)
}

type Basis = [Row; 2];

/// Multiplicative hash for the `u128` subspace keys.
#[derive(Default)]
struct KeyHasher(u64);

impl Hasher for KeyHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0.rotate_left(8) ^ b as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
        }
    }

    fn write_u128(&mut self, x: u128) {
        let folded = (x as u64) ^ ((x >> 64) as u64).rotate_left(29);
        self.0 = (self.0 ^ folded)
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .rotate_left(31);
    }
}

type KeySet = HashSet<u128, BuildHasherDefault<KeyHasher>>;

/// Arithmetic tables for the hot loop.
struct Small {
    p: u32,
    inv: Vec<FieldElem>,
}

impl Small {
    fn new(ctx: &FieldCtx) -> Self {
        let mut inv = vec![0; ctx.p() as usize];
        for a in ctx.units() {
            inv[a as usize] = ctx.inv(a);
        }
        Self { p: ctx.p(), inv }
    }

    fn key(&self, b: &Basis, k: usize) -> u128 {
        b[..k]
            .iter()
            .flatten()
            .fold(0u128, |acc, &x| acc * self.p as u128 + x as u128)
    }

    /// In-place reduced row echelon form of a full-rank basis.
    fn rref(&self, b: &mut Basis, k: usize) {
        let p = self.p;
        let mut r = 0;
        for c in 0..N {
            if r == k {
                break;
            }
            let Some(piv) = (r..k).find(|&i| b[i][c] != 0) else {
                continue;
            };
            b.swap(r, piv);
            let inv = self.inv[b[r][c] as usize];
            for x in b[r].iter_mut() {
                *x = *x * inv % p;
            }
            for i in 0..k {
                if i != r && b[i][c] != 0 {
                    let f = p - b[i][c];
                    for j in 0..N {
                        b[i][j] = (b[i][j] + f * b[r][j]) % p;
                    }
                }
            }
            r += 1;
        }
        debug_assert_eq!(r, k);
    }

    fn apply(&self, b: &Basis, k: usize, g: &Sparse) -> Basis {
        let mut acc = [[0u64; N]; 2];
        for (src, dst) in b[..k].iter().zip(acc.iter_mut()) {
            for &(r, c, v) in g {
                dst[c] += src[r] as u64 * v as u64;
            }
        }
        let mut out = [[0; N]; 2];
        for (o, a) in out.iter_mut().zip(acc) {
            for c in 0..N {
                o[c] = (a[c] % self.p as u64) as FieldElem;
            }
        }
        self.rref(&mut out, k);
        out
    }
}

/// Nonzero entries `(row, col, value)` of a 6x6 matrix.
type Sparse = Vec<(usize, usize, FieldElem)>;

fn generators(ctx: &FieldCtx) -> Vec<Sparse> {
    let mut tokens = Vec::new();
    for i in 1..=4u8 {
        for j in 1..=4u8 {
            if i != j {
                tokens.extend(ctx.units().map(|a| GenToken::add(i, j, a)));
            }
            if i < j {
                tokens.push(GenToken::swap(i, j));
            }
        }
        tokens.extend(ctx.units().map(|a| GenToken::scale(i, a)));
    }
    tokens
        .iter()
        .map(|t| {
            let m = token_gl6(ctx, t);
            (0..N)
                .flat_map(|r| (0..N).map(move |c| (r, c)))
                .filter_map(|(r, c)| Some((r, c, m.get(r, c))).filter(|e| e.2 != 0))
                .collect()
        })
        .collect()
}

/// Exact orbit partition of lines (`dim = 1`) or planes (`dim = 2`) in the
/// bracket space under the generator images, found by breadth-first closure.
pub fn enumerate_orbits(ctx: &FieldCtx, dim: usize) -> Result<OrbitCensus> {
    let expected_total = check_size(ctx, dim)?;
    let small = Small::new(ctx);
    let gens = generators(ctx);
    let mut seen = KeySet::with_capacity_and_hasher(expected_total as usize, Default::default());
    let mut orbits = Vec::new();
    let mut total = 0u64;
    let mut failure = None;
    let mut queue: VecDeque<Basis> = VecDeque::new();
    for_each_rref(ctx, dim, |start| {
        total += 1;
        let mut b: Basis = [[0; N]; 2];
        b[..dim].copy_from_slice(start);
        if failure.is_some() || !seen.insert(small.key(&b, dim)) {
            return;
        }
        let mut size = 0u64;
        queue.push_back(b);
        while let Some(cur) = queue.pop_front() {
            size += 1;
            for g in &gens {
                let image = small.apply(&cur, dim, g);
                if seen.insert(small.key(&image, dim)) {
                    queue.push_back(image);
                }
            }
        }
        let representative = Subspace::span(ctx, N, start);
        let label = if dim == 1 {
            reduce_line(ctx, &start[0]).map(|r| CensusLabel::Line(r.label))
        } else {
            reduce_plane(ctx, &representative).map(|r| CensusLabel::Plane(r.label))
        };
        match label {
            Ok(label) => orbits.push(OrbitClass {
                size,
                representative,
                label,
            }),
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    if total as u128 != expected_total || seen.len() as u64 != total {
        return Err(Error::InternalInvariantViolation(format!(
            "census visited {} of {} subspaces (expected {})",
            seen.len(),
            total,
            expected_total
        )));
    }
    orbits.sort_by_key(|o| o.label.rank());
    Ok(OrbitCensus {
        p: small.p,
        dim,
        total,
        expected_total,
        orbits,
    })
}
