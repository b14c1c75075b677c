//! From a prime `p` and four tame primes `q_i = 1 mod p` to the linking matrix
//! and its quadratic presentation.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::pair_index;
use crate::field_linalg::{is_prime_u64, pow_mod, prime_factors};
use crate::field_linalg::{FieldCtx, FieldElem, Matrix};
use crate::lie::QuadraticPresentation;

/// Inputs at or above this bound are rejected; trial division stays cheap below it.
pub const PRIME_BOUND: u64 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeSet {
    pub p: u64,
    pub q: [u64; 4],
}

/// Checks that `p` is an odd prime and each `q_i` is a prime `= 1 mod p`, all distinct.
pub fn validate(p: u64, q: [u64; 4]) -> Result<PrimeSet> {
    if p.is_multiple_of(2) {
        return Err(Error::PEven(p));
    }
    if !is_prime_u64(p) {
        return Err(Error::PNotPrime(p));
    }
    FieldCtx::new(p)?;
    for (n, &qi) in q.iter().enumerate() {
        let index = n + 1;
        if qi >= PRIME_BOUND {
            return Err(Error::InputTooLarge(qi));
        }
        if !is_prime_u64(qi) {
            return Err(Error::NotPrime { index, value: qi });
        }
        if qi % p != 1 {
            return Err(Error::NotCongruentOneModP {
                index,
                value: qi,
                p,
            });
        }
    }
    for i in 0..4 {
        if q[i + 1..].contains(&q[i]) {
            return Err(Error::DuplicatePrime(q[i]));
        }
    }
    Ok(PrimeSet { p, q })
}

fn is_primitive_root(g: u64, q: u64, factors: &[u64]) -> bool {
    !g.is_multiple_of(q) && factors.iter().all(|&l| pow_mod(g, (q - 1) / l, q) != 1)
}

/// Primitive roots of the prime `q` in increasing order.
pub fn primitive_roots(q: u64) -> impl Iterator<Item = u64> {
    debug_assert!(is_prime_u64(q));
    let factors = prime_factors(q - 1);
    (1..q).filter(move |&g| is_primitive_root(g, q, &factors))
}

/// Smallest primitive root mod the prime `q`.
pub fn primitive_root(q: u64) -> u64 {
    primitive_roots(q)
        .next()
        .expect("a prime has a primitive root")
}

/// The `r` in `[0, q-1)` with `g^r = a mod q`, by baby-step giant-step.
pub fn discrete_log(a: u64, g: u64, q: u64) -> Result<u64> {
    let a = a % q;
    if a == 0 {
        return Err(Error::NotAUnit(a));
    }
    let order = q - 1;
    let m = (order as f64).sqrt().ceil() as u64;
    let mut baby = HashMap::with_capacity(m as usize);
    let mut x = 1u64;
    for j in 0..m {
        baby.entry(x).or_insert(j);
        x = x * g % q;
    }
    // g^{-m}
    let step = pow_mod(pow_mod(g, m, q), q - 2, q);
    let mut gamma = a;
    for i in 0..=m {
        if let Some(&j) = baby.get(&gamma) {
            return Ok((i * m + j) % order);
        }
        gamma = gamma * step % q;
    }
    Err(Error::InternalInvariantViolation(format!(
        "{g} is not a primitive root mod {q}"
    )))
}

/// `l` with `q_i = g_j^{-r} mod q_j`, reduced into `F_p`.
pub fn linking_number(qi: u64, qj: u64, gj: u64, p: u64) -> Result<(u64, FieldElem)> {
    let r = discrete_log(qi, gj, qj)?;
    let l = (p - r % p) % p;
    Ok((r, l as FieldElem))
}

/// The 4x4 linking matrix with its provenance. Diagonal entries of `l` and
/// `dlogs` are unused and set to zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkingData {
    pub primes: PrimeSet,
    pub l: [[FieldElem; 4]; 4],
    pub roots: [u64; 4],
    pub dlogs: [[u64; 4]; 4],
    /// `(q_i - 1)/p mod p`, reported only.
    pub diagonal: [FieldElem; 4],
}

pub fn linking_matrix(s: &PrimeSet) -> Result<LinkingData> {
    linking_matrix_with_roots(s, s.q.map(primitive_root))
}

pub fn linking_matrix_with_roots(s: &PrimeSet, roots: [u64; 4]) -> Result<LinkingData> {
    let mut l = [[0; 4]; 4];
    let mut dlogs = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                let (r, lij) = linking_number(s.q[i], s.q[j], roots[j], s.p)?;
                dlogs[i][j] = r;
                l[i][j] = lij;
            }
        }
    }
    let diagonal = s.q.map(|qi| (((qi - 1) / s.p) % s.p) as FieldElem);
    Ok(LinkingData {
        primes: *s,
        l,
        roots,
        dlogs,
        diagonal,
    })
}

/// Row `i` is `sum_{j != i} l_ij [x_i, x_j]` in the bracket basis.
pub fn presentation_from_linking(d: &LinkingData, ctx: FieldCtx) -> QuadraticPresentation {
    presentation_from_matrix(&d.l, ctx)
}

pub(crate) fn presentation_from_matrix(
    l: &[[FieldElem; 4]; 4],
    ctx: FieldCtx,
) -> QuadraticPresentation {
    let mut rel = Matrix::zeros(4, 6);
    for i in 0..4 {
        for j in 0..4 {
            let c = l[i][j] % ctx.p();
            if i == j || c == 0 {
                continue;
            }
            // [x_i, x_j] = -x_ji when i > j
            let (col, v) = if i < j {
                (pair_index(i + 1, j + 1), c)
            } else {
                (pair_index(j + 1, i + 1), ctx.neg(c))
            };
            rel.set(i, col, ctx.add(rel.get(i, col), v));
        }
    }
    QuadraticPresentation::new(ctx, rel).expect("4x6 by construction")
}
