use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use super::quadric_label;
use crate::error::{Error, Result};
use crate::field_linalg::{is_prime_u64, FieldCtx, FieldElem};
use crate::koch::{linking_number, presentation_from_matrix, primitive_root, PrimeSet};
use crate::reduction::OrbitLabel;

/// Largest admissible prime bound.
pub const SEARCH_BOUND_LIMIT: u64 = 100_000;

/// Environment variable overriding the worker count.
pub const THREADS_ENV: &str = "QUADPRES_THREADS";

const CHUNK: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchHit {
    pub primes: PrimeSet,
    /// `None` when the relators are dependent.
    pub orbit: Option<OrbitLabel>,
}

/// Primes `q <= bound` with `q = 1 mod p`, increasing.
pub fn tame_primes(p: u64, bound: u64) -> Vec<u64> {
    (p + 1..=bound)
        .step_by(p as usize)
        .filter(|&q| is_prime_u64(q))
        .collect()
}

/// Lazy, deterministic stream of classified prime sets: 4-subsets of
/// `tame_primes(p, bound)` in lexicographic order.
pub struct PrimeSetSearch {
    ctx: FieldCtx,
    primes: Vec<u64>,
    roots: Vec<u64>,
    links: HashMap<(usize, usize), FieldElem>,
    next_combo: Option<[usize; 4]>,
    target: Option<u8>,
    buffer: VecDeque<SearchHit>,
    pool: Option<rayon::ThreadPool>,
}

pub fn search_prime_sets(p: u64, bound: u64, target: Option<u8>) -> Result<PrimeSetSearch> {
    let ctx = FieldCtx::new(p).map_err(|e| match e {
        Error::InvalidModulus(p) => Error::PNotPrime(p),
        e => e,
    })?;
    if bound > SEARCH_BOUND_LIMIT {
        return Err(Error::InputTooLarge(bound));
    }
    if let Some(t) = target {
        if !(1..=4).contains(&t) {
            return Err(Error::Parse(format!(
                "orbit must be between 1 and 4, got {t}"
            )));
        }
    }
    let primes = tame_primes(p, bound);
    let roots = primes.iter().map(|&q| primitive_root(q)).collect();
    let next_combo = (primes.len() >= 4).then_some([0, 1, 2, 3]);
    let pool = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok());
    Ok(PrimeSetSearch {
        ctx,
        primes,
        roots,
        links: HashMap::new(),
        next_combo,
        target,
        buffer: VecDeque::new(),
        pool,
    })
}

fn advance(c: &[usize; 4], n: usize) -> Option<[usize; 4]> {
    let mut c = *c;
    for i in (0..4).rev() {
        if c[i] < n - 4 + i {
            c[i] += 1;
            for j in i + 1..4 {
                c[j] = c[j - 1] + 1;
            }
            return Some(c);
        }
    }
    None
}

impl PrimeSetSearch {
    fn fill(&mut self) -> bool {
        let mut chunk = Vec::with_capacity(CHUNK);
        while chunk.len() < CHUNK {
            let Some(c) = self.next_combo else { break };
            chunk.push(c);
            self.next_combo = advance(&c, self.primes.len());
        }
        if chunk.is_empty() {
            return false;
        }
        let p = self.ctx.p() as u64;
        let missing: Vec<(usize, usize)> = {
            let mut m: Vec<(usize, usize)> = chunk
                .iter()
                .flat_map(|c| {
                    c.iter().flat_map(move |&i| {
                        c.iter().filter(move |&&j| j != i).map(move |&j| (i, j))
                    })
                })
                .filter(|k| !self.links.contains_key(k))
                .collect();
            m.sort_unstable();
            m.dedup();
            m
        };
        for (i, j) in missing {
            let (_, l) = linking_number(self.primes[i], self.primes[j], self.roots[j], p)
                .expect("distinct primes are units mod each other");
            self.links.insert((i, j), l);
        }
        let ctx = self.ctx;
        let links = &self.links;
        let primes = &self.primes;
        let classify = |c: &[usize; 4]| -> SearchHit {
            let mut l = [[0; 4]; 4];
            for a in 0..4 {
                for b in 0..4 {
                    if a != b {
                        l[a][b] = links[&(c[a], c[b])];
                    }
                }
            }
            let q = presentation_from_matrix(&l, ctx);
            let orbit = if q.rank() == 4 {
                Some(
                    quadric_label(&ctx, &q.complement())
                        .expect("complement of a rank-4 presentation is a plane"),
                )
            } else {
                None
            };
            SearchHit {
                primes: PrimeSet {
                    p,
                    q: c.map(|i| primes[i]),
                },
                orbit,
            }
        };
        let run = || chunk.par_iter().map(classify).collect::<Vec<_>>();
        let hits = match &self.pool {
            Some(pool) => pool.install(run),
            None => run(),
        };
        let target = self.target;
        self.buffer.extend(
            hits.into_iter()
                .filter(|h| target.is_none_or(|t| h.orbit.map(|o| o.number()) == Some(t))),
        );
        true
    }
}

impl Iterator for PrimeSetSearch {
    type Item = SearchHit;

    fn next(&mut self) -> Option<SearchHit> {
        while self.buffer.is_empty() {
            if !self.fill() {
                return None;
            }
        }
        self.buffer.pop_front()
    }
}
