use super::{quotient_dims, GradedDims, QuadraticPresentation, GENERATORS};
use crate::error::{Error, Result};

fn mobius(mut n: u64) -> i64 {
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Dimension of the degree-`n` part of the free Lie algebra on `m` generators,
/// `(1/n) sum_{d | n} mu(d) m^(n/d)`.
pub fn witt_dim(m: u64, n: u32) -> u64 {
    assert!(n >= 1);
    let total: i128 = (1..=n as u64)
        .filter(|d| (n as u64).is_multiple_of(*d))
        .map(|d| mobius(d) as i128 * (m as i128).pow(n / d as u32))
        .sum();
    (total / n as i128) as u64
}

/// Coefficients of `prod_{n <= c} (1 - t^n)^(-a_n)` through `t^c`.
pub fn enveloping_series(dims: &GradedDims) -> Vec<i128> {
    let c = dims.max_degree();
    let mut s = vec![0i128; c + 1];
    s[0] = 1;
    for (idx, &a) in dims.as_slice().iter().enumerate() {
        let n = idx + 1;
        for _ in 0..a {
            // multiply by 1/(1 - t^n)
            for i in n..=c {
                s[i] += s[i - n];
            }
        }
    }
    s
}

/// Coefficients of `1/(1 - m t + m t^2)` through `t^c`.
pub fn strongly_free_target(m: u64, c: usize) -> Vec<i128> {
    let m = m as i128;
    let mut out = Vec::with_capacity(c + 1);
    for n in 0..=c {
        let v = match n {
            0 => 1,
            1 => m,
            _ => m * out[n - 1] - m * out[n - 2],
        };
        out.push(v);
    }
    out
}

/// Whether the enveloping-algebra series agrees with `1/(1 - m t + m t^2)`
/// through the computed degree.
pub fn series_check(dims: &GradedDims, m: u64) -> bool {
    enveloping_series(dims) == strongly_free_target(m, dims.max_degree())
}

/// Mild iff `a_3 = 4` and `a_4 = 6`.
pub fn is_mild(dims: &GradedDims) -> Result<bool> {
    if dims.max_degree() < 4 {
        return Err(Error::InsufficientDegree {
            have: dims.max_degree(),
            need: 4,
        });
    }
    Ok(dims.get(3) == Some(4) && dims.get(4) == Some(6))
}

/// `prod_{n <= c} (1 - t^n)^(a_n) - (1 - m t + m t^2)` truncated after `t^c`.
pub fn poincare_residual(dims: &GradedDims, m: u64) -> Vec<i128> {
    let c = dims.max_degree();
    let mut s = vec![0i128; c + 1];
    s[0] = 1;
    for (idx, &a) in dims.as_slice().iter().enumerate() {
        let n = idx + 1;
        for _ in 0..a {
            for i in (n..=c).rev() {
                s[i] -= s[i - n];
            }
        }
    }
    let m = m as i128;
    for (i, target) in [1, -m, m].into_iter().enumerate() {
        if i <= c {
            s[i] -= target;
        }
    }
    s
}

/// Residual polynomial for a presentation, computed from its graded dimensions.
pub fn question_d_probe(q: &QuadraticPresentation, c: usize) -> Result<Vec<i128>> {
    let dims = quotient_dims(q, c)?;
    Ok(poincare_residual(&dims, GENERATORS as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(a: &[usize]) -> GradedDims {
        GradedDims::new(a.to_vec())
    }

    #[test]
    fn witt_values() {
        assert_eq!(witt_dim(4, 1), 4);
        assert_eq!(witt_dim(4, 2), 6);
        assert_eq!(witt_dim(4, 3), 20);
        assert_eq!(witt_dim(4, 4), 60);
        assert_eq!(witt_dim(4, 5), 204);
        assert_eq!(witt_dim(2, 3), 2);
    }

    #[test]
    fn target_coefficients() {
        assert_eq!(strongly_free_target(4, 4), vec![1, 4, 12, 32, 80]);
    }

    #[test]
    fn series_examples() {
        assert!(series_check(&dims(&[4, 2, 4, 6]), 4));
        assert_eq!(
            enveloping_series(&dims(&[4, 2, 4, 6])),
            vec![1, 4, 12, 32, 80]
        );
        assert!(!series_check(&dims(&[4, 2, 5]), 4));
        assert_eq!(enveloping_series(&dims(&[4, 2, 5]))[3], 33);
        assert!(!series_check(&dims(&[4, 2, 4, 7]), 4));
        assert_eq!(enveloping_series(&dims(&[4, 2, 4, 7]))[4], 81);
    }

    #[test]
    fn mildness_verdicts() {
        assert_eq!(is_mild(&dims(&[4, 2, 4, 6])), Ok(true));
        assert_eq!(is_mild(&dims(&[4, 2, 5, 9])), Ok(false));
        assert_eq!(is_mild(&dims(&[4, 2, 4, 7])), Ok(false));
        assert_eq!(
            is_mild(&dims(&[4, 2, 5])),
            Err(Error::InsufficientDegree { have: 3, need: 4 })
        );
    }

    #[test]
    fn residuals() {
        assert_eq!(poincare_residual(&dims(&[4, 2, 4, 6]), 4), vec![0; 5]);
        let r = poincare_residual(&dims(&[4, 2, 4, 7]), 4);
        assert_eq!(&r[..4], &[0, 0, 0, 0]);
        assert_ne!(r[4], 0);
        let r = poincare_residual(&dims(&[4, 2, 5]), 4);
        assert_eq!(&r[..3], &[0, 0, 0]);
        assert_ne!(r[3], 0);
    }
}
