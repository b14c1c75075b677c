use crate::error::{Error, Result};

/// A residue in `[0, p)`. The modulus travels separately in a [`FieldCtx`].
pub type FieldElem = u32;

/// Largest modulus accepted; keeps every product inside a `u64` with room to spare.
const MAX_MODULUS: u64 = 1 << 16;

/// The prime field `F_p` for an odd prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    p: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SquareClass {
    Zero,
    Square,
    NonSquare,
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    acc
}

impl FieldCtx {
    pub fn new(p: u64) -> Result<Self> {
        if p.is_multiple_of(2) {
            return Err(Error::PEven(p));
        }
        if !is_prime_u64(p) {
            return Err(Error::InvalidModulus(p));
        }
        if p >= MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        Ok(Self { p: p as u32 })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, a: i64) -> FieldElem {
        a.rem_euclid(self.p as i64) as FieldElem
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        ((a as u64 * b as u64) % self.p as u64) as FieldElem
    }

    pub fn pow(&self, a: FieldElem, exp: u64) -> FieldElem {
        pow_mod(a as u64, exp, self.p as u64) as FieldElem
    }

    /// Multiplicative inverse via Fermat. Panics on zero.
    pub fn inv(&self, a: FieldElem) -> FieldElem {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    #[inline]
    pub fn div(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.mul(a, self.inv(b))
    }

    /// Euler's criterion.
    pub fn square_class(&self, a: FieldElem) -> SquareClass {
        let a = a % self.p;
        if a == 0 {
            return SquareClass::Zero;
        }
        if self.pow(a, (self.p as u64 - 1) / 2) == 1 {
            SquareClass::Square
        } else {
            SquareClass::NonSquare
        }
    }

    /// A square root of `a` if one exists (Tonelli-Shanks).
    pub fn sqrt(&self, a: FieldElem) -> Option<FieldElem> {
        match self.square_class(a) {
            SquareClass::Zero => return Some(0),
            SquareClass::NonSquare => return None,
            SquareClass::Square => {}
        }
        let p = self.p as u64;
        let mut q = p - 1;
        let mut s = 0;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let z = (2..p)
            .find(|&z| self.square_class(z as FieldElem) == SquareClass::NonSquare)
            .expect("odd prime field has a nonsquare") as FieldElem;
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, q.div_ceil(2));
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = self.mul(t2, t2);
                i += 1;
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = self.mul(b, b);
            }
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r)
    }

    pub fn is_generator(&self, g: FieldElem) -> bool {
        let g = g % self.p;
        g != 0
            && prime_factors(self.p as u64 - 1)
                .into_iter()
                .all(|l| self.pow(g, (self.p as u64 - 1) / l) != 1)
    }

    /// Smallest `g` in `[2, p)` generating `F_p^×`. For `p = 3` this is 2.
    pub fn smallest_generator(&self) -> FieldElem {
        (2..self.p)
            .find(|&g| self.is_generator(g))
            .expect("F_p^x is cyclic")
    }

    /// All elements `0..p`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        0..self.p
    }

    /// All nonzero elements.
    pub fn units(&self) -> impl Iterator<Item = FieldElem> {
        1..self.p
    }
}
