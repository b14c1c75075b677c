use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field_linalg::{FieldCtx, FieldElem};

/// An elementary generator of `GL_4`, indices 1-based.
///
/// * `AddCol { i, j, a }`: the column operation `c_j -> c_j + a c_i`; its image under psi is `M_ij^a`.
/// * `SwapCol { i, j }`: swap `c_i` and `c_j`; image `T_ij`.
/// * `ScaleCol { i, a }`: `c_i -> a c_i`; image `S_i^a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenToken {
    AddCol { i: u8, j: u8, a: FieldElem },
    SwapCol { i: u8, j: u8 },
    ScaleCol { i: u8, a: FieldElem },
}

impl GenToken {
    pub fn add(i: u8, j: u8, a: FieldElem) -> Self {
        GenToken::AddCol { i, j, a }
    }

    pub fn swap(i: u8, j: u8) -> Self {
        GenToken::SwapCol { i, j }
    }

    pub fn scale(i: u8, a: FieldElem) -> Self {
        GenToken::ScaleCol { i, a }
    }

    pub fn validate(&self, ctx: &FieldCtx) -> Result<()> {
        let idx_ok = |i: u8| (1..=4).contains(&i);
        let ok = match *self {
            GenToken::AddCol { i, j, a } => idx_ok(i) && idx_ok(j) && i != j && a < ctx.p(),
            GenToken::SwapCol { i, j } => idx_ok(i) && idx_ok(j) && i != j,
            GenToken::ScaleCol { i, a } => idx_ok(i) && a != 0 && a < ctx.p(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Parse(format!("invalid generator token {self}")))
        }
    }

    pub fn inverse(&self, ctx: &FieldCtx) -> Self {
        match *self {
            GenToken::AddCol { i, j, a } => GenToken::AddCol {
                i,
                j,
                a: ctx.neg(a),
            },
            GenToken::SwapCol { .. } => *self,
            GenToken::ScaleCol { i, a } => GenToken::ScaleCol { i, a: ctx.inv(a) },
        }
    }
}

impl fmt::Display for GenToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenToken::AddCol { i, j, a } => write!(f, "A({i},{j};{a})"),
            GenToken::SwapCol { i, j } => write!(f, "S({i},{j})"),
            GenToken::ScaleCol { i, a } => write!(f, "C({i};{a})"),
        }
    }
}

impl FromStr for GenToken {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad token {s:?}"));
        let s = s.trim();
        let (kind, rest) = s.split_at(s.find('(').ok_or_else(bad)?);
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        let (idx, scalar) = match inner.split_once(';') {
            Some((idx, a)) => (idx, Some(num(a)?)),
            None => (inner, None),
        };
        let idx: Vec<u8> = idx
            .split(',')
            .map(|t| t.trim().parse::<u8>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (kind, idx.as_slice(), scalar) {
            ("A", [i, j], Some(a)) => Ok(GenToken::AddCol { i: *i, j: *j, a }),
            ("S", [i, j], None) => Ok(GenToken::SwapCol { i: *i, j: *j }),
            ("C", [i], Some(a)) => Ok(GenToken::ScaleCol { i: *i, a }),
            _ => Err(bad()),
        }
    }
}

/// A product of generators, read left to right as successive right multiplications.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GroupWord {
    tokens: Vec<GenToken>,
}

impl GroupWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_tokens(tokens: Vec<GenToken>) -> Self {
        Self { tokens }
    }

    pub fn tokens(&self) -> &[GenToken] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn push(&mut self, t: GenToken) {
        self.tokens.push(t);
    }

    pub fn extend(&mut self, other: &GroupWord) {
        self.tokens.extend_from_slice(&other.tokens);
    }

    /// Token-wise inverse in reverse order.
    pub fn inverse(&self, ctx: &FieldCtx) -> Self {
        Self {
            tokens: self.tokens.iter().rev().map(|t| t.inverse(ctx)).collect(),
        }
    }

    pub fn validate(&self, ctx: &FieldCtx) -> Result<()> {
        self.tokens.iter().try_for_each(|t| t.validate(ctx))
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, t) in self.tokens.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = s
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { tokens })
    }
}

impl FromIterator<GenToken> for GroupWord {
    fn from_iter<I: IntoIterator<Item = GenToken>>(iter: I) -> Self {
        Self {
            tokens: iter.into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn text_format() {
        let w = GroupWord::from_tokens(vec![
            GenToken::add(1, 2, 4),
            GenToken::swap(1, 2),
            GenToken::scale(3, 2),
        ]);
        assert_eq!(w.to_string(), "A(1,2;4) S(1,2) C(3;2)");
        assert_eq!(w.to_string().parse::<GroupWord>().unwrap(), w);
        assert_eq!("".parse::<GroupWord>().unwrap(), GroupWord::new());
        assert!("A(1,2)".parse::<GroupWord>().is_err());
        assert!("S(1,2;3)".parse::<GroupWord>().is_err());
        assert!("Q(1)".parse::<GroupWord>().is_err());
    }

    #[test]
    fn token_validation() {
        let k = FieldCtx::new(5).unwrap();
        assert!(GenToken::add(1, 1, 2).validate(&k).is_err());
        assert!(GenToken::swap(0, 2).validate(&k).is_err());
        assert!(GenToken::scale(2, 0).validate(&k).is_err());
        assert!(GenToken::add(1, 2, 0).validate(&k).is_ok());
        assert!(GenToken::add(4, 3, 5).validate(&k).is_err());
    }

    fn arb_token() -> impl Strategy<Value = GenToken> {
        prop_oneof![
            (1u8..5, 1u8..5, 0u32..7).prop_filter_map("i != j", |(i, j, a)| {
                (i != j).then_some(GenToken::add(i, j, a))
            }),
            (1u8..5, 1u8..5)
                .prop_filter_map("i != j", |(i, j)| (i != j).then_some(GenToken::swap(i, j))),
            (1u8..5, 1u32..7).prop_map(|(i, a)| GenToken::scale(i, a)),
        ]
    }

    proptest! {
        #[test]
        fn display_parse_roundtrip(tokens in proptest::collection::vec(arb_token(), 0..12)) {
            let w = GroupWord::from_tokens(tokens);
            prop_assert_eq!(w.to_string().parse::<GroupWord>().unwrap(), w);
        }
    }
}
