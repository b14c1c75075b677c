use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not an odd prime")]
    InvalidModulus(u64),
    #[error("modulus {0} is too large for single-word arithmetic")]
    ModulusTooLarge(u64),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    BadDimension { expected: usize, found: usize },
    #[error("zero vector has no orbit")]
    ZeroVector,
    #[error("relators have rank {rank} < 4 (cup product not surjective)")]
    RankDeficient { rank: usize },
    #[error("degree {requested} exceeds the configured cap {cap}")]
    DegreeTooLarge { requested: usize, cap: usize },
    #[error("graded dimensions only known through degree {have}, need {need}")]
    InsufficientDegree { have: usize, need: usize },
    #[error("{0} is not a unit")]
    NotAUnit(u64),
    #[error("p must be odd, got {0}")]
    PEven(u64),
    #[error("p = {0} is not prime")]
    PNotPrime(u64),
    #[error("q{index} = {value} is not prime")]
    NotPrime { index: usize, value: u64 },
    #[error("q{index} = {value} is not congruent to 1 mod {p}")]
    NotCongruentOneModP { index: usize, value: u64, p: u64 },
    #[error("prime set contains a duplicate prime {0}")]
    DuplicatePrime(u64),
    #[error("input {0} exceeds the supported bound")]
    InputTooLarge(u64),
    #[error("{count} subspaces exceed the enumeration guard {limit}")]
    TooLarge { count: u128, limit: u128 },
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
