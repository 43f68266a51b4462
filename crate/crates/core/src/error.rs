use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("expected a monic modulus of degree {expected}, got {got:?}")]
    DegreeMismatch { expected: u32, got: Vec<u32> },
    #[error("field size {0} exceeds 2^16")]
    FieldTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("characteristic {p} divides n = {n}")]
    CharDividesN { p: u32, n: usize },
    #[error("residue for component {0} has degree out of range")]
    DegreeOutOfRange(usize),
    #[error("element is not a unit")]
    NotAUnit,
    #[error("operands belong to different skew contexts")]
    ContextMismatch,
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("empty input family")]
    EmptyInput,
    #[error("matrix does not have full row rank")]
    NotFullRowRank,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("expected length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("the left ideal is not principal")]
    NotPrincipal,
    #[error("the left ideal is not delay-free")]
    NotDelayFree,
    #[error("the module is not a direct summand")]
    NotACode,
    #[error("annihilator ideal came out non-principal")]
    InternalNotPrincipal,
    #[error("polynomial is not reduced")]
    NotReduced,
    #[error("state space of size {states} exceeds the bound {bound}")]
    StateSpaceTooLarge { states: u128, bound: u128 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("not an automorphism image")]
    NotAnAutomorphism,
}

impl Error {
    /// Variant name, used as the machine-readable error tag.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::ReducibleModulus(_) => "ReducibleModulus",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::FieldTooLarge(_) => "FieldTooLarge",
            Error::DivisionByZero => "DivisionByZero",
            Error::CharDividesN { .. } => "CharDividesN",
            Error::DegreeOutOfRange(_) => "DegreeOutOfRange",
            Error::NotAUnit => "NotAUnit",
            Error::ContextMismatch => "ContextMismatch",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::EmptyInput => "EmptyInput",
            Error::NotFullRowRank => "NotFullRowRank",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::NotPrincipal => "NotPrincipal",
            Error::NotDelayFree => "NotDelayFree",
            Error::NotACode => "NotACode",
            Error::InternalNotPrincipal => "InternalNotPrincipal",
            Error::NotReduced => "NotReduced",
            Error::StateSpaceTooLarge { .. } => "StateSpaceTooLarge",
            Error::InvalidParameters(_) => "InvalidParameters",
            Error::NotAnAutomorphism => "NotAnAutomorphism",
        }
    }
}
