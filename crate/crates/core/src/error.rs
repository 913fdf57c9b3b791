use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported extension degree {0} (expected 1..=16)")]
    UnsupportedDegree(u32),
    #[error("invalid field parameters: {0}")]
    InvalidField(String),
    #[error("division by zero in GF(2^n)")]
    DivisionByZero,
    #[error("{m} does not divide {n}: GF(2^{m}) is not a subfield of GF(2^{n})")]
    InvalidSubfield { n: u32, m: u32 },
    #[error("length {0} is not a power of two")]
    Shape(usize),
    #[error("cannot embed {m}-bit outputs into GF(2^{n}): {m} does not divide {n}")]
    InvalidEmbedding { n: u32, m: u32 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("the point set is the whole space, so it has no nonzero annihilator")]
    NoAnnihilator,
    #[error("0 cannot be a zero of a cyclic code of length 2^n - 1")]
    ZeroNotAllowed,
    #[error("the code has no nonzero codeword")]
    NoCodeword,
    #[error("minimum distance {delta} exceeds 2^{n}")]
    ImpossibleDistance { delta: u64, n: u32 },
    #[error("initial state 0 gives a degenerate orbit")]
    DegenerateOrbit,
    #[error("annihilator contract violated at t = {0}")]
    NotAnnihilator(usize),
    #[error("parse error at `{field}`: {msg}")]
    Parse { field: String, msg: String },
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(field: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            msg: msg.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
