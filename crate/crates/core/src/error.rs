use thiserror::Error;

/// Errors raised by the exact constructions in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0/0 is not a rational number")]
    Indeterminate,
    #[error("{op} is undefined at {value}")]
    Domain { op: &'static str, value: String },
    #[error("expected {left} < {right}")]
    Order { left: String, right: String },
    #[error("matrix ({n} {m}; {t} {s}) does not have determinant 1")]
    NotUnimodular {
        n: String,
        m: String,
        t: String,
        s: String,
    },
    #[error("matrix has a negative column sum and does not name a positive rational")]
    NegativeMatrix,
    #[error("index must be at least 1")]
    ZeroIndex,
    #[error("word is empty")]
    EmptyWord,
    #[error("word {word} is too short: {op} needs length at least {min}")]
    WordTooShort {
        op: &'static str,
        word: String,
        min: usize,
    },
    #[error("{0} is not a palindrome")]
    NotPalindrome(String),
    #[error("{0} is not a Farey-Christoffel word")]
    NotFcWord(String),
    #[error("factor length {n} exceeds word length {len}")]
    FactorTooLong { n: usize, len: usize },
    #[error("{0} is not a dyadic rational in [0, 1]")]
    NotDyadic(String),
    #[error("geodesic with endpoint w = 1 runs into the cusp")]
    CuspOrbit,
    #[error("geodesic endpoints must satisfy u < 0 < w")]
    NotInSection,
    #[error("circles touch the real line at the same point")]
    IdenticalCircles,
    #[error("slope generator exhausted after {produced} symbols, {needed} needed")]
    GeneratorExhausted { produced: usize, needed: usize },
    #[error("prefix too short: {0}")]
    PrefixTooShort(&'static str),
    #[error("invalid slope: {0}")]
    InvalidSlope(String),
    #[error("level must be at least {min}, got {level}")]
    Level { level: u32, min: u32 },
    #[error("empty interval ({0}, {1})")]
    EmptyInterval(String, String),
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(op: &'static str, value: impl ToString) -> Error {
    Error::Domain {
        op,
        value: value.to_string(),
    }
}
