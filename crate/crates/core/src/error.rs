use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("exponent vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("colon by the zero ideal is undefined")]
    ColonByZero,
    #[error("ideal is the unit ideal")]
    UnitIdeal,
    #[error("ideal must be a monomial ideal")]
    NotMonomial,
    #[error("ideal must be a squarefree monomial ideal")]
    NotSquarefree,
    #[error("variable blocks overlap: {0}")]
    OverlappingVariables(String),
    #[error("element {element} is a zerodivisor modulo the ideal (colon is {colon})")]
    Zerodivisor { element: String, colon: String },
    #[error("substitution is not invertible")]
    NotInvertible,
    #[error("Betti table not certified up to degree {cap}")]
    Uncertified { cap: u32 },
    #[error("failed to draw a regular sequence after {attempts} attempts (seed {seed})")]
    RetryLimit { attempts: usize, seed: u64 },
    #[error("invalid link (seed {seed}): {reason}")]
    InvalidLink { seed: u64, reason: String },
    #[error("generic link needs {needed} variables, cap is {cap}")]
    VariableCap { needed: usize, cap: usize },
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unknown ideal `{0}`")]
    UnknownIdeal(String),
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
    #[error("{0}")]
    Invalid(String),
}
