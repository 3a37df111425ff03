use thiserror::Error;

/// Errors raised by the algebra engine, the verifiers and the driver.
///
/// The type is `Clone` so that failed computations can be memoized alongside
/// successful ones.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative argument {0} to quantum factorial")]
    NegativeFactorial(i64),
    #[error("invalid Cartan datum: {0}")]
    InvalidDatum(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("index {index} out of range for rank {rank}")]
    UnknownIndex { index: usize, rank: usize },
    #[error("degree cap {cap} exceeded (needed {needed})")]
    CapExceeded { cap: usize, needed: usize },
    #[error("element involves generator index {found}, expected only index {expected}")]
    ForeignIndex { expected: usize, found: usize },
    #[error("index mismatch between modules: {0} vs {1}")]
    IndexMismatch(usize, usize),
    #[error("representation check failed: {0}")]
    InvalidRep(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("config error on line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
