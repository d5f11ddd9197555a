use thiserror::Error;

/// Errors raised by the algebra, distribution and reconstruction layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("undefined input: {0}")]
    UndefinedInput(&'static str),
    #[error("polynomial {0} has no order (constant, or divisible by X)")]
    NoOrder(String),
    #[error("generator {generator} does not divide X^{n}+1")]
    InvalidGenerator { n: usize, generator: String },
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("resource guard: {what} is {value}, cap is {cap}")]
    ResourceGuard { what: &'static str, value: usize, cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("corrupt input: {0}")]
    CorruptInput(String),
    #[error("offset {s} must be smaller than block length {n}")]
    InvalidOffset { s: usize, n: usize },
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn guard(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::ResourceGuard { what, value, cap })
    } else {
        Ok(())
    }
}
