use thiserror::Error;

/// Errors raised by field, polynomial, ring and code constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside the supported parameter range.
    #[error("parameter error: {0}")]
    Parameter(String),
    /// An operation is undefined for the given operand (e.g. inverting zero).
    #[error("domain error: {0}")]
    Domain(String),
    /// An internal invariant or an input consistency condition failed.
    #[error("consistency error: {0}")]
    Consistency(String),
    /// A search would exceed its work budget.
    #[error("budget error: {0}")]
    Budget(String),
    /// A requested object does not exist for the given parameters.
    #[error("construction error: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! param_err {
    ($($arg:tt)*) => { $crate::error::Error::Parameter(format!($($arg)*)) };
}
macro_rules! consistency_err {
    ($($arg:tt)*) => { $crate::error::Error::Consistency(format!($($arg)*)) };
}
pub(crate) use consistency_err;
pub(crate) use param_err;
