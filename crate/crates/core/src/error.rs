//! Error type shared by all modules.

use std::fmt;

/// Errors raised by code, series, module and search operations.
///
/// Capacity errors are raised whenever an enumeration would exceed the
/// documented caps; nothing is ever silently truncated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-contract input (mixed lengths, word not in a
    /// required code, value outside an allowed set, ...).
    Input(String),
    /// An enumeration would exceed a documented cap. The message names the
    /// cap and, where one exists, the cheaper alternative.
    Capacity(String),
    /// Exact arithmetic produced something impossible for valid input
    /// (negative or non-integer transformed weight counts, disagreeing
    /// series routes).
    Inconsistency(String),
    /// A series operation outside its domain (reciprocal of a series with
    /// no leading term, evaluation point out of range).
    Domain(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Input(m) => write!(f, "input error: {m}"),
            Error::Capacity(m) => write!(f, "capacity exceeded: {m}"),
            Error::Inconsistency(m) => write!(f, "inconsistency: {m}"),
            Error::Domain(m) => write!(f, "domain error: {m}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
