//! Error type shared by all modules.

use std::fmt;

/// Library-wide error.
///
/// The variants mirror the CLI exit-code contract: `Parameter` maps to
/// exit 2, `Consistency` (a theorem-violating intermediate result) to
/// exit 3, and `Precision` (a truncation that cannot be certified) to
/// exit 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Invalid input: unsupported parameter, out-of-range argument,
    /// parse failure.
    Parameter(String),
    /// A mathematically impossible intermediate result. These are never
    /// clamped or rounded; they indicate an implementation bug.
    Consistency(String),
    /// Working precision was exhausted before the result could be
    /// certified.
    Precision(String),
    /// Division by zero or inversion of a non-unit.
    Division(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parameter(m) => write!(f, "parameter error: {m}"),
            Error::Consistency(m) => write!(f, "consistency failure: {m}"),
            Error::Precision(m) => write!(f, "precision failure: {m}"),
            Error::Division(m) => write!(f, "division error: {m}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
