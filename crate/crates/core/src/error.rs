use alloc::string::String;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A configured size budget would be exceeded. Budgets are never
    /// silently truncated.
    #[error("{what}: {requested} exceeds the budget of {limit}")]
    Budget {
        what: &'static str,
        requested: u128,
        limit: u128,
    },
    #[error("{what}: {value} is outside the supported range (limit {limit})")]
    OutOfRange {
        what: &'static str,
        value: u128,
        limit: u128,
    },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("could not split composite cofactor {0}")]
    Factorization(u128),
    #[error("computation interrupted")]
    Interrupted,
    /// A mathematical identity that must hold failed. Always a bug or a
    /// counterexample, never an input problem.
    #[error("identity violated: {0}")]
    Violation(String),
}

pub type Result<T> = core::result::Result<T, Error>;
