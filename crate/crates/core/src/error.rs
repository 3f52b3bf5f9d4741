use thiserror::Error;

/// Failure classes shared by every module.
///
/// A failed mathematical *check* is never an `Error`; checks return verdicts.
/// Errors are reserved for malformed input, violated preconditions, and
/// refusals to run outside a computational budget.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation (e.g. `vp(0, p)`).
    #[error("domain error: {0}")]
    Domain(String),
    /// An argument is malformed or out of range.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// A documented precondition of the operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A numeric hypothesis of the underlying theorem fails for this input.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    /// The input is well formed but outside what this crate computes.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// The computation was refused because it exceeds its size budget.
    #[error("refused: {0}")]
    Refused(String),
    /// An internal invariant was violated; indicates a bug or bad input that slipped through.
    #[error("invariant violated: {0}")]
    Invariant(String),
    /// Text input (fixtures, flags) could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
