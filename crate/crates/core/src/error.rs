use thiserror::Error;

/// Errors produced by the library.
///
/// Invalid user input and violated size limits are ordinary errors. The
/// `Disagreement` and `FillingViolation` variants signal that two routes
/// which must agree did not, i.e. an internal bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation `{input}`: {reason}")]
    InvalidPermutation { input: String, reason: String },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("{what} index {index} out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },

    #[error("size {size} exceeds the configured limit {limit}")]
    SizeLimit { size: usize, limit: usize },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("filling violates {property} at box ({row},{col})")]
    FillingViolation {
        property: &'static str,
        row: usize,
        col: usize,
    },

    #[error("zero-one predicates disagree on {perm}: {detail}")]
    Disagreement { perm: String, detail: String },
}

impl Error {
    /// True for errors that indicate a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Disagreement { .. } | Error::FillingViolation { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
