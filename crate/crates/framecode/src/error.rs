use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// Resource limits always surface as typed errors ([`Error::Enumeration`],
/// [`Error::SearchBudget`]); no operation ever truncates silently.
#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    /// An enumeration would visit more objects than the configured budget.
    #[error("enumeration budget exceeded: {what} needs {needed} > limit {limit}")]
    Enumeration {
        what: &'static str,
        needed: u128,
        limit: u64,
    },

    /// The self-dual-subcode search ran out of its node budget.
    #[error("search budget exceeded after {explored} nodes")]
    SearchBudget { explored: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A mathematical identity the implementation relies on failed; this
    /// indicates invalid input data or a bug, never a user error.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    /// Fusion of two modules with distinct nonzero 1/16-words has no general
    /// formula and is deliberately unimplemented.
    #[error("unsupported fusion: both 1/16-words nonzero and distinct")]
    UnsupportedFusion,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
