use thiserror::Error;

/// Errors surfaced by every layer of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown group spec `{0}`")]
    UnknownGroup(String),

    #[error("cannot parse element `{text}` in {group}: {reason}")]
    ParseElement { group: String, text: String, reason: String },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("invalid generating set: {0}")]
    InvalidSet(String),

    #[error("operation requires a finite group or an explicit scope: {0}")]
    ScopeRequired(String),

    #[error("unsupported for this group: {0}")]
    Unsupported(String),

    /// The group does not satisfy the hypotheses of the requested construction.
    #[error("hypothesis refused: {reason} (classification: {verdict})")]
    HypothesisRefused { verdict: String, reason: String },

    /// Candidate search ran out of budget.
    #[error("search failure after {tested} candidates: {context}")]
    SearchFailure { tested: usize, context: String },

    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),

    /// A postcondition failed on re-verification; indicates a bug.
    #[error("internal check failed: {0}")]
    Internal(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Process exit code used by the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::HypothesisRefused { .. } => 2,
            Error::SearchFailure { .. } | Error::BudgetExhausted(_) => 3,
            Error::Io(_) => 4,
            _ => 1,
        }
    }
}
