use thiserror::Error;

/// Errors surfaced by the library. The CLI maps these onto exit codes:
/// validation problems exit 2, verification failures 3, capability caps 4.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid simple type {family}{rank}: {reason}")]
    InvalidType {
        family: char,
        rank: usize,
        reason: String,
    },

    #[error("unsupported twisted diagram {family}{rank}^({twist})")]
    UnsupportedTwist {
        family: char,
        rank: usize,
        twist: usize,
    },

    #[error("invalid Kac labels: {0}")]
    InvalidLabels(String),

    #[error("operation requires twist {required}, got {got}: {hint}")]
    WrongTwist {
        required: usize,
        got: usize,
        hint: String,
    },

    #[error("twist {twist} does not divide the requested order {order}")]
    TwistOrderMismatch { twist: usize, order: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("size cap exceeded: {0}")]
    CapExceeded(String),

    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
