use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("enumeration cap of {cap} elements exceeded ({partial} elements found so far)")]
    CapExceeded { cap: usize, partial: usize },

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("element {0} is not in the group")]
    NotInGroup(String),

    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("class functions belong to different groups ({left} vs {right} classes)")]
    GroupMismatch { left: usize, right: usize },

    #[error("not a character: {0}")]
    NotACharacter(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An internal cross-check failed. Never expected on valid input.
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
