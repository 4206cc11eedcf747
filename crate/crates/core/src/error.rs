use thiserror::Error;

/// Failures surfaced by the library.
///
/// Variants fall in three severity classes (see [`Error::class`]): malformed
/// input, domain errors on well-formed input, and internal invariant
/// violations that indicate a defect in the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Schema(String),

    #[error("encoding length {length} is shorter than the {parts} parts of the partition")]
    EncodingTooShort { length: usize, parts: usize },

    #[error("not a valid Lusztig sequence: {0}")]
    BadZSeq(String),

    #[error("the relation on class {class} is not a strict total order: {detail}")]
    MalformedOrder { class: usize, detail: String },

    #[error("weight function is not dominant for the given order")]
    NotDominant,

    #[error("profile mixes integral and half-integral values on its infinite blocks")]
    MixedIntegrality,

    #[error("{0} has no rank")]
    NoRank(String),

    #[error("operation not defined for {0}")]
    Unsupported(String),

    #[error("calibration failed: {reason}")]
    Calibration { reason: String, report: serde_json::Value },

    #[error("invariant violated: {what}")]
    Invariant { what: String, state: serde_json::Value },
}

/// Coarse severity used by the command-line front end to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Schema,
    Domain,
    Invariant,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Schema(_) | Error::BadZSeq(_) => ErrorClass::Schema,
            Error::MalformedOrder { .. } | Error::Invariant { .. } | Error::Calibration { .. } => ErrorClass::Invariant,
            _ => ErrorClass::Domain,
        }
    }

    /// Intermediate state attached to invariant failures, if any.
    pub fn state(&self) -> Option<&serde_json::Value> {
        match self {
            Error::Invariant { state, .. } => Some(state),
            Error::Calibration { report, .. } => Some(report),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
