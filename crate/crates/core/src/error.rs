use thiserror::Error;

use crate::mask::SubsetMask;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe must have between 1 and {max} points, got {got}")]
    InvalidUniverseSize { got: usize, max: usize },
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown point label `{0}`")]
    UnknownLabel(String),
    #[error("mask {mask:#b} does not fit a universe of {size} points")]
    MaskOutOfRange { mask: u16, size: usize },
    #[error("open family must contain the empty set and the whole universe")]
    MissingEmptyOrFull,
    #[error("open family not closed under union: {0:?} ∪ {1:?} is missing")]
    NotClosedUnderUnion(SubsetMask, SubsetMask),
    #[error("open family not closed under intersection: {0:?} ∩ {1:?} is missing")]
    NotClosedUnderIntersection(SubsetMask, SubsetMask),
    #[error("topology enumeration supports at most {max} points, got {got}")]
    UniverseTooLarge { got: usize, max: usize },
    #[error("operation is not expansive on open set {0:?}")]
    NotExpansiveOnOpens(SubsetMask),
    #[error("operation table has {got} entries, expected {expected}")]
    TableSize { got: usize, expected: usize },
    #[error("universes do not match: {0}")]
    UniverseMismatch(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("claim {claim} cannot be evaluated on this instance: {reason}")]
    ShapeMismatch { claim: String, reason: String },
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
}

impl Error {
    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            path: path.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
