use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("{what} index {index} out of range (size {size})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        size: usize,
    },

    #[error("invalid experiment: {0}")]
    InvalidExperiment(String),

    #[error("invalid prior: {0}")]
    InvalidPrior(String),

    #[error("experiments do not share the same parameter labels")]
    MismatchedTheta,

    #[error("mismatched spaces: {0}")]
    MismatchedSpace(String),

    #[error("hypothesis sets overlap")]
    OverlappingHypotheses,

    #[error("hypothesis set is empty")]
    EmptyHypothesis,

    #[error("parameter indices must differ")]
    EqualIndices,

    #[error("support holds; no counterexample prior exists")]
    NoCounterexample,

    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("conditioning event is null")]
    NullConditioning,

    #[error("missing witness for parameter {0}")]
    MissingWitness(String),

    #[error("sequence {0} is inconsistent with the stopping rule")]
    InconsistentSequence(String),

    #[error("the experiments share no outcome labels")]
    NoSharedOutcomes,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
