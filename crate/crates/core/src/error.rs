use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid h-vector: {0}")]
    InvalidHVector(String),

    #[error("invalid socle vector: {0}")]
    InvalidSocle(String),

    #[error("cannot parse {what} {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("codimension must be at least 1")]
    ZeroCodimension,

    #[error("{0} requires codimension 3, got {1}")]
    NotCodimensionThree(&'static str, usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("socle vector has s_{degree} > 0 below the pivot index b = {pivot}")]
    NotCompressedSocle { degree: usize, pivot: usize },

    #[error("no pivot index: r_c = {0} is negative (socle exceeds the full dimension)")]
    NoPivot(i128),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("corrupted f-profile: {0}")]
    CorruptProfile(String),

    /// A proven inequality did not hold. Always an implementation bug.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("polynomial syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid generator set: {0}")]
    InvalidGenerators(String),

    #[error("no seed in {seeds:?} produced a consistent generic h-vector")]
    RetryExhausted { seeds: Vec<u64> },
}
