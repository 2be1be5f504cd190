use thiserror::Error;

/// Errors surfaced by the engine. Every failure mode is structured; nothing
/// is reported through panics in normal operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("ring mismatch: operands belong to different rings")]
    RingMismatch,
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("non-homogeneous input: {0}")]
    NonHomogeneous(String),
    #[error("incompatible degrees: {0}")]
    DegreeMismatch(String),
    #[error("map is not well defined modulo the given presentations")]
    MapNotWellDefined,
    #[error("resolution bound {bound} exceeded while computing {what}")]
    BoundExceeded { what: String, bound: usize },
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("ambiguous twists: {0}")]
    AmbiguousTwists(String),
    #[error("{0} is undefined for the zero module")]
    ZeroModule(String),
    #[error("undefined name `{0}`")]
    Undefined(String),
    #[error("rank undefined: {0}")]
    RankUndefined(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;
