//! Error type shared by every module.

use thiserror::Error;

/// Errors raised by preconditions of the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("level {level} exceeds the supported cap {cap}")]
    LevelTooLarge { level: u32, cap: u32 },
    #[error("unsupported series exponent {0}; expected one of -1, 0, 1, 2")]
    InvalidExponent(i64),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("operand does not live on this carrier: {0}")]
    WrongCarrier(String),
    #[error("singular matrix")]
    Singular,
    #[error("division by zero")]
    DivisionByZero,
    #[error("node {node} out of range for {nodes} nodes")]
    NodeOutOfRange { node: usize, nodes: usize },
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),
    #[error("oscillator mode must be odd and nonzero, got {0}")]
    EvenMode(i64),
    #[error("truncation {truncation} too small for level {level}")]
    TruncationTooSmall { truncation: u32, level: u32 },
    #[error("empty exactness window")]
    EmptyWindow,
    #[error("unknown relation {0}")]
    UnknownRelation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
