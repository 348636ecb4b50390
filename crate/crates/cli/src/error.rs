//! Errors of the command-line front end and their exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at column {}: expected {expected}, found {found}", .pos + 1)]
    Parse { pos: usize, expected: String, found: String },
    #[error("expression mixes wreath atoms (column {}) with Heisenberg atoms (column {})", .wreath + 1, .heisenberg + 1)]
    MixedKinds { wreath: usize, heisenberg: usize },
    #[error("cannot multiply a wreath element by a Heisenberg element")]
    KindMismatch,
    #[error("cannot infer rank: {0}")]
    RankConflict(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Engine(#[from] heiscat::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}
