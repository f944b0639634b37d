use thiserror::Error;

use crate::rules::SuffixClass;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid character {found:?} at position {position}: words use only '0' and '1'")]
    Parse { position: usize, found: char },

    #[error("j must be ≥ 1")]
    InvalidPattern,

    #[error("h = {h} is outside 1..={j}")]
    HOutOfRange { h: usize, j: usize },

    #[error("word {word} contains forbidden factor at index {index}")]
    ForbiddenFactor { word: String, index: usize },

    #[error("word {word} has more 0s than 1s")]
    NotInClass { word: String },

    #[error("rule for {expected} does not apply to {word} (k = {k}, {found:?})")]
    CaseMismatch {
        expected: &'static str,
        word: String,
        k: i32,
        found: SuffixClass,
    },

    #[error("word has no primitive suffix ending at its final height")]
    NoPrimitiveSuffix,

    #[error("swap operation found no anchor point in {word}")]
    NoSwapPoint { word: String },

    #[error("{what} exceeds the guard: {got} > {limit}")]
    GuardExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
