use crate::word::Alphabet;

/// Errors raised by the workbench.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("alphabet mismatch: expected {expected}, found {found}")]
    AlphabetMismatch { expected: Alphabet, found: Alphabet },

    #[error("operation `{op}` is only defined over {expected}, got {found}")]
    WrongAlphabet {
        op: &'static str,
        expected: &'static str,
        found: Alphabet,
    },

    #[error("`{op}` requires input without words ending in b0, found `{word}`")]
    TrailingB0 { op: &'static str, word: String },

    #[error("`{op}` requires a homogeneous input")]
    NotHomogeneous { op: &'static str },

    #[error("`{op}` requires Lie elements; `{which}` is not primitive")]
    NotLie { op: &'static str, which: String },

    #[error("index length mismatch: word has {expected} slots, index has {found}")]
    IndexLength { expected: usize, found: usize },

    #[error("word `{word}` is not in the coordinate index")]
    OutOfIndex { word: String },

    #[error("coordinate length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("element is outside the expected domain: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
