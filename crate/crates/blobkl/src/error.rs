use thiserror::Error;

/// Errors surfaced by the library. Variants that indicate bad user input
/// (parameters, words, shapes) are distinct from `Decomposition`, which
/// signals an internal-consistency failure: a polynomial that should have
/// split into a self-dual part plus a nonnegative remainder did not.
#[derive(Debug, Error)]
pub enum Error {
    #[error("generator index {index} out of range for level {level}")]
    Index { index: usize, level: usize },

    #[error("level mismatch: expected {expected}, got {got}")]
    LevelMismatch { expected: usize, got: usize },

    #[error("size mismatch: |lambda| = {left} but |mu| = {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("multipartition is not regular: {0}")]
    NotRegular(String),

    #[error("two new hyperplanes at level {level}: parameters are corrupt")]
    MultipleNewHyperplanes { level: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("residue sequence of tableau differs from the dominant one")]
    ResidueMismatch,

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("orbit element too short: {0}")]
    TooShort(String),

    #[error("decomposition failed: {0}")]
    Decomposition(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("enumeration would exceed cap: needs {needed} tableaux, cap is {cap}")]
    CapExceeded { needed: u128, cap: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
