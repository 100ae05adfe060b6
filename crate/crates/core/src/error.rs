//! Error types shared across the library.

use thiserror::Error;

/// Errors produced by model construction, training, and data handling.
#[derive(Debug, Error)]
pub enum Error {
    /// Operand shapes do not agree with the model dimensions.
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    /// A probability argument fell outside [0, 1].
    #[error("probability out of range: {0}")]
    InvalidProbability(f64),

    /// An operation that needs data received an empty batch.
    #[error("empty batch")]
    EmptyBatch,

    /// An index referred to a unit that does not exist.
    #[error("index {index} out of range for {what} of size {size}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        size: usize,
    },

    /// Exhaustive state enumeration was requested on too large a model.
    #[error("enumeration limit exceeded: {n_units} total units > {max}")]
    EnumerationLimit { n_units: usize, max: usize },

    /// A structural operator would have removed every hidden unit.
    #[error("cannot annihilate all hidden neurons")]
    WouldRemoveAllNeurons,

    /// Training produced a non-finite quantity.
    #[error("non-finite value in {0}; aborting")]
    NonFinite(String),

    /// A configuration value is outside its valid range.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    /// NPY container parse or write failure.
    #[error("npy: {0}")]
    Npy(#[from] crate::npy::NpyError),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
