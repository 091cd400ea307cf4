//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (max |H - H^dag| entry = {deviation:.3e}, tolerance {tolerance:.3e})")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("allocation of {required_bytes} bytes exceeds the memory cap of {cap_bytes} bytes")]
    MemoryCap { required_bytes: u64, cap_bytes: u64 },

    #[error(
        "Fock truncation at cutoff {requested} discards weight {discarded:.3e} \
         (tolerance {tolerance:.3e}); cutoff {required} or higher is needed"
    )]
    Truncation {
        requested: usize,
        required: usize,
        discarded: f64,
        tolerance: f64,
    },

    #[error("state vector norm {norm} violates the unit-norm requirement")]
    NormViolation { norm: f64 },

    #[error("eigendecomposition failed: {0}")]
    EigenFailure(String),

    #[error("operation requires a pure state but a mixed state was supplied")]
    MixedStateInput,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
