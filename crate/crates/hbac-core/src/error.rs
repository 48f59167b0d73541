//! Crate-wide error type.

use thiserror::Error;

/// Errors produced anywhere in the refrigerator toolkit.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("{name} must be within [{min}, {max}] (got {value})")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("matrix is not Hermitian (defect {defect:.3e})")]
    NotHermitian { defect: f64 },

    #[error("non-finite matrix entry at ({row}, {col})")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("invalid density matrix: {reason} ({value:.3e})")]
    InvalidDensityMatrix { reason: &'static str, value: f64 },

    #[error("partial trace requires a non-empty set of kept subsystems")]
    EmptyKeepSet,

    #[error("subsystem index {index} outside 1..=3")]
    BadSubsystem { index: usize },

    #[error("supervector length {len} is not a perfect square")]
    BadSuperVectorLength { len: usize },

    #[error("compression variant {variant} is unsupported here: {reason}")]
    UnsupportedVariant {
        variant: &'static str,
        reason: &'static str,
    },

    #[error("polarization ordering violated: require eps2, eps3 >= eps1 >= 0 (got {eps1}, {eps2}, {eps3})")]
    OrderingViolated { eps1: f64, eps2: f64, eps3: f64 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("series too short: need at least {need} samples, got {got}")]
    SeriesTooShort { need: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
