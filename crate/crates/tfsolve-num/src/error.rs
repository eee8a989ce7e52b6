use thiserror::Error;

/// Errors shared by the numeric kernels.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum NumError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular to working precision at pivot step {step}")]
    Singular { step: usize },
    #[error("no sign change on the bracket [{lo}, {hi}]")]
    NoSignChange { lo: String, hi: String },
    #[error("iteration cap of {0} exceeded")]
    IterationCap(usize),
    #[error("result not trustworthy at the current working precision: {0}")]
    PrecisionStarved(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
