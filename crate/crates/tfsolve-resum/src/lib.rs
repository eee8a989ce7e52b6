//! Resummation of the magnetic right-endpoint series: ordinary Pade
//! approximants, quadratic Hermite-Pade (Shafer) approximants with branch
//! handling and root averaging, and the eigenlength/slope estimate
//! pipelines built on them.

pub mod estimates;
pub mod pade;
pub mod report;
pub mod residual;
pub mod shafer;

use thiserror::Error;
use tfsolve_num::NumError;

pub use estimates::{
    endpoint_x0_partial_sums, flipped_endpoint_series, partial_sum_error, scan_spurious,
    shafer_x0, vseries_estimates, Acceleration, ShaferEstimate, SLOPE_REFERENCE, X0_REFERENCE,
};
pub use pade::{pade_fit, PadeApproximant};
pub use residual::{endpoint_residual, select_branch, shafer_residual};
pub use shafer::{shafer_eval, shafer_eval_d2, shafer_fit, Branch, QuadApproximant};

#[derive(Error, Debug, Clone, PartialEq)]
pub enum ResumError {
    #[error(transparent)]
    Num(#[from] NumError),
    #[error("series order too small: need {need} coefficients, got {got}")]
    OrderTooSmall { need: usize, got: usize },
    #[error("degenerate approximant order near [{j}/{k}]; retry with a lower degree")]
    DegenerateOrder { j: usize, k: usize },
    #[error("approximant pole at s = {0}")]
    PoleAt(String),
    #[error("root find failure: {0}")]
    RootFindFailure(String),
}
