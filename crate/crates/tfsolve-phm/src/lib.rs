//! Pade-Hankel method: the critical slope at the origin is the common limit
//! of root sequences of Hankel determinants H_D^d = |v_{i+j+d+1}| built from
//! the transformed origin series v(t) = sqrt(u(t^2)).

pub mod hankel;
pub mod report;
pub mod sequence;

use thiserror::Error;
use tfsolve_num::NumError;

pub use hankel::{hankel_root, hankel_value, hankel_value_rational, HankelSpec};
pub use sequence::{critical_slope_phm, RootSequence};

#[derive(Error, Debug, Clone, PartialEq)]
pub enum PhmError {
    #[error(transparent)]
    Num(#[from] NumError),
    #[error("H_{d}^{dim} is degenerate near the physical bracket; no usable root")]
    DegenerateDeterminant { d: usize, dim: usize },
    #[error("root sequence stopped converging (agreed digits fell {0} times in a row)")]
    NotConverging(usize),
    #[error("invalid input: {0}")]
    Invalid(String),
}
