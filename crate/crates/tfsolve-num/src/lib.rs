//! Arbitrary-precision numeric kernels: a two-tier precision context, big
//! floats and exact rationals, complex values, dense polynomials, pivoted
//! linear algebra and scalar root finding.  Everything downstream binds its
//! numbers to a [`PrecisionContext`].

pub mod complex;
pub mod ctx;
pub mod error;
pub mod linalg;
pub mod par;
pub mod poly;
pub mod rational;
pub mod real;
pub mod roots;
pub mod scalar;

pub use complex::ComplexReal;
pub use ctx::PrecisionContext;
pub use error::NumError;
pub use linalg::{determinant, determinant_cofactor, solve_linear, Matrix};
pub use poly::Polynomial;
pub use rational::Rational;
pub use real::Real;
pub use roots::{find_root, Seed};
pub use scalar::Scalar;
