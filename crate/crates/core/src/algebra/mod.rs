//! Exact arithmetic: rationals, univariate polynomials in `t`, reduced
//! rational functions, dense matrices over those, and truncated power series.

mod error;
mod matrix;
mod poly;
mod ratfun;
mod rational;
mod series;

pub use error::AlgebraError;
pub use matrix::{ExactDiv, Field, Matrix, RatFunMatrix, Ring};
pub use poly::Polynomial;
pub use ratfun::{ArithOp, RationalFunction};
pub use rational::{parse_rational, render_rational, Rational};
pub use series::TruncatedSeries;
