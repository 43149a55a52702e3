//! Exact coefficient field: Gaussian rationals and rational functions in `lam`, `g`.

mod gaussian;
mod poly;
mod scalar;

pub use gaussian::GaussianRational;
pub use poly::{ParamMonomial, ParamPoly};
pub use scalar::{ArithOp, ParamScalar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at lam = {lam}, g = {g}")]
    Pole { lam: String, g: String },
}
