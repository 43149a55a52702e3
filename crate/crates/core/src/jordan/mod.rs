//! Jordan chains of the Hamiltonian in the three-letter Fock representation.

mod auxiliary;
mod coeffs;
mod ladder;
mod states;
mod suites;
mod uvw;

pub use auxiliary::*;
pub use coeffs::*;
pub use ladder::*;
pub use states::*;
pub use suites::*;
pub use uvw::*;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JordanError {
    #[error("coefficient {family}({n},{p},{q}) is outside its index range")]
    CoefficientRange { family: char, n: u32, p: u32, q: u32 },
    #[error("label (k={k}, n={n}, m={m}) needs m <= 2n")]
    Label { k: u32, n: u32, m: u32 },
    #[error("unknown ladder operator {0:?}")]
    UnknownOperator(String),
}
