//! Normalization, Gram blocks and the orthogonalized basis of each Jordan block.

mod gram;
mod identities;
mod norm;
mod suite;

pub use gram::*;
pub use identities::*;
pub use norm::*;
pub use suite::*;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BiorthoError {
    #[error("Gram block ({k},{n}) is not Hankel at entry ({row},{col})")]
    NotHankel { k: u32, n: u32, row: usize, col: usize },
    #[error("Gram block ({k},{n}) has a vanishing anti-diagonal")]
    Degenerate { k: u32, n: u32 },
}
