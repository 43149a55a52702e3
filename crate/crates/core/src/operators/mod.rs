//! The named operators of the oscillator and the identity suites that relate them.

pub mod boson;
pub mod catalogue;
pub mod span;
mod suites;

pub use boson::{boson, boson_differential, d_pair, gl3_from_bosons, SurdOperator};
pub use catalogue::{named, Bilinear, Sign};
pub use span::{Combination, SpanSolver};
pub use suites::*;
