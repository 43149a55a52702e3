//! States as polynomials in the creation letters, and the bilinear form
//! `⟨⟨Ψ|Φ⟩⟩ = ∫ΨΦ d³x` computed two independent ways.
//!
//! All inner products are in units of `⟨⟨Ψ0|Ψ0⟩⟩ = (π/λ)^{3/2}`.

mod convert;
mod moments;
mod wick;
mod suite;
mod word;

pub use convert::{eta_apply, from_gaussian_state, from_uvw, to_gaussian_state, to_uvw, uvw_to_gaussian_state};
pub use moments::{determinant3, gaussian_moment_inner, inverse3, to_real_coordinates, weight_matrix, MomentOracle};
pub use wick::{permanent, wick_inner, word_pairing, word_pairing_permanent, ContractionMatrix};
pub use suite::verify_inner_products;
pub use word::{expand_q_power, CreationPolynomial, CreationWord, LETTER_NAMES};
