pub mod biortho;
pub mod coeff;
pub mod fock;
pub mod identity;
pub mod jordan;
pub mod operators;
pub mod weyl;
