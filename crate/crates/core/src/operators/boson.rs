//! Bosonic operators `a_i±`, which carry a factor `1/√(2λ)`.
//!
//! Elements of the form `P + s·Q` with `s² = 2λ` are closed under products,
//! so every boson identity can be checked exactly without leaving the
//! rational-function field.

use std::ops::{Add, Mul, Neg, Sub};

use super::catalogue::dsl::*;
use super::catalogue::{a, b, c_op, Sign};
use crate::coeff::ParamScalar;
use crate::weyl::WeylOperator;

/// `rational + s · surd` where `s = √(2λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SurdOperator {
    pub rational: WeylOperator,
    pub surd: WeylOperator,
}

impl SurdOperator {
    pub fn rational(op: WeylOperator) -> Self {
        Self {
            rational: op,
            surd: WeylOperator::zero(),
        }
    }

    pub fn with_surd(op: WeylOperator) -> Self {
        Self {
            rational: WeylOperator::zero(),
            surd: op,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let two_lam = WeylOperator::scalar(ParamScalar::lam().scale_i64(2));
        Self {
            rational: &self.rational * &other.rational + two_lam * (&self.surd * &other.surd),
            surd: &self.rational * &other.surd + &self.surd * &other.rational,
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &self.multiply(other) - &other.multiply(self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &self.multiply(other) + &other.multiply(self)
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        Self {
            rational: self.rational.scale(c),
            surd: self.surd.scale(c),
        }
    }

    /// Renders as `P + sqrt(2*lam)*(Q)`.
    pub fn render(&self) -> String {
        match (self.rational.is_zero(), self.surd.is_zero()) {
            (true, true) => "0".into(),
            (false, true) => self.rational.render(),
            (true, false) => format!("sqrt(2*lam)*({})", self.surd.render()),
            (false, false) => format!("{} + sqrt(2*lam)*({})", self.rational.render(), self.surd.render()),
        }
    }
}

impl Add for &SurdOperator {
    type Output = SurdOperator;
    fn add(self, rhs: Self) -> SurdOperator {
        SurdOperator {
            rational: &self.rational + &rhs.rational,
            surd: &self.surd + &rhs.surd,
        }
    }
}

impl Sub for &SurdOperator {
    type Output = SurdOperator;
    fn sub(self, rhs: Self) -> SurdOperator {
        SurdOperator {
            rational: &self.rational - &rhs.rational,
            surd: &self.surd - &rhs.surd,
        }
    }
}

impl Neg for &SurdOperator {
    type Output = SurdOperator;
    fn neg(self) -> SurdOperator {
        SurdOperator {
            rational: -&self.rational,
            surd: -&self.surd,
        }
    }
}

impl Mul for &SurdOperator {
    type Output = SurdOperator;
    fn mul(self, rhs: Self) -> SurdOperator {
        self.multiply(rhs)
    }
}

/// `a_i±` from the ladder operators; `i` is 1, 2 or 3. Since
/// `1/√(2λ) = s/(2λ)`, the whole operator sits in the surd part.
pub fn boson(i: usize, s: Sign) -> SurdOperator {
    let inner = match i {
        1 => imag() * c_op(s),
        2 => c_op(s) + lg(1, 1, -1) * b(s),
        3 => imag() * (c_op(s) + lg(1, 1, -1) * b(s) + lg(1, -1, 1) * a(s)),
        _ => panic!("boson index out of range: {i}"),
    };
    SurdOperator::with_surd(lg(1, -1, 0) * frac(1, 2) * inner)
}

/// `a_i±` from the direct differential realization.
pub fn boson_differential(i: usize, s: Sign) -> SurdOperator {
    let e = sgn(s);
    let inner = match i {
        1 => imag() * (d3() + e.clone() * g() * zb() - e * lam() * x3()),
        2 => {
            lg(1, 1, -1) * dzb() + d3() - e.clone() * lg(1, 2, -1) * frac(1, 2) * z() + e * g() * zb()
        }
        3 => {
            imag()
                * (n(2) * lg(1, -1, 1) * dz() + lg(1, 1, -1) * dzb() + d3() - e * lg(1, 2, -1) * frac(1, 2) * z())
        }
        _ => panic!("boson index out of range: {i}"),
    };
    SurdOperator::with_surd(lg(1, -1, 0) * frac(1, 2) * inner)
}


/// `D±_ij = (1/2){a_i±, a_j±}`.
pub fn d_pair(s: Sign, i: usize, j: usize) -> WeylOperator {
    let ai = boson(i, s);
    let aj = boson(j, s);
    let half = ParamScalar::from_ratio(1, 2);
    let out = ai.anticommutator(&aj).scale(&half);
    debug_assert!(out.surd.is_zero());
    out.rational
}

/// `a_i⁺ a_j⁻ + δ_ij/2`.
pub fn gl3_from_bosons(i: usize, j: usize) -> WeylOperator {
    let prod = boson(i, Sign::Plus).multiply(&boson(j, Sign::Minus));
    debug_assert!(prod.surd.is_zero());
    if i == j {
        prod.rational + frac(1, 2)
    } else {
        prod.rational
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surd_squares_to_two_lambda() {
        let s = SurdOperator::with_surd(WeylOperator::one());
        let sq = s.multiply(&s);
        assert_eq!(sq.rational, WeylOperator::scalar(ParamScalar::lam().scale_i64(2)));
        assert!(sq.surd.is_zero());
    }

    #[test]
    fn first_boson_pair_is_canonical() {
        let c = boson(1, Sign::Minus).commutator(&boson(1, Sign::Plus));
        assert_eq!(c, SurdOperator::rational(WeylOperator::one()));
    }
}
