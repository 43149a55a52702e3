use num_bigint::BigInt;
use num_traits::One;

use crate::coeff::ParamScalar;
use crate::fock::{expand_q_power, gaussian_moment_inner, to_gaussian_state, wick_inner, CreationPolynomial, CreationWord};
use crate::jordan::{build_state, JordanLabel};

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn double_factorial(k: i64) -> BigInt {
    (1..=k).rev().step_by(2).fold(BigInt::one(), |acc, j| acc * j)
}

/// `N(k,n) = 8^{k+n} k! (n!)² (2n+1)⁻¹ (2n+2k+1)!! g^{2n} λ^{2k+n}`, the
/// pairing of opposite members of block `(k,n)` in units of `⟨⟨Ψ0|Ψ0⟩⟩`.
pub fn normalization(k: u32, n: u32) -> ParamScalar {
    let num = BigInt::from(8).pow(k + n)
        * factorial(k)
        * factorial(n).pow(2)
        * double_factorial(2 * i64::from(n + k) + 1);
    ParamScalar::from_bigint(num) / ParamScalar::from_int(2 * i64::from(n) + 1)
        * ParamScalar::monomial(1, 2 * k + n, 2 * n)
}

/// `⟨⟨Ψ̂_{k,n,m} | Ψ̂_{k,n,2n−m}⟩⟩`.
pub fn norm_pairing(k: u32, n: u32, m: u32) -> ParamScalar {
    let bra = build_state(JordanLabel { k, n, m });
    let ket = build_state(JordanLabel { k, n, m: 2 * n - m });
    wick_inner(&bra.creation, &ket.creation)
}

/// Which of the three vacuum expectations assumed to vanish in the induction over `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TTerm {
    T1,
    T2,
    T3,
}

impl TTerm {
    pub const ALL: [TTerm; 3] = [TTerm::T1, TTerm::T2, TTerm::T3];

    pub fn name(self) -> &'static str {
        match self {
            TTerm::T1 => "T1",
            TTerm::T2 => "T2",
            TTerm::T3 => "T3",
        }
    }

    /// Whether the term is defined at `(k, n)`.
    pub fn defined(self, k: u32, n: u32) -> bool {
        match self {
            TTerm::T1 => k >= 2,
            TTerm::T2 => k >= 1 && n >= 1,
            TTerm::T3 => k >= 1 && n >= 2,
        }
    }

    /// The two creation polynomials whose pairing is `±T`: the bra is
    /// `(A⁺)ⁿ(Q⁺)^{k−1}` and the ket depends on the term.
    pub fn sides(self, k: u32, n: u32) -> (CreationPolynomial, CreationPolynomial) {
        let word = |i, j| CreationPolynomial::word(CreationWord::new(i, j, 0), ParamScalar::one());
        let bra = word(n, 0).multiply(&expand_q_power(k - 1));
        let ket = match self {
            TTerm::T1 => word(2, n).multiply(&expand_q_power(k - 2)),
            TTerm::T2 => word(1, n - 1).multiply(&expand_q_power(k - 1)),
            TTerm::T3 => word(0, n - 2).multiply(&expand_q_power(k)),
        };
        (bra, ket)
    }
}

/// `T` evaluated by contractions and, independently, by Gaussian moments.
pub fn t_value(term: TTerm, k: u32, n: u32) -> (ParamScalar, ParamScalar) {
    let (bra, ket) = term.sides(k, n);
    let contracted = wick_inner(&bra, &ket);
    let moments = gaussian_moment_inner(&to_gaussian_state(&bra), &to_gaussian_state(&ket));
    (contracted, moments)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stated_normalizations() {
        let lam = ParamScalar::lam();
        let g = ParamScalar::g();
        assert_eq!(normalization(0, 1), (&lam * &g.pow(2)).scale_i64(8));
        assert_eq!(normalization(1, 1), (lam.pow(3) * g.pow(2)).scale_i64(320));
        assert_eq!(normalization(2, 0), lam.pow(4).scale_i64(64 * 2 * 15));
        assert_eq!(norm_pairing(0, 1, 0), normalization(0, 1));
    }

    #[test]
    fn t_terms_vanish_at_low_order() {
        for term in TTerm::ALL {
            let (k, n) = (2, 2);
            let (a, b) = t_value(term, k, n);
            assert!(a.is_zero() && b.is_zero(), "{}", term.name());
        }
    }
}
