use std::fmt;

use super::{a_value, b_value, JordanError};
use crate::coeff::ParamScalar;
use crate::fock::{expand_q_power, from_gaussian_state, to_gaussian_state, to_uvw, CreationPolynomial, CreationWord};
use crate::operators::catalogue::{b, hamiltonian, q};
use crate::operators::Sign;
use crate::weyl::{GaussianState, Poly3};

/// Label `(k, n, m)` of the unnormalized state `Ψ̂_{k,n,m}` with `0 ≤ m ≤ 2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JordanLabel {
    pub k: u32,
    pub n: u32,
    pub m: u32,
}

impl JordanLabel {
    pub fn new(k: u32, n: u32, m: u32) -> Result<Self, JordanError> {
        if m > 2 * n {
            return Err(JordanError::Label { k, n, m });
        }
        Ok(Self { k, n, m })
    }

    /// Builds a label from signed indices, or `None` if any index is out of range.
    pub fn checked(k: i64, n: i64, m: i64) -> Option<Self> {
        if k < 0 || n < 0 || m < 0 || m > 2 * n {
            return None;
        }
        Some(Self {
            k: k as u32,
            n: n as u32,
            m: m as u32,
        })
    }

    /// `E = 2λ(2k + n)`.
    pub fn energy(&self) -> ParamScalar {
        energy(self.k, self.n)
    }

    pub fn block_dimension(&self) -> u32 {
        2 * self.n + 1
    }

    /// Every label with `k + n ≤ max_total`, ordered by `(k, n, m)`.
    pub fn up_to(max_total: u32) -> Vec<Self> {
        let mut out = Vec::new();
        for k in 0..=max_total {
            for n in 0..=max_total - k {
                out.extend((0..=2 * n).map(|m| Self { k, n, m }));
            }
        }
        out
    }
}

impl fmt::Display for JordanLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.k, self.n, self.m)
    }
}

pub fn energy(k: u32, n: u32) -> ParamScalar {
    ParamScalar::lam().scale_i64(2 * i64::from(2 * k + n))
}

/// `Ψ̂_{k,n,m} = (H − E)^{2n−m} (B⁺)ⁿ (Q⁺)ᵏ Ψ0`, stored in creation letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatedState {
    pub label: JordanLabel,
    pub creation: CreationPolynomial,
}

impl AssociatedState {
    pub fn gaussian_state(&self) -> GaussianState {
        to_gaussian_state(&self.creation)
    }

    pub fn uvw(&self) -> Poly3 {
        to_uvw(&self.creation)
    }
}

/// The state from the closed-form coefficient expansion.
pub fn build_state(label: JordanLabel) -> AssociatedState {
    let JordanLabel { k, n, m } = label;
    let (n, m) = (i64::from(n), i64::from(m));
    let mu = m / 2;
    let mut chain = CreationPolynomial::zero();
    if m % 2 == 0 {
        let p = n - mu;
        for q in (n - 2 * mu).max(0)..=p {
            let w = CreationWord::new(q as u32, (q + 2 * mu - n) as u32, (2 * n - 2 * mu - 2 * q) as u32);
            chain.add_term(w, &a_value(n, p, q));
        }
    } else {
        let p = n - mu - 1;
        for q in (n - 2 * mu - 1).max(0)..=p {
            let w = CreationWord::new(q as u32, (q + 2 * mu + 1 - n) as u32, (2 * n - 2 * mu - 2 * q - 1) as u32);
            chain.add_term(w, &b_value(n, p, q));
        }
    }
    AssociatedState {
        label,
        creation: chain.multiply(&expand_q_power(k)),
    }
}

/// `(B⁺)ⁿ(Q⁺)ᵏΨ0` by direct differential action.
pub fn chain_seed(k: u32, n: u32) -> GaussianState {
    let (bp, qp) = (b(Sign::Plus), q(Sign::Plus));
    let mut s = Poly3::ground();
    for _ in 0..k {
        s = Poly3::apply(&qp, &s);
    }
    for _ in 0..n {
        s = Poly3::apply(&bp, &s);
    }
    s
}

/// `(H − E)·s`.
pub fn shifted_h(s: &GaussianState, k: u32, n: u32) -> GaussianState {
    &Poly3::apply(&hamiltonian(), s) - &s.scale(&energy(k, n))
}

/// The whole block `m = 0..=2n` from repeated differential application of `H − E`.
pub fn build_block_direct(k: u32, n: u32) -> Vec<AssociatedState> {
    let mut s = chain_seed(k, n);
    let mut block = Vec::with_capacity(2 * n as usize + 1);
    for m in (0..=2 * n).rev() {
        if m < 2 * n {
            s = shifted_h(&s, k, n);
        }
        block.push(AssociatedState {
            label: JordanLabel { k, n, m },
            creation: from_gaussian_state(&s),
        });
    }
    block.reverse();
    block
}

pub fn build_state_direct(label: JordanLabel) -> AssociatedState {
    build_block_direct(label.k, label.n).swap_remove(label.m as usize)
}

/// `2k + n + 3/2`.
pub fn casimir_eigenvalue(k: u32, n: u32) -> ParamScalar {
    ParamScalar::from_ratio(4 * i64::from(k) + 2 * i64::from(n) + 3, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::CreationWord as W;

    fn single(w: W, c: ParamScalar) -> CreationPolynomial {
        CreationPolynomial::word(w, c)
    }

    #[test]
    fn low_states() {
        let g = ParamScalar::g();
        let s011 = build_state(JordanLabel::new(0, 1, 1).unwrap());
        assert_eq!(s011.creation, single(W::new(0, 0, 1), g.scale_i64(-2)));
        let s010 = build_state(JordanLabel::new(0, 1, 0).unwrap());
        assert_eq!(s010.creation, single(W::new(1, 0, 0), g.pow(2).scale_i64(4)));
        let top = build_state(JordanLabel::new(2, 3, 6).unwrap());
        let expected = CreationPolynomial::letter(1).pow(3).multiply(&expand_q_power(2));
        assert_eq!(top.creation, expected);
    }

    #[test]
    fn direct_block_matches_closed_form() {
        for (k, n) in [(0, 1), (0, 2), (1, 1)] {
            for state in build_block_direct(k, n) {
                assert_eq!(state, build_state(state.label), "{}", state.label);
            }
        }
    }

    #[test]
    fn label_range() {
        assert!(JordanLabel::new(0, 1, 3).is_err());
        assert_eq!(JordanLabel::up_to(1).len(), 1 + 1 + 3);
    }
}
