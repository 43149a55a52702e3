use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::word::{CreationPolynomial, CreationWord};
use crate::coeff::ParamScalar;
use crate::operators::catalogue::{a, b, c_op};
use crate::operators::Sign;
use crate::weyl::WeylOperator;

/// `K[x][y] = [X⁻, Y⁺]` for letters `X, Y ∈ {A, B, C}`; all entries are scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionMatrix {
    pub k: [[ParamScalar; 3]; 3],
}

impl ContractionMatrix {
    /// Computes every entry as a commutator and checks it is a scalar.
    pub fn from_commutators() -> Self {
        let ops = |s: Sign| [a(s), b(s), c_op(s)];
        let (minus, plus) = (ops(Sign::Minus), ops(Sign::Plus));
        let entry = |x: usize, y: usize| -> ParamScalar {
            let c: WeylOperator = minus[x].commutator(&plus[y]);
            c.as_scalar().expect("letter commutators are scalars")
        };
        Self {
            k: [0, 1, 2].map(|x| [0, 1, 2].map(|y| entry(x, y))),
        }
    }

    /// The table as stated: `K(A,B) = K(B,A) = K(C,C) = −2λ`, `K(B,C) = K(C,B) = 2g`.
    pub fn stated() -> Self {
        let m2l = ParamScalar::lam().scale_i64(-2);
        let g2 = ParamScalar::g().scale_i64(2);
        let z = ParamScalar::zero();
        Self {
            k: [
                [z.clone(), m2l.clone(), z.clone()],
                [m2l.clone(), z.clone(), g2.clone()],
                [z, g2, m2l],
            ],
        }
    }
}

fn letters(w: &CreationWord) -> Vec<usize> {
    (0..3).flat_map(|k| std::iter::repeat_n(k, w.0[k] as usize)).collect()
}

/// Permanent by Ryser's inclusion–exclusion formula.
pub fn permanent(m: &[Vec<ParamScalar>]) -> ParamScalar {
    let n = m.len();
    if n == 0 {
        return ParamScalar::one();
    }
    let mut total = ParamScalar::zero();
    for subset in 1u64..(1 << n) {
        let mut prod = ParamScalar::one();
        for row in m {
            let s: ParamScalar = (0..n).filter(|j| subset >> j & 1 == 1).map(|j| row[j].clone()).sum();
            if s.is_zero() {
                prod = ParamScalar::zero();
                break;
            }
            prod = &prod * &s;
        }
        if prod.is_zero() {
            continue;
        }
        if (n - subset.count_ones() as usize).is_multiple_of(2) {
            total += &prod;
        } else {
            total -= &prod;
        }
    }
    total
}

/// Pairing of two words through the permanent of their contraction table.
pub fn word_pairing_permanent(bra: &CreationWord, ket: &CreationWord, k: &ContractionMatrix) -> ParamScalar {
    if bra.len() != ket.len() {
        return ParamScalar::zero();
    }
    let (lb, lk) = (letters(bra), letters(ket));
    let m: Vec<Vec<ParamScalar>> = lb.iter().map(|&x| lk.iter().map(|&y| k.k[x][y].clone()).collect()).collect();
    let p = permanent(&m);
    if bra.len().is_multiple_of(2) {
        p
    } else {
        -p
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Closed-form pairing of two words for the stated contraction table.
///
/// Bra `A`s contract only with ket `B`s, bra `B`s with ket `A`s or `C`s, and
/// bra `C`s with ket `B`s or `C`s; `x` and `y` count the two mixed `B–C` kinds.
pub fn word_pairing(bra: &CreationWord, ket: &CreationWord) -> ParamScalar {
    let [i, j, l] = bra.0.map(i64::from);
    let [i2, j2, l2] = ket.0.map(i64::from);
    let p = i + j + l;
    if p != i2 + j2 + l2 {
        return ParamScalar::zero();
    }
    let x = j - i2;
    let y = j2 - i;
    if x < 0 || y < 0 || y > l || x > l2 || l2 != x + l - y {
        return ParamScalar::zero();
    }
    let u = |v: i64| v as u32;
    let count = binomial(u(j), u(x))
        * binomial(u(l2), u(x))
        * factorial(u(x))
        * factorial(u(i2))
        * binomial(u(l), u(y))
        * binomial(u(j2), u(y))
        * factorial(u(y))
        * factorial(u(i))
        * factorial(u(l - y));
    let lam_exp = u(i + i2 + l - y);
    let g_exp = u(x + y);
    let sign = if (lam_exp + u(p)) % 2 == 0 { 1 } else { -1 };
    let magnitude = count * BigInt::from(2).pow(lam_exp + g_exp) * sign;
    ParamScalar::from_bigint(magnitude) * ParamScalar::monomial(1, lam_exp, g_exp)
}

/// `⟨⟨bra·Ψ0 | ket·Ψ0⟩⟩` in units of `⟨⟨Ψ0|Ψ0⟩⟩ = (π/λ)^{3/2}`.
pub fn wick_inner(bra: &CreationPolynomial, ket: &CreationPolynomial) -> ParamScalar {
    let mut total = ParamScalar::zero();
    for (wb, cb) in bra.terms() {
        for (wk, ck) in ket.terms() {
            let v = word_pairing(wb, wk);
            if !v.is_zero() {
                total += &(&(cb * ck) * &v);
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::expand_q_power;

    #[test]
    fn contraction_table_matches_commutators() {
        assert_eq!(ContractionMatrix::from_commutators(), ContractionMatrix::stated());
    }

    #[test]
    fn closed_form_agrees_with_permanent() {
        let k = ContractionMatrix::stated();
        for len in 0..=5 {
            let words = CreationWord::all_of_len(len);
            for wb in &words {
                for wk in &words {
                    assert_eq!(word_pairing(wb, wk), word_pairing_permanent(wb, wk, &k), "{wb:?} {wk:?}");
                }
            }
        }
    }

    #[test]
    fn small_pairings() {
        let a = CreationPolynomial::letter(0);
        let b = CreationPolynomial::letter(1);
        let c = CreationPolynomial::letter(2);
        assert!(wick_inner(&a, &a).is_zero());
        assert_eq!(wick_inner(&c, &b), ParamScalar::g().scale_i64(-2));
        let q = expand_q_power(1);
        assert_eq!(wick_inner(&q, &q), ParamScalar::monomial(24, 2, 0));
    }
}
