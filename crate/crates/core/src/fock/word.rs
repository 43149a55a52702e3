use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::coeff::ParamScalar;

/// `(A⁺)^i (B⁺)^j (C⁺)^l Ψ0`, stored as `[i, j, l]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CreationWord(pub [u32; 3]);

pub const LETTER_NAMES: [&str; 3] = ["A+", "B+", "C+"];

impl CreationWord {
    pub const EMPTY: CreationWord = CreationWord([0, 0, 0]);

    pub fn new(i: u32, j: u32, l: u32) -> Self {
        CreationWord([i, j, l])
    }

    pub fn len(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn times(&self, other: &Self) -> Self {
        CreationWord([0, 1, 2].map(|k| self.0[k] + other.0[k]))
    }

    /// The word with one letter removed, if present.
    pub fn without(&self, letter: usize) -> Option<Self> {
        let mut w = self.0;
        w[letter] = w[letter].checked_sub(1)?;
        Some(CreationWord(w))
    }

    /// All words of exactly `len` letters in increasing order.
    pub fn all_of_len(len: u32) -> Vec<Self> {
        let mut out = Vec::new();
        for i in 0..=len {
            for j in 0..=len - i {
                out.push(CreationWord([i, j, len - i - j]));
            }
        }
        out.sort();
        out
    }

    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (e, name) in self.0.iter().zip(LETTER_NAMES) {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

/// A state as a polynomial in the commuting creation letters acting on `Ψ0`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CreationPolynomial {
    terms: BTreeMap<CreationWord, ParamScalar>,
}

impl CreationPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `Ψ0` itself.
    pub fn ground() -> Self {
        Self::word(CreationWord::EMPTY, ParamScalar::one())
    }

    pub fn word(w: CreationWord, c: ParamScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(w, &c);
        out
    }

    pub fn letter(letter: usize) -> Self {
        let mut w = [0; 3];
        w[letter] = 1;
        Self::word(CreationWord(w), ParamScalar::one())
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (CreationWord, ParamScalar)>) -> Self {
        let mut out = Self::zero();
        for (w, c) in iter {
            out.add_term(w, &c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CreationWord, &ParamScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &CreationWord) -> ParamScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Largest number of letters in any word.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(CreationWord::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: CreationWord, c: &ParamScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(w, v)| (*w, v * c)).collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.times(wb), &(ca * cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::ground(), |acc, _| acc.multiply(self))
    }

    pub fn render(&self) -> String {
        crate::weyl::render_sum(self.terms.iter().map(|(w, c)| (c, w.render())))
    }
}

impl fmt::Display for CreationPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &CreationPolynomial {
    type Output = CreationPolynomial;
    fn add(self, rhs: Self) -> CreationPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, c);
        }
        out
    }
}

impl Sub for &CreationPolynomial {
    type Output = CreationPolynomial;
    fn sub(self, rhs: Self) -> CreationPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, &-c);
        }
        out
    }
}

impl Neg for &CreationPolynomial {
    type Output = CreationPolynomial;
    fn neg(self) -> CreationPolynomial {
        self.scale(&ParamScalar::from_int(-1))
    }
}

impl Mul for &CreationPolynomial {
    type Output = CreationPolynomial;
    fn mul(self, rhs: Self) -> CreationPolynomial {
        self.multiply(rhs)
    }
}

/// `(Q⁺)^k Ψ0 = (2A⁺B⁺ − (C⁺)²)^k Ψ0` by the binomial theorem.
pub fn expand_q_power(k: u32) -> CreationPolynomial {
    let mut out = CreationPolynomial::zero();
    let mut binom = BigInt::from(1);
    for r in 0..=k {
        // r factors of 2A⁺B⁺ and k − r factors of −(C⁺)²
        let c = ParamScalar::from_bigint(&binom * BigInt::from(2).pow(r))
            .scale_i64(if (k - r).is_multiple_of(2) { 1 } else { -1 });
        out.add_term(CreationWord([r, r, 2 * (k - r)]), &c);
        binom = binom * BigInt::from(k - r) / BigInt::from(r + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_powers_match_small_cases() {
        assert_eq!(expand_q_power(0), CreationPolynomial::ground());
        let q1 = CreationPolynomial::from_terms([
            (CreationWord::new(1, 1, 0), ParamScalar::from_int(2)),
            (CreationWord::new(0, 0, 2), ParamScalar::from_int(-1)),
        ]);
        assert_eq!(expand_q_power(1), q1);
        let q2 = CreationPolynomial::from_terms([
            (CreationWord::new(2, 2, 0), ParamScalar::from_int(4)),
            (CreationWord::new(1, 1, 2), ParamScalar::from_int(-4)),
            (CreationWord::new(0, 0, 4), ParamScalar::from_int(1)),
        ]);
        assert_eq!(expand_q_power(2), q2);
        assert_eq!(expand_q_power(5), q1.pow(5));
    }

    #[test]
    fn words_render_in_letter_order() {
        assert_eq!(CreationWord::new(2, 0, 1).render(), "A+^2*C+");
        assert_eq!(CreationWord::all_of_len(2).len(), 6);
    }
}
