use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use super::{render_power, render_sum, DER_NAMES, VAR_NAMES, Z, ZB};
use crate::coeff::ParamScalar;

/// `z^a zb^b x3^c dz^d dzb^e d3^f`, variables always to the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct WeylMonomial {
    pub var: [u32; 3],
    pub der: [u32; 3],
}

impl WeylMonomial {
    pub const ONE: WeylMonomial = WeylMonomial {
        var: [0; 3],
        der: [0; 3],
    };

    pub fn new(var: [u32; 3], der: [u32; 3]) -> Self {
        Self { var, der }
    }

    pub fn degree(&self) -> u32 {
        self.var.iter().sum::<u32>() + self.der.iter().sum::<u32>()
    }

    pub fn der_degree(&self) -> u32 {
        self.der.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    /// Exchanges the `z` and `zb` slots of both variables and derivatives.
    pub fn swapped(&self) -> Self {
        let mut m = *self;
        m.var.swap(Z, ZB);
        m.der.swap(Z, ZB);
        m
    }

    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (name, e) in VAR_NAMES.iter().zip(self.var).chain(DER_NAMES.iter().zip(self.der)) {
            render_power(name, e, &mut parts);
        }
        parts.join("*")
    }

    fn key(&self) -> [u32; 6] {
        [
            self.var[0], self.var[1], self.var[2], self.der[0], self.der[1], self.der[2],
        ]
    }
}

impl Ord for WeylMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.key().cmp(&other.key()))
    }
}

impl PartialOrd for WeylMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `d^j x^b` moved past each other in one variable: the terms
/// `C(d,j) b!/(b-j)! x^(b-j) d^(d-j)` for `j = 0..=min(d,b)`.
fn leibniz(d: u32, b: u32) -> Vec<(u32, BigInt)> {
    let top = d.min(b);
    let mut out = Vec::with_capacity(top as usize + 1);
    let mut c = BigInt::one();
    for j in 0..=top {
        out.push((j, c.clone()));
        // C(d,j+1)/C(d,j) = (d-j)/(j+1); b!/(b-j-1)! = b!/(b-j)! * (b-j)
        c = c * BigInt::from(d - j) * BigInt::from(b - j) / BigInt::from(j + 1);
    }
    out
}

/// Integer expansion of the product of two monomials in normal order.
pub(crate) fn monomial_product(a: &WeylMonomial, b: &WeylMonomial) -> Vec<(WeylMonomial, BigInt)> {
    let per_var: Vec<Vec<(u32, BigInt)>> = (0..3).map(|i| leibniz(a.der[i], b.var[i])).collect();
    let mut out = Vec::new();
    for (j0, c0) in &per_var[0] {
        for (j1, c1) in &per_var[1] {
            for (j2, c2) in &per_var[2] {
                let js = [*j0, *j1, *j2];
                let mut m = WeylMonomial::ONE;
                for (i, j) in js.into_iter().enumerate() {
                    m.var[i] = a.var[i] + b.var[i] - j;
                    m.der[i] = a.der[i] + b.der[i] - j;
                }
                out.push((m, c0 * c1 * c2));
            }
        }
    }
    out
}

/// A finite sum of normal-ordered monomials with [`ParamScalar`] coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeylOperator {
    terms: BTreeMap<WeylMonomial, ParamScalar>,
}

impl WeylOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(ParamScalar::one())
    }

    pub fn scalar(c: ParamScalar) -> Self {
        Self::term(c, WeylMonomial::ONE)
    }

    pub fn term(c: ParamScalar, m: WeylMonomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    /// Multiplication by the coordinate with the given index.
    pub fn var(i: usize) -> Self {
        let mut m = WeylMonomial::ONE;
        m.var[i] = 1;
        Self::term(ParamScalar::one(), m)
    }

    /// Partial derivative with respect to the coordinate with the given index.
    pub fn der(i: usize) -> Self {
        let mut m = WeylMonomial::ONE;
        m.der[i] = 1;
        Self::term(ParamScalar::one(), m)
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (WeylMonomial, ParamScalar)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in iter {
            out.add_term(m, &c);
        }
        out
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&WeylMonomial, &ParamScalar)> {
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

    pub fn coeff(&self, m: &WeylMonomial) -> ParamScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The scalar value, when the operator is a multiple of the identity.
    pub fn as_scalar(&self) -> Option<ParamScalar> {
        match self.terms.len() {
            0 => Some(ParamScalar::zero()),
            1 => self.terms.get(&WeylMonomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: WeylMonomial, c: &ParamScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut acc: BTreeMap<WeylMonomial, ParamScalar> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                for (m, k) in monomial_product(ma, mb) {
                    let v = c.scale_int(&k);
                    acc.entry(m)
                        .and_modify(|x| *x += &v)
                        .or_insert(v);
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Self { terms: acc }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.multiply(self);
        }
        acc
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &self.multiply(other) - &other.multiply(self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &self.multiply(other) + &other.multiply(self)
    }

    /// Adjoint for the sesquilinear product on L²(R³): coefficients are conjugated,
    /// products reversed, and since `z` and `zb` are complex conjugates,
    /// `z ↔ zb` and `dz → -dzb`, `dzb → -dz`, `d3 → -d3`.
    pub fn formal_adjoint(&self) -> Self {
        self.reversed(true, true)
    }

    /// Adjoint for the symmetric bilinear product `∫ f g d³x`: products are
    /// reversed and every derivative changes sign; nothing is conjugated.
    pub fn transpose(&self) -> Self {
        self.reversed(false, false)
    }

    fn reversed(&self, swap: bool, conj: bool) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let m = if swap { m.swapped() } else { *m };
            let c = if conj { c.conjugate() } else { c.clone() };
            let c = if m.der_degree() % 2 == 1 { -c } else { c };
            let der = WeylMonomial::new([0; 3], m.der);
            let var = WeylMonomial::new(m.var, [0; 3]);
            for (p, k) in monomial_product(&der, &var) {
                out.add_term(p, &c.scale_int(&k));
            }
        }
        out
    }

    /// Conjugation by the parity `x2 → -x2`, i.e. `z ↔ zb` on variables and
    /// derivatives. Linear: coefficients are left alone.
    pub fn eta_conjugate(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.swapped(), c.clone())).collect(),
        }
    }

    /// Replaces each generator by an operator and re-multiplies every monomial
    /// in its stored order. This is an algebra map whenever the images satisfy
    /// the canonical commutation relations.
    pub fn substitute(&self, vars: &[WeylOperator; 3], ders: &[WeylOperator; 3]) -> Self {
        let mut var_pows: [Vec<WeylOperator>; 3] = Default::default();
        let mut der_pows: [Vec<WeylOperator>; 3] = Default::default();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut acc = Self::scalar(c.clone());
            for i in 0..3 {
                acc = acc.multiply(&cached_power(&mut var_pows[i], &vars[i], m.var[i]));
            }
            for i in 0..3 {
                acc = acc.multiply(&cached_power(&mut der_pows[i], &ders[i], m.der[i]));
            }
            out = &out + &acc;
        }
        out
    }

    /// Complex conjugation of every coefficient.
    pub fn conjugate_coefficients(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c.conjugate())).collect(),
        }
    }

    pub fn render(&self) -> String {
        render_sum(self.terms.iter().rev().map(|(m, c)| (c, m.render())))
    }
}

fn cached_power(cache: &mut Vec<WeylOperator>, base: &WeylOperator, e: u32) -> WeylOperator {
    if cache.is_empty() {
        cache.push(WeylOperator::one());
    }
    while cache.len() <= e as usize {
        let next = cache.last().unwrap().multiply(base);
        cache.push(next);
    }
    cache[e as usize].clone()
}

impl fmt::Display for WeylOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &WeylOperator {
    type Output = WeylOperator;
    fn add(self, rhs: Self) -> WeylOperator {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &WeylOperator {
    type Output = WeylOperator;
    fn sub(self, rhs: Self) -> WeylOperator {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Mul for &WeylOperator {
    type Output = WeylOperator;
    fn mul(self, rhs: Self) -> WeylOperator {
        self.multiply(rhs)
    }
}

impl Mul<&ParamScalar> for &WeylOperator {
    type Output = WeylOperator;
    fn mul(self, rhs: &ParamScalar) -> WeylOperator {
        self.scale(rhs)
    }
}

impl Neg for &WeylOperator {
    type Output = WeylOperator;
    fn neg(self) -> WeylOperator {
        Self::Output {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for WeylOperator {
    type Output = WeylOperator;
    fn neg(self) -> WeylOperator {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for WeylOperator {
            type Output = WeylOperator;
            fn $m(self, rhs: Self) -> WeylOperator {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&WeylOperator> for WeylOperator {
            type Output = WeylOperator;
            fn $m(self, rhs: &WeylOperator) -> WeylOperator {
                (&self).$m(rhs)
            }
        }
        impl $tr<WeylOperator> for &WeylOperator {
            type Output = WeylOperator;
            fn $m(self, rhs: WeylOperator) -> WeylOperator {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Mul<ParamScalar> for WeylOperator {
    type Output = WeylOperator;
    fn mul(self, rhs: ParamScalar) -> WeylOperator {
        self.scale(&rhs)
    }
}

impl From<ParamScalar> for WeylOperator {
    fn from(c: ParamScalar) -> Self {
        Self::scalar(c)
    }
}

impl std::iter::Sum for WeylOperator {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::X3;

    fn z() -> WeylOperator {
        WeylOperator::var(Z)
    }
    fn dz() -> WeylOperator {
        WeylOperator::der(Z)
    }

    #[test]
    fn canonical_commutation() {
        let lhs = dz() * z();
        let rhs = z() * dz() + WeylOperator::one();
        assert_eq!(lhs, rhs);
        assert_eq!(dz().commutator(&z()), WeylOperator::one());
    }

    #[test]
    fn independent_variables_commute() {
        let zb = WeylOperator::var(ZB);
        assert_eq!(&dz() * &zb, &zb * &dz());
    }

    #[test]
    fn higher_leibniz() {
        // d^2 x^2 = x^2 d^2 + 4 x d + 2
        let x = WeylOperator::var(X3);
        let d = WeylOperator::der(X3);
        let lhs = d.pow(2) * x.pow(2);
        let rhs = x.pow(2) * d.pow(2)
            + (x.clone() * d).scale(&ParamScalar::from_int(4))
            + WeylOperator::scalar(ParamScalar::from_int(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn transpose_integrates_by_parts() {
        let op = z() * dz();
        assert_eq!(op.transpose(), -(z() * dz()) - WeylOperator::one());
    }

    #[test]
    fn adjoint_swaps_and_conjugates() {
        let op = z() * dz();
        let zb = WeylOperator::var(ZB);
        let dzb = WeylOperator::der(ZB);
        assert_eq!(op.formal_adjoint(), -(zb * dzb) - WeylOperator::one());
        let ix3 = WeylOperator::var(X3).scale(&ParamScalar::i());
        assert_eq!(ix3.formal_adjoint(), -ix3);
    }

    #[test]
    fn renders_descending() {
        let op = z() * dz() + WeylOperator::scalar(ParamScalar::lam()).scale(&ParamScalar::from_int(-2));
        assert_eq!(op.render(), "z*dz - 2*lam");
    }
}
