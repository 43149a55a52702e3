use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{render_power, render_sum, WeylOperator, VAR_NAMES, X3, Z, ZB};
use crate::coeff::ParamScalar;

/// A polynomial in three commuting variables over [`ParamScalar`].
///
/// As a [`GaussianState`] it stands for `poly(z, zb, x3) · Ψ0` with
/// `Ψ0 = exp(-(λ/2)(z zb + x3²) + g zb x3)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly3 {
    terms: BTreeMap<[u32; 3], ParamScalar>,
}

pub type GaussianState = Poly3;

fn exp_order(a: &[u32; 3], b: &[u32; 3]) -> std::cmp::Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl Poly3 {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The ground state itself.
    pub fn ground() -> Self {
        Self::monomial(ParamScalar::one(), [0, 0, 0])
    }

    pub fn monomial(c: ParamScalar, exp: [u32; 3]) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::monomial(ParamScalar::one(), e)
    }

    pub fn from_terms(iter: impl IntoIterator<Item = ([u32; 3], ParamScalar)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, &c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &ParamScalar)> {
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

    pub fn coeff(&self, e: &[u32; 3]) -> ParamScalar {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, e: [u32; 3], c: &ParamScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, exp: &[u32; 3]) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| ([e[0] + exp[0], e[1] + exp[1], e[2] + exp[2]], v.clone()))
                .collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], &(ca * cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::ground();
        for _ in 0..e {
            acc = acc.multiply(self);
        }
        acc
    }

    /// Plain partial derivative of the polynomial part.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = *e;
            f[i] -= 1;
            out.add_term(f, &c.scale_i64(e[i] as i64));
        }
        out
    }

    /// Logarithmic derivative of Ψ0 along coordinate `i`.
    pub fn ground_log_derivative(i: usize) -> Self {
        let half_lam = ParamScalar::lam() * ParamScalar::from_ratio(-1, 2);
        match i {
            Z => Self::monomial(half_lam, [0, 1, 0]),
            ZB => Self::from_terms([([1, 0, 0], half_lam), ([0, 0, 1], ParamScalar::g())]),
            _ => Self::from_terms([([0, 0, 1], -ParamScalar::lam()), ([0, 1, 0], ParamScalar::g())]),
        }
    }

    /// `Ψ0⁻¹ ∂_i (self · Ψ0)`.
    pub fn covariant_derivative(&self, i: usize) -> Self {
        &self.partial(i) + &self.multiply(&Self::ground_log_derivative(i))
    }

    /// Action of a differential operator on `self · Ψ0`, returned as the new polynomial part.
    pub fn apply(op: &WeylOperator, s: &Self) -> Self {
        let mut by_der: BTreeMap<[u32; 3], Vec<([u32; 3], &ParamScalar)>> = BTreeMap::new();
        for (m, c) in op.terms() {
            by_der.entry(m.der).or_default().push((m.var, c));
        }
        let mut d3_cache: BTreeMap<u32, Self> = BTreeMap::new();
        let mut dzb_cache: BTreeMap<u32, BTreeMap<u32, Self>> = BTreeMap::new();
        let mut out = Self::zero();
        for (der, vars) in by_der {
            let [dz, dzb, d3] = der;
            let base = Self::cached_chain(&mut d3_cache, d3, s, X3);
            let mut zb_chain = dzb_cache.remove(&d3).unwrap_or_default();
            let mut cur = Self::cached_chain(&mut zb_chain, dzb, &base, ZB);
            dzb_cache.insert(d3, zb_chain);
            for _ in 0..dz {
                cur = cur.covariant_derivative(Z);
            }
            for (var, c) in vars {
                for (e, v) in &cur.terms {
                    out.add_term([e[0] + var[0], e[1] + var[1], e[2] + var[2]], &(v * c));
                }
            }
        }
        out
    }

    /// `cache[n]` holds the `n`-th covariant derivative of `start` along `i`.
    fn cached_chain(cache: &mut BTreeMap<u32, Self>, n: u32, start: &Self, i: usize) -> Self {
        if let Some(s) = cache.get(&n) {
            return s.clone();
        }
        let (mut k, mut cur) = match cache.range(..n).next_back() {
            Some((k, s)) => (*k, s.clone()),
            None => (0, start.clone()),
        };
        while k < n {
            cur = cur.covariant_derivative(i);
            k += 1;
            cache.insert(k, cur.clone());
        }
        cur
    }

    /// Replaces each variable by a polynomial.
    pub fn substitute(&self, images: &[Poly3; 3]) -> Self {
        let mut pows: [Vec<Poly3>; 3] = Default::default();
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut acc = Self::monomial(c.clone(), [0; 3]);
            for i in 0..3 {
                if pows[i].is_empty() {
                    pows[i].push(Self::ground());
                }
                while pows[i].len() <= e[i] as usize {
                    let next = pows[i].last().unwrap().multiply(&images[i]);
                    pows[i].push(next);
                }
                acc = acc.multiply(&pows[i][e[i] as usize]);
            }
            for (f, v) in &acc.terms {
                out.add_term(*f, v);
            }
        }
        out
    }

    /// The parity `x2 → -x2` on the polynomial part: `z ↔ zb`.
    pub fn swapped(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| ([e[1], e[0], e[2]], c.clone())).collect(),
        }
    }

    pub fn conjugate_coefficients(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c.conjugate())).collect(),
        }
    }

    pub fn render(&self) -> String {
        self.render_with(&VAR_NAMES)
    }

    /// Rendering with custom variable names, highest degree first.
    pub fn render_with(&self, names: &[&str; 3]) -> String {
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by(|a, b| exp_order(b.0, a.0));
        render_sum(keys.into_iter().map(|(e, c)| {
            let mut parts = Vec::new();
            for i in 0..3 {
                render_power(names[i], e[i], &mut parts);
            }
            (c, parts.join("*"))
        }))
    }
}

impl fmt::Display for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &Poly3 {
    type Output = Poly3;
    fn add(self, rhs: Self) -> Poly3 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &Poly3 {
    type Output = Poly3;
    fn sub(self, rhs: Self) -> Poly3 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Neg for &Poly3 {
    type Output = Poly3;
    fn neg(self) -> Poly3 {
        Poly3 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul<&Poly3> for &WeylOperator {
    type Output = Poly3;
    fn mul(self, rhs: &Poly3) -> Poly3 {
        Poly3::apply(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a_plus() -> WeylOperator {
        WeylOperator::der(Z).scale(&ParamScalar::from_int(2))
            - WeylOperator::var(ZB).scale(&ParamScalar::lam())
    }

    fn a_minus() -> WeylOperator {
        WeylOperator::der(Z).scale(&ParamScalar::from_int(2))
            + WeylOperator::var(ZB).scale(&ParamScalar::lam())
    }

    #[test]
    fn annihilator_kills_ground_state() {
        assert!(Poly3::apply(&a_minus(), &Poly3::ground()).is_zero());
    }

    #[test]
    fn creation_on_ground_state() {
        let s = Poly3::apply(&a_plus(), &Poly3::ground());
        let expected = Poly3::monomial(ParamScalar::monomial(-2, 1, 0), [0, 1, 0]);
        assert_eq!(s, expected);
    }

    #[test]
    fn apply_respects_products() {
        let op1 = a_plus() * WeylOperator::der(X3);
        let op2 = WeylOperator::der(ZB) + WeylOperator::var(Z).scale(&ParamScalar::g());
        let s = Poly3::from_terms([
            ([1, 0, 2], ParamScalar::one()),
            ([0, 1, 0], ParamScalar::lam()),
        ]);
        let lhs = Poly3::apply(&(&op1 * &op2), &s);
        let rhs = Poly3::apply(&op1, &Poly3::apply(&op2, &s));
        assert_eq!(lhs, rhs);
    }
}
