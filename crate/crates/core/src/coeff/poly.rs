//! Polynomials in the two model parameters `lam` and `g` over Q(i).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::gaussian::GaussianRational;

/// `lam^lam * g^g`, ordered graded-lexicographically with `lam > g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct ParamMonomial {
    pub lam: u32,
    pub g: u32,
}

impl ParamMonomial {
    pub const ONE: ParamMonomial = ParamMonomial { lam: 0, g: 0 };

    pub fn new(lam: u32, g: u32) -> Self {
        Self { lam, g }
    }

    pub fn degree(&self) -> u32 {
        self.lam + self.g
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.lam + other.lam, self.g + other.g)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.lam <= other.lam && self.g <= other.g
    }

    /// `other / self`, assuming `self` divides `other`.
    fn quotient_of(&self, other: &Self) -> Self {
        Self::new(other.lam - self.lam, other.g - self.g)
    }

    fn meet(&self, other: &Self) -> Self {
        Self::new(self.lam.min(other.lam), self.g.min(other.g))
    }

    fn join(&self, other: &Self) -> Self {
        Self::new(self.lam.max(other.lam), self.g.max(other.g))
    }

    fn render(&self) -> String {
        let mut parts = Vec::new();
        match self.lam {
            0 => {}
            1 => parts.push("lam".to_string()),
            e => parts.push(format!("lam^{e}")),
        }
        match self.g {
            0 => {}
            1 => parts.push("g".to_string()),
            e => parts.push(format!("g^{e}")),
        }
        parts.join("*")
    }
}

impl Ord for ParamMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.lam.cmp(&other.lam))
    }
}

impl PartialOrd for ParamMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `lam`, `g`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: BTreeMap<ParamMonomial, GaussianRational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(c, ParamMonomial::ONE)
    }

    pub fn term(c: GaussianRational, m: ParamMonomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn lam() -> Self {
        Self::term(GaussianRational::one(), ParamMonomial::new(1, 0))
    }

    pub fn g() -> Self {
        Self::term(GaussianRational::one(), ParamMonomial::new(0, 1))
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (ParamMonomial, GaussianRational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, &c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ParamMonomial, &GaussianRational)> {
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

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<&GaussianRational> {
        match self.terms.len() {
            0 => None,
            1 => self.terms.get(&ParamMonomial::ONE),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.as_constant().is_some()
    }

    /// Single-term polynomial `c * lam^a * g^b`.
    pub fn as_single_term(&self) -> Option<(&ParamMonomial, &GaussianRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<(&ParamMonomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &ParamMonomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: ParamMonomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (big, small) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &-c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(c);
        }
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Self {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, x)| (*m, x.scale_int(k))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &ParamMonomial) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn conj(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c.conj())).collect(),
        }
    }

    pub fn evaluate(&self, lam: &BigRational, g: &BigRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let v = num_traits::pow(lam.clone(), m.lam as usize) * num_traits::pow(g.clone(), m.g as usize);
            acc += &c.scale(&v);
        }
        acc
    }

    /// Componentwise minimum exponent over all terms (the monomial content).
    pub fn monomial_content(&self) -> ParamMonomial {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => *m,
            None => return ParamMonomial::ONE,
        };
        it.fold(first, |acc, m| acc.meet(m))
    }

    /// Exact division by a monomial that divides every term.
    pub fn div_monomial(&self, m: &ParamMonomial) -> Self {
        if *m == ParamMonomial::ONE {
            return self.clone();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    debug_assert!(m.divides(k));
                    (m.quotient_of(k), c.clone())
                })
                .collect(),
        }
    }

    /// The leading coefficient under the graded-lex order, or zero.
    pub fn leading_coeff(&self) -> GaussianRational {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_default()
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if let Some((dm, dc)) = d.as_single_term() {
            let inv = dc.inv()?;
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                terms.insert(dm.quotient_of(m), c * &inv);
            }
            return Some(Self { terms });
        }
        let (dlm, dlc) = d.leading().map(|(m, c)| (*m, c.clone()))?;
        let dlc_inv = dlc.inv()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            if !dlm.divides(&rm) {
                return None;
            }
            let qm = dlm.quotient_of(&rm);
            let qc = &rc * &dlc_inv;
            let t = Self::term(qc.clone(), qm);
            rem = rem.sub(&d.mul(&t));
            quot.add_term(qm, &qc);
        }
        Some(quot)
    }

    pub fn degree_lam(&self) -> u32 {
        self.terms.keys().map(|m| m.lam).max().unwrap_or(0)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let ca = self.monomial_content();
        let cb = other.monomial_content();
        let mono = Self::term(GaussianRational::one(), ca.meet(&cb));
        let a = self.div_monomial(&ca);
        let b = other.div_monomial(&cb);
        if a.as_single_term().is_some() || b.as_single_term().is_some() {
            return mono;
        }
        if a == b {
            return mono.mul(&a).monic();
        }
        let core = gcd_recursive(&a, &b);
        mono.mul(&core).monic()
    }

    /// Least common multiple of two monomials times one; used by the scalar fast path.
    pub fn monomial_lcm(a: &ParamMonomial, b: &ParamMonomial) -> ParamMonomial {
        a.join(b)
    }

    /// Renders in the expression grammar: descending order, `lam`/`g`/`I`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative_like();
            let c_abs = if neg { -c } else { c.clone() };
            let mono = m.render();
            let body = if mono.is_empty() {
                c_abs.render_factor()
            } else if c_abs.is_one() {
                mono
            } else {
                format!("{}*{}", c_abs.render_factor(), mono)
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

// ---------------------------------------------------------------------------
// gcd machinery: recursive representation Q(i)[g][lam].

/// Dense univariate polynomial in `g`; index is the exponent.
type UPoly = Vec<GaussianRational>;

fn utrim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn uis_zero(p: &UPoly) -> bool {
    p.is_empty()
}

fn umul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![GaussianRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    utrim(&mut out);
    out
}

fn usub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(&x - &y);
    }
    utrim(&mut out);
    out
}

fn umonic(p: &UPoly) -> UPoly {
    match p.last() {
        None => Vec::new(),
        Some(lc) => {
            let inv = lc.inv().expect("trimmed polynomial has nonzero leading coefficient");
            p.iter().map(|c| c * &inv).collect()
        }
    }
}

/// Division with remainder over the field Q(i).
fn udivrem(a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
    assert!(!b.is_empty(), "univariate division by zero");
    let mut rem = a.clone();
    utrim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lc_inv = b.last().unwrap().inv().unwrap();
    let mut quot = vec![GaussianRational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let q = rem.last().unwrap() * &lc_inv;
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= &(c * &q);
        }
        quot[shift] = q;
        utrim(&mut rem);
    }
    utrim(&mut quot);
    (quot, rem)
}

fn ugcd(a: &UPoly, b: &UPoly) -> UPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    utrim(&mut x);
    utrim(&mut y);
    while !y.is_empty() {
        let (_, r) = udivrem(&x, &y);
        x = y;
        y = r;
    }
    umonic(&x)
}

fn uexact_div(a: &UPoly, b: &UPoly) -> UPoly {
    let (q, r) = udivrem(a, b);
    debug_assert!(r.is_empty(), "inexact univariate division");
    q
}

/// Polynomial in `lam` with coefficients in Q(i)[g]; index is the `lam` exponent.
type RPoly = Vec<UPoly>;

fn to_recursive(p: &ParamPoly) -> RPoly {
    let mut out: RPoly = vec![Vec::new(); p.degree_lam() as usize + 1];
    for (m, c) in p.terms() {
        let slot = &mut out[m.lam as usize];
        if slot.len() <= m.g as usize {
            slot.resize(m.g as usize + 1, GaussianRational::zero());
        }
        slot[m.g as usize] = c.clone();
    }
    rtrim(&mut out);
    out
}

fn from_recursive(r: &RPoly) -> ParamPoly {
    let mut p = ParamPoly::zero();
    for (l, u) in r.iter().enumerate() {
        for (gexp, c) in u.iter().enumerate() {
            p.add_term(ParamMonomial::new(l as u32, gexp as u32), c);
        }
    }
    p
}

fn rtrim(r: &mut RPoly) {
    while r.last().is_some_and(uis_zero) {
        r.pop();
    }
}

fn rcontent(r: &RPoly) -> UPoly {
    let mut acc: UPoly = Vec::new();
    for u in r {
        if u.is_empty() {
            continue;
        }
        acc = if acc.is_empty() { umonic(u) } else { ugcd(&acc, u) };
        if acc.len() == 1 {
            break;
        }
    }
    acc
}

fn rprimitive(r: &RPoly) -> RPoly {
    let c = rcontent(r);
    if c.len() <= 1 {
        // constant content: make monic in the field sense only
        return r.clone();
    }
    r.iter()
        .map(|u| if u.is_empty() { Vec::new() } else { uexact_div(u, &c) })
        .collect()
}

/// Pseudo-remainder of `a` by `b` in `lam`.
fn rprem(a: &RPoly, b: &RPoly) -> RPoly {
    let mut rem = a.clone();
    rtrim(&mut rem);
    let lcb = b.last().expect("nonzero divisor").clone();
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let lcr = rem.last().unwrap().clone();
        for u in rem.iter_mut() {
            *u = umul(u, &lcb);
        }
        for (i, u) in b.iter().enumerate() {
            let t = umul(u, &lcr);
            rem[shift + i] = usub(&rem[shift + i], &t);
        }
        rtrim(&mut rem);
    }
    rem
}

fn gcd_recursive(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    let ra = to_recursive(a);
    let rb = to_recursive(b);
    let ca = rcontent(&ra);
    let cb = rcontent(&rb);
    let c = ugcd(&ca, &cb);
    let cpoly = from_recursive(&vec![c]);
    let mut x = rprimitive(&ra);
    let mut y = rprimitive(&rb);
    if x.len() <= 1 || y.len() <= 1 {
        // one side has no lam-dependence: its primitive part is a unit
        return cpoly;
    }
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = rprem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { rprimitive(&r) };
    }
    if x.len() <= 1 {
        return cpoly;
    }
    let pp = from_recursive(&rprimitive(&x));
    cpoly.mul(&pp)
}

impl From<BigInt> for ParamPoly {
    fn from(n: BigInt) -> Self {
        ParamPoly::constant(GaussianRational::from_bigint(n))
    }
}

impl From<i64> for ParamPoly {
    fn from(n: i64) -> Self {
        ParamPoly::constant(GaussianRational::from_int(n))
    }
}

impl ParamPoly {
    pub fn is_unit_monomial(&self) -> bool {
        self.as_single_term().is_some_and(|(_, c)| c.is_one())
    }

    pub fn one_monomial(m: ParamMonomial) -> Self {
        Self::term(GaussianRational::one(), m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam() -> ParamPoly {
        ParamPoly::lam()
    }
    fn g() -> ParamPoly {
        ParamPoly::g()
    }

    #[test]
    fn grlex_leading_term_prefers_lam() {
        let p = lam().mul(&g()).add(&g().mul(&g())).add(&lam());
        assert_eq!(p.leading().unwrap().0, &ParamMonomial::new(1, 1));
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        let a = lam().mul(&lam()).sub(&g().mul(&g()));
        let b = lam().sub(&g());
        assert_eq!(a.gcd(&b), b);
        assert_eq!(a.exact_div(&b).unwrap(), lam().add(&g()));
    }

    #[test]
    fn gcd_with_monomial_content() {
        // lam^2 g (lam + g) and lam g^3 (lam + g)^2
        let s = lam().add(&g());
        let a = lam().pow(2).mul(&g()).mul(&s);
        let b = lam().mul(&g().pow(3)).mul(&s.pow(2));
        let expected = lam().mul(&g()).mul(&s);
        assert_eq!(a.gcd(&b), expected);
    }

    #[test]
    fn gcd_coprime_is_one() {
        let a = lam().add(&g());
        let b = lam().sub(&g());
        assert!(a.gcd(&b).is_one());
    }

    #[test]
    fn gcd_with_g_only_content() {
        // (g+1)(lam+g) and (g+1)(lam-g)
        let c = g().add(&ParamPoly::one());
        let a = c.mul(&lam().add(&g()));
        let b = c.mul(&lam().sub(&g()));
        assert_eq!(a.gcd(&b), c);
    }

    #[test]
    fn exact_div_detects_inexact() {
        let a = lam().add(&ParamPoly::one());
        assert!(a.exact_div(&g()).is_none());
        assert!(a.exact_div(&lam().sub(&g())).is_none());
    }

    #[test]
    fn render_is_descending() {
        let p = lam()
            .pow(2)
            .mul(&g())
            .scale(&GaussianRational::from_ratio(3, 2))
            .sub(&g().pow(3).scale(&GaussianRational::i()));
        assert_eq!(p.render(), "(3/2)*lam^2*g - I*g^3");
    }
}
