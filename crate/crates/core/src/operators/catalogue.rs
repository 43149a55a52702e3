//! Named operators, each built from its own differential or defining formula.

use std::fmt;

use crate::coeff::ParamScalar;
use crate::weyl::uvw::{self, U, V, W};
use crate::weyl::{WeylOperator, X3, Z, ZB};

/// Which member of a raising/lowering pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `+1` for raising, `-1` for lowering.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];
}

/// The nine bilinears in the ladder operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bilinear {
    R,
    S,
    T,
    U,
    V,
    W,
    X,
    Y,
    Z,
}

impl Bilinear {
    pub const ALL: [Bilinear; 9] = [
        Bilinear::R,
        Bilinear::S,
        Bilinear::T,
        Bilinear::U,
        Bilinear::V,
        Bilinear::W,
        Bilinear::X,
        Bilinear::Y,
        Bilinear::Z,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Bilinear::R => "R",
            Bilinear::S => "S",
            Bilinear::T => "T",
            Bilinear::U => "U",
            Bilinear::V => "V",
            Bilinear::W => "W",
            Bilinear::X => "X",
            Bilinear::Y => "Y",
            Bilinear::Z => "Z",
        }
    }

    pub fn from_name(name: &str) -> Option<Bilinear> {
        Self::ALL.into_iter().find(|b| b.name() == name)
    }
}

impl fmt::Display for Bilinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Small constructors so operator formulas read close to their mathematical form.
pub(crate) mod dsl {
    use super::*;

    pub fn z() -> WeylOperator {
        WeylOperator::var(Z)
    }
    pub fn zb() -> WeylOperator {
        WeylOperator::var(ZB)
    }
    pub fn x3() -> WeylOperator {
        WeylOperator::var(X3)
    }
    pub fn dz() -> WeylOperator {
        WeylOperator::der(Z)
    }
    pub fn dzb() -> WeylOperator {
        WeylOperator::der(ZB)
    }
    pub fn d3() -> WeylOperator {
        WeylOperator::der(X3)
    }
    pub fn c(s: ParamScalar) -> WeylOperator {
        WeylOperator::scalar(s)
    }
    pub fn n(k: i64) -> WeylOperator {
        c(ParamScalar::from_int(k))
    }
    pub fn frac(a: i64, b: i64) -> WeylOperator {
        c(ParamScalar::from_ratio(a, b))
    }
    pub fn lam() -> WeylOperator {
        c(ParamScalar::lam())
    }
    pub fn g() -> WeylOperator {
        c(ParamScalar::g())
    }
    pub fn imag() -> WeylOperator {
        c(ParamScalar::i())
    }
    /// `λ^a g^b` with `a`, `b` possibly negative.
    pub fn lg(k: i64, a: i32, b: i32) -> WeylOperator {
        c(lg_scalar(k, a, b))
    }
    pub fn lg_scalar(k: i64, a: i32, b: i32) -> ParamScalar {
        let pos = ParamScalar::monomial(k, a.max(0) as u32, b.max(0) as u32);
        let neg = ParamScalar::monomial(1, (-a).max(0) as u32, (-b).max(0) as u32);
        &pos / &neg
    }
    pub fn sgn(s: Sign) -> WeylOperator {
        n(s.value())
    }
}

use dsl::*;

pub fn hamiltonian() -> WeylOperator {
    n(-4) * dz() * dzb() - d3().pow(2) + lam().pow(2) * (z() * zb() + x3().pow(2)) + g().pow(2) * zb().pow(2)
        - n(4) * lam() * g() * zb() * x3()
        - n(3) * lam()
}

pub fn a(s: Sign) -> WeylOperator {
    n(2) * dz() - sgn(s) * lam() * zb()
}

pub fn b(s: Sign) -> WeylOperator {
    dzb() - sgn(s) * (frac(1, 2) * lam() * z() - g() * x3())
}

pub fn c_op(s: Sign) -> WeylOperator {
    d3() + sgn(s) * (g() * zb() - lam() * x3())
}

pub fn q(s: Sign) -> WeylOperator {
    let e = sgn(s);
    n(4) * dz() * dzb() - d3().pow(2) - e.clone() * n(2) * lam() * (z() * dz() + zb() * dzb() - x3() * d3())
        + e.clone() * n(4) * g() * x3() * dz()
        - e.clone() * n(2) * g() * zb() * d3()
        + lam().pow(2) * (z() * zb() - x3().pow(2))
        - g().pow(2) * zb().pow(2)
        - e * lam()
}

/// The integral `R1` in its differential form.
pub fn r1() -> WeylOperator {
    n(2) * dz() * d3() + lam() * zb() * (g() * zb() - lam() * x3())
}

/// `R̃1 = -4(λH - 2gR1 + 3λ²)`.
pub fn r1_tilde() -> WeylOperator {
    n(-4) * (lam() * hamiltonian() - n(2) * g() * r1() + n(3) * lam().pow(2))
}

/// Differential realization of a bilinear.
pub fn bilinear(which: Bilinear) -> WeylOperator {
    match which {
        Bilinear::R => n(4) * dz().pow(2) - lam().pow(2) * zb().pow(2),
        Bilinear::S => {
            dzb().pow(2) - frac(1, 4) * lam().pow(2) * z().pow(2) + lam() * g() * z() * x3() - g().pow(2) * x3().pow(2)
        }
        Bilinear::T => {
            d3().pow(2) - g().pow(2) * zb().pow(2) + n(2) * lam() * g() * zb() * x3() - lam().pow(2) * x3().pow(2)
                + lam()
        }
        Bilinear::U => {
            n(4) * dz() * dzb() - lam().pow(2) * z() * zb() + n(2) * lam() * g() * zb() * x3() + n(2) * lam()
        }
        Bilinear::V => n(4) * dz() * d3() + n(2) * lam() * g() * zb().pow(2) - n(2) * lam().pow(2) * zb() * x3(),
        Bilinear::W => {
            n(2) * dzb() * d3() + lam() * g() * z() * zb() - lam().pow(2) * z() * x3() - n(2) * g().pow(2) * zb() * x3()
                + n(2) * lam() * g() * x3().pow(2)
                - n(2) * g()
        }
        Bilinear::X => n(2) * (lam() * z() - n(2) * g() * x3()) * dz() - n(2) * lam() * zb() * dzb(),
        Bilinear::Y => n(-4) * (g() * zb() - lam() * x3()) * dz() - n(2) * lam() * zb() * d3(),
        Bilinear::Z => n(-2) * (g() * zb() - lam() * x3()) * dzb() - (lam() * z() - n(2) * g() * x3()) * d3(),
    }
}

/// A bilinear from its defining products of ladder operators.
pub fn bilinear_from_ladders(which: Bilinear) -> WeylOperator {
    use Sign::{Minus, Plus};
    let (ap, am, bp, bm, cp, cm) = (a(Plus), a(Minus), b(Plus), b(Minus), c_op(Plus), c_op(Minus));
    match which {
        Bilinear::R => &ap * &am,
        Bilinear::S => &bp * &bm,
        Bilinear::T => &cp * &cm,
        Bilinear::U => &ap * &bm + &bp * &am,
        Bilinear::V => &ap * &cm + &cp * &am,
        Bilinear::W => &bp * &cm + &cp * &bm,
        Bilinear::X => &ap * &bm - &bp * &am,
        Bilinear::Y => &ap * &cm - &cp * &am,
        Bilinear::Z => &bp * &cm - &cp * &bm,
    }
}

/// The gl(3) generators written in the bilinears.
pub fn gl3_generator(i: usize, j: usize) -> WeylOperator {
    let [r, s, t, u, v, w, x, y, zz] = Bilinear::ALL.map(bilinear);
    let half = frac(1, 2);
    let t_over = lg(1, -1, 0) * frac(1, 2) * t.clone();
    match (i, j) {
        (1, 1) => -t_over + half,
        (2, 2) => lg(1, 1, -2) * frac(1, 2) * s + t_over + lg(1, 0, -1) * frac(1, 2) * w + half,
        (3, 3) => {
            lg(-1, -3, 2) * frac(1, 2) * r - lg(1, 1, -2) * frac(1, 2) * s
                - t_over
                - lg(1, -1, 0) * frac(1, 2) * u
                - lg(1, -2, 1) * frac(1, 2) * v
                - lg(1, 0, -1) * frac(1, 2) * w
                + half
        }
        (1, 2) => imag() * (t_over + lg(1, 0, -1) * frac(1, 4) * (w - zz)),
        (2, 1) => imag() * (t_over + lg(1, 0, -1) * frac(1, 4) * (w + zz)),
        (1, 3) => {
            -t_over - lg(1, -2, 1) * frac(1, 4) * v - lg(1, 0, -1) * frac(1, 4) * w
                + lg(1, -2, 1) * frac(1, 4) * y
                + lg(1, 0, -1) * frac(1, 4) * zz
        }
        (3, 1) => {
            -t_over - lg(1, -2, 1) * frac(1, 4) * v - lg(1, 0, -1) * frac(1, 4) * w
                - lg(1, -2, 1) * frac(1, 4) * y
                - lg(1, 0, -1) * frac(1, 4) * zz
        }
        (2, 3) | (3, 2) => {
            let e = if (i, j) == (2, 3) { -1 } else { 1 };
            imag()
                * (lg(1, 1, -2) * frac(1, 2) * s
                    + t_over
                    + lg(1, -1, 0) * frac(1, 4) * u
                    + lg(1, -2, 1) * frac(1, 4) * v
                    + lg(1, 0, -1) * frac(1, 2) * w
                    + n(e) * lg(1, -1, 0) * frac(1, 4) * x
                    + n(e) * lg(1, -2, 1) * frac(1, 4) * y)
        }
        _ => panic!("gl(3) index out of range: ({i},{j})"),
    }
}


/// The gl(3) generators written directly in the ladder operators.
pub fn gl3_generator_from_ladders(i: usize, j: usize) -> WeylOperator {
    use Sign::{Minus, Plus};
    let (ap, am, bp, bm, cp, cm) = (a(Plus), a(Minus), b(Plus), b(Minus), c_op(Plus), c_op(Minus));
    let cc = lg(1, -1, 0) * frac(1, 2) * (&cp * &cm);
    let bb = lg(1, 1, -2) * frac(1, 2) * (&bp * &bm);
    let half = frac(1, 2);
    let over_g = |op: WeylOperator| lg(1, 0, -1) * frac(1, 2) * op;
    let g_over_l2 = |op: WeylOperator| lg(1, -2, 1) * frac(1, 2) * op;
    let over_l = |op: WeylOperator| lg(1, -1, 0) * frac(1, 2) * op;
    match (i, j) {
        (1, 1) => -cc + half,
        (2, 2) => bb + cc + over_g(&bp * &cm + &cp * &bm) + half,
        (3, 3) => {
            lg(-1, -3, 2) * frac(1, 2) * (&ap * &am) - bb - cc - over_l(&ap * &bm + &bp * &am)
                - g_over_l2(&ap * &cm + &cp * &am)
                - over_g(&bp * &cm + &cp * &bm)
                + half
        }
        (1, 2) => imag() * (cc + over_g(&cp * &bm)),
        (2, 1) => imag() * (cc + over_g(&bp * &cm)),
        (1, 3) => -cc - over_g(&cp * &bm) - g_over_l2(&cp * &am),
        (3, 1) => -cc - over_g(&bp * &cm) - g_over_l2(&ap * &cm),
        (2, 3) => {
            imag() * (bb + cc + over_l(&bp * &am) + over_g(&bp * &cm) + g_over_l2(&cp * &am) + over_g(&cp * &bm))
        }
        (3, 2) => {
            imag() * (bb + cc + over_l(&ap * &bm) + over_g(&cp * &bm) + g_over_l2(&ap * &cm) + over_g(&bp * &cm))
        }
        _ => panic!("gl(3) index out of range: ({i},{j})"),
    }
}

/// `E11 + E22 + E33`.
pub fn casimir() -> WeylOperator {
    (1..=3).map(|k| gl3_generator(k, k)).sum()
}

/// The integrals of motion `R0..R3` from their defining products.
pub fn integral(index: usize) -> WeylOperator {
    use Sign::{Minus, Plus};
    match index {
        0 => a(Plus) * a(Minus),
        1 => {
            lg(1, 0, -1)
                * frac(1, 8)
                * (frac(1, 2) * q(Plus).commutator(&q(Minus)) + n(4) * lam() * hamiltonian() + n(12) * lam().pow(2))
        }
        2 => lg(1, -1, 0) * frac(1, 8) * (a(Plus) * a(Minus)).commutator(&(q(Plus) * q(Minus))),
        3 => q(Plus) * a(Minus).pow(2),
        _ => panic!("integral index out of range: {index}"),
    }
}

/// `D_p`, the conjugate of `H - 2λp` by the ground state, from its
/// expression in the `(u, v, w)` chart, returned in the `(z, zb, x3)` chart.
pub fn d_p(p: i64) -> WeylOperator {
    uvw::operator_from_uvw(&d_p_uvw(p))
}

/// `D_p` in the `(u, v, w)` chart.
pub fn d_p_uvw(p: i64) -> WeylOperator {
    let u = WeylOperator::var(U);
    let v = WeylOperator::var(V);
    let w = WeylOperator::var(W);
    let du = WeylOperator::der(U);
    let dv = WeylOperator::der(V);
    let dw = WeylOperator::der(W);
    n(4) * lam() * du.clone() * dv.clone() - n(4) * g().pow(2) * dv.pow(2) + n(8) * lam() * g() * dv.clone() * dw.clone()
        - lam().pow(2) * dw.pow(2)
        + n(2) * lam() * (u.clone() * du + v * dv.clone() + w.clone() * dw.clone() - n(p))
        - n(4) * g() * w * dv
        + n(2) * lam() * g() * u * dw
}

/// Looks up an operator by its ASCII name: `H`, `A+`, `Q-`, `R`..`Z`,
/// `E11`..`E33`, `R0`..`R3`, `Rt1`, `Dp(3)`.
pub fn named(name: &str) -> Option<WeylOperator> {
    let ladder = |base: &str| -> Option<Sign> {
        let rest = name.strip_prefix(base)?;
        match rest {
            "+" => Some(Sign::Plus),
            "-" => Some(Sign::Minus),
            _ => None,
        }
    };
    if name == "H" {
        return Some(hamiltonian());
    }
    if name == "Rt1" {
        return Some(r1_tilde());
    }
    if let Some(s) = ladder("A") {
        return Some(a(s));
    }
    if let Some(s) = ladder("B") {
        return Some(b(s));
    }
    if let Some(s) = ladder("C") {
        return Some(c_op(s));
    }
    if let Some(s) = ladder("Q") {
        return Some(q(s));
    }
    if let Some(bl) = Bilinear::from_name(name) {
        return Some(bilinear(bl));
    }
    let bytes = name.as_bytes();
    if bytes.len() == 3 && bytes[0] == b'E' {
        let i = (bytes[1] as char).to_digit(10)? as usize;
        let j = (bytes[2] as char).to_digit(10)? as usize;
        if (1..=3).contains(&i) && (1..=3).contains(&j) {
            return Some(gl3_generator(i, j));
        }
        return None;
    }
    if bytes.len() == 2 && bytes[0] == b'R' {
        let k = (bytes[1] as char).to_digit(10)? as usize;
        return (k <= 3).then(|| if k == 1 { r1() } else { integral(k) });
    }
    if let Some(arg) = name.strip_prefix("Dp(").and_then(|r| r.strip_suffix(')')) {
        let p: u32 = arg.parse().ok()?;
        return Some(d_p(p as i64));
    }
    None
}

/// Every fixed name accepted by [`named`] (the `Dp(p)` family excluded).
pub fn catalogue_names() -> Vec<String> {
    let mut out: Vec<String> = vec!["H".into()];
    for base in ["A", "B", "C", "Q"] {
        for s in Sign::BOTH {
            out.push(format!("{base}{}", s.symbol()));
        }
    }
    out.extend(Bilinear::ALL.iter().map(|b| b.name().to_string()));
    for i in 1..=3 {
        for j in 1..=3 {
            out.push(format!("E{i}{j}"));
        }
    }
    out.extend((0..=3).map(|k| format!("R{k}")));
    out.push("Rt1".into());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_are_deterministic() {
        assert_eq!(hamiltonian(), hamiltonian());
        assert_eq!(q(Sign::Plus), q(Sign::Plus));
    }

    #[test]
    fn hamiltonian_is_minus_u_minus_t() {
        let sum = hamiltonian() + bilinear(Bilinear::U) + bilinear(Bilinear::T);
        assert!(sum.is_zero());
    }

    #[test]
    fn every_name_resolves() {
        for name in catalogue_names() {
            assert!(named(&name).is_some(), "{name}");
        }
        assert!(named("Dp(2)").is_some());
        assert!(named("E44").is_none());
        assert!(named("A*").is_none());
    }
}
