//! The linear coordinates `u = zb`, `v = -λ z + 2g x3`, `w = g zb - λ x3`.
//!
//! With the ground state factored out, the raising operators act on
//! `Ψ0 = 1` as multiplication by `-2λu`, `v` and `2w`.

use super::{Poly3, WeylMonomial, WeylOperator};
use crate::coeff::ParamScalar;

pub const U: usize = 0;
pub const V: usize = 1;
pub const W: usize = 2;

pub const UVW_NAMES: [&str; 3] = ["u", "v", "w"];

fn lin(c: [ParamScalar; 3]) -> Poly3 {
    Poly3::from_terms(c.into_iter().enumerate().map(|(i, c)| {
        let mut e = [0; 3];
        e[i] = 1;
        (e, c)
    }))
}

fn lin_op(vars: [ParamScalar; 3], ders: [ParamScalar; 3]) -> WeylOperator {
    let mut out = WeylOperator::zero();
    for i in 0..3 {
        let mut m = WeylMonomial::ONE;
        m.var[i] = 1;
        out.add_term(m, &vars[i]);
        let mut m = WeylMonomial::ONE;
        m.der[i] = 1;
        out.add_term(m, &ders[i]);
    }
    out
}

fn zero() -> ParamScalar {
    ParamScalar::zero()
}

fn lam() -> ParamScalar {
    ParamScalar::lam()
}

fn g() -> ParamScalar {
    ParamScalar::g()
}

/// `(u, v, w)` as polynomials in `(z, zb, x3)`.
pub fn uvw_in_z() -> [Poly3; 3] {
    [
        lin([zero(), ParamScalar::one(), zero()]),
        lin([-lam(), zero(), g().scale_i64(2)]),
        lin([zero(), g(), -lam()]),
    ]
}

/// `(z, zb, x3)` as polynomials in `(u, v, w)`.
pub fn z_in_uvw() -> [Poly3; 3] {
    let l2 = lam().pow(2);
    [
        lin([
            &g().pow(2).scale_i64(2) / &l2,
            -(ParamScalar::one() / lam()),
            -(&g().scale_i64(2) / &l2),
        ]),
        lin([ParamScalar::one(), zero(), zero()]),
        lin([&g() / &lam(), zero(), -(ParamScalar::one() / lam())]),
    ]
}

/// Rewrites a polynomial in `(z, zb, x3)` in terms of `(u, v, w)`.
pub fn poly_to_uvw(p: &Poly3) -> Poly3 {
    p.substitute(&z_in_uvw())
}

/// Rewrites a polynomial in `(u, v, w)` in terms of `(z, zb, x3)`.
pub fn poly_from_uvw(p: &Poly3) -> Poly3 {
    p.substitute(&uvw_in_z())
}

/// Rewrites a differential operator in `(z, zb, x3)` in the `(u, v, w)` chart.
pub fn operator_to_uvw(op: &WeylOperator) -> WeylOperator {
    let vars = z_in_uvw().map(|p| poly_as_operator(&p));
    let ders = [
        lin_op([zero(), zero(), zero()], [zero(), -lam(), zero()]),
        lin_op([zero(), zero(), zero()], [ParamScalar::one(), zero(), g()]),
        lin_op([zero(), zero(), zero()], [zero(), g().scale_i64(2), -lam()]),
    ];
    op.substitute(&vars, &ders)
}

/// Rewrites a differential operator in `(u, v, w)` in the `(z, zb, x3)` chart.
pub fn operator_from_uvw(op: &WeylOperator) -> WeylOperator {
    let vars = uvw_in_z().map(|p| poly_as_operator(&p));
    let l2 = lam().pow(2);
    let ders = [
        lin_op(
            [zero(), zero(), zero()],
            [&g().pow(2).scale_i64(2) / &l2, ParamScalar::one(), &g() / &lam()],
        ),
        lin_op([zero(), zero(), zero()], [-(ParamScalar::one() / lam()), zero(), zero()]),
        lin_op(
            [zero(), zero(), zero()],
            [-(&g().scale_i64(2) / &l2), zero(), -(ParamScalar::one() / lam())],
        ),
    ];
    op.substitute(&vars, &ders)
}

/// Multiplication by a polynomial, as an operator.
pub fn poly_as_operator(p: &Poly3) -> WeylOperator {
    WeylOperator::from_terms(p.terms().map(|(e, c)| (WeylMonomial::new(*e, [0; 3]), c.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{X3, Z, ZB};

    #[test]
    fn coordinate_maps_are_inverse() {
        let p = Poly3::from_terms([
            ([2, 1, 0], ParamScalar::lam()),
            ([0, 0, 3], ParamScalar::g()),
            ([1, 1, 1], ParamScalar::one()),
        ]);
        assert_eq!(poly_from_uvw(&poly_to_uvw(&p)), p);
        assert_eq!(poly_to_uvw(&poly_from_uvw(&p)), p);
    }

    #[test]
    fn chart_change_preserves_commutators() {
        for i in 0..3 {
            for j in 0..3 {
                let d = operator_to_uvw(&WeylOperator::der(i));
                let x = operator_to_uvw(&WeylOperator::var(j));
                let expected = if i == j { WeylOperator::one() } else { WeylOperator::zero() };
                assert_eq!(d.commutator(&x), expected);
            }
        }
    }

    #[test]
    fn operator_maps_are_inverse() {
        let op = WeylOperator::var(Z) * WeylOperator::der(X3) + WeylOperator::der(ZB).pow(2);
        assert_eq!(operator_from_uvw(&operator_to_uvw(&op)), op);
    }
}
