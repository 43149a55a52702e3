use num_bigint::BigInt;
use num_traits::One;

use super::JordanError;
use crate::coeff::ParamScalar;
use crate::identity::IdentityRecord;

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `k!!` for odd `k ≥ −1`.
fn double_factorial(k: i64) -> BigInt {
    (1..=k).rev().step_by(2).fold(BigInt::one(), |acc, j| acc * j)
}

fn binomial(n: i64, k: i64) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn g_power(base: i64, e: i64) -> ParamScalar {
    ParamScalar::g().scale_i64(base).pow(e as u32)
}

/// `a_q^{(n,p)}` with the vanishing convention: zero whenever `q` is out of
/// `0..=p` or `n − 2p + q < 0`.
pub fn a_value(n: i64, p: i64, q: i64) -> ParamScalar {
    if p < 0 || q < 0 || q > p || n - 2 * p + q < 0 {
        return ParamScalar::zero();
    }
    let num = factorial(n) * binomial(p, q) * double_factorial(2 * p - 1);
    let den = factorial(n - 2 * p + q) * double_factorial(2 * p - 2 * q - 1);
    g_power(2, 2 * p) * ParamScalar::from_bigint(num) / ParamScalar::from_bigint(den)
}

/// `b_q^{(n,p)}` with the vanishing convention: zero whenever `q` is out of
/// `0..=p` or `n − 2p + q − 1 < 0`.
pub fn b_value(n: i64, p: i64, q: i64) -> ParamScalar {
    if p < 0 || q < 0 || q > p || n - 2 * p + q - 1 < 0 {
        return ParamScalar::zero();
    }
    let num = factorial(n) * binomial(p, q) * double_factorial(2 * p + 1);
    let den = factorial(n - 2 * p + q - 1) * double_factorial(2 * p - 2 * q + 1);
    g_power(-2, 2 * p + 1) * ParamScalar::from_bigint(num) / ParamScalar::from_bigint(den)
}

pub fn coeff_a(n: u32, p: u32, q: u32) -> Result<ParamScalar, JordanError> {
    if p > n || q > p {
        return Err(JordanError::CoefficientRange { family: 'a', n, p, q });
    }
    Ok(a_value(n.into(), p.into(), q.into()))
}

pub fn coeff_b(n: u32, p: u32, q: u32) -> Result<ParamScalar, JordanError> {
    if n == 0 || p > n - 1 || q > p {
        return Err(JordanError::CoefficientRange { family: 'b', n, p, q });
    }
    Ok(b_value(n.into(), p.into(), q.into()))
}

fn at(row: &[ParamScalar], q: i64) -> ParamScalar {
    if q < 0 {
        return ParamScalar::zero();
    }
    row.get(q as usize).cloned().unwrap_or_default()
}

fn n4g2() -> ParamScalar {
    ParamScalar::g().pow(2).scale_i64(4)
}

fn m2g() -> ParamScalar {
    ParamScalar::g().scale_i64(-2)
}

fn c(v: i64) -> ParamScalar {
    ParamScalar::from_int(v)
}

/// `b^{(n,p)}` from `a^{(n,p)}` by acting once more with `H − 2λn`.
pub fn b_row_from_a(n: i64, p: i64, a: &[ParamScalar]) -> Vec<ParamScalar> {
    (0..=p)
        .map(|q| {
            if q == 0 {
                m2g() * c(n - 2 * p) * at(a, 0)
            } else {
                m2g() * (c(2 * p - 2 * q + 2) * at(a, q - 1) + c(n - 2 * p + q) * at(a, q))
            }
        })
        .collect()
}

/// `a^{(n,p+1)}` from `b^{(n,p)}`.
pub fn a_row_from_b(n: i64, p: i64, b: &[ParamScalar]) -> Vec<ParamScalar> {
    (0..=p + 1)
        .map(|q| {
            if q == 0 {
                m2g() * c(n - 2 * p - 1) * at(b, 0)
            } else if q == p + 1 {
                m2g() * at(b, p)
            } else {
                m2g() * (c(2 * p + 3 - 2 * q) * at(b, q - 1) + c(n - 2 * p + q - 1) * at(b, q))
            }
        })
        .collect()
}

/// `a^{(n,p+1)}` from `a^{(n,p)}`.
pub fn a_row_recursion(n: i64, p: i64, a: &[ParamScalar]) -> Vec<ParamScalar> {
    (0..=p + 1)
        .map(|q| {
            let inner = if q == 0 {
                c((n - 2 * p - 1) * (n - 2 * p)) * at(a, 0)
            } else if q == p + 1 {
                c(2) * at(a, p - 1) + c(n - p) * at(a, p)
            } else if q == 1 {
                c(n - 2 * p) * (c(4 * p + 1) * at(a, 0) + c(n - 2 * p + 1) * at(a, 1))
            } else {
                c((2 * p - 2 * q + 3) * (2 * p - 2 * q + 4)) * at(a, q - 2)
                    + c((n - 2 * p + q - 1) * (4 * p - 4 * q + 5)) * at(a, q - 1)
                    + c((n - 2 * p + q - 1) * (n - 2 * p + q)) * at(a, q)
            };
            n4g2() * inner
        })
        .collect()
}

/// `b^{(n,p+1)}` from `b^{(n,p)}`.
pub fn b_row_recursion(n: i64, p: i64, b: &[ParamScalar]) -> Vec<ParamScalar> {
    (0..=p + 1)
        .map(|q| {
            if q == p + 1 {
                return ParamScalar::g().pow(2).scale_i64(12) * (c(2) * at(b, p - 1) + c(n - p - 1) * at(b, p));
            }
            let inner = if q == 0 {
                c((n - 2 * p - 2) * (n - 2 * p - 1)) * at(b, 0)
            } else if q == 1 {
                c(n - 2 * p - 1) * (c(4 * p + 3) * at(b, 0) + c(n - 2 * p) * at(b, 1))
            } else {
                c((2 * p - 2 * q + 4) * (2 * p - 2 * q + 5)) * at(b, q - 2)
                    + c((n - 2 * p + q - 2) * (4 * p - 4 * q + 7)) * at(b, q - 1)
                    + c((n - 2 * p + q - 2) * (n - 2 * p + q - 1)) * at(b, q)
            };
            n4g2() * inner
        })
        .collect()
}

fn closed_row(f: fn(i64, i64, i64) -> ParamScalar, n: i64, p: i64) -> Vec<ParamScalar> {
    (0..=p).map(|q| f(n, p, q)).collect()
}

fn compare(id: String, anchor: String, closed: &[ParamScalar], built: &[ParamScalar]) -> IdentityRecord {
    let bad: Vec<String> = closed
        .iter()
        .zip(built)
        .enumerate()
        .filter(|(_, (x, y))| x != y)
        .map(|(q, (x, y))| format!("q={q}: closed {} vs recursion {}", x.render(), y.render()))
        .collect();
    let length_ok = closed.len() == built.len();
    IdentityRecord::check(id, anchor, bad.is_empty() && length_ok, || bad.join("; "))
}

/// Checks the closed forms of `a` and `b` against both cross relations and
/// both self-recursions, row by row, for every `n ≤ n_max`.
pub fn verify_coefficient_recursions(n_max: u32) -> Vec<IdentityRecord> {
    let mut out = Vec::new();
    for n in 0..=i64::from(n_max) {
        out.push(compare(
            format!("coeffs.a.n{n}.p0"),
            format!("a^({n},0) = [1]"),
            &closed_row(a_value, n, 0),
            &[ParamScalar::one()],
        ));
        let mut a_rec = vec![ParamScalar::one()];
        let mut b_rec = if n >= 1 { vec![ParamScalar::g().scale_i64(-2 * n)] } else { Vec::new() };
        for p in 0..=n {
            let a_closed = closed_row(a_value, n, p);
            if p < n {
                let b_closed = closed_row(b_value, n, p);
                out.push(compare(
                    format!("coeffs.b-from-a.n{n}.p{p}"),
                    format!("b^({n},{p}) from a^({n},{p}) by one more factor of (H - 2*lam*n)"),
                    &b_closed,
                    &b_row_from_a(n, p, &a_closed),
                ));
                out.push(compare(
                    format!("coeffs.a-from-b.n{n}.p{}", p + 1),
                    format!("a^({n},{}) from b^({n},{p}) by one more factor of (H - 2*lam*n)", p + 1),
                    &closed_row(a_value, n, p + 1),
                    &a_row_from_b(n, p, &b_closed),
                ));
                out.push(compare(
                    format!("coeffs.b.n{n}.p{p}"),
                    format!("b^({n},{p}) closed form = recursion"),
                    &b_closed,
                    &b_rec,
                ));
                b_rec = b_row_recursion(n, p, &b_rec);
            }
            out.push(compare(
                format!("coeffs.a.n{n}.p{p}"),
                format!("a^({n},{p}) closed form = recursion"),
                &a_closed,
                &a_rec,
            ));
            a_rec = a_row_recursion(n, p, &a_rec);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stated_values() {
        for n in 0..6u32 {
            assert!(coeff_a(n, 0, 0).unwrap().is_one());
            let top = ParamScalar::g().scale_i64(2).pow(2 * n)
                * ParamScalar::from_bigint(factorial(n.into()) * double_factorial(2 * i64::from(n) - 1));
            assert_eq!(coeff_a(n, n, n).unwrap(), top);
        }
        assert_eq!(coeff_b(1, 0, 0).unwrap(), ParamScalar::g().scale_i64(-2));
        assert!(coeff_a(2, 3, 0).is_err());
        assert!(coeff_b(0, 0, 0).is_err());
    }

    #[test]
    fn recursions_reproduce_closed_forms() {
        let bad: Vec<_> = verify_coefficient_recursions(8)
            .into_iter()
            .filter(|r| !r.is_verified())
            .map(|r| format!("{}: {}", r.id, r.residual.render()))
            .collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }
}
