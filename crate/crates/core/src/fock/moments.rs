use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::coeff::ParamScalar;
use crate::weyl::{GaussianState, Poly3};

/// Gaussian moments of the weight `Ψ0² = exp(−xᵀAx)` in real coordinates
/// `(x1, x2, x3)`, normalized so that the total weight is 1.
///
/// `A = [[λ, 0, −g], [0, λ, ig], [−g, ig, λ]]` has determinant `λ³`; the
/// covariance is `Σ = A⁻¹/2` and moments follow from
/// `E[x^α] = α! · [J^α] qᵐ/m!` with `q = ½ JᵀΣJ` and `|α| = 2m`.
pub struct MomentOracle {
    q: Poly3,
    q_powers: Vec<Poly3>,
    cache: HashMap<[u32; 3], ParamScalar>,
}

/// The weight matrix `A`.
pub fn weight_matrix() -> [[ParamScalar; 3]; 3] {
    let lam = ParamScalar::lam;
    let g = ParamScalar::g;
    let ig = || ParamScalar::i() * g();
    let z = ParamScalar::zero;
    [[lam(), z(), -g()], [z(), lam(), ig()], [-g(), ig(), lam()]]
}

/// Exact inverse by cofactors.
pub fn inverse3(m: &[[ParamScalar; 3]; 3]) -> [[ParamScalar; 3]; 3] {
    let cof = |r: usize, c: usize| {
        let (r1, r2) = ((r + 1) % 3, (r + 2) % 3);
        let (c1, c2) = ((c + 1) % 3, (c + 2) % 3);
        &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1])
    };
    let det: ParamScalar = (0..3).map(|c| &m[0][c] * &cof(0, c)).sum();
    let inv_det = det.inv().expect("weight matrix is invertible");
    [0, 1, 2].map(|r| [0, 1, 2].map(|c| &cof(c, r) * &inv_det))
}

pub fn determinant3(m: &[[ParamScalar; 3]; 3]) -> ParamScalar {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1]);
    &(&m[0][0] * &minor(1, 2, 1, 2)) - &(&(&m[0][1] * &minor(1, 2, 0, 2)) - &(&m[0][2] * &minor(1, 2, 0, 1)))
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

impl MomentOracle {
    pub fn new() -> Self {
        let inv = inverse3(&weight_matrix());
        // q(J) = ½ JᵀΣJ = ¼ Jᵀ A⁻¹ J
        let mut q = Poly3::zero();
        let quarter = ParamScalar::from_ratio(1, 4);
        for r in 0..3 {
            for c in 0..3 {
                let mut e = [0; 3];
                e[r] += 1;
                e[c] += 1;
                q.add_term(e, &(&inv[r][c] * &quarter));
            }
        }
        Self {
            q,
            q_powers: vec![Poly3::ground()],
            cache: HashMap::new(),
        }
    }

    /// `E[x1^a x2^b x3^c]`.
    pub fn moment(&mut self, alpha: [u32; 3]) -> ParamScalar {
        let total: u32 = alpha.iter().sum();
        if total % 2 == 1 {
            return ParamScalar::zero();
        }
        if let Some(v) = self.cache.get(&alpha) {
            return v.clone();
        }
        let m = total / 2;
        while self.q_powers.len() <= m as usize {
            let next = self.q_powers.last().expect("nonempty").multiply(&self.q);
            self.q_powers.push(next);
        }
        let coeff = self.q_powers[m as usize].coeff(&alpha);
        let num: BigInt = alpha.iter().map(|&a| factorial(a)).product();
        let value = &coeff * &(&ParamScalar::from_bigint(num) / &ParamScalar::from_bigint(factorial(m)));
        self.cache.insert(alpha, value.clone());
        value
    }

    /// `E[p]` for a polynomial in `(x1, x2, x3)`.
    pub fn expectation(&mut self, p: &Poly3) -> ParamScalar {
        let mut total = ParamScalar::zero();
        for (e, c) in p.terms() {
            let m = self.moment(*e);
            if !m.is_zero() {
                total += &(c * &m);
            }
        }
        total
    }
}

impl Default for MomentOracle {
    fn default() -> Self {
        Self::new()
    }
}

/// `z = x1 + i·x2`, `zb = x1 − i·x2`, `x3 = x3`.
pub fn to_real_coordinates(p: &Poly3) -> Poly3 {
    let i = ParamScalar::i();
    let x1 = Poly3::var(0);
    let x2 = Poly3::var(1);
    let images = [&x1 + &x2.scale(&i), &x1 - &x2.scale(&i), Poly3::var(2)];
    p.substitute(&images)
}

/// `∫ bra·ket·Ψ0² d³x / ∫ Ψ0² d³x` by Gaussian moments.
pub fn gaussian_moment_inner(bra: &GaussianState, ket: &GaussianState) -> ParamScalar {
    MomentOracle::new().expectation(&to_real_coordinates(&bra.multiply(ket)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{X3, Z, ZB};

    #[test]
    fn weight_determinant_is_lambda_cubed() {
        assert_eq!(determinant3(&weight_matrix()), ParamScalar::monomial(1, 3, 0));
    }

    #[test]
    fn ground_state_has_unit_norm() {
        assert!(gaussian_moment_inner(&Poly3::ground(), &Poly3::ground()).is_one());
    }

    #[test]
    fn contraction_of_zb_with_v_is_reproduced() {
        let lam = ParamScalar::lam();
        let g = ParamScalar::g();
        let u = Poly3::var(ZB);
        let v = &Poly3::var(Z).scale(&-&lam) + &Poly3::var(X3).scale(&g.scale_i64(2));
        // ⟨A⁺Ψ0|B⁺Ψ0⟩ = −K(A,B) = 2λ, and A⁺Ψ0 = −2λ·u·Ψ0.
        let value = gaussian_moment_inner(&u.scale(&lam.scale_i64(-2)), &v);
        assert_eq!(value, lam.scale_i64(2));
    }
}
