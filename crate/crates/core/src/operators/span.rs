use std::collections::BTreeMap;

use crate::coeff::ParamScalar;
use crate::weyl::{WeylMonomial, WeylOperator};

/// Expresses operators as linear combinations of a fixed basis.
///
/// The basis matrix (rows indexed by monomials) is row-reduced once; each
/// query then costs one matrix-vector product, and the returned combination
/// is always re-multiplied out so membership is certified by an exact residual.
pub struct SpanSolver {
    basis: Vec<WeylOperator>,
    rows: BTreeMap<WeylMonomial, usize>,
    /// `transform * basis_matrix` is in reduced row echelon form.
    transform: Vec<Vec<ParamScalar>>,
    /// `(row, column)` of every pivot.
    pivots: Vec<(usize, usize)>,
}

/// Result of a span query.
pub struct Combination {
    pub coefficients: Vec<ParamScalar>,
    pub residual: WeylOperator,
}

impl SpanSolver {
    pub fn new(basis: Vec<WeylOperator>) -> Self {
        let mut rows = BTreeMap::new();
        for op in &basis {
            for (m, _) in op.terms() {
                let next = rows.len();
                rows.entry(*m).or_insert(next);
            }
        }
        let nr = rows.len();
        let nc = basis.len();
        let mut mat = vec![vec![ParamScalar::zero(); nc]; nr];
        for (j, op) in basis.iter().enumerate() {
            for (m, c) in op.terms() {
                mat[rows[m]][j] = c.clone();
            }
        }
        let mut transform: Vec<Vec<ParamScalar>> = (0..nr)
            .map(|i| {
                let mut r = vec![ParamScalar::zero(); nr];
                r[i] = ParamScalar::one();
                r
            })
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..nc {
            let Some(p) = (row..nr).find(|&r| !mat[r][col].is_zero()) else {
                continue;
            };
            mat.swap(row, p);
            transform.swap(row, p);
            let inv = mat[row][col].inv().expect("pivot is nonzero");
            scale_row(&mut mat[row], &inv);
            scale_row(&mut transform[row], &inv);
            for r in 0..nr {
                if r == row || mat[r][col].is_zero() {
                    continue;
                }
                let f = mat[r][col].clone();
                let (src_m, src_t) = (mat[row].clone(), transform[row].clone());
                sub_scaled(&mut mat[r], &src_m, &f);
                sub_scaled(&mut transform[r], &src_t, &f);
            }
            pivots.push((row, col));
            row += 1;
            if row == nr {
                break;
            }
        }
        Self {
            basis,
            rows,
            transform,
            pivots,
        }
    }

    pub fn basis(&self) -> &[WeylOperator] {
        &self.basis
    }

    /// Number of linearly independent basis elements.
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn solve(&self, target: &WeylOperator) -> Combination {
        let mut vec = vec![ParamScalar::zero(); self.rows.len()];
        for (m, c) in target.terms() {
            if let Some(&r) = self.rows.get(m) {
                vec[r] = c.clone();
            }
        }
        let mut coefficients = vec![ParamScalar::zero(); self.basis.len()];
        for &(row, col) in &self.pivots {
            let mut acc = ParamScalar::zero();
            for (t, v) in self.transform[row].iter().zip(&vec) {
                if !t.is_zero() && !v.is_zero() {
                    acc += &(t * v);
                }
            }
            coefficients[col] = acc;
        }
        let mut residual = target.clone();
        for (c, op) in coefficients.iter().zip(&self.basis) {
            if !c.is_zero() {
                residual = &residual - &op.scale(c);
            }
        }
        Combination {
            coefficients,
            residual,
        }
    }
}

fn scale_row(row: &mut [ParamScalar], f: &ParamScalar) {
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x = &*x * f;
        }
    }
}

fn sub_scaled(row: &mut [ParamScalar], src: &[ParamScalar], f: &ParamScalar) {
    for (x, s) in row.iter_mut().zip(src) {
        if !s.is_zero() {
            *x = &*x - &(s * f);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{X3, Z};

    #[test]
    fn finds_combination_and_rejects_outsider() {
        let x = WeylOperator::var(Z);
        let d = WeylOperator::der(X3);
        let basis = vec![x.clone() + d.clone(), x.clone() - d.clone(), WeylOperator::one()];
        let solver = SpanSolver::new(basis);
        assert_eq!(solver.rank(), 3);
        let target = x.scale(&ParamScalar::lam()) + WeylOperator::scalar(ParamScalar::from_int(3));
        let combo = solver.solve(&target);
        assert!(combo.residual.is_zero());
        assert_eq!(combo.coefficients[2], ParamScalar::from_int(3));
        let outside = solver.solve(&WeylOperator::der(Z));
        assert!(!outside.residual.is_zero());
    }
}
