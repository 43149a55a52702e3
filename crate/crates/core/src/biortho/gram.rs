use rayon::prelude::*;

use super::{normalization, BiorthoError};
use crate::coeff::ParamScalar;
use crate::fock::wick_inner;
use crate::jordan::{build_state, JordanLabel};

pub type Matrix = Vec<Vec<ParamScalar>>;

/// The bilinear Gram matrix of one Jordan block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramBlock {
    pub k: u32,
    pub n: u32,
    pub matrix: Matrix,
}

pub fn gram(k: u32, n: u32) -> GramBlock {
    let dim = 2 * n as usize + 1;
    let states: Vec<_> = (0..dim as u32).map(|m| build_state(JordanLabel { k, n, m }).creation).collect();
    let upper: Vec<(usize, usize, ParamScalar)> = (0..dim)
        .flat_map(|r| (r..dim).map(move |c| (r, c)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(r, c)| (r, c, wick_inner(&states[r], &states[c])))
        .collect();
    let mut matrix = vec![vec![ParamScalar::zero(); dim]; dim];
    for (r, c, v) in upper {
        matrix[c][r] = v.clone();
        matrix[r][c] = v;
    }
    GramBlock { k, n, matrix }
}

/// `⟨⟨Ψ̂_a | Ψ̂_b⟩⟩` for every member `a` of one block and `b` of another.
pub fn cross_gram(a: (u32, u32), b: (u32, u32)) -> Matrix {
    let members = |(k, n): (u32, u32)| -> Vec<_> {
        (0..=2 * n).map(|m| build_state(JordanLabel { k, n, m }).creation).collect()
    };
    let (left, right) = (members(a), members(b));
    left.par_iter()
        .map(|l| right.iter().map(|r| wick_inner(l, r)).collect())
        .collect()
}

impl GramBlock {
    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    /// `h_j = G[m][j−m]`, read off the first row and last column.
    pub fn hankel(&self) -> Vec<ParamScalar> {
        let d = self.dim();
        (0..2 * d - 1)
            .map(|j| {
                let r = j.saturating_sub(d - 1);
                self.matrix[r][j - r].clone()
            })
            .collect()
    }

    /// The first entry that breaks the Hankel pattern.
    pub fn hankel_defect(&self) -> Option<(usize, usize)> {
        let h = self.hankel();
        (0..self.dim())
            .flat_map(|r| (0..self.dim()).map(move |c| (r, c)))
            .find(|&(r, c)| self.matrix[r][c] != h[r + c])
    }

    /// The Hankel sequence divided by `N(k,n)`.
    pub fn normalized_hankel(&self) -> Vec<ParamScalar> {
        let norm = normalization(self.k, self.n);
        self.hankel().iter().map(|h| h / &norm).collect()
    }

    /// `T·G·Tᵀ / N(k,n)`.
    pub fn transformed(&self, t: &Matrix) -> Matrix {
        let d = self.dim();
        let norm = normalization(self.k, self.n);
        let tg: Matrix = (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| (0..d).filter(|&j| !t[r][j].is_zero()).map(|j| &t[r][j] * &self.matrix[j][c]).sum())
                    .collect()
            })
            .collect();
        (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| {
                        let v: ParamScalar = (0..d).filter(|&j| !t[c][j].is_zero()).map(|j| &tg[r][j] * &t[c][j]).sum();
                        v / &norm
                    })
                    .collect()
            })
            .collect()
    }
}

/// `Φ_m = Σ_{m'} t[m][m'] Ψ_{m'}` with `t` lower unitriangular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiTransform {
    pub k: u32,
    pub n: u32,
    pub t: Matrix,
}

impl PhiTransform {
    /// Builds `t` from listed off-diagonal coefficients `(m, m', value)`.
    pub fn from_entries(k: u32, n: u32, entries: &[(usize, usize, ParamScalar)]) -> Self {
        let mut t = identity(2 * n as usize + 1);
        for (r, c, v) in entries {
            t[*r][*c] = v.clone();
        }
        Self { k, n, t }
    }
}

fn identity(d: usize) -> Matrix {
    (0..d)
        .map(|r| (0..d).map(|c| if r == c { ParamScalar::one() } else { ParamScalar::zero() }).collect())
        .collect()
}

/// Anti-identity of size `d`.
pub fn anti_identity(d: usize) -> Matrix {
    (0..d)
        .map(|r| (0..d).map(|c| if r + c == d - 1 { ParamScalar::one() } else { ParamScalar::zero() }).collect())
        .collect()
}

/// Toeplitz solution `t[m][m−j] = c_j` with `c² = 1/h̃` as truncated power
/// series, where `h̃_j = h_{2n+j}/N(k,n)`.
pub fn orthogonalize(block: &GramBlock) -> Result<PhiTransform, BiorthoError> {
    let (k, n) = (block.k, block.n);
    if let Some((row, col)) = block.hankel_defect() {
        return Err(BiorthoError::NotHankel { k, n, row, col });
    }
    let d = block.dim();
    let h = block.normalized_hankel();
    let tail: Vec<ParamScalar> = h[d - 1..].to_vec();
    let lead = tail[0].clone();
    if lead.is_zero() || h[..d - 1].iter().any(|x| !x.is_zero()) {
        return Err(BiorthoError::Degenerate { k, n });
    }
    let mut inv = vec![ParamScalar::one() / &lead];
    for j in 1..d {
        let acc: ParamScalar = (1..=j).map(|i| &tail[i] * &inv[j - i]).sum();
        inv.push(-(acc / &lead));
    }
    let half = ParamScalar::from_ratio(1, 2);
    let mut c = vec![ParamScalar::one()];
    for j in 1..d {
        let cross: ParamScalar = (1..j).map(|i| &c[i] * &c[j - i]).sum();
        c.push((&inv[j] - &cross) * &half);
    }
    let mut t = identity(d);
    for r in 0..d {
        for j in 1..=r {
            t[r][r - j] = c[j].clone();
        }
    }
    Ok(PhiTransform { k, n, t })
}

/// The orthogonalized combinations listed for blocks `(0,1)`, `(0,2)` and `(0,3)`.
pub fn listed_phi(n: u32) -> Option<PhiTransform> {
    let f = |num: i64, den: i64, lp: u32| ParamScalar::from_ratio(num, den) / ParamScalar::lam().pow(lp);
    let entries = match n {
        1 => vec![(1, 0, f(-1, 2, 1))],
        2 => vec![
            (1, 0, f(-1, 2, 1)),
            (2, 0, f(1, 6, 2)),
            (2, 1, f(-1, 2, 1)),
            (3, 0, f(1, 48, 3)),
            (3, 1, f(-1, 24, 2)),
        ],
        3 => vec![
            (1, 0, f(-1, 2, 1)),
            (2, 0, f(3, 20, 2)),
            (2, 1, f(-1, 2, 1)),
            (3, 0, f(-1, 30, 3)),
            (3, 1, f(3, 20, 2)),
            (3, 2, f(-1, 2, 1)),
            (4, 0, f(-1, 300, 4)),
            (4, 1, f(1, 60, 3)),
            (4, 2, f(-1, 20, 2)),
        ],
        _ => return None,
    };
    Some(PhiTransform::from_entries(0, n, &entries))
}

/// Entries where `T·G·Tᵀ/N` differs from the anti-identity, as `(m, m', value)`.
pub fn pairing_defects(block: &GramBlock, t: &Matrix) -> Vec<(usize, usize, ParamScalar)> {
    let got = block.transformed(t);
    let want = anti_identity(block.dim());
    let mut out = Vec::new();
    for r in 0..block.dim() {
        for c in r..block.dim() {
            if got[r][c] != want[r][c] {
                out.push((r, c, got[r][c].clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_block() {
        let block = gram(0, 1);
        let lam = ParamScalar::lam();
        let expected = vec![
            ParamScalar::zero(),
            ParamScalar::zero(),
            ParamScalar::one(),
            ParamScalar::one() / lam.scale_i64(2),
            ParamScalar::zero(),
        ];
        assert_eq!(block.normalized_hankel(), expected);
        let phi = orthogonalize(&block).unwrap();
        assert_eq!(phi.t[1][0], -(ParamScalar::one() / lam.scale_i64(4)));
        assert!(pairing_defects(&block, &phi.t).is_empty());
        assert!(pairing_defects(&block, &listed_phi(1).unwrap().t).is_empty());
    }

    #[test]
    fn ground_block() {
        let block = gram(0, 0);
        assert_eq!(block.matrix, vec![vec![ParamScalar::one()]]);
    }
}
