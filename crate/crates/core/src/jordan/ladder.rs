use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use super::{build_state, casimir_eigenvalue, JordanError, JordanLabel};
use crate::coeff::ParamScalar;
use crate::identity::IdentityRecord;
use crate::operators::catalogue::{a, b, bilinear, c_op, casimir, hamiltonian};
use crate::operators::{Bilinear, Sign};
use crate::weyl::{GaussianState, Poly3, WeylOperator};

/// One of `A±`, `B±`, `C±`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LadderOp {
    pub letter: char,
    pub sign: Sign,
}

impl LadderOp {
    pub const ALL: [LadderOp; 6] = [
        LadderOp { letter: 'A', sign: Sign::Plus },
        LadderOp { letter: 'B', sign: Sign::Plus },
        LadderOp { letter: 'C', sign: Sign::Plus },
        LadderOp { letter: 'A', sign: Sign::Minus },
        LadderOp { letter: 'B', sign: Sign::Minus },
        LadderOp { letter: 'C', sign: Sign::Minus },
    ];

    pub fn from_name(name: &str) -> Result<Self, JordanError> {
        Self::ALL
            .into_iter()
            .find(|op| op.to_string() == name)
            .ok_or_else(|| JordanError::UnknownOperator(name.to_string()))
    }

    pub fn operator(&self) -> WeylOperator {
        match self.letter {
            'A' => a(self.sign),
            'B' => b(self.sign),
            _ => c_op(self.sign),
        }
    }
}

impl fmt::Display for LadderOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.sign.symbol())
    }
}

/// An expansion over unnormalized block states.
pub type Expansion = Vec<(JordanLabel, ParamScalar)>;

/// `c·λ^lp·g^gp` with `c = num/den`.
fn t(num: i64, den: i64, lp: i32, gp: i32) -> ParamScalar {
    let pw = |x: ParamScalar, e: i32| {
        if e >= 0 {
            x.pow(e as u32)
        } else {
            ParamScalar::one() / x.pow((-e) as u32)
        }
    };
    ParamScalar::from_ratio(num, den) * pw(ParamScalar::lam(), lp) * pw(ParamScalar::g(), gp)
}

fn collect(terms: Vec<(i64, i64, i64, ParamScalar)>) -> Expansion {
    terms
        .into_iter()
        .filter(|(_, _, _, c)| !c.is_zero())
        .filter_map(|(k, n, m, c)| JordanLabel::checked(k, n, m).map(|l| (l, c)))
        .collect()
}

/// `op·Ψ̂_{k,n,m}` as a combination of block states.
pub fn ladder_apply(op: LadderOp, label: JordanLabel) -> Expansion {
    let (k, n, m) = (i64::from(label.k), i64::from(label.n), i64::from(label.m));
    let d1 = (n + 1) * (2 * n + 1);
    let e = 2 * k + 2 * n + 1;
    let terms = match (op.letter, op.sign) {
        ('A', Sign::Plus) => vec![(k, n + 1, m, t(1, 4 * d1, 0, -2)), (k + 1, n - 1, m - 2, t(n, 2 * n + 1, 0, 0))],
        ('B', Sign::Plus) => vec![
            (k, n + 1, m + 2, t((m + 1) * (m + 2), 2 * d1, 0, 0)),
            (k + 1, n - 1, m, t(2 * n * (2 * n - m - 1) * (2 * n - m), 2 * n + 1, 0, 2)),
        ],
        ('C', Sign::Plus) => vec![
            (k, n + 1, m + 1, t(-(m + 1), 2 * d1, 0, -1)),
            (k + 1, n - 1, m - 1, t(2 * n * (2 * n - m), 2 * n + 1, 0, 1)),
        ],
        ('A', Sign::Minus) => vec![
            (k - 1, n + 1, m, t(-k, d1, 1, -2)),
            (k, n - 1, m - 2, t(-2 * n * e, 2 * n + 1, 1, 0)),
        ],
        ('B', Sign::Minus) => vec![
            (k - 1, n + 1, m + 1, t(2 * k * (m + 1), d1, 0, 0)),
            (k - 1, n + 1, m + 2, t(-2 * k * (m + 1) * (m + 2), d1, 1, 0)),
            (k, n - 1, m - 1, t(-4 * n * (2 * n - m) * e, 2 * n + 1, 0, 2)),
            (k, n - 1, m, t(-4 * n * (2 * n - m) * (2 * n - m - 1) * e, 2 * n + 1, 1, 2)),
        ],
        _ => vec![
            (k - 1, n + 1, m, t(k, d1, 0, -1)),
            (k - 1, n + 1, m + 1, t(-2 * k * (m + 1), d1, 1, -1)),
            (k, n - 1, m - 2, t(2 * n * e, 2 * n + 1, 0, 1)),
            (k, n - 1, m - 1, t(4 * n * (2 * n - m) * e, 2 * n + 1, 1, 1)),
        ],
    };
    collect(terms)
}

/// Expansions of `H`, `R = A⁺A⁻`, `V = A⁺C⁻ + C⁺A⁻` and the Casimir on one state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialActions {
    pub label: JordanLabel,
    pub h: Expansion,
    pub r: Expansion,
    pub v: Expansion,
    pub casimir: ParamScalar,
}

pub fn special_operator_actions(label: JordanLabel) -> SpecialActions {
    let (k, n, m) = (i64::from(label.k), i64::from(label.n), i64::from(label.m));
    let big = (n + 1) * (n + 2) * (2 * n + 1) * (2 * n + 3);
    let mid = (2 * n - 1) * (2 * n + 3);
    let low = n * (n - 1) * (2 * k + 2 * n + 1);
    let odd = (2 * n - 1) * (2 * n + 1);
    SpecialActions {
        label,
        h: collect(vec![(k, n, m, label.energy()), (k, n, m - 1, ParamScalar::one())]),
        r: collect(vec![
            (k - 1, n + 2, m, t(-k, 4 * big, 1, -4)),
            (k, n, m - 2, t(-(4 * k + 2 * n + 3), 2 * mid, 1, -2)),
            (k + 1, n - 2, m - 4, t(-2 * low, odd, 1, 0)),
        ]),
        v: collect(vec![
            (k - 1, n + 2, m, t(k, 4 * big, 0, -3)),
            (k, n, m - 2, t(4 * k + 2 * n + 3, 2 * mid, 0, -1)),
            (k, n, m - 1, t(1, 1, 1, -1)),
            (k + 1, n - 2, m - 4, t(2 * low, odd, 0, 1)),
        ]),
        casimir: casimir_eigenvalue(label.k, label.n),
    }
}

/// Differential-form states for every label with `k + n ≤ max_total`.
pub(crate) fn state_table(max_total: u32) -> HashMap<JordanLabel, GaussianState> {
    JordanLabel::up_to(max_total)
        .into_par_iter()
        .map(|l| (l, build_state(l).gaussian_state()))
        .collect()
}

fn expansion_residual(
    lhs: GaussianState,
    expansion: &Expansion,
    table: &HashMap<JordanLabel, GaussianState>,
) -> GaussianState {
    let mut rhs = GaussianState::zero();
    for (l, c) in expansion {
        rhs = &rhs + &table[l].scale(c);
    }
    &lhs - &rhs
}

fn render_expansion(expansion: &Expansion) -> String {
    if expansion.is_empty() {
        return "0".to_string();
    }
    expansion
        .iter()
        .map(|(l, c)| format!("({})*Psi{l}", c.render()))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Every ladder expansion against direct differential action, for labels with `k + n ≤ max_total`.
pub fn verify_ladder_actions(max_total: u32) -> Vec<IdentityRecord> {
    let table = state_table(max_total + 1);
    let ops: Vec<(LadderOp, WeylOperator)> = LadderOp::ALL.iter().map(|op| (*op, op.operator())).collect();
    let jobs: Vec<(JordanLabel, usize)> = JordanLabel::up_to(max_total)
        .into_iter()
        .flat_map(|l| (0..ops.len()).map(move |i| (l, i)))
        .collect();
    jobs.into_par_iter()
        .map(|(label, i)| {
            let (op, w) = &ops[i];
            let expansion = ladder_apply(*op, label);
            let lhs = Poly3::apply(w, &table[&label]);
            IdentityRecord::new(
                format!("jordan.ladder.{op}.{label}"),
                format!("{op}*Psi{label} = {}", render_expansion(&expansion)),
                expansion_residual(lhs, &expansion, &table),
            )
        })
        .collect()
}

/// `H`, `R`, `V` and Casimir expansions against direct differential action.
pub fn verify_special_actions(max_total: u32) -> Vec<IdentityRecord> {
    let table = state_table(max_total + 1);
    let h = hamiltonian();
    let r = bilinear(Bilinear::R);
    let v = bilinear(Bilinear::V);
    let cas = casimir();
    JordanLabel::up_to(max_total)
        .into_par_iter()
        .flat_map_iter(|label| {
            let acts = special_operator_actions(label);
            let psi = &table[&label];
            let check = |name: &str, op: &WeylOperator, exp: &Expansion| {
                IdentityRecord::new(
                    format!("jordan.special.{name}.{label}"),
                    format!("{name}*Psi{label} = {}", render_expansion(exp)),
                    expansion_residual(Poly3::apply(op, psi), exp, &table),
                )
            };
            let cas_exp = vec![(label, acts.casimir.clone())];
            vec![
                check("H", &h, &acts.h),
                check("R", &r, &acts.r),
                check("V", &v, &acts.v),
                check("Casimir", &cas, &cas_exp),
            ]
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::Residual;

    fn failures(records: Vec<IdentityRecord>) -> Vec<String> {
        records
            .into_iter()
            .filter(|r| !r.is_verified())
            .map(|r| format!("{}: {}", r.id, r.anchor))
            .collect()
    }

    #[test]
    fn creation_on_ground() {
        let ground = JordanLabel::new(0, 0, 0).unwrap();
        let up = ladder_apply(LadderOp::from_name("A+").unwrap(), ground);
        assert_eq!(up, vec![(JordanLabel::new(0, 1, 0).unwrap(), t(1, 4, 0, -2))]);
        let c = ladder_apply(LadderOp::from_name("C+").unwrap(), JordanLabel::new(1, 2, 0).unwrap());
        assert_eq!(c.len(), 1);
        assert!(LadderOp::from_name("D+").is_err());
    }

    #[test]
    fn low_labels_agree_with_direct_action() {
        assert_eq!(failures(verify_ladder_actions(1)), Vec::<String>::new());
        assert_eq!(failures(verify_special_actions(1)), Vec::<String>::new());
    }

    #[test]
    fn residual_is_state() {
        let rec = &verify_special_actions(0)[0];
        assert!(matches!(rec.residual, Residual::State(_)));
    }
}
