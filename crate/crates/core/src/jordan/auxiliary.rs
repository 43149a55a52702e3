use crate::coeff::ParamScalar;
use crate::identity::IdentityRecord;
use crate::operators::catalogue::{a, b, c_op, hamiltonian};
use crate::operators::Sign;
use crate::weyl::WeylOperator;

fn shifted(n: i64) -> WeylOperator {
    &hamiltonian() - &WeylOperator::scalar(ParamScalar::lam().scale_i64(2 * n))
}

/// `(H − 2λn)Xᵖ = Xᵖ(H − 2λ(n−p)) + correction` for the three creation
/// operators, as exact operator identities.
pub fn verify_auxiliary_relations(n_max: u32, p_max: u32) -> Vec<IdentityRecord> {
    let (ap, bp, cp) = (a(Sign::Plus), b(Sign::Plus), c_op(Sign::Plus));
    let g = ParamScalar::g();
    let mut out = Vec::new();
    for n in 0..=i64::from(n_max) {
        for p in 1..=p_max {
            let pi = i64::from(p);
            let right = shifted(n - pi);
            let left = shifted(n);
            let cases = [
                ("A+", &ap, WeylOperator::zero(), String::new()),
                (
                    "B+",
                    &bp,
                    (bp.pow(p - 1) * cp.clone()).scale(&g.scale_i64(-2 * pi)),
                    format!(" - {}*g*B+^{}*C+", 2 * p, p - 1),
                ),
                (
                    "C+",
                    &cp,
                    (ap.clone() * cp.pow(p - 1)).scale(&g.scale_i64(-2 * pi)),
                    format!(" - {}*g*A+*C+^{}", 2 * p, p - 1),
                ),
            ];
            for (name, x, correction, correction_text) in cases {
                let xp = x.pow(p);
                let lhs = &left * &xp;
                let rhs = &(&xp * &right) + &correction;
                let mut rec = IdentityRecord::operators(
                    format!("jordan.aux.{name}.n{n}.p{p}"),
                    format!("(H - {}*lam)*{name}^{p} = {name}^{p}*(H - {}*lam){correction_text}", 2 * n, 2 * (n - pi)),
                    &lhs,
                    &rhs,
                );
                if name == "B+" {
                    rec = rec.with_note(format!(
                        "printed coefficient of B+^{}*C+ is -2*p*q; the identity holds with -2*p*g",
                        p - 1
                    ));
                }
                out.push(rec);
            }
        }
    }
    out
}
