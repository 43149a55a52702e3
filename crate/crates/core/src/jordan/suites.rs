use rayon::prelude::*;

use super::{
    build_block_direct, build_state, casimir_eigenvalue, shifted_h, verify_auxiliary_relations,
    verify_coefficient_recursions, verify_ladder_actions, verify_special_actions, JordanLabel,
};
use crate::identity::{IdentityRecord, SuiteResult};
use crate::operators::catalogue::casimir;
use crate::weyl::{GaussianState, Poly3};

fn block_records(k: u32, n: u32) -> Vec<IdentityRecord> {
    let closed: Vec<GaussianState> = (0..=2 * n)
        .map(|m| build_state(JordanLabel { k, n, m }).gaussian_state())
        .collect();
    let direct = build_block_direct(k, n);
    let cas = casimir();
    let eigen = casimir_eigenvalue(k, n);
    let mut out = Vec::new();
    for m in 0..=2 * n {
        let label = JordanLabel { k, n, m };
        let psi = &closed[m as usize];
        let below = if m == 0 { GaussianState::zero() } else { closed[m as usize - 1].clone() };
        let below_text = if m == 0 { "0".to_string() } else { format!("Psi({k},{n},{})", m - 1) };
        out.push(IdentityRecord::new(
            format!("jordan.chain.{label}"),
            format!("(H - E)*Psi{label} = {below_text}"),
            &shifted_h(psi, k, n) - &below,
        ));
        out.push(IdentityRecord::check(
            format!("jordan.direct.{label}"),
            format!("closed-form Psi{label} = (H - E)^{}*B+^{n}*Q+^{k}*Psi0", 2 * n - m),
            direct[m as usize] == build_state(label),
            || format!("direct {} vs closed {}", direct[m as usize].creation.render(), build_state(label).creation.render()),
        ));
        out.push(IdentityRecord::new(
            format!("jordan.casimir.{label}"),
            format!("(E11 + E22 + E33)*Psi{label} = {}*Psi{label}", eigen.render()),
            &Poly3::apply(&cas, psi) - &psi.scale(&eigen),
        ));
    }
    let nonzero = closed.iter().all(|s| !s.is_zero());
    let top = build_state(JordanLabel { k, n, m: 0 }).gaussian_state();
    out.push(IdentityRecord::check(
        format!("jordan.dimension.({k},{n})"),
        format!("block ({k},{n}) has dimension {}", 2 * n + 1),
        nonzero && shifted_h(&top, k, n).is_zero(),
        || "chain has a vanishing member or does not terminate".to_string(),
    ));
    out
}

/// Chain relation, closed-form vs direct states, Casimir eigenvalue and block
/// dimension for every block with `k + n ≤ max_total`, plus the coefficient
/// recursions up to `n_coeff` and the creation-operator commutation rules.
pub fn verify_jordan_layer(max_total: u32, n_coeff: u32) -> SuiteResult {
    let blocks: Vec<(u32, u32)> = (0..=max_total)
        .flat_map(|k| (0..=max_total - k).map(move |n| (k, n)))
        .collect();
    let mut records: Vec<IdentityRecord> = blocks.into_par_iter().flat_map_iter(|(k, n)| block_records(k, n)).collect();
    records.extend(verify_coefficient_recursions(n_coeff));
    records.extend(verify_auxiliary_relations(n_coeff.min(4), 3));
    SuiteResult::new("jordan", records)
}

/// Ladder, `H`, `R`, `V` and Casimir expansions for labels with `k + n ≤ max_total`.
pub fn verify_ladder_layer(max_total: u32) -> SuiteResult {
    let mut records = verify_ladder_actions(max_total);
    records.extend(verify_special_actions(max_total));
    SuiteResult::new("jordan-ladder", records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_layer() {
        let res = verify_jordan_layer(2, 4);
        let bad: Vec<_> = res.failures().map(|r| r.id.clone()).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
}
