use rayon::prelude::*;

use super::{
    cross_gram, gram, listed_phi, norm_pairing, normalization, orthogonalize, pairing_defects, verify_adjoint_rules,
    verify_q_identities, verify_t_vanishing, GramBlock,
};
use crate::coeff::ParamScalar;
use crate::fock::wick_inner;
use crate::jordan::{build_state, JordanLabel};
use crate::identity::{IdentityRecord, SuiteResult};

fn blocks(max_total: u32) -> Vec<(u32, u32)> {
    (0..=max_total).flat_map(|k| (0..=max_total - k).map(move |n| (k, n))).collect()
}

fn render_defects(defects: &[(usize, usize, ParamScalar)]) -> String {
    defects
        .iter()
        .map(|(r, c, v)| format!("<<Phi{r}|Phi{c}>> = {}", v.render()))
        .collect::<Vec<_>>()
        .join("; ")
}

fn render_t(t: &[Vec<ParamScalar>]) -> String {
    let mut rows = Vec::new();
    for (r, row) in t.iter().enumerate() {
        let parts: Vec<String> = row[..r]
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| format!("({})*Psi{c}", v.render()))
            .collect();
        if !parts.is_empty() {
            rows.push(format!("Phi{r} = Psi{r} + {}", parts.join(" + ")));
        }
    }
    if rows.is_empty() {
        "Phi = Psi".to_string()
    } else {
        rows.join("; ")
    }
}

fn block_records(block: &GramBlock) -> Vec<IdentityRecord> {
    let (k, n) = (block.k, block.n);
    let norm = normalization(k, n);
    let mut out = Vec::new();
    let defect = block.hankel_defect();
    out.push(IdentityRecord::check(
        format!("biortho.hankel.({k},{n})"),
        format!("Gram block ({k},{n}) is symmetric Hankel"),
        defect.is_none() && (0..block.dim()).all(|r| (0..r).all(|c| block.matrix[r][c] == block.matrix[c][r])),
        || format!("entry {defect:?} breaks the pattern"),
    ));
    let h = block.hankel();
    let early: Vec<usize> = (0..2 * n as usize).filter(|&j| !h[j].is_zero()).collect();
    out.push(IdentityRecord::check(
        format!("biortho.zero-pattern.({k},{n})"),
        format!("h_j = 0 for j < {} and h_{} = N({k},{n})", 2 * n, 2 * n),
        early.is_empty() && h[2 * n as usize] == norm,
        || format!("nonzero h at {early:?}, h_{} = {}", 2 * n, h[2 * n as usize].render()),
    ));
    match orthogonalize(block) {
        Ok(phi) => {
            let defects = pairing_defects(block, &phi.t);
            out.push(
                IdentityRecord::check(
                    format!("biortho.phi.({k},{n})"),
                    format!("<<Phi({k},{n},m)|Phi({k},{n},m')>> = delta(m + m', {})", 2 * n),
                    defects.is_empty(),
                    || render_defects(&defects),
                )
                .with_note(render_t(&phi.t)),
            );
        }
        Err(e) => out.push(IdentityRecord::check(format!("biortho.phi.({k},{n})"), "orthogonalization", false, || e.to_string())),
    }
    if k == 0 {
        if let Some(listed) = listed_phi(n) {
            let defects = pairing_defects(block, &listed.t);
            out.push(
                IdentityRecord::check(
                    format!("biortho.listed-phi.(0,{n})"),
                    format!("listed Phi(0,{n},m) pair to delta(m + m', {})", 2 * n),
                    defects.is_empty(),
                    || render_defects(&defects),
                )
                .with_note(render_t(&listed.t)),
            );
        }
    }
    out
}

/// `N(k,n)` against every opposite pairing of every block with
/// `k + n ≤ max_total`, the vanishing of `T1`, `T2`, `T3`, and the operator
/// identities the normalization argument relies on.
pub fn verify_normalization(max_total: u32) -> SuiteResult {
    let labels: Vec<(u32, u32, u32)> = blocks(max_total)
        .into_iter()
        .flat_map(|(k, n)| (0..=2 * n).map(move |m| (k, n, m)))
        .collect();
    let mut records: Vec<IdentityRecord> = labels
        .into_par_iter()
        .map(|(k, n, m)| {
            let norm = normalization(k, n);
            IdentityRecord::new(
                format!("biortho.norm.({k},{n},{m})"),
                format!("<<Psi({k},{n},{m})|Psi({k},{n},{})>> = N({k},{n}) = {}", 2 * n - m, norm.render()),
                &norm_pairing(k, n, m) - &norm,
            )
        })
        .collect();
    for (k, n) in blocks(max_total) {
        records.extend(verify_t_vanishing(k, n));
    }
    records.extend(verify_q_identities(max_total.min(3), max_total.min(3)));
    records.extend(verify_adjoint_rules());
    SuiteResult::new("normalization", records)
}

/// Gram structure and orthogonalization of every block with
/// `k + n ≤ max_total`, and cross-block pairings for `k + n ≤ cross_total`.
pub fn verify_biorthogonality(max_total: u32, cross_total: u32) -> SuiteResult {
    let grams: Vec<GramBlock> = blocks(max_total).into_par_iter().map(|(k, n)| gram(k, n)).collect();
    let mut records: Vec<IdentityRecord> = grams.iter().flat_map(block_records).collect();
    records.extend(verify_cross_blocks(cross_total));
    SuiteResult::new("biortho", records)
}

fn render_nonzero(m: &[Vec<ParamScalar>]) -> Vec<String> {
    m.iter()
        .enumerate()
        .flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(c, v)| format!("({r},{c}): {}", v.render()))
        })
        .collect()
}

/// Pairings between distinct blocks with `k + n ≤ max_total`, always
/// including `(1,0)` against `(0,2)`.
///
/// Blocks of different energy must pair to zero. For blocks of equal energy
/// the pairing `c_{m+m'}` depends only on `m + m'` and vanishes below the top
/// of the longer chain; what survives there is reported, and for `(1,0)`
/// against `(0,2)` the eigenvector `Q⁺Ψ0` is corrected by the matching
/// multiple of `Ψ̂_{0,2,0}` and checked to be orthogonal to the whole block.
pub fn verify_cross_blocks(max_total: u32) -> Vec<IdentityRecord> {
    let small = blocks(max_total);
    let mut pairs: Vec<((u32, u32), (u32, u32))> = Vec::new();
    for (i, x) in small.iter().enumerate() {
        for y in &small[i + 1..] {
            pairs.push(if x.1 >= y.1 { (*x, *y) } else { (*y, *x) });
        }
    }
    if !pairs.contains(&((0, 2), (1, 0))) {
        pairs.push(((0, 2), (1, 0)));
    }
    let mut out: Vec<IdentityRecord> = pairs
        .into_par_iter()
        .flat_map_iter(|(x, y)| {
            let m = cross_gram(x, y);
            let nonzero = render_nonzero(&m);
            let tag = format!("({},{})-({},{})", x.0, x.1, y.0, y.1);
            let mut recs = vec![IdentityRecord::check(
                format!("biortho.cross.{tag}"),
                format!("<<Psi({},{},m)|Psi({},{},m')>> = 0 for all m, m'", x.0, x.1, y.0, y.1),
                nonzero.is_empty(),
                || nonzero.join("; "),
            )];
            if 2 * x.0 + x.1 == 2 * y.0 + y.1 {
                let (d1, d2) = (m.len(), m[0].len());
                let floor = d1.max(d2) - 1;
                let mut broken = Vec::new();
                for r in 0..d1 {
                    for c in 0..d2 {
                        let shifted_ok = r == 0 || c + 1 == d2 || m[r][c] == m[r - 1][c + 1];
                        if !shifted_ok || (r + c < floor && !m[r][c].is_zero()) {
                            broken.push(format!("({r},{c})"));
                        }
                    }
                }
                recs.push(
                    IdentityRecord::check(
                        format!("biortho.cross-structure.{tag}"),
                        format!("equal-energy pairing depends on m + m' and vanishes for m + m' < {floor}"),
                        broken.is_empty(),
                        || broken.join(", "),
                    )
                    .with_note(if nonzero.is_empty() { "all pairings vanish".to_string() } else { format!("surviving pairings {}", nonzero.join("; ")) }),
                );
            }
            recs
        })
        .collect();
    let top = cross_gram((0, 2), (1, 0))[4][0].clone();
    let shift = -(top / normalization(0, 2));
    let corrected = &build_state(JordanLabel { k: 1, n: 0, m: 0 }).creation
        + &build_state(JordanLabel { k: 0, n: 2, m: 0 }).creation.scale(&shift);
    let residues: Vec<String> = (0..=4)
        .filter_map(|m| {
            let v = wick_inner(&build_state(JordanLabel { k: 0, n: 2, m }).creation, &corrected);
            (!v.is_zero()).then(|| format!("m={m}: {}", v.render()))
        })
        .collect();
    out.push(
        IdentityRecord::check(
            "biortho.cross-corrected.(0,2)-(1,0)",
            format!("Q+*Psi0 + ({})*Psi(0,2,0) pairs to zero with every Psi(0,2,m)", shift.render()),
            residues.is_empty(),
            || residues.join("; "),
        )
        .with_note("the correction leaves <<Psi(1,0,0)|Psi(1,0,0)>> unchanged since <<Psi(0,2,0)|Psi(0,2,m)>> = 0 for m < 4"),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_normalization() {
        let res = verify_normalization(2);
        let bad: Vec<_> = res.failures().map(|r| r.id.clone()).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn small_range() {
        let res = verify_biorthogonality(2, 2);
        let bad: Vec<_> = res.failures().map(|r| r.id.clone()).collect();
        assert_eq!(bad, vec!["biortho.cross.(0,2)-(1,0)".to_string()]);
        let top = res.records.iter().find(|r| r.id == "biortho.cross.(0,2)-(1,0)").unwrap();
        assert_eq!(top.residual.render(), "(4,0): -8*g^2");
    }
}
