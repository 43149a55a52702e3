use rayon::prelude::*;

use super::moments::{determinant3, to_real_coordinates, weight_matrix, MomentOracle};
use super::wick::word_pairing;
use super::word::{CreationPolynomial, CreationWord};
use super::{from_gaussian_state, to_gaussian_state, wick_inner};
use crate::coeff::ParamScalar;
use crate::identity::{IdentityRecord, SuiteResult};
use crate::operators::catalogue::hamiltonian;
use crate::weyl::{GaussianState, Poly3};

/// Compares the contraction engine with the moment oracle on every pair of
/// words whose lengths add up to at most `max_total`, and checks the form is
/// symmetric and `H`-symmetric on those words.
pub fn verify_inner_products(max_total: u32) -> SuiteResult {
    let words: Vec<CreationWord> = (0..=max_total).flat_map(CreationWord::all_of_len).collect();
    let real: Vec<Poly3> = words
        .par_iter()
        .map(|w| to_real_coordinates(&to_gaussian_state(&CreationPolynomial::word(*w, ParamScalar::one()))))
        .collect();
    let pairs: Vec<(usize, usize)> = (0..words.len())
        .flat_map(|x| (0..words.len()).map(move |y| (x, y)))
        .filter(|&(x, y)| words[x].len() + words[y].len() <= max_total)
        .collect();
    let mut out: Vec<IdentityRecord> = pairs
        .par_iter()
        .map_init(MomentOracle::new, |oracle, &(x, y)| {
            let (wb, wk) = (&words[x], &words[y]);
            let lhs = word_pairing(wb, wk);
            let rhs = oracle.expectation(&real[x].multiply(&real[y]));
            IdentityRecord::new(
                format!("inner.oracle.{:?}.{:?}", wb.0, wk.0),
                format!("<<{}|{}>> contraction = moments", show(wb), show(wk)),
                &lhs - &rhs,
            )
        })
        .collect();
    out.extend(pairs.iter().filter(|(x, y)| x < y).map(|&(x, y)| {
        let (wb, wk) = (&words[x], &words[y]);
        IdentityRecord::new(
            format!("inner.symmetry.{:?}.{:?}", wb.0, wk.0),
            format!("<<{}|{}>> = <<{}|{}>>", show(wb), show(wk), show(wk), show(wb)),
            &word_pairing(wb, wk) - &word_pairing(wk, wb),
        )
    }));
    let h = hamiltonian();
    let h_words: Vec<CreationPolynomial> = words
        .iter()
        .filter(|w| w.len() < max_total)
        .map(|w| {
            let s: GaussianState = GaussianState::apply(&h, &to_gaussian_state(&CreationPolynomial::word(*w, ParamScalar::one())));
            from_gaussian_state(&s)
        })
        .collect();
    let short: Vec<&CreationWord> = words.iter().filter(|w| w.len() < max_total).collect();
    for (x, wb) in short.iter().enumerate() {
        for (y, wk) in short.iter().enumerate().skip(x + 1) {
            if wb.len() + wk.len() > max_total {
                continue;
            }
            let pb = CreationPolynomial::word(**wb, ParamScalar::one());
            let pk = CreationPolynomial::word(**wk, ParamScalar::one());
            out.push(IdentityRecord::new(
                format!("inner.h-symmetry.{:?}.{:?}", wb.0, wk.0),
                format!("<<H {}|{}>> = <<{}|H {}>>", show(wb), show(wk), show(wb), show(wk)),
                &wick_inner(&h_words[x], &pk) - &wick_inner(&pb, &h_words[y]),
            ));
        }
    }
    out.push(IdentityRecord::new(
        "inner.ground-unit",
        "<<Psi0|Psi0>> = 1 in units of (pi/lam)^(3/2) = pi^(3/2)/sqrt(det A)",
        &wick_inner(&CreationPolynomial::ground(), &CreationPolynomial::ground()) - &ParamScalar::one(),
    ));
    out.push(IdentityRecord::new(
        "inner.ground-determinant",
        "det A = lam^3 for Psi0^2 = exp(-x.A.x)",
        &determinant3(&weight_matrix()) - &ParamScalar::lam().pow(3),
    ));
    SuiteResult::new("inner", out)
}

fn show(w: &CreationWord) -> String {
    if w.is_empty() {
        "Psi0".into()
    } else {
        format!("{}*Psi0", w.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracles_agree_up_to_total_degree_four() {
        let s = verify_inner_products(4);
        let bad: Vec<_> = s.failures().map(|r| r.anchor.clone()).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
}
