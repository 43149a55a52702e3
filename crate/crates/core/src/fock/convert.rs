use std::collections::BTreeMap;

use super::word::{CreationPolynomial, CreationWord};
use crate::coeff::ParamScalar;
use crate::operators::catalogue::{a, b, c_op};
use crate::operators::Sign;
use crate::weyl::uvw::{poly_from_uvw, poly_to_uvw, U, V, W};
use crate::weyl::{GaussianState, Poly3, WeylOperator};

fn letter_operator(letter: usize) -> WeylOperator {
    match letter {
        0 => a(Sign::Plus),
        1 => b(Sign::Plus),
        _ => c_op(Sign::Plus),
    }
}

/// Builds the polynomial of every word in `words` (and of all their prefixes)
/// by peeling one letter at a time off an already known word.
fn build_words<'a>(
    words: impl Iterator<Item = &'a CreationWord>,
    ground: Poly3,
    step: impl Fn(usize, &Poly3) -> Poly3,
) -> BTreeMap<CreationWord, Poly3> {
    let mut cache = BTreeMap::new();
    cache.insert(CreationWord::EMPTY, ground);
    fn fill(
        w: CreationWord,
        cache: &mut BTreeMap<CreationWord, Poly3>,
        step: &dyn Fn(usize, &Poly3) -> Poly3,
    ) {
        if cache.contains_key(&w) {
            return;
        }
        let letter = (0..3).find(|&k| w.0[k] > 0).expect("nonempty word");
        let prev = w.without(letter).expect("letter present");
        fill(prev, cache, step);
        let next = step(letter, &cache[&prev]);
        cache.insert(w, next);
    }
    for w in words {
        fill(*w, &mut cache, &step);
    }
    cache
}

fn assemble(p: &CreationPolynomial, cache: &BTreeMap<CreationWord, Poly3>) -> Poly3 {
    let mut out = Poly3::zero();
    for (w, c) in p.terms() {
        for (e, v) in cache[w].terms() {
            out.add_term(*e, &(v * c));
        }
    }
    out
}

/// The state in `(z, zb, x3)`, by applying the creation operators to `Ψ0`.
pub fn to_gaussian_state(p: &CreationPolynomial) -> GaussianState {
    let ops = [0, 1, 2].map(letter_operator);
    let cache = build_words(p.terms().map(|(w, _)| w), GaussianState::ground(), |k, s| {
        GaussianState::apply(&ops[k], s)
    });
    assemble(p, &cache)
}

/// Image of one creation letter acting on `f·Ψ0`, written on `f` in the `(u, v, w)` chart.
fn uvw_letter(letter: usize, f: &Poly3) -> Poly3 {
    let lam = ParamScalar::lam();
    let g = ParamScalar::g();
    match letter {
        0 => (&f.mul_monomial(&[1, 0, 0]) + &f.partial(V)).scale(&lam.scale_i64(-2)),
        1 => &(&f.mul_monomial(&[0, 1, 0]) + &f.partial(U)) + &f.partial(W).scale(&g),
        _ => {
            &(&f.mul_monomial(&[0, 0, 1]).scale(&ParamScalar::from_int(2)) + &f.partial(V).scale(&g.scale_i64(2)))
                - &f.partial(W).scale(&lam)
        }
    }
}

/// The state's polynomial part in the `(u, v, w)` chart.
pub fn to_uvw(p: &CreationPolynomial) -> Poly3 {
    let cache = build_words(p.terms().map(|(w, _)| w), Poly3::ground(), uvw_letter);
    assemble(p, &cache)
}

/// Leading factor of a word in the `(u, v, w)` chart: `A⁺ → −2λu`, `B⁺ → v`, `C⁺ → 2w`.
fn leading_factor(w: &CreationWord) -> ParamScalar {
    let [i, _, l] = w.0;
    ParamScalar::lam().scale_i64(-2).pow(i) * ParamScalar::from_int(2).pow(l)
}

/// Rewrites a `(u, v, w)` polynomial as a creation polynomial.
///
/// A word's image is its leading monomial plus terms of lower degree, so the
/// top-degree part determines the coefficients one degree at a time.
pub fn from_uvw(f: &Poly3) -> CreationPolynomial {
    let mut rest = f.clone();
    let mut out = CreationPolynomial::zero();
    while let Some((e, c)) = rest
        .terms()
        .max_by_key(|(e, _)| (e.iter().sum::<u32>(), **e))
        .map(|(e, c)| (*e, c.clone()))
    {
        let w = CreationWord(e);
        let coeff = &c / &leading_factor(&w);
        let image = to_uvw(&CreationPolynomial::word(w, coeff.clone()));
        rest = &rest - &image;
        out.add_term(w, &coeff);
    }
    out
}

/// Rewrites a state as a creation polynomial; every polynomial state has one.
pub fn from_gaussian_state(s: &GaussianState) -> CreationPolynomial {
    from_uvw(&poly_to_uvw(s))
}

/// Inverse of [`to_uvw`] on the `(z, zb, x3)` side.
pub fn uvw_to_gaussian_state(f: &Poly3) -> GaussianState {
    poly_from_uvw(f)
}

/// Applies `P₂` (x2 → −x2) to a state: the polynomial is returned with
/// `z ↔ zb`, and is to be read against the partner ground state `P₂Ψ0`.
pub fn eta_apply(s: &GaussianState) -> GaussianState {
    s.swapped()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{X3, Z, ZB};

    fn letter_state(k: usize) -> GaussianState {
        let mut w = [0; 3];
        w[k] = 1;
        to_gaussian_state(&CreationPolynomial::word(CreationWord(w), ParamScalar::one()))
    }

    #[test]
    fn single_letters_match_the_uvw_variables() {
        let lam = ParamScalar::lam();
        let g = ParamScalar::g();
        assert_eq!(letter_state(0), Poly3::monomial(lam.scale_i64(-2), [0, 1, 0]));
        let v = &Poly3::var(Z).scale(&-&lam) + &Poly3::var(X3).scale(&g.scale_i64(2));
        assert_eq!(letter_state(1), v);
        let w2 = &Poly3::var(ZB).scale(&g.scale_i64(2)) - &Poly3::var(X3).scale(&lam.scale_i64(2));
        assert_eq!(letter_state(2), w2);
    }

    #[test]
    fn uvw_route_agrees_with_operator_route() {
        for len in 0..=4 {
            for w in CreationWord::all_of_len(len) {
                let p = CreationPolynomial::word(w, ParamScalar::one());
                assert_eq!(poly_from_uvw(&to_uvw(&p)), to_gaussian_state(&p), "{}", w.render());
            }
        }
    }

    #[test]
    fn round_trip_through_states() {
        let p = &super::super::expand_q_power(2) + &CreationPolynomial::word(CreationWord::new(1, 2, 0), ParamScalar::g());
        assert_eq!(from_gaussian_state(&to_gaussian_state(&p)), p);
    }

    #[test]
    fn eta_is_an_involution() {
        let s = to_gaussian_state(&super::super::expand_q_power(1));
        assert_eq!(eta_apply(&eta_apply(&s)), s);
        assert_eq!(eta_apply(&Poly3::var(Z)), Poly3::var(ZB));
    }
}
