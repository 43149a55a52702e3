use proptest::prelude::*;

use psho_core::coeff::ParamScalar;
use psho_core::fock::{
    from_gaussian_state, from_uvw, to_gaussian_state, to_uvw, wick_inner, word_pairing, word_pairing_permanent,
    ContractionMatrix, CreationPolynomial, CreationWord,
};
use psho_core::jordan::{a_value, b_value, ladder_apply, JordanLabel, LadderOp};
use psho_core::operators::catalogue::hamiltonian;
use psho_core::weyl::uvw::{operator_from_uvw, operator_to_uvw, poly_from_uvw, poly_to_uvw};
use psho_core::weyl::{Poly3, WeylMonomial, WeylOperator};

fn monomial_scalar() -> impl Strategy<Value = ParamScalar> {
    (-6i64..=6, 1i64..=4, 0u32..=2, 0u32..=2, any::<bool>()).prop_map(|(num, den, l, g, imag)| {
        let c = ParamScalar::from_ratio(num, den) * ParamScalar::monomial(1, l, g);
        if imag {
            c * ParamScalar::i()
        } else {
            c
        }
    })
}

fn scalar() -> impl Strategy<Value = ParamScalar> {
    (prop::collection::vec(monomial_scalar(), 1..=3), 0u32..=2, 1i64..=3).prop_map(|(terms, lp, shift)| {
        let num: ParamScalar = terms.into_iter().sum();
        let den = ParamScalar::lam().pow(lp) + ParamScalar::g().scale_i64(shift);
        num / den
    })
}

fn nonzero_scalar() -> impl Strategy<Value = ParamScalar> {
    scalar().prop_filter("nonzero", |c| !c.is_zero())
}

fn exps(max: u32) -> impl Strategy<Value = [u32; 3]> {
    [0..=max, 0..=max, 0..=max]
}

fn operator() -> impl Strategy<Value = WeylOperator> {
    prop::collection::vec((monomial_scalar(), exps(2), exps(2)), 0..=3)
        .prop_map(|terms| WeylOperator::from_terms(terms.into_iter().map(|(c, v, d)| (WeylMonomial::new(v, d), c))))
}

fn poly() -> impl Strategy<Value = Poly3> {
    prop::collection::vec((monomial_scalar(), exps(3)), 0..=4).prop_map(|terms| Poly3::from_terms(terms.into_iter().map(|(c, e)| (e, c))))
}

fn creation(max_letter: u32, max_terms: usize) -> impl Strategy<Value = CreationPolynomial> {
    prop::collection::vec((monomial_scalar(), exps(max_letter)), 0..=max_terms).prop_map(|terms| {
        CreationPolynomial::from_terms(terms.into_iter().map(|(c, [i, j, l])| (CreationWord::new(i, j, l), c)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scalars_form_a_field(a in scalar(), b in nonzero_scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&(&a * &b) / &b, a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn scalar_conjugation_is_an_involution(a in scalar()) {
        prop_assert_eq!(a.conjugate().conjugate(), a);
    }

    #[test]
    fn weyl_product_is_associative(x in operator(), y in operator(), z in operator()) {
        prop_assert_eq!((&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn commutator_satisfies_jacobi(x in operator(), y in operator(), z in operator()) {
        let jacobi = x.commutator(&y.commutator(&z)) + y.commutator(&z.commutator(&x)) + z.commutator(&x.commutator(&y));
        prop_assert!(jacobi.is_zero());
        prop_assert_eq!(x.commutator(&y), -y.commutator(&x));
    }

    #[test]
    fn adjoints_reverse_products(x in operator(), y in operator()) {
        prop_assert_eq!(x.formal_adjoint().formal_adjoint(), x.clone());
        prop_assert_eq!((&x * &y).transpose(), &y.transpose() * &x.transpose());
        prop_assert_eq!((&x * &y).formal_adjoint(), &y.formal_adjoint() * &x.formal_adjoint());
    }

    #[test]
    fn state_action_is_a_representation(x in operator(), y in operator(), s in poly()) {
        let composed = Poly3::apply(&x, &Poly3::apply(&y, &s));
        prop_assert_eq!(Poly3::apply(&(&x * &y), &s), composed);
    }

    #[test]
    fn uvw_chart_round_trips(p in poly(), x in operator()) {
        prop_assert_eq!(poly_from_uvw(&poly_to_uvw(&p)), p);
        prop_assert_eq!(operator_from_uvw(&operator_to_uvw(&x)), x);
    }

    #[test]
    fn creation_letters_round_trip(c in creation(2, 3)) {
        prop_assert_eq!(from_gaussian_state(&to_gaussian_state(&c)), c.clone());
        prop_assert_eq!(from_uvw(&to_uvw(&c)), c);
    }

    #[test]
    fn bilinear_form_is_symmetric(a in creation(2, 3), b in creation(2, 3)) {
        prop_assert_eq!(wick_inner(&a, &b), wick_inner(&b, &a));
    }

    #[test]
    fn hamiltonian_is_symmetric_for_the_form(a in creation(1, 3), b in creation(1, 3)) {
        let h = hamiltonian();
        let ha = from_gaussian_state(&Poly3::apply(&h, &to_gaussian_state(&a)));
        let hb = from_gaussian_state(&Poly3::apply(&h, &to_gaussian_state(&b)));
        prop_assert_eq!(wick_inner(&ha, &b), wick_inner(&a, &hb));
    }

    #[test]
    fn word_pairing_matches_permanent(a in exps(2), b in exps(2)) {
        let (wa, wb) = (CreationWord::new(a[0], a[1], a[2]), CreationWord::new(b[0], b[1], b[2]));
        prop_assert_eq!(word_pairing(&wa, &wb), word_pairing_permanent(&wa, &wb, &ContractionMatrix::stated()));
    }

    #[test]
    fn coefficients_vanish_below_threshold(n in 0i64..=12, p in 0i64..=12, q in 0i64..=12) {
        prop_assume!(p <= n && q <= p);
        if q < 2 * p - n {
            prop_assert!(a_value(n, p, q).is_zero());
        }
        if q < 2 * p + 1 - n {
            prop_assert!(b_value(n, p, q).is_zero());
        }
    }

    #[test]
    fn ladder_targets_are_valid_and_conserve_energy_shift(k in 0u32..=4, n in 0u32..=4, m in 0u32..=8, op in 0usize..6) {
        prop_assume!(m <= 2 * n);
        let op = LadderOp::ALL[op];
        let source = JordanLabel::new(k, n, m).unwrap();
        let shift = if op.sign.value() > 0 { 1 } else { -1 };
        for (target, c) in ladder_apply(op, source) {
            prop_assert!(target.m <= 2 * target.n);
            prop_assert!(!c.is_zero());
            prop_assert_eq!(i64::from(2 * target.k + target.n), i64::from(2 * k + n) + shift);
        }
    }
}
