use num_bigint::BigInt;
use proptest::prelude::*;

use psho_cli::expr::{evaluate, parse, Expr};
use psho_core::coeff::ParamScalar;
use psho_core::operators::catalogue::{catalogue_names, named};
use psho_core::weyl::{WeylMonomial, WeylOperator};

const LEAVES: [&str; 16] = [
    "H", "A+", "B-", "C+", "Q-", "R", "Z", "E12", "E33", "R0", "Rt1", "Dp(2)", "z", "dzb", "lam", "I",
];

fn ast() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        prop::sample::select(LEAVES.to_vec()).prop_map(|n| Expr::Name(n.to_string())),
        (0u32..50).prop_map(|n| Expr::Number(BigInt::from(n))),
    ];
    leaf.prop_recursive(5, 48, 2, |inner| {
        let pair = (inner.clone(), inner.clone());
        prop_oneof![
            inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
            pair.clone().prop_map(|(a, b)| Expr::Sum(Box::new(a), Box::new(b))),
            pair.clone().prop_map(|(a, b)| Expr::Difference(Box::new(a), Box::new(b))),
            pair.clone().prop_map(|(a, b)| Expr::Product(Box::new(a), Box::new(b))),
            pair.clone().prop_map(|(a, b)| Expr::Quotient(Box::new(a), Box::new(b))),
            (inner.clone(), 0u32..4).prop_map(|(a, e)| Expr::Power(Box::new(a), e)),
            pair.clone().prop_map(|(a, b)| Expr::Commutator(Box::new(a), Box::new(b))),
            pair.prop_map(|(a, b)| Expr::Anticommutator(Box::new(a), Box::new(b))),
        ]
    })
}

fn scalar() -> impl Strategy<Value = ParamScalar> {
    (-7i64..=7, 1i64..=5, 0u32..=3, 0u32..=3, -2i64..=2, 0u32..=1).prop_map(|(a, b, l, g, im, shift)| {
        let c = ParamScalar::from_ratio(a, b) + ParamScalar::i().scale_i64(im);
        let den = ParamScalar::lam().pow(shift) + ParamScalar::g();
        c * ParamScalar::monomial(1, l, g) / den
    })
}

fn operator() -> impl Strategy<Value = WeylOperator> {
    let exps = [0u32..=2, 0u32..=2, 0u32..=2];
    prop::collection::vec((scalar(), exps.clone(), exps), 0..=4)
        .prop_map(|t| WeylOperator::from_terms(t.into_iter().map(|(c, v, d)| (WeylMonomial::new(v, d), c))))
}

#[test]
fn catalogue_names_round_trip() {
    for name in catalogue_names().into_iter().chain(["Dp(0)".to_string(), "Dp(5)".to_string()]) {
        let e = parse(&name).unwrap();
        assert_eq!(e, Expr::Name(name.clone()));
        assert_eq!(e.render(), name);
        assert_eq!(evaluate(&name).unwrap(), named(&name).unwrap());
    }
}

#[test]
fn catalogue_operators_render_to_parseable_text() {
    for name in catalogue_names() {
        let op = named(&name).unwrap();
        assert_eq!(evaluate(&op.render()).unwrap(), op, "{name}");
    }
}

#[test]
fn q_plus_factorizes() {
    assert_eq!(evaluate("2*A+*B+ - C+^2").unwrap(), named("Q+").unwrap());
}

#[test]
fn rendered_scalar_example_parses() {
    let c = evaluate("(3/2)*lam^2*g - I*g^3").unwrap();
    let expected = ParamScalar::from_ratio(3, 2) * ParamScalar::monomial(1, 2, 1) - ParamScalar::i() * ParamScalar::monomial(1, 0, 3);
    assert_eq!(c, WeylOperator::scalar(expected.clone()));
    assert_eq!(expected.render(), "(3/2)*lam^2*g - I*g^3");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn parse_inverts_render(e in ast()) {
        prop_assert_eq!(parse(&e.render()).unwrap(), e);
    }

    #[test]
    fn operator_text_round_trips(op in operator()) {
        prop_assert_eq!(evaluate(&op.render()).unwrap(), op);
    }

    #[test]
    fn scalar_text_round_trips(c in scalar()) {
        prop_assert_eq!(evaluate(&c.render()).unwrap(), WeylOperator::scalar(c));
    }
}
