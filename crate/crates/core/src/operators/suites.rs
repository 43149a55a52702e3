use rayon::prelude::*;

use super::boson::{boson, boson_differential, d_pair, gl3_from_bosons, SurdOperator};
use super::catalogue::dsl::{dz, dzb, frac, g, imag, lam, lg, lg_scalar, n, x3, z, zb};
use super::catalogue::*;
use super::span::SpanSolver;
use crate::coeff::ParamScalar;
use crate::identity::{IdentityRecord, Residual, SuiteResult};
use crate::weyl::{render_sum, WeylOperator};

/// A linear combination of named operators, kept together with its text.
pub(crate) struct Combo {
    pub text: String,
    pub op: WeylOperator,
}

/// Builds `Σ c·X` from `(c, name, X)` triples; an empty name marks the identity.
pub(crate) fn combo(parts: &[(ParamScalar, &str, &WeylOperator)]) -> Combo {
    let text = render_sum(parts.iter().map(|(c, name, _)| (c, name.to_string())));
    let op = parts.iter().map(|(c, _, x)| x.scale(c)).sum();
    Combo { text, op }
}

fn one() -> WeylOperator {
    WeylOperator::one()
}

fn record(id: String, lhs_text: &str, lhs: &WeylOperator, rhs: Combo) -> IdentityRecord {
    IdentityRecord::operators(id, format!("{lhs_text} = {}", rhs.text), lhs, &rhs.op)
}

fn name(base: &str, s: Sign) -> String {
    format!("{base}{}", s.symbol())
}

fn ladder(base: &str, s: Sign) -> WeylOperator {
    match base {
        "A" => a(s),
        "B" => b(s),
        "C" => c_op(s),
        "Q" => q(s),
        _ => unreachable!(),
    }
}

fn k(v: i64) -> ParamScalar {
    ParamScalar::from_int(v)
}

fn kl(v: i64, lam_exp: i32, g_exp: i32) -> ParamScalar {
    lg_scalar(v, lam_exp, g_exp)
}

pub fn verify_ladder_relations() -> SuiteResult {
    let h = hamiltonian();
    let mut out = Vec::new();
    for s in Sign::BOTH {
        let e = s.value();
        let t = s.flip();
        let (xa, xb, xc, xq) = (a(s), b(s), c_op(s), q(s));
        let (ta, tb, tc) = (a(t), b(t), c_op(t));
        let (na, nb, nc, nq) = (name("A", s), name("B", s), name("C", s), name("Q", s));
        let (ma, mb, mc, mq) = (name("A", t), name("B", t), name("C", t), name("Q", t));
        out.push(record(
            format!("ladder.H.{na}"),
            &format!("[H,{na}]"),
            &h.commutator(&xa),
            combo(&[(kl(2 * e, 1, 0), &na, &xa)]),
        ));
        out.push(record(
            format!("ladder.H.{nq}"),
            &format!("[H,{nq}]"),
            &h.commutator(&xq),
            combo(&[(kl(4 * e, 1, 0), &nq, &xq)]),
        ));
        let lhs = xa.commutator(&q(t));
        let printed = &lhs - &xa.scale(&kl(4 * e, 1, 0));
        out.push(
            record(
                format!("ladder.{na}.{mq}"),
                &format!("[{na},{mq}]"),
                &lhs,
                combo(&[(kl(4 * e, 1, 0), &ma, &ta)]),
            )
            .with_note(format!(
                "printed right-hand side {} leaves residual {}",
                combo(&[(kl(4 * e, 1, 0), &na, &xa)]).text,
                printed.render()
            )),
        );
        for (nx, x) in [(&na, &xa), (&nb, &xb), (&nc, &xc)] {
            out.push(record(
                format!("ladder.{nx}.{nq}"),
                &format!("[{nx},{nq}]"),
                &x.commutator(&xq),
                combo(&[]),
            ));
        }
        out.push(record(
            format!("ladder.H.{nb}"),
            &format!("[H,{nb}]"),
            &h.commutator(&xb),
            combo(&[(kl(2 * e, 1, 0), &nb, &xb), (kl(-2 * e, 0, 1), &nc, &xc)]),
        ));
        out.push(record(
            format!("ladder.H.{nc}"),
            &format!("[H,{nc}]"),
            &h.commutator(&xc),
            combo(&[(kl(-2 * e, 0, 1), &na, &xa), (kl(2 * e, 1, 0), &nc, &xc)]),
        ));
        out.push(record(
            format!("ladder.{nb}.{mq}"),
            &format!("[{nb},{mq}]"),
            &xb.commutator(&q(t)),
            combo(&[(kl(4 * e, 1, 0), &mb, &tb), (kl(4 * e, 0, 1), &mc, &tc)]),
        ));
        out.push(record(
            format!("ladder.{nc}.{mq}"),
            &format!("[{nc},{mq}]"),
            &xc.commutator(&q(t)),
            combo(&[(kl(-4 * e, 0, 1), &ma, &ta), (kl(-4 * e, 1, 0), &mc, &tc)]),
        ));
        for (i, x) in ["A", "B", "C"].iter().enumerate() {
            for y in ["A", "B", "C"].iter().skip(i + 1) {
                out.push(record(
                    format!("ladder.{}.{}", name(x, s), name(y, s)),
                    &format!("[{},{}]", name(x, s), name(y, s)),
                    &ladder(x, s).commutator(&ladder(y, s)),
                    combo(&[]),
                ));
            }
        }
    }
    out.push(record(
        "ladder.A-.A+".into(),
        "[A-,A+]",
        &a(Sign::Minus).commutator(&a(Sign::Plus)),
        combo(&[]),
    ));
    let qq = q(Sign::Minus).commutator(&q(Sign::Plus));
    out.push(record(
        "ladder.Q-.Q+.Rt1".into(),
        "[Q-,Q+]",
        &qq,
        combo(&[(k(-2), "Rt1", &r1_tilde())]),
    ));
    out.push(record(
        "ladder.Q-.Q+".into(),
        "[Q-,Q+]",
        &qq,
        combo(&[
            (kl(8, 1, 0), "H", &hamiltonian()),
            (kl(-16, 0, 1), "R1", &r1()),
            (kl(24, 2, 0), "", &one()),
        ]),
    ));
    let contractions = [
        ("A", "B", kl(-2, 1, 0)),
        ("B", "A", kl(-2, 1, 0)),
        ("C", "C", kl(-2, 1, 0)),
        ("B", "C", kl(2, 0, 1)),
        ("C", "B", kl(2, 0, 1)),
        ("A", "A", k(0)),
        ("A", "C", k(0)),
        ("C", "A", k(0)),
        ("B", "B", k(0)),
    ];
    for (x, y, c) in contractions {
        let lhs = ladder(x, Sign::Minus).commutator(&ladder(y, Sign::Plus));
        let rhs = if c.is_zero() { combo(&[]) } else { combo(&[(c, "", &one())]) };
        out.push(record(format!("ladder.{x}-.{y}+"), &format!("[{x}-,{y}+]"), &lhs, rhs));
    }
    SuiteResult::new("ladder", out)
}

pub fn verify_q_factorization() -> SuiteResult {
    let mut out = Vec::new();
    for s in Sign::BOTH {
        let (na, nb, nc) = (name("A", s), name("B", s), name("C", s));
        let ab = &a(s) * &b(s);
        let cc = c_op(s).pow(2);
        out.push(record(
            format!("factorization.{}", name("Q", s)),
            &name("Q", s),
            &q(s),
            Combo {
                text: format!("2*{na}*{nb} - {nc}^2"),
                op: combo(&[(k(2), "", &ab), (k(-1), "", &cc)]).op,
            },
        ));
    }
    let u = bilinear(Bilinear::U);
    let t = bilinear(Bilinear::T);
    out.push(record(
        "factorization.H".into(),
        "H",
        &hamiltonian(),
        combo(&[(k(-1), "U", &u), (k(-1), "T", &t)]),
    ));
    SuiteResult::new("factorization", out)
}

type Terms = &'static [(i64, i32, i32, &'static str)];

const NINE_DIM: [(&str, &str, Terms); 36] = [
    ("R", "S", &[(-2, 1, 0, "X")]),
    ("R", "T", &[]),
    ("R", "U", &[]),
    ("R", "V", &[]),
    ("R", "W", &[(-2, 1, 0, "Y")]),
    ("R", "X", &[(4, 1, 0, "R")]),
    ("R", "Y", &[]),
    ("R", "Z", &[(-2, 1, 0, "V")]),
    ("S", "T", &[(2, 0, 1, "Z")]),
    ("S", "U", &[]),
    ("S", "V", &[(-2, 1, 0, "Z"), (-2, 0, 1, "X")]),
    ("S", "W", &[]),
    ("S", "X", &[(-4, 1, 0, "S")]),
    ("S", "Y", &[(-2, 1, 0, "W"), (-2, 0, 1, "U")]),
    ("S", "Z", &[(-4, 0, 1, "S")]),
    ("T", "U", &[(-2, 0, 1, "Y")]),
    ("T", "V", &[(2, 1, 0, "Y")]),
    ("T", "W", &[(2, 1, 0, "Z")]),
    ("T", "X", &[(-2, 0, 1, "V")]),
    ("T", "Y", &[(2, 1, 0, "V")]),
    ("T", "Z", &[(2, 1, 0, "W"), (4, 0, 1, "T")]),
    ("U", "V", &[(-2, 1, 0, "Y")]),
    ("U", "W", &[(-2, 1, 0, "Z"), (2, 0, 1, "X")]),
    ("U", "X", &[]),
    ("U", "Y", &[(-2, 1, 0, "V"), (-4, 0, 1, "R")]),
    ("U", "Z", &[(-2, 1, 0, "W"), (-2, 0, 1, "U")]),
    ("V", "W", &[(-2, 1, 0, "X"), (2, 0, 1, "Y")]),
    ("V", "X", &[(2, 1, 0, "V"), (-4, 0, 1, "R")]),
    ("V", "Y", &[(4, 1, 0, "R")]),
    ("V", "Z", &[(2, 1, 0, "U"), (-4, 1, 0, "T"), (2, 0, 1, "V")]),
    ("W", "X", &[(-2, 1, 0, "W"), (-2, 0, 1, "U")]),
    ("W", "Y", &[(2, 1, 0, "U"), (-4, 1, 0, "T"), (-2, 0, 1, "V")]),
    ("W", "Z", &[(4, 1, 0, "S")]),
    ("X", "Y", &[(-2, 1, 0, "Y")]),
    ("X", "Z", &[(2, 1, 0, "Z"), (-2, 0, 1, "X")]),
    ("Y", "Z", &[(2, 1, 0, "X"), (2, 0, 1, "Y")]),
];

const WITH_H: [(&str, Terms); 9] = [
    ("R", &[]),
    ("S", &[(2, 0, 1, "Z")]),
    ("T", &[(-2, 0, 1, "Y")]),
    ("U", &[(2, 0, 1, "Y")]),
    ("V", &[]),
    ("W", &[(-2, 0, 1, "X")]),
    ("X", &[(2, 0, 1, "V")]),
    ("Y", &[(4, 0, 1, "R")]),
    ("Z", &[(2, 0, 1, "U"), (-4, 0, 1, "T")]),
];

fn bilinear_combo(ops: &[WeylOperator; 9], terms: Terms) -> Combo {
    let parts: Vec<_> = terms
        .iter()
        .map(|&(c, l, gg, nm)| {
            let idx = Bilinear::from_name(nm).expect("bilinear name") as usize;
            (kl(c, l, gg), nm, &ops[idx])
        })
        .collect();
    combo(&parts)
}

pub fn verify_nine_dim_algebra() -> SuiteResult {
    let ops = Bilinear::ALL.map(bilinear);
    let idx = |nm: &str| Bilinear::from_name(nm).expect("bilinear name") as usize;
    let mut out: Vec<IdentityRecord> = NINE_DIM
        .par_iter()
        .map(|&(x, y, terms)| {
            record(
                format!("algebra.{x}.{y}"),
                &format!("[{x},{y}]"),
                &ops[idx(x)].commutator(&ops[idx(y)]),
                bilinear_combo(&ops, terms),
            )
        })
        .collect();
    let h = hamiltonian();
    out.extend(WITH_H.par_iter().map(|&(x, terms)| {
        record(
            format!("algebra.H.{x}"),
            &format!("[H,{x}]"),
            &h.commutator(&ops[idx(x)]),
            bilinear_combo(&ops, terms),
        )
    }).collect::<Vec<_>>());
    for (bl, op) in Bilinear::ALL.iter().zip(&ops) {
        let ladders = bilinear_from_ladders(*bl);
        let rec = IdentityRecord::operators(
            format!("algebra.realization.{bl}"),
            format!("{bl} = {}", ladder_definition(*bl)),
            op,
            &ladders,
        );
        out.push(if *bl == Bilinear::Z {
            let printed = n(-2) * (g() * zb() - lam() * x3()) * dzb() - (lam() * z() - n(2) * g() * x3()) * dz();
            rec.with_note(format!(
                "with dz in place of d3 in the last term the residual is {}",
                (&printed - &ladders).render()
            ))
        } else {
            rec
        });
    }
    SuiteResult::new("algebra", out)
}

fn ladder_definition(bl: Bilinear) -> &'static str {
    match bl {
        Bilinear::R => "A+*A-",
        Bilinear::S => "B+*B-",
        Bilinear::T => "C+*C-",
        Bilinear::U => "A+*B- + B+*A-",
        Bilinear::V => "A+*C- + C+*A-",
        Bilinear::W => "B+*C- + C+*B-",
        Bilinear::X => "A+*B- - B+*A-",
        Bilinear::Y => "A+*C- - C+*A-",
        Bilinear::Z => "B+*C- - C+*B-",
    }
}

pub fn verify_gl3() -> SuiteResult {
    let pairs: Vec<(usize, usize)> = (1..=3).flat_map(|i| (1..=3).map(move |j| (i, j))).collect();
    let e: Vec<WeylOperator> = pairs.iter().map(|&(i, j)| gl3_generator(i, j)).collect();
    let at = |i: usize, j: usize| &e[(i - 1) * 3 + (j - 1)];
    let mut out: Vec<IdentityRecord> = pairs
        .par_iter()
        .map(|&(i, j)| {
            IdentityRecord::operators(
                format!("gl3.double.E{i}{j}"),
                format!("E{i}{j} from bilinears = E{i}{j} from ladders"),
                at(i, j),
                &gl3_generator_from_ladders(i, j),
            )
        })
        .collect();
    let quads: Vec<_> = pairs.iter().flat_map(|&p| pairs.iter().map(move |&q| (p, q))).collect();
    out.extend(
        quads
            .par_iter()
            .map(|&((i, j), (kk, l))| {
                let mut parts = Vec::new();
                let (n1, n2) = (format!("E{i}{l}"), format!("E{kk}{j}"));
                if j == kk {
                    parts.push((k(1), n1.as_str(), at(i, l)));
                }
                if i == l {
                    parts.push((k(-1), n2.as_str(), at(kk, j)));
                }
                let rhs = combo(&parts);
                record(
                    format!("gl3.E{i}{j}.E{kk}{l}"),
                    &format!("[E{i}{j},E{kk}{l}]"),
                    &at(i, j).commutator(at(kk, l)),
                    rhs,
                )
            })
            .collect::<Vec<_>>(),
    );
    let rhs = lg(1, -1, 0)
        * frac(1, 2)
        * (hamiltonian() - lg(1, -2, 2) * bilinear(Bilinear::R) - lg(1, -1, 1) * bilinear(Bilinear::V)
            + n(3) * lam());
    out.push(IdentityRecord::operators(
        "gl3.casimir",
        "E11 + E22 + E33 = (1/(2*lam))*(H - (g^2/lam^2)*R - (g/lam)*V + 3*lam)",
        &casimir(),
        &rhs,
    ));
    let alt = lg(-1, -1, 0)
        * frac(1, 2)
        * (bilinear(Bilinear::T) + bilinear(Bilinear::U) + lg(1, -2, 2) * bilinear(Bilinear::R)
            + lg(1, -1, 1) * bilinear(Bilinear::V)
            - n(3) * lam());
    out.push(IdentityRecord::operators(
        "gl3.casimir.bilinears",
        "E11 + E22 + E33 = -(1/(2*lam))*(T + U + (g^2/lam^2)*R + (g/lam)*V - 3*lam)",
        &casimir(),
        &alt,
    ));
    SuiteResult::new("gl3", out)
}

fn surd_record(id: String, anchor: String, lhs: &SurdOperator, rhs: &SurdOperator) -> IdentityRecord {
    let diff = lhs - rhs;
    let residual = if diff.is_zero() { None } else { Some(diff.render()) };
    IdentityRecord::new(id, anchor, Residual::Rendered(residual))
}

fn surd_unit() -> SurdOperator {
    SurdOperator::with_surd(WeylOperator::one())
}

fn lift(op: WeylOperator) -> SurdOperator {
    SurdOperator::rational(op)
}

pub fn verify_boson_layer() -> SuiteResult {
    let mut out = Vec::new();
    let bos = |i: usize, s: Sign| boson(i, s);
    for i in 1..=3 {
        for j in 1..=3 {
            let lhs = bos(i, Sign::Minus).commutator(&bos(j, Sign::Plus));
            let rhs = if i == j { lift(one()) } else { SurdOperator::default() };
            out.push(surd_record(
                format!("boson.ccr.a{i}-.a{j}+"),
                format!("[a{i}-,a{j}+] = {}", u8::from(i == j)),
                &lhs,
                &rhs,
            ));
        }
    }
    for s in Sign::BOTH {
        for i in 1..=3 {
            for j in (i + 1)..=3 {
                let lhs = bos(i, s).commutator(&bos(j, s));
                out.push(surd_record(
                    format!("boson.ccr.a{i}{}.a{j}{}", s.symbol(), s.symbol()),
                    format!("[a{i}{},a{j}{}] = 0", s.symbol(), s.symbol()),
                    &lhs,
                    &SurdOperator::default(),
                ));
            }
        }
    }
    for i in 1..=3 {
        for j in 1..=3 {
            let delta = if i == j { " + 1/2" } else { "" };
            out.push(IdentityRecord::operators(
                format!("boson.gl3.E{i}{j}"),
                format!("E{i}{j} = a{i}+*a{j}-{delta}"),
                &gl3_generator(i, j),
                &gl3_from_bosons(i, j),
            ));
        }
    }
    let s_unit = surd_unit();
    let iu = lift(imag());
    for s in Sign::BOTH {
        let sy = s.symbol();
        let scaled = |c: WeylOperator, x: SurdOperator| lift(c).multiply(&s_unit).multiply(&x);
        let a_rhs = scaled(lg(-1, 1, -1), &bos(2, s) + &iu.multiply(&bos(3, s)));
        out.push(surd_record(
            format!("boson.inverse.A{sy}"),
            format!("A{sy} = -(lam/g)*sqrt(2*lam)*(a2{sy} + I*a3{sy})"),
            &lift(a(s)),
            &a_rhs,
        ));
        let b_rhs = scaled(lg(1, -1, 1), &bos(2, s) + &iu.multiply(&bos(1, s)));
        out.push(surd_record(
            format!("boson.inverse.B{sy}"),
            format!("B{sy} = (g/lam)*sqrt(2*lam)*(a2{sy} + I*a1{sy})"),
            &lift(b(s)),
            &b_rhs,
        ));
        let c_rhs = scaled(-imag(), bos(1, s));
        out.push(surd_record(
            format!("boson.inverse.C{sy}"),
            format!("C{sy} = -I*sqrt(2*lam)*a1{sy}"),
            &lift(c_op(s)),
            &c_rhs,
        ));
        let (a1, a2, a3) = (bos(1, s), bos(2, s), bos(3, s));
        let terms = [
            (one(), &a1, &a1),
            (n(-2), &a2, &a2),
            (n(-2) * imag(), &a1, &a2),
            (n(2), &a1, &a3),
            (n(-2) * imag(), &a2, &a3),
        ];
        let mut q_rhs = SurdOperator::default();
        for (c, x, y) in terms {
            q_rhs = &q_rhs + &lift(c).multiply(&x.multiply(y));
        }
        let q_rhs = q_rhs.scale(&kl(2, 1, 0));
        out.push(surd_record(
            format!("boson.Q{sy}"),
            format!(
                "Q{sy} = 2*lam*((a1{sy})^2 - 2*(a2{sy})^2 - 2*I*a1{sy}*a2{sy} + 2*a1{sy}*a3{sy} - 2*I*a2{sy}*a3{sy})"
            ),
            &lift(q(s)),
            &q_rhs,
        ));
    }
    let p = |i: usize| bos(i, Sign::Plus);
    let m = |i: usize| bos(i, Sign::Minus);
    let pair = |i: usize, j: usize| &p(i).multiply(&m(j)) + &p(j).multiply(&m(i));
    let h_rhs = &(&(&p(1).multiply(&m(1)) + &lift(n(2)).multiply(&p(2).multiply(&m(2))))
        + &iu.multiply(&pair(1, 2)))
        - &pair(1, 3);
    let h_rhs = (&h_rhs + &iu.multiply(&pair(2, 3))).scale(&kl(2, 1, 0));
    out.push(surd_record(
        "boson.H".into(),
        "H = 2*lam*(a1+*a1- + 2*a2+*a2- + I*(a1+*a2- + a2+*a1-) - (a1+*a3- + a3+*a1-) + I*(a2+*a3- + a3+*a2-))"
            .into(),
        &lift(hamiltonian()),
        &h_rhs,
    ));
    for s in Sign::BOTH {
        for i in 1..=3 {
            out.push(surd_record(
                format!("boson.differential.a{i}{}", s.symbol()),
                format!("a{i}{} from ladders = a{i}{} as differential operator", s.symbol(), s.symbol()),
                &bos(i, s),
                &boson_differential(i, s),
            ));
        }
    }
    SuiteResult::new("boson", out)
}

/// An even generator of the superalgebra with its display name.
struct Even {
    name: String,
    op: WeylOperator,
}

fn even_generators() -> Vec<Even> {
    let mut out = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            out.push(Even {
                name: format!("E{i}{j}"),
                op: gl3_generator(i, j),
            });
        }
    }
    for s in Sign::BOTH {
        for i in 1..=3 {
            for j in i..=3 {
                out.push(Even {
                    name: format!("D{}{i}{j}", s.symbol()),
                    op: d_pair(s, i, j),
                });
            }
        }
    }
    out
}

fn certificate(names: &[String], coefficients: &[ParamScalar]) -> String {
    render_sum(
        coefficients
            .iter()
            .zip(names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, nm)| (c, if nm == "1" { String::new() } else { nm.clone() })),
    )
}

pub fn verify_sp6_osp16_closure() -> SuiteResult {
    let even = even_generators();
    let mut names: Vec<String> = even.iter().map(|e| e.name.clone()).collect();
    names.push("1".into());
    let mut basis: Vec<WeylOperator> = even.iter().map(|e| e.op.clone()).collect();
    basis.push(WeylOperator::one());
    let even_span = SpanSolver::new(basis);

    let odd: Vec<(String, SurdOperator)> = Sign::BOTH
        .iter()
        .flat_map(|&s| (1..=3).map(move |i| (format!("a{i}{}", s.symbol()), boson(i, s))))
        .collect();
    let odd_names: Vec<String> = odd.iter().map(|(nm, _)| nm.clone()).collect();
    let odd_span = SpanSolver::new(odd.iter().map(|(_, o)| o.surd.clone()).collect());

    let in_even = |id: String, lhs_text: String, target: &WeylOperator| {
        let combo = even_span.solve(target);
        let cert = certificate(&names, &combo.coefficients);
        IdentityRecord::new(id, format!("{lhs_text} in span(E, D+, D-, 1)"), combo.residual)
            .with_note(format!("{lhs_text} = {cert}"))
    };

    let (plus, minus) = (9..15, 15..21);
    let mut jobs: Vec<(usize, usize)> = Vec::new();
    jobs.extend((0..9).flat_map(|x| (9..21).map(move |y| (x, y))));
    jobs.extend(minus.clone().flat_map(|x| plus.clone().map(move |y| (x, y))));
    for range in [plus.clone(), minus.clone()] {
        jobs.extend(range.clone().flat_map(|x| (x + 1..range.end).map(move |y| (x, y))));
    }
    let mut out: Vec<IdentityRecord> = jobs
        .par_iter()
        .map(|&(x, y)| {
            let (ex, ey) = (&even[x], &even[y]);
            let text = format!("[{},{}]", ex.name, ey.name);
            in_even(format!("sp6.{}.{}", ex.name, ey.name), text, &ex.op.commutator(&ey.op))
        })
        .collect();

    let odd_pairs: Vec<(usize, usize)> = (0..odd.len()).flat_map(|x| (x..odd.len()).map(move |y| (x, y))).collect();
    out.extend(
        odd_pairs
            .par_iter()
            .map(|&(x, y)| {
                let (nx, ox) = &odd[x];
                let (ny, oy) = &odd[y];
                let anti = ox.anticommutator(oy);
                let text = format!("{{{nx},{ny}}}");
                let rec = in_even(format!("osp.{nx}.{ny}"), text, &anti.rational);
                if anti.surd.is_zero() {
                    rec
                } else {
                    IdentityRecord::new(rec.id, rec.anchor, Residual::Rendered(Some(anti.render())))
                }
            })
            .collect::<Vec<_>>(),
    );

    let mixed: Vec<(usize, usize)> = (0..even.len()).flat_map(|x| (0..odd.len()).map(move |y| (x, y))).collect();
    out.extend(
        mixed
            .par_iter()
            .map(|&(x, y)| {
                let ex = &even[x];
                let (ny, oy) = &odd[y];
                let br = SurdOperator::rational(ex.op.clone()).commutator(oy);
                let text = format!("[{},{ny}]", ex.name);
                let id = format!("osp.{}.{ny}", ex.name);
                let anchor = format!("{text} in span(a1+, a2+, a3+, a1-, a2-, a3-)");
                if !br.rational.is_zero() {
                    return IdentityRecord::new(id, anchor, Residual::Rendered(Some(br.render())));
                }
                let combo = odd_span.solve(&br.surd);
                let cert = certificate(&odd_names, &combo.coefficients);
                IdentityRecord::new(id, anchor, combo.residual).with_note(format!("{text} = {cert}"))
            })
            .collect::<Vec<_>>(),
    );
    SuiteResult::new("sp6", out)
}

/// The coefficient `c` with `op = c · base`, if one exists.
pub(crate) fn proportionality(op: &WeylOperator, base: &WeylOperator) -> Option<ParamScalar> {
    let (m, lead) = base.terms().next()?;
    let c = op.coeff(m).checked_div(lead).ok()?;
    (op - &base.scale(&c)).is_zero().then_some(c)
}

pub fn verify_integrals_cubic_algebra() -> SuiteResult {
    let r: Vec<WeylOperator> = (0..=3).map(integral).collect();
    let h = hamiltonian();
    let mut out = Vec::new();
    for (idx, ri) in r.iter().enumerate() {
        out.push(record(
            format!("integrals.H.R{idx}"),
            &format!("[H,R{idx}]"),
            &h.commutator(ri),
            combo(&[]),
        ));
    }
    let r0sq = r[0].pow(2);
    let br = |x: usize, y: usize| r[x].commutator(&r[y]);
    out.push(record("integrals.R0.R1".into(), "[R0,R1]", &br(0, 1), combo(&[])));
    out.push(record(
        "integrals.R0.R2".into(),
        "[R0,R2]",
        &br(0, 2),
        combo(&[(kl(-4, 1, 0), "R0^2", &r0sq)]),
    ));
    out.push(record(
        "integrals.R1.R2".into(),
        "[R1,R2]",
        &br(1, 2),
        combo(&[(kl(2, 0, 1), "R0^2", &r0sq)]),
    ));
    out.push(record(
        "integrals.R1.R3".into(),
        "[R1,R3]",
        &br(1, 3),
        combo(&[(kl(2, 0, 1), "R0^2", &r0sq)]),
    ));
    let r1r0sq = &r[1] * &r0sq;
    let r3r2r0 = &(&r[3] - &r[2]) * &r[0];
    let r1sqr0 = &r[1].pow(2) * &r[0];
    out.push(record(
        "integrals.R2.R3".into(),
        "[R2,R3]",
        &br(2, 3),
        combo(&[
            (kl(8, 0, 1), "R1*R0^2", &r1r0sq),
            (kl(4, 1, 0), "(R3 - R2)*R0", &r3r2r0),
            (kl(8, 1, 0), "R1^2*R0", &r1sqr0),
        ]),
    ));
    let probe = br(0, 3);
    let probe_record = match proportionality(&probe, &r0sq) {
        Some(c) => {
            let allowed = [kl(4, 1, 0), kl(-4, 1, 0)];
            let text = format!("[R0,R3] = {}", combo(&[(c.clone(), "R0^2", &r0sq)]).text);
            IdentityRecord::check("integrals.R0.R3", "[R0,R3] = c*R0^2 with c = 4*lam or c = -4*lam", allowed.contains(&c), || {
                format!("computed {text}")
            })
            .with_note(format!("computed {text}"))
        }
        None => IdentityRecord::check("integrals.R0.R3", "[R0,R3] = c*R0^2 with c = 4*lam or c = -4*lam", false, || {
            format!("[R0,R3] = {} is not a multiple of R0^2", probe.render())
        }),
    };
    out.push(probe_record);

    let [rr, _, _, u, v, _, x, y, _] = Bilinear::ALL.map(bilinear);
    out.push(record("integrals.R0.bilinear".into(), "R0", &r[0], combo(&[(k(1), "R", &rr)])));
    out.push(record(
        "integrals.R1.bilinear".into(),
        "R1",
        &r[1],
        combo(&[(ParamScalar::from_ratio(1, 2), "V", &v)]),
    ));
    out.push(IdentityRecord::operators(
        "integrals.R1.differential",
        "R1 from [Q+,Q-] = 2*dz*d3 + lam*zb*(g*zb - lam*x3)",
        &r[1],
        &r1(),
    ));
    let vy = v.anticommutator(&y);
    let r2 = -(&rr * &(&x - &lg(2, 1, 0))) + frac(1, 4) * vy.clone();
    out.push(IdentityRecord::operators(
        "integrals.R2.bilinear",
        "R2 = -R*(X - 2*lam) + (1/4)*{V,Y}",
        &r[2],
        &r2,
    ));
    let r3 = &rr * &(&(&u - &x) + &lg(4, 1, 0)) - frac(1, 4) * (v.pow(2) + y.pow(2) - vy);
    out.push(IdentityRecord::operators(
        "integrals.R3.bilinear",
        "R3 = R*(U - X + 4*lam) - (1/4)*(V^2 + Y^2 - {V,Y})",
        &r[3],
        &r3,
    ));
    SuiteResult::new("integrals", out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_suite(s: SuiteResult) {
        let failures: Vec<String> = s
            .failures()
            .map(|r| format!("{} [{}] residual {}", r.id, r.anchor, r.residual.render()))
            .collect();
        assert!(failures.is_empty(), "{}", failures.join("\n"));
    }

    #[test]
    fn ladder_suite_verifies() {
        assert_suite(verify_ladder_relations());
    }

    #[test]
    fn factorization_verifies() {
        assert_suite(verify_q_factorization());
    }

    #[test]
    fn nine_dim_algebra_verifies() {
        let s = verify_nine_dim_algebra();
        assert_eq!(s.records.len(), 54);
        assert_suite(s);
    }

    #[test]
    fn gl3_verifies() {
        assert_suite(verify_gl3());
    }

    #[test]
    fn boson_layer_verifies() {
        assert_suite(verify_boson_layer());
    }

    #[test]
    fn integrals_verify() {
        let s = verify_integrals_cubic_algebra();
        let probe = s.records.iter().find(|r| r.id == "integrals.R0.R3").unwrap();
        assert_eq!(probe.note.as_deref(), Some("computed [R0,R3] = -4*lam*R0^2"));
        assert_suite(s);
    }

    #[test]
    fn sp6_closure_certificates() {
        let s = verify_sp6_osp16_closure();
        let cert = |id: &str| s.records.iter().find(|r| r.id == id).unwrap().note.clone().unwrap();
        assert_eq!(cert("sp6.D-11.D+11"), "[D-11,D+11] = 4*E11");
        assert_eq!(cert("osp.a1+.a1+"), "{a1+,a1+} = 2*D+11");
        assert_suite(s);
    }
}
