//! One line per acceptance criterion; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use psho_core::biortho::{verify_biorthogonality, verify_normalization};
use psho_core::fock::verify_inner_products;
use psho_core::identity::SuiteResult;
use psho_core::jordan::{verify_jordan_layer, verify_ladder_layer, verify_uvw_layer};
use psho_core::operators::{
    verify_boson_layer, verify_gl3, verify_integrals_cubic_algebra, verify_ladder_relations, verify_nine_dim_algebra,
    verify_q_factorization, verify_sp6_osp16_closure,
};

struct Criterion {
    number: u32,
    title: &'static str,
    run: fn() -> Vec<SuiteResult>,
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        number: 1,
        title: "commutator suite",
        run: || vec![verify_ladder_relations(), verify_q_factorization(), verify_nine_dim_algebra()],
    },
    Criterion {
        number: 2,
        title: "gl(3) layer",
        run: || vec![verify_gl3()],
    },
    Criterion {
        number: 3,
        title: "boson, sp(6) and osp(1/6)",
        run: || vec![verify_boson_layer(), verify_sp6_osp16_closure()],
    },
    Criterion {
        number: 4,
        title: "integrals of motion",
        run: || vec![verify_integrals_cubic_algebra()],
    },
    Criterion {
        number: 5,
        title: "Jordan layer, k+n <= 4, coefficients n <= 8",
        run: || vec![verify_jordan_layer(4, 8)],
    },
    Criterion {
        number: 6,
        title: "ladder actions, k+n <= 3",
        run: || vec![verify_ladder_layer(3)],
    },
    Criterion {
        number: 7,
        title: "uvw layer",
        run: || vec![verify_uvw_layer(4)],
    },
    Criterion {
        number: 8,
        title: "inner products, total degree <= 6",
        run: || vec![verify_inner_products(6)],
    },
    Criterion {
        number: 9,
        title: "normalization, k+n <= 4",
        run: || vec![verify_normalization(4)],
    },
    Criterion {
        number: 10,
        title: "biorthogonalization",
        run: || vec![verify_biorthogonality(4, 3)],
    },
];

fn main() -> ExitCode {
    let mut all = true;
    for c in &CRITERIA {
        let start = Instant::now();
        let suites = (c.run)();
        let verified: usize = suites.iter().map(SuiteResult::verified).sum();
        let failed: Vec<String> = suites
            .iter()
            .flat_map(|s| s.failures())
            .map(|r| format!("{} [{}]", r.id, r.residual.render()))
            .collect();
        let status = if failed.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status}: {} ({verified} verified, {} failed, {:.2?})",
            c.number,
            c.title,
            failed.len(),
            start.elapsed()
        );
        for f in &failed {
            println!("    failed {f}");
        }
        all &= failed.is_empty();
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
