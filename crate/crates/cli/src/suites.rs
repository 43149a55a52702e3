//! The suites reachable from `verify --suite`.

use std::time::{Duration, Instant};

use clap::ValueEnum;
use psho_core::biortho::{verify_biorthogonality, verify_normalization};
use psho_core::fock::verify_inner_products;
use psho_core::identity::SuiteResult;
use psho_core::jordan::{verify_jordan_layer, verify_ladder_layer, verify_uvw_layer};
use psho_core::operators::{
    verify_boson_layer, verify_gl3, verify_integrals_cubic_algebra, verify_ladder_relations, verify_nine_dim_algebra,
    verify_q_factorization, verify_sp6_osp16_closure,
};
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Ladder,
    Algebra,
    Gl3,
    Boson,
    Sp6,
    Integrals,
    Jordan,
    Uvw,
    Biortho,
    All,
}

/// Size limits for the bounded suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest `k + n` for suites over Jordan states.
    pub max_total: u32,
    /// Largest `n` for coefficient suites, largest chain index for the uvw
    /// suite, and largest pair degree for inner products.
    pub max_n: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Self { max_total: 3, max_n: 6 }
    }
}

type Job = Box<dyn Fn() -> SuiteResult + Send + Sync>;

fn jobs(suite: Suite, b: Bounds) -> Vec<Job> {
    let Bounds { max_total, max_n } = b;
    match suite {
        Suite::Ladder => vec![Box::new(verify_ladder_relations), Box::new(verify_q_factorization)],
        Suite::Algebra => vec![Box::new(verify_nine_dim_algebra)],
        Suite::Gl3 => vec![Box::new(verify_gl3)],
        Suite::Boson => vec![Box::new(verify_boson_layer)],
        Suite::Sp6 => vec![Box::new(verify_sp6_osp16_closure)],
        Suite::Integrals => vec![Box::new(verify_integrals_cubic_algebra)],
        Suite::Jordan => vec![
            Box::new(move || verify_jordan_layer(max_total, max_n)),
            Box::new(move || verify_ladder_layer(max_total)),
        ],
        Suite::Uvw => vec![Box::new(move || verify_uvw_layer(max_n))],
        Suite::Biortho => vec![
            Box::new(move || verify_inner_products(max_n)),
            Box::new(move || verify_normalization(max_total)),
            Box::new(move || verify_biorthogonality(max_total, max_total)),
        ],
        Suite::All => Suite::value_variants()
            .iter()
            .filter(|s| **s != Suite::All)
            .flat_map(|s| jobs(*s, b))
            .collect(),
    }
}

/// Runs the suites on the worker pool and returns them in a fixed order.
pub fn run(suite: Suite, bounds: Bounds) -> Vec<(SuiteResult, Duration)> {
    jobs(suite, bounds)
        .par_iter()
        .map(|job| {
            let start = Instant::now();
            let result = job();
            (result, start.elapsed())
        })
        .collect()
}
