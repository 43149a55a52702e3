//! Normal-ordered differential operators in the variables `(z, zb, x3)`.

mod operator;
mod state;
pub mod uvw;

pub use operator::{WeylMonomial, WeylOperator};
pub use state::{GaussianState, Poly3};

/// Index of `z` (and `dz`) in exponent triples.
pub const Z: usize = 0;
/// Index of `zb` (and `dzb`).
pub const ZB: usize = 1;
/// Index of `x3` (and `d3`).
pub const X3: usize = 2;

/// `Ψ0⁻¹ · op · Ψ0` as a differential operator: every `∂_i` becomes
/// `∂_i + ∂_i log Ψ0`.
pub fn ground_conjugate(op: &WeylOperator) -> WeylOperator {
    let vars = [WeylOperator::var(Z), WeylOperator::var(ZB), WeylOperator::var(X3)];
    let ders = [Z, ZB, X3].map(|i| {
        let shift = WeylOperator::from_terms(Poly3::ground_log_derivative(i).terms().map(|(e, c)| {
            (WeylMonomial::new(*e, [0; 3]), c.clone())
        }));
        &WeylOperator::der(i) + &shift
    });
    op.substitute(&vars, &ders)
}

pub(crate) const VAR_NAMES: [&str; 3] = ["z", "zb", "x3"];
pub(crate) const DER_NAMES: [&str; 3] = ["dz", "dzb", "d3"];

pub(crate) fn render_power(name: &str, e: u32, out: &mut Vec<String>) {
    match e {
        0 => {}
        1 => out.push(name.to_string()),
        _ => out.push(format!("{name}^{e}")),
    }
}

/// Joins `(coefficient, monomial)` pairs into a signed sum in the expression grammar.
pub(crate) fn render_sum<'a>(
    terms: impl Iterator<Item = (&'a crate::coeff::ParamScalar, String)>,
) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let (neg, body) = if mono.is_empty() {
            let (neg, f) = c.render_factor();
            (neg, f)
        } else if c.is_one() {
            (false, mono)
        } else if (-c).is_one() {
            (true, mono)
        } else {
            let (neg, f) = c.render_factor();
            (neg, format!("{f}*{mono}"))
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
