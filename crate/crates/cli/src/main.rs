use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use psho_cli::expr;
use psho_cli::report::Report;
use psho_cli::suites::{self, Bounds, Suite};
use psho_cli::tables::{self, Table};
use psho_core::fock::wick_inner;
use psho_core::jordan::{build_state, JordanLabel};
use psho_core::weyl::uvw::UVW_NAMES;
use serde_json::json;

#[derive(Parser)]
#[command(name = "psho", version, about = "Exact checks for the 3D pseudo-Hermitian quadratic oscillator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites; exits 1 if any identity fails.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Largest k+n for suites over Jordan states.
        #[arg(long, default_value_t = 3)]
        max_total: u32,
        /// Largest n for coefficient and uvw suites, largest pair degree for inner products.
        #[arg(long, default_value_t = 6)]
        max_n: u32,
        /// Write the JSON report here (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Record wall times in the report instead of zeros.
        #[arg(long)]
        timings: bool,
        /// List every record with its note.
        #[arg(long)]
        verbose: bool,
    },
    /// Print a coefficient table.
    Tabulate {
        #[arg(long, value_enum)]
        what: What,
        #[arg(long)]
        max_k: Option<u32>,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        max_total: Option<u32>,
        #[arg(long)]
        max_p: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the state with label (k, n, m).
    State {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "creation")]
        repr: Repr,
        /// Print every representation as one JSON object.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate an operator expression; with two arguments, their commutator.
    Commutator {
        expr: String,
        other: Option<String>,
    },
    /// The bilinear pairing of two states given as `k,n,m`.
    Inner { bra: String, ket: String },
    /// Combine JSON reports.
    Report {
        #[arg(long, required = true, num_args = 1..)]
        merge: Vec<PathBuf>,
        /// Write the merged report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Ab,
    #[value(name = "N")]
    Norm,
    LadderCoeffs,
    FPoly,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Repr {
    Creation,
    Uvw,
    Zzb,
}

fn label(text: &str) -> Result<JordanLabel> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    let [k, n, m] = parts.as_slice() else {
        bail!("expected a state label `k,n,m`, got `{text}`");
    };
    let parse = |s: &str| s.parse::<u32>().with_context(|| format!("bad index `{s}` in `{text}`"));
    Ok(JordanLabel::new(parse(k)?, parse(n)?, parse(m)?)?)
}

fn write_out(path: &PathBuf, body: &str) -> Result<()> {
    if path.as_os_str() == "-" {
        print!("{body}");
        return Ok(());
    }
    fs::write(path, body).with_context(|| format!("cannot write report to {}", path.display()))
}

fn verify(suite: Suite, bounds: Bounds, json: Option<PathBuf>, timings: bool, verbose: bool) -> Result<bool> {
    let results = suites::run(suite, bounds);
    let report = Report::from_suites(&results, timings);
    let to_stdout = json.as_ref().is_some_and(|p| p.as_os_str() == "-");
    if !to_stdout {
        let mut text = String::new();
        for (result, elapsed) in &results {
            write!(text, "{}: {} verified, {} failed", result.suite, result.verified(), result.failed())?;
            if timings {
                write!(text, " ({} ms)", elapsed.as_millis())?;
            }
            text.push('\n');
            for r in &result.records {
                if r.is_verified() && !verbose {
                    continue;
                }
                writeln!(text, "  {} {}: {}", r.status(), r.id, r.anchor)?;
                if !r.is_verified() {
                    writeln!(text, "    residual: {}", r.residual.render())?;
                }
                if let Some(note) = r.note.as_ref().filter(|_| verbose) {
                    writeln!(text, "    note: {note}")?;
                }
            }
        }
        let s = &report.summary;
        writeln!(text, "total: {} verified, {} failed", s.verified, s.failed)?;
        print!("{text}");
    }
    if let Some(path) = json {
        write_out(&path, &report.to_json())?;
    }
    Ok(report.all_verified())
}

fn tabulate(
    what: What,
    max_k: Option<u32>,
    max_n: Option<u32>,
    max_total: Option<u32>,
    max_p: Option<u32>,
    format: Format,
) -> Result<()> {
    let table: Table = match what {
        What::Ab => tables::coefficients(max_n.unwrap_or(6)),
        What::Norm => tables::norms(max_k.unwrap_or(2), max_n.unwrap_or(2)),
        What::LadderCoeffs => tables::ladder_coefficients(max_total.unwrap_or(2)),
        What::FPoly => tables::f_table(max_p.unwrap_or(3)),
    };
    let body = match format {
        Format::Text => table.to_text(),
        Format::Csv => table.to_csv()?,
        Format::Json => table.to_json(),
    };
    print!("{body}");
    Ok(())
}

fn state(k: u32, n: u32, m: u32, repr: Repr, json: bool) -> Result<()> {
    let state = build_state(JordanLabel::new(k, n, m)?);
    let creation = state.creation.render();
    let uvw = state.uvw().render_with(&UVW_NAMES);
    let zzb = state.gaussian_state().render();
    if json {
        let v = json!({
            "label": state.label.to_string(),
            "creation": creation,
            "uvw": uvw,
            "zzb": zzb,
        });
        println!("{}", serde_json::to_string_pretty(&v)?);
        return Ok(());
    }
    println!(
        "{}",
        match repr {
            Repr::Creation => creation,
            Repr::Uvw => uvw,
            Repr::Zzb => zzb,
        }
    );
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify {
            suite,
            max_total,
            max_n,
            json,
            timings,
            verbose,
        } => verify(suite, Bounds { max_total, max_n }, json, timings, verbose),
        Command::Tabulate {
            what,
            max_k,
            max_n,
            max_total,
            max_p,
            format,
        } => tabulate(what, max_k, max_n, max_total, max_p, format).map(|_| true),
        Command::State { k, n, m, repr, json } => state(k, n, m, repr, json).map(|_| true),
        Command::Commutator { expr: a, other } => {
            let value = match other {
                Some(b) => expr::evaluate(&a)?.commutator(&expr::evaluate(&b)?),
                None => expr::evaluate(&a)?,
            };
            println!("{}", value.render());
            Ok(true)
        }
        Command::Inner { bra, ket } => {
            let (bra, ket) = (build_state(label(&bra)?), build_state(label(&ket)?));
            println!("{}", wick_inner(&bra.creation, &ket.creation).render());
            Ok(true)
        }
        Command::Report { merge, out } => {
            let mut reports = Vec::new();
            for path in &merge {
                let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
                let r: Report = serde_json::from_str(&text).with_context(|| format!("{} is not a report", path.display()))?;
                reports.push(r);
            }
            let merged = Report::merge(&reports);
            write_out(&out.unwrap_or_else(|| "-".into()), &merged.to_json())?;
            Ok(merged.all_verified())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
