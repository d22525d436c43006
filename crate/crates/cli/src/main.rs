//! `gpjac`: exact Jacobian groups and spanning-tree counts of generalized
//! Petersen graphs GP(n, k).
//!
//! Exit codes: 0 on success, 1 when a computation or consistency check
//! fails, 2 for invalid parameters or unsupported method requests.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;

use gpjac::{
    jacobian, reduced_shift, tau, tree, Error, JacobianMethod, LinearRecurrence, TauMethod,
};
use gpjac_cli::record::{OutputRecord, SequenceRecord};
use gpjac_cli::render::{render_sequence, render_single, render_table, Format};
use gpjac_cli::verify;

#[derive(Parser)]
#[command(
    name = "gpjac",
    version,
    about = "Exact Jacobian groups and spanning-tree counts of generalized Petersen graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Jacobian (sandpile) group of GP(n, k)
    Jacobian {
        /// Outer cycle length (n >= 3)
        #[arg(long)]
        n: u64,
        /// Inner step (k not divisible by n)
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value = "auto")]
        method: JacobianMethodArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Count the spanning trees of GP(n, k)
    Tau {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value = "auto")]
        method: TauMethodArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Tabulate groups and counts over a parameter range
    Table {
        #[arg(long, default_value_t = 3)]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
        /// Largest inner step per n (capped at n - 1)
        #[arg(long, default_value_t = 4)]
        k_max: u64,
        #[arg(long, value_enum, default_value = "markdown")]
        format: FormatArg,
        /// Worker threads (0 = rayon default)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Print terms of the closed-form integer sequences behind the counts
    Sequence {
        /// Shift: 1..=4
        #[arg(long)]
        k: u64,
        /// First index (may be negative)
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        start: i64,
        /// Number of terms
        #[arg(long)]
        count: usize,
        /// For k = 3 only: which of the two sequences (default even)
        #[arg(long, value_enum)]
        parity: Option<ParityArg>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Cross-validate every route against every other and the anchored rows
    Verify {
        /// Anchored rows are checked up to this n; the all-routes grid is
        /// capped at n = 12
        #[arg(long, default_value_t = 20)]
        n_max: u64,
        /// Worker threads (0 = rayon default)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum JacobianMethodArg {
    Auto,
    Laplacian,
    Companion,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TauMethodArg {
    Auto,
    Kirchhoff,
    Theorem1,
    Closed,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
    Markdown,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Markdown => Format::Markdown,
        }
    }
}

fn resolve_jacobian_method(n: u64, k: u64, arg: JacobianMethodArg) -> gpjac::Result<(JacobianMethod, &'static str)> {
    Ok(match arg {
        JacobianMethodArg::Laplacian => (JacobianMethod::Laplacian, "laplacian"),
        JacobianMethodArg::Companion => (JacobianMethod::Companion, "companion"),
        JacobianMethodArg::Auto => {
            let kp = reduced_shift(n, k)?;
            if 2 * (kp + 1) < 2 * n {
                (JacobianMethod::Companion, "companion")
            } else {
                (JacobianMethod::Laplacian, "laplacian")
            }
        }
    })
}

fn resolve_tau_method(n: u64, k: u64, arg: TauMethodArg) -> gpjac::Result<(TauMethod, &'static str)> {
    Ok(match arg {
        TauMethodArg::Kirchhoff => (TauMethod::Kirchhoff, "kirchhoff"),
        TauMethodArg::Theorem1 => (TauMethod::Resultant, "theorem1"),
        TauMethodArg::Closed => (TauMethod::Closed, "closed"),
        TauMethodArg::Auto => {
            if reduced_shift(n, k)? <= 4 {
                (TauMethod::Closed, "closed")
            } else if n > 60 {
                (TauMethod::Resultant, "theorem1")
            } else {
                (TauMethod::Kirchhoff, "kirchhoff")
            }
        }
    })
}

fn with_pool<T: Send>(jobs: usize, work: impl FnOnce() -> T + Send) -> gpjac::Result<T> {
    if jobs == 0 {
        return Ok(work());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot build thread pool: {e}")))?;
    Ok(pool.install(work))
}

fn run(cli: Cli) -> gpjac::Result<bool> {
    match cli.command {
        Command::Jacobian { n, k, method, format } => {
            let (method, method_name) = resolve_jacobian_method(n, k, method)?;
            let started = Instant::now();
            let group = jacobian(n, k, method)?;
            let record =
                OutputRecord::for_group(n, k, &group, method_name, started.elapsed().as_millis());
            print!("{}", ensure_newline(render_single(&record, format.into())));
            Ok(true)
        }
        Command::Tau { n, k, method, format } => {
            let (method, method_name) = resolve_tau_method(n, k, method)?;
            let started = Instant::now();
            let count = tau(n, k, method)?;
            let record =
                OutputRecord::for_tau(n, k, &count, method_name, started.elapsed().as_millis());
            print!("{}", ensure_newline(render_single(&record, format.into())));
            Ok(true)
        }
        Command::Table { n_min, n_max, k_max, format, jobs } => {
            if n_min < 3 {
                return Err(Error::InvalidParameter(format!(
                    "table needs n_min >= 3, got {n_min}"
                )));
            }
            if n_max < n_min {
                return Err(Error::InvalidParameter(format!(
                    "table needs n_max >= n_min, got {n_max} < {n_min}"
                )));
            }
            if k_max < 1 {
                return Err(Error::InvalidParameter("table needs k_max >= 1".into()));
            }
            let mut cells = Vec::new();
            for n in n_min..=n_max {
                for k in 1..=k_max.min(n - 1) {
                    cells.push((n, k));
                }
            }
            let records = with_pool(jobs, || {
                cells
                    .par_iter()
                    .map(|&(n, k)| {
                        let (method, method_name) =
                            resolve_jacobian_method(n, k, JacobianMethodArg::Auto)?;
                        let started = Instant::now();
                        let group = jacobian(n, k, method)?;
                        Ok(OutputRecord::for_group(
                            n,
                            k,
                            &group,
                            method_name,
                            started.elapsed().as_millis(),
                        ))
                    })
                    .collect::<gpjac::Result<Vec<_>>>()
            })??;
            print!("{}", render_table(&records, format.into()));
            Ok(true)
        }
        Command::Sequence { k, start, count, parity, format } => {
            let (rec, parity_name): (LinearRecurrence, Option<&str>) = match (k, parity) {
                (1, None) => (prism_sequence(), None),
                (2, None) => (tree::k2_recurrence(), None),
                (3, None) | (3, Some(ParityArg::Even)) => {
                    (tree::k3_even_recurrence(), Some("even"))
                }
                (3, Some(ParityArg::Odd)) => (tree::k3_odd_recurrence(), Some("odd")),
                (4, None) => (tree::k4_recurrence(), None),
                (_, Some(_)) => {
                    return Err(Error::InvalidParameter(
                        "--parity only applies to --k 3".into(),
                    ))
                }
                (k, None) => {
                    return Err(Error::UnsupportedMethod(format!(
                        "no closed-form sequence for shift {k} (have 1..=4)"
                    )))
                }
            };
            let terms = rec.terms(start, count)?;
            let record = SequenceRecord {
                k,
                parity: parity_name.map(str::to_string),
                start,
                terms: terms.iter().map(|t| t.to_string()).collect(),
            };
            print!("{}", render_sequence(&record, format.into()));
            Ok(true)
        }
        Command::Verify { n_max, jobs } => {
            if n_max < 3 {
                return Err(Error::InvalidParameter(format!(
                    "verify needs n_max >= 3, got {n_max}"
                )));
            }
            let report = with_pool(jobs, || verify::run(n_max))?;
            print!("{}", report.render_text());
            Ok(report.passed())
        }
    }
}

/// Terms T_n(2) - 1, the per-vertex spanning-tree sequence of the n-prism:
/// annihilated by (z - 1)(z^2 - 4z + 1) with initial values 0, 1, 6.
fn prism_sequence() -> LinearRecurrence {
    let chars = [-1i64, 5, -5, 1].map(BigInt::from).to_vec();
    let init = [0i64, 1, 6].map(BigInt::from).to_vec();
    LinearRecurrence::new(chars, init, 0).expect("valid built-in recurrence")
}

fn ensure_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_usage() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
