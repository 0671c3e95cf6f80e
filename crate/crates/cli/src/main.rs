//! `wilson`: compute Wilson polynomials and run the verification suites.
//!
//! Exit codes: 0 when every selected check passes, 1 on a verification
//! failure, 2 on a configuration error.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{Failure, Outcome};
use config::{ConfigError, Settings};

#[derive(Parser)]
#[command(
    name = "wilson",
    version,
    about = "Exact DAHA polynomial representation and Wilson polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Options shared by every subcommand; they override the config file.
#[derive(Args)]
struct Common {
    /// Flat `key = value` file (keys n, t0, u0, t, tn, un, degree, ...).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Rank n ≥ 2 (default 2).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    t0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    u0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    tn: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    un: Option<String>,
    /// Write the JSON here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// The nonsymmetric polynomial for one weight, as a JSON record.
    Compute {
        #[command(flatten)]
        common: Common,
        /// Weight as comma-separated integers, e.g. "-1,0".
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// The symmetric polynomial for a dominant weight.
    ComputeSymmetric {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Spectral points, evaluations and norm ratios for Σ|λ_i| ≤ range.
    Spectrum {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        range: Option<i64>,
    },
    /// Exact suites: relations, gdaha, eigen, duality, evaluation, norms, fourier, symmetric.
    Verify {
        #[command(flatten)]
        common: Common,
        /// One or more suite names, comma-separated.
        #[arg(long)]
        suite: Option<String>,
        /// Monomial degree bound (relations, gdaha) or filtration level (fourier).
        #[arg(long)]
        degree: Option<usize>,
        /// Weight range Σ|λ_i| for the Wilson suites.
        #[arg(long)]
        lambda_sum: Option<i64>,
    },
    /// Numeric suites at n = 2: constant, orthogonality, norms, selfadjoint.
    Quadrature {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        suite: Option<String>,
        #[arg(long)]
        truncation: Option<f64>,
        #[arg(long)]
        panels: Option<usize>,
        #[arg(long)]
        nodes_per_panel: Option<usize>,
        /// Replaces every per-check tolerance.
        #[arg(long)]
        tolerance: Option<f64>,
    },
}

fn settings(c: &Common) -> Result<Settings, ConfigError> {
    let mut s = Settings::new(c.config.as_deref())?;
    s.set("n", c.n);
    for (k, v) in [("t0", &c.t0), ("u0", &c.u0), ("t", &c.t), ("tn", &c.tn), ("un", &c.un)] {
        s.set(k, v.as_deref());
    }
    s.set("output", c.output.as_ref().map(|p| p.display().to_string()));
    Ok(s)
}

type Run = fn(&Settings) -> Result<Outcome, Failure>;

fn dispatch(cmd: Command) -> Result<(Outcome, Option<PathBuf>), Failure> {
    let (s, run): (Settings, Run) = match cmd {
        Command::Compute { common, lambda } => {
            let mut s = settings(&common)?;
            s.set("lambda", lambda);
            (s, commands::compute)
        }
        Command::ComputeSymmetric { common, lambda } => {
            let mut s = settings(&common)?;
            s.set("lambda", lambda);
            (s, commands::compute_symmetric)
        }
        Command::Spectrum { common, range } => {
            let mut s = settings(&common)?;
            s.set("range", range);
            (s, commands::spectrum)
        }
        Command::Verify {
            common,
            suite,
            degree,
            lambda_sum,
        } => {
            let mut s = settings(&common)?;
            s.set("suite", suite);
            s.set("degree", degree);
            s.set("lambda_sum", lambda_sum);
            (s, commands::verify)
        }
        Command::Quadrature {
            common,
            suite,
            truncation,
            panels,
            nodes_per_panel,
            tolerance,
        } => {
            let mut s = settings(&common)?;
            s.set("suite", suite);
            s.set("truncation", truncation);
            s.set("panels", panels);
            s.set("nodes_per_panel", nodes_per_panel);
            s.set("tolerance", tolerance);
            (s, commands::quadrature)
        }
    };
    let out = run(&s)?;
    Ok((out, s.output()))
}

/// `WILSON_THREADS` sets the worker count of the parallel checks.
fn init_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("WILSON_THREADS") else {
        return Ok(());
    };
    let k: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&k| k > 0)
        .ok_or_else(|| format!("WILSON_THREADS: expected a positive integer, got {v:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(k)
        .build_global()
        .map_err(|e| format!("WILSON_THREADS: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = init_threads() {
        eprintln!("configuration error: {e}");
        return ExitCode::from(2);
    }
    match dispatch(cli.command) {
        Ok((out, path)) => {
            let mut text = serde_json::to_string_pretty(&out.document).expect("JSON values serialize");
            text.push('\n');
            let written = match path {
                Some(p) => std::fs::write(&p, &text).map_err(|e| format!("cannot write {}: {e}", p.display())),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("configuration error: {e}");
                return ExitCode::from(2);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::Config(e)) => {
            eprintln!("configuration error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(e)) => {
            eprintln!("verification failed: {e}");
            ExitCode::from(1)
        }
    }
}
