//! `posflag`: exact positivity tests for subspaces and flags, the duality
//! and group actions on polynomial spaces, and numeric checks of real
//! Schubert instances.
//!
//! Exit codes: 0 verified, 1 internal disagreement (method mismatch or
//! more solutions than expected), 2 bad input, 3 incomplete, 4
//! counterexample candidate.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use posflag::{Mode, SolverOptions};

#[derive(Parser, Debug)]
#[command(name = "posflag", version, about = "Total positivity of flags and real Schubert instances")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Working precision in bits for numeric polishing.
    #[arg(long, global = true, default_value_t = 128)]
    precision: usize,
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print only the headline.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Plucker,
    Wronskian,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Nonnegative,
    Positive,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Nonnegative => Mode::Nonnegative,
            ModeArg::Positive => Mode::Positive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Positivity,
    Secant,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether the flag of an n x n matrix is totally positive.
    TestFlag {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
        #[arg(long, value_enum, default_value = "positive")]
        mode: ModeArg,
    },
    /// Plücker coordinates and sign class of the column span of a matrix.
    TestGr { file: PathBuf },
    /// Exact Wronskian of the first k columns and its real root counts.
    Wronskian {
        file: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// The perpendicular space under the pairing, with the shared Wronskian.
    Dual {
        /// Omit for the zero subspace of dimension `--n`.
        file: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// The shift f(x) -> f(x + t), as a matrix or applied to a subspace.
    Shift {
        file: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Act on the column span by an element of SL2 or by reversal.
    Sl2 {
        file: PathBuf,
        /// Entries "a,b,c,d" with ad - bc = 1.
        #[arg(long, allow_hyphen_values = true, required_unless_present = "rev", conflicts_with = "rev")]
        alpha: Option<String>,
        #[arg(long)]
        rev: bool,
    },
    /// All subspaces of Gr(k, n) with a prescribed Wronskian.
    SolveWronski {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Roots as "r1, r2^2, ...".
        #[arg(long, allow_hyphen_values = true)]
        roots: String,
    },
    /// Solve a secant instance given as JSON (a file, "-", or inline).
    SolveSecant { spec: String },
    /// Verify a conjecture instance given as JSON (a file, "-", or inline).
    CheckConjecture {
        spec: String,
        #[arg(long, value_enum)]
        which: Option<Which>,
        /// Also write the JSON report here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the built-in fixtures.
    Selftest,
}

/// What a command produced: a headline, detail lines, a JSON form, an
/// optional dump printed even in quiet mode, and the exit code.
pub struct Report {
    pub headline: String,
    pub details: Vec<String>,
    pub json: serde_json::Value,
    pub dump: Option<serde_json::Value>,
    pub code: u8,
}

impl Report {
    pub fn new(headline: impl Into<String>, json: serde_json::Value) -> Self {
        Report {
            headline: headline.into(),
            details: Vec::new(),
            json,
            dump: None,
            code: 0,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = SolverOptions {
        seed: cli.seed,
        precision: cli.precision,
        max_precision: cli.precision.max(SolverOptions::default().max_precision),
        ..SolverOptions::default()
    };
    match commands::run(&cli.command, &opts) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("reports serialize"));
            } else {
                println!("{}", report.headline);
                if !cli.quiet {
                    for line in &report.details {
                        println!("{line}");
                    }
                }
                if let Some(dump) = &report.dump {
                    println!("{}", serde_json::to_string_pretty(dump).expect("reports serialize"));
                }
            }
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
