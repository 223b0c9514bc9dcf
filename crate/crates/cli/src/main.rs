//! `cactus`: cactus group actions, growth diagrams and their checks.

mod commands;
mod error;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::CliError;
use crate::input::WordInput;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "cactus", version, about = "Cactus group actions on highest weight words")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Ascii)]
    pub format: Format,
    /// Seed for randomized sampling
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest number of boxes (tableaux, Hecke shapes) for exhaustive suites
    #[arg(long, global = true, alias = "maxsize")]
    pub max_size: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply a cactus word such as "s(1,4) s(2,3)" (rightmost acts first)
    Act {
        #[arg(long)]
        word: String,
        #[command(flatten)]
        input: WordInput,
    },
    /// Evacuation through the triangular growth diagram
    Evacuate {
        #[command(flatten)]
        input: WordInput,
        /// Also print the triangular diagram
        #[arg(long)]
        diagram: bool,
    },
    /// Promotion through the two-row growth diagram
    Promote {
        #[command(flatten)]
        input: WordInput,
        #[arg(long)]
        inverse: bool,
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// Window of the cylindrical growth diagram of a word
    Cylinder {
        #[command(flatten)]
        input: WordInput,
        /// Number of rows below the top row
        #[arg(long)]
        depth: Option<usize>,
        /// Index of the top row
        #[arg(long, default_value_t = 0)]
        first: i64,
        /// Apply the wall-crossing operator of this generator, e.g. "s(2,5)"
        #[arg(long)]
        wall: Option<String>,
    },
    /// Check every cell of a window given row by row
    Validate {
        /// Rows separated by ';'
        #[arg(long, conflicts_with = "file")]
        rows: Option<String>,
        /// File with one row per line
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, default_value = "gl2")]
        group: String,
        /// Index of the first row
        #[arg(long, default_value_t = 0)]
        first: i64,
    },
    /// Classical tableau algorithms next to their local-rule counterparts
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
    /// Seminormal representations of the Hecke algebra
    Hecke {
        #[command(subcommand)]
        op: HeckeOp,
    },
    /// Run an exhaustive property suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest word length
        #[arg(long)]
        r: Option<usize>,
        /// Smallest bounds, for smoke tests
        #[arg(long)]
        tiny: bool,
        /// Check this many random words of length r instead of all words
        #[arg(long)]
        samples: Option<usize>,
        /// Largest Hecke shape size on which cactus relations are checked
        #[arg(long)]
        cactus_limit: Option<usize>,
    },
    /// Recompute a worked example and compare with the printed values
    Demo {
        /// bk, fig-cat, ex-sp, wall, gl-grid or all
        name: Option<String>,
        /// List demos and named example words
        #[arg(long)]
        list: bool,
    },
    /// Brute-force crystal computations
    Crystal {
        #[command(subcommand)]
        op: CrystalOp,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleOp {
    Evacuation {
        #[arg(long)]
        tableau: String,
    },
    Promotion {
        #[arg(long)]
        tableau: String,
    },
    DualKnuth {
        #[arg(long)]
        tableau: String,
        #[arg(long)]
        i: usize,
    },
    BenderKnuth {
        /// Semistandard tableau, e.g. "1123/23/4"
        #[arg(long)]
        tableau: String,
        #[arg(long)]
        i: usize,
        /// Largest allowed entry (defaults to the largest entry present)
        #[arg(long)]
        max_entry: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixOp {
    U,
    T,
    Tinv,
    Tau,
    Jm,
    JmSqrt,
    JmInvSqrt,
    JmWord,
    SigmaVv,
}

#[derive(Debug, Subcommand)]
pub enum HeckeOp {
    /// Every identity of the suite on one shape
    Check {
        #[arg(long)]
        shape: String,
        #[arg(long, default_value_t = 6)]
        cactus_limit: usize,
    },
    /// Print one matrix exactly
    Matrix {
        #[arg(long, value_enum)]
        op: MatrixOp,
        #[arg(long, default_value_t = 1)]
        i: usize,
        #[arg(long)]
        shape: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum CrystalOp {
    /// Components of the r-th tensor power by highest weight
    Decompose {
        #[arg(long, default_value = "gl2")]
        group: String,
        #[arg(long, default_value = "vector")]
        step: String,
        #[arg(long)]
        r: usize,
    },
    /// All highest weight words of length r
    Words {
        #[arg(long, default_value = "gl2")]
        group: String,
        #[arg(long, default_value = "vector")]
        step: String,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Cactus,
    Hecke,
    Oracle,
    Crystal,
    Wall,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.render(format));
            ExitCode::from(out.exit_code())
        }
        Err(e) => {
            report_error(&e, format);
            ExitCode::from(e.exit_code())
        }
    }
}

fn report_error(e: &CliError, format: Format) {
    match format {
        Format::Ascii => eprintln!("error[{}]: {e}", e.code()),
        Format::Json => {
            let v = serde_json::json!({ "error": { "code": e.code(), "message": e.to_string() } });
            eprintln!("{v}");
        }
    }
}
