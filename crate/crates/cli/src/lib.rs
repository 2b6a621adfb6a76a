//! The `teachrep` command line: builds consistency graphs, runs the teaching
//! protocols, and emits the paper's tables and figure data.
//!
//! Tabular output is CSV with a header row and summaries are single-line
//! JSON. Exit codes: 0 success, 2 usage or parse error, 3 I/O error.

pub mod commands;
pub mod error;
pub mod source;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use teachrep::boolean::WitnessTieBreak;
use teachrep::p3::{DEFAULT_PROGRAM_CAP, DEFAULT_STEP_LIMIT};

pub use commands::run;
pub use error::{CliError, Result};

#[derive(Debug, Parser)]
#[command(
    name = "teachrep",
    version,
    about = "Machine teaching over redundant representation languages"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, Args)]
pub struct GlobalOpts {
    /// Interpreter step limit for P3 programs.
    #[arg(long, global = true, default_value_t = DEFAULT_STEP_LIMIT)]
    pub step_limit: u64,
    /// Number of P3 programs considered (small-p3 build, stream search cap).
    #[arg(long, global = true, default_value_t = DEFAULT_PROGRAM_CAP)]
    pub program_cap: usize,
    /// Seed for the random fixtures.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for graph builds (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Output file: the graph for `build`, the teacher map for `teach` and
    /// `stream`, and the CSV/JSON result for every other command.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Order of equal-size DNF witnesses by canonical rendering.
    #[arg(long, global = true, default_value = WitnessTieBreak::default().name())]
    pub witness_tiebreak: WitnessTieBreak,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Protocol {
    Eager,
    Greedy,
    Optimal1,
    Optimal2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StreamProtocolArg {
    Eager,
    Greedy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Table {
    /// Table 1: sizes, redundancy and spread.
    #[value(name = "1")]
    One,
    /// Table 2: protocol results.
    #[value(name = "2")]
    Two,
    /// Table 3: Greedy versus Eager.
    #[value(name = "3")]
    Three,
    /// The metrics CSV schema for every domain.
    Metrics,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a consistency graph and write it as an OCG v1 file (--out).
    Build {
        /// 3dnf, 3term, 3term-perm, 3term-perm-dup, small-p3, or
        /// fixture:figure1 | fixture:separation:S:T:K | fixture:random:R:W:P |
        /// fixture:random-singleton:R:W:P
        domain: String,
        /// max<N> or eq<N> for DNF domains (default max5), bits<N> for
        /// small-p3 (default bits4).
        spec: Option<String>,
        /// Also write the concept partition (truth tables for DNF domains,
        /// twin classes otherwise) as a PART v1 file.
        #[arg(long)]
        partition: Option<PathBuf>,
    },
    /// Run one protocol on a graph file; writes the map to --out and prints
    /// stats JSON.
    Teach {
        graph: PathBuf,
        #[arg(value_enum)]
        protocol: Protocol,
        /// Concept partition (PART v1); twin classes if omitted.
        #[arg(long)]
        partition: Option<PathBuf>,
    },
    /// Redundancy, spread and the Greedy-versus-Eager fractions as one CSV
    /// row.
    Metrics {
        graph: PathBuf,
        #[arg(long)]
        partition: Option<PathBuf>,
        /// Domain label for the CSV row (default: the file stem).
        #[arg(long)]
        domain: Option<String>,
        /// Witness-spec label for the CSV row.
        #[arg(long, default_value = "-")]
        spec: String,
    },
    /// Table-3 comparison of Greedy and Eager as one CSV row.
    Compare {
        graph: PathBuf,
        #[arg(long)]
        partition: Option<PathBuf>,
        #[arg(long)]
        domain: Option<String>,
    },
    /// Figure-2 data: (program_bits, witness_bits, count) for a P3 map.
    Figure2 { map: PathBuf, graph: PathBuf },
    /// Exhaustive projection-matrix search; requires k*n <= 20.
    Conjecture { k: usize, n: usize, q: usize },
    /// Capped streaming Eager/Greedy over the P3 program order.
    Stream {
        #[arg(value_enum)]
        protocol: StreamProtocolArg,
        /// Largest witness size in bits.
        #[arg(long, default_value_t = 4)]
        max_bits: u32,
    },
    /// Regenerate the paper's tables for the five DNF rows and small-P3.
    Tables {
        #[arg(value_enum)]
        table: Table,
        /// Leave out the small-P3 row.
        #[arg(long)]
        no_small_p3: bool,
    },
}
