mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minorkit::Format;

use crate::report::Failure;

#[derive(Parser)]
#[command(
    name = "minorkit",
    version,
    about = "Clique minors and bounded-diameter contractions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
pub struct Common {
    /// Input file, or `-` for stdin.
    #[arg(long, global = true, default_value = "-")]
    pub input: String,
    /// Input graph format; guessed from the file extension or the content when absent.
    #[arg(long, global = true, value_parser = parse_format)]
    pub format: Option<Format>,
    /// Print one JSON document instead of the human-readable report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Vertex limit for exhaustive searches.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Worker threads for exhaustive searches.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for `generate`; solvers ignore it.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: minorkit::Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Test membership in every supported graph class, with certificates.
    Recognize,
    /// Hadwiger number.
    Hadwiger {
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Maximum clique-matching.
    CliqueMatching {
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Fewest edge contractions reaching diameter at most `s`, or the decision for budget `k`.
    Club {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Exhaustive reference computations.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Singleton limit for `nice`.
        #[arg(long)]
        max_singletons: Option<usize>,
    },
    /// Build hardness instances and graph transformations.
    Reduce {
        #[command(subcommand)]
        kind: ReduceKind,
        #[command(flatten)]
        out: Output,
    },
    /// Random or named graphs.
    Generate {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Edge probability or density, where the family uses one.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Clone)]
pub struct Output {
    /// Write the graph here (and, for reductions, a JSON sidecar next to it).
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_parser = parse_format, default_value = "graph6")]
    pub out_format: Format,
}

#[derive(Subcommand, Clone, Copy)]
pub enum ReduceKind {
    /// DIMACS CNF formula to a co-bipartite contraction instance.
    Nae3sat,
    /// Set system to a split (s = 2) or chordal (s = 3) instance.
    HittingSet {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
        s: u8,
        #[arg(long)]
        k: usize,
    },
    /// Add k + 1 pendants to every vertex.
    Lift {
        #[arg(long)]
        k: usize,
    },
    /// Subdivide every edge once.
    Subdivide,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Auto,
    Cograph,
    Bipperm,
    Oracle,
}

#[derive(ValueEnum, Clone, Copy)]
pub enum OracleKind {
    Hadwiger,
    Minor,
    CliqueMatching,
    Nice,
    Club,
    ClubMinor,
    Chordality,
}

#[derive(ValueEnum, Clone, Copy)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Cograph,
    BipartitePermutation,
    Interval,
    Chordal,
    Gnp,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = cli.common;
    let name = command_name(&cli.command);
    let outcome = match cli.command {
        Command::Recognize => commands::recognize(&common),
        Command::Hadwiger { method } => commands::hadwiger(&common, method),
        Command::CliqueMatching { method } => commands::clique_matching(&common, method),
        Command::Club { s, k } => commands::club(&common, s, k),
        Command::Oracle {
            kind,
            s,
            k,
            max_singletons,
        } => commands::oracle(&common, kind, s, k, max_singletons),
        Command::Reduce { kind, out } => commands::reduce(&common, kind, &out),
        Command::Generate { family, n, p, out } => commands::generate(&common, family, n, p, &out),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            report::print_failure(name, &f, common.json);
            ExitCode::from(f.code())
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Recognize => "recognize",
        Command::Hadwiger { .. } => "hadwiger",
        Command::CliqueMatching { .. } => "clique-matching",
        Command::Club { .. } => "club",
        Command::Oracle { .. } => "oracle",
        Command::Reduce { .. } => "reduce",
        Command::Generate { .. } => "generate",
    }
}

pub type Outcome = Result<(), Failure>;
