use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cohere_core::{EnsembleKind, EnsembleSpec};

/// Environment variable holding the default worker count for sampling commands.
pub const WORKERS_ENV: &str = "COHERE_WORKERS";

#[derive(Debug, Parser)]
#[command(
    name = "cohere",
    version,
    about = "Coherence and entanglement measures for two- and three-qubit states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Scan a random two-qubit ensemble for C <= C_l1 (CSV + summary JSON).
    Sample(SampleArgs),
    /// Analytic and matrix-path measures of a canonical three-qubit state.
    Canonical(CanonicalArgs),
    /// GHZ/W label of a real canonical state from the coherence difference.
    Classify(ClassifyArgs),
    /// Per-link audit of the coherence-bounds-concurrence argument, or the
    /// induced-norm bound under both coherence conventions.
    Audit(AuditArgs),
    /// Deterministic grid over the canonical parameter simplex (CSV).
    Sweep(SweepArgs),
    /// Measures of a density matrix read from a JSON file.
    Analyze(AnalyzeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnsembleArg {
    /// Haar-random pure states.
    #[value(alias = "haar-pure")]
    Pure,
    /// Normalized G G^dagger with G a 4 x rank complex Ginibre matrix.
    Ginibre,
}

#[derive(Debug, Args)]
pub struct EnsembleArgs {
    /// Number of states.
    #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Ensemble to draw from [default: pure for sample, ginibre for audit].
    #[arg(long, value_enum)]
    pub ensemble: Option<EnsembleArg>,
    /// Ginibre rank (columns of G).
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=4))]
    pub rank: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Worker threads; results do not depend on this value.
    #[arg(long, env = WORKERS_ENV, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
}

impl EnsembleArgs {
    pub fn spec(&self, default: EnsembleArg) -> EnsembleSpec {
        let kind = match self.ensemble.unwrap_or(default) {
            EnsembleArg::Pure => EnsembleKind::HaarPure,
            EnsembleArg::Ginibre => EnsembleKind::Ginibre,
        };
        EnsembleSpec {
            kind,
            rank: if kind == EnsembleKind::Ginibre {
                self.rank as usize
            } else {
                1
            },
            seed: self.seed,
            count: self.n,
        }
    }

    pub fn workers(&self) -> Option<usize> {
        self.workers.map(|w| w as usize)
    }
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub ensemble: EnsembleArgs,
    /// CSV destination [default: stdout].
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Summary JSON destination [default: stdout, or stderr when the CSV goes to stdout].
    #[arg(long)]
    pub summary: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StateArgs {
    /// Comma-separated lambda0..lambda4; give four values (or "auto" as the
    /// fifth) with --normalize-last to complete lambda4 from normalization.
    #[arg(
        long,
        value_delimiter = ',',
        required = true,
        allow_hyphen_values = true
    )]
    pub lambdas: Vec<String>,
    /// Set lambda4 = sqrt(1 - sum of the other squares).
    #[arg(long)]
    pub normalize_last: bool,
    /// Relative phase on |100>, in [0, pi].
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub theta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct CanonicalArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Destination [default: stdout].
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub state: StateArgs,
    /// Destination [default: stdout].
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AuditTarget {
    /// Every link of the chain from C to C_l1.
    Theorem1Chain,
    /// Induced 1-norm against C_l1 under both conventions.
    AppendixA,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[arg(long, value_enum)]
    pub target: AuditTarget,
    #[command(flatten)]
    pub ensemble: EnsembleArgs,
    /// JSON destination [default: stdout]. Worst-case states are written
    /// next to it.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Directory for worst-case state files [default: alongside --out, or
    /// not written when printing to stdout].
    #[arg(long)]
    pub state_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Grid steps r: lambda_i = sqrt(k_i / r) over non-negative k summing to r.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(2..=200))]
    pub resolution: u64,
    /// Fix lambda_i = 0 (repeatable).
    #[arg(long = "zero", value_parser = clap::value_parser!(u64).range(0..=4))]
    pub zeros: Vec<u64>,
    /// Tie lambda_i = lambda_j, given as "i,j" (repeatable).
    #[arg(long = "tie", value_parser = parse_tie)]
    pub ties: Vec<(usize, usize)>,
    /// CSV destination [default: stdout].
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_tie(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected i,j but got {s:?}"))?;
    let idx = |t: &str| -> Result<usize, String> {
        let v: usize = t
            .trim()
            .parse()
            .map_err(|_| format!("{t:?} is not an index"))?;
        if v > 4 {
            return Err(format!("index {v} outside 0..=4"));
        }
        Ok(v)
    };
    Ok((idx(a)?, idx(b)?))
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Density matrix JSON: {"dim": d, "re": [...], "im": [...]} row-major.
    #[arg(long)]
    pub state_file: PathBuf,
    /// Destination [default: stdout].
    #[arg(long)]
    pub out: Option<PathBuf>,
}
