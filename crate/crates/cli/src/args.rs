use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kahler_core::combel::Partition;
use kahler_core::spaces::CaseTag;

/// Overrides the default total-dimension cap of a build.
pub const CAP_ENV: &str = "KAHLER_DIM_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "kahler",
    version,
    about = "Exact verification of Kähler packages and equivariant log-concavity"
)]
pub struct Cli {
    /// Worker threads; 0 uses every available core.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the Kähler package checks over a parameter grid.
    Verify(VerifyArgs),
    /// Equivariant log-concavity of graded S_n representations.
    Logconcavity(LogconcavityArgs),
    /// Schur positivity, Pieri and line log-concavity checks.
    #[command(subcommand)]
    Schur(SchurCommand),
    /// Deterministic JSON dump of a space: bases, operators and pairing.
    Dump(DumpArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Caps {
    /// Cap on the total dimension of a space (default 200000, or the environment override).
    #[arg(long)]
    pub cap_total: Option<u128>,
    /// Cap on the dimension of a single degree.
    #[arg(long)]
    pub cap_degree: Option<u128>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_case)]
    pub case: CaseTag,
    /// Inclusive range such as `1..3`, or a single value.
    #[arg(long, value_parser = parse_range)]
    pub n: RangeInclusive<usize>,
    /// Inclusive range of top degrees; defaults to `0..2n`. Ignored for ext-usual.
    #[arg(long, value_parser = parse_range)]
    pub m: Option<RangeInclusive<usize>>,
    #[command(flatten)]
    pub caps: Caps,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Poly,
    Ext,
    Coinvariant,
    Novak,
}

#[derive(Args, Debug)]
pub struct LogconcavityArgs {
    #[arg(long, value_enum)]
    pub target: Target,
    #[arg(long, value_parser = parse_range)]
    pub n: RangeInclusive<usize>,
    /// Top degrees for poly and ext; defaults to `0..2n`.
    #[arg(long, value_parser = parse_range)]
    pub m: Option<RangeInclusive<usize>>,
    /// Largest n accepted for the coinvariant and novak targets.
    #[arg(long)]
    pub cap_n: Option<usize>,
    #[command(flatten)]
    pub caps: Caps,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Subcommand, Debug)]
pub enum SchurCommand {
    /// `s²_{(λ+μ)/2} − s_λ s_μ` is Schur non-negative; one pair or a grid.
    Nonneg(NonnegArgs),
    /// Compare Littlewood–Richardson products with the strip rule.
    Pieri(PieriArgs),
    /// Log-concavity of highest-weight modules along a line of weights.
    Line(LineArgs),
}

#[derive(Args, Debug)]
pub struct NonnegArgs {
    #[arg(long, value_parser = parse_partition, requires = "mu")]
    pub lambda: Option<Partition>,
    #[arg(long, value_parser = parse_partition, requires = "lambda")]
    pub mu: Option<Partition>,
    /// Grid mode: all pairs with `|λ| = |μ| ≤ max-size`.
    #[arg(long, default_value_t = 6)]
    pub max_size: usize,
    /// Grid mode: at most this many rows per partition.
    #[arg(long, default_value_t = 4)]
    pub max_len: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct PieriArgs {
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
    #[arg(long)]
    pub k: usize,
    /// Horizontal strips, multiplication by `s_(k)` (the default).
    #[arg(long, conflicts_with = "column")]
    pub row: bool,
    /// Vertical strips, multiplication by `s_(1^k)`.
    #[arg(long)]
    pub column: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct LineArgs {
    /// First weight, comma separated; entries may be negative.
    #[arg(long, value_parser = parse_weight, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub start: Vec<i64>,
    #[arg(long, value_parser = parse_weight, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub step: Vec<i64>,
    /// Number of weights on the line.
    #[arg(long)]
    pub count: usize,
    /// Rank of `GL_n`; at least the padded weight length.
    #[arg(long)]
    pub rank: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct DumpArgs {
    #[arg(long, value_parser = parse_case)]
    pub case: CaseTag,
    #[arg(long)]
    pub n: usize,
    /// Top degree; ignored for ext-usual.
    #[arg(long, default_value_t = 0)]
    pub m: usize,
    #[command(flatten)]
    pub caps: Caps,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_case(s: &str) -> Result<CaseTag, String> {
    s.parse::<CaseTag>()
}

/// `a..b` and `a..=b` are both inclusive; a bare `a` is `a..=a`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad bound {t:?}: {e}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse()
}

fn parse_weight(s: &str) -> Result<i64, String> {
    s.trim()
        .parse::<i64>()
        .map_err(|e| format!("bad weight entry {s:?}: {e}"))
}
