use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hotelmc_core::HotelConfig;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "hotelmc",
    version,
    about = "Model checker for the hotel key-card locking protocol"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count (or list) the initial states of a configuration.
    Enumerate(EnumerateArgs),
    /// Check NoBadEntry on one configuration.
    Check(CheckArgs),
    /// Run a grid of checks and write one CSV row per run.
    Sweep(SweepArgs),
    /// Validate a JSON report and confirm it re-serializes byte-identically.
    Validate(ValidateArgs),
}

#[derive(Args, Debug, Clone)]
pub struct ConfigArgs {
    /// Shorthand for `--keys N --rooms N --guests N`.
    #[arg(long, conflicts_with_all = ["keys", "rooms", "guests"])]
    pub n: Option<usize>,
    #[arg(long)]
    pub keys: Option<usize>,
    #[arg(long)]
    pub rooms: Option<usize>,
    #[arg(long)]
    pub guests: Option<usize>,
    /// Every room and guest of the universe exists, instead of any subset.
    #[arg(long)]
    pub exact_scope: bool,
}

impl ConfigArgs {
    pub fn resolve(&self) -> Result<HotelConfig, CliError> {
        let (k, r, g) = match (self.n, self.keys, self.rooms, self.guests) {
            (Some(n), ..) => (n, n, n),
            (None, Some(k), Some(r), Some(g)) => (k, r, g),
            _ => {
                return Err(CliError::Usage(
                    "give either --n or all of --keys, --rooms and --guests".into(),
                ))
            }
        };
        Ok(HotelConfig::new(k, r, g)?.with_exact_scope(self.exact_scope))
    }
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub config: ConfigArgs,
    /// Count orbit representatives under room and guest renaming.
    #[arg(long)]
    pub symmetry: bool,
    /// Print each state, one per line, before the count.
    #[arg(long)]
    pub list: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Bfs,
    Dfs,
    Bounded,
    Hybrid,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NoInterveningArg {
    #[default]
    Off,
    /// Look-ahead: a checkin must be followed by the matching entry.
    Alloy,
    /// Step filter: while a fresh checkin is pending, only its entry may fire.
    Tla,
}

/// Sweep-only spelling: `on` picks the natural variant for each mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NoInterveningChoice {
    Off,
    On,
    Alloy,
    Tla,
}

impl NoInterveningChoice {
    pub fn for_mode(self, mode: Mode) -> NoInterveningArg {
        match self {
            NoInterveningChoice::Off => NoInterveningArg::Off,
            NoInterveningChoice::Alloy => NoInterveningArg::Alloy,
            NoInterveningChoice::Tla => NoInterveningArg::Tla,
            NoInterveningChoice::On if mode == Mode::Bounded => NoInterveningArg::Alloy,
            NoInterveningChoice::On => NoInterveningArg::Tla,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StutterArg {
    #[default]
    Label,
    Delta,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeadlockArg {
    #[default]
    Ignore,
    Flag,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[command(flatten)]
    pub config: ConfigArgs,
    #[arg(long, value_enum, default_value = "bfs")]
    pub mode: Mode,
    /// Trace length (states) for bounded mode; lengths 1..=T are tried.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub trace_len: Option<u64>,
    /// Step bound: dfs defaults to 100, bfs and hybrid are unbounded unless given.
    #[arg(long)]
    pub depth: Option<usize>,
    #[arg(long, value_enum, default_value = "off")]
    pub no_intervening: NoInterveningArg,
    #[arg(long, value_enum, default_value = "label")]
    pub stutter: StutterArg,
    #[arg(long, value_enum, default_value = "ignore")]
    pub deadlock: DeadlockArg,
    /// With `--stutter delta`, count states with only self-loops as deadlocked.
    #[arg(long)]
    pub strict_deadlock: bool,
    #[arg(long)]
    pub symmetry: bool,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Abort with a resource error after this many stored states.
    #[arg(long)]
    pub max_states: Option<usize>,
}

/// Parses `N` or `A..B` (inclusive).
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok(num(a)?..=num(b)?)
        }
        None => {
            let n = num(s)?;
            Ok(n..=n)
        }
    }
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Sizes to run, e.g. `3` or `1..3`; repeatable. No sizes gives an empty grid.
    #[arg(long = "n", value_parser = parse_range)]
    pub n: Vec<RangeInclusive<usize>>,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "bfs")]
    pub modes: Vec<Mode>,
    /// Trace lengths for bounded rows, e.g. `1..6`.
    #[arg(long = "t", value_parser = parse_range)]
    pub t: Vec<RangeInclusive<usize>>,
    /// Depth bounds for bfs/dfs/hybrid rows; dfs defaults to 100.
    #[arg(long, value_parser = parse_range)]
    pub depth: Vec<RangeInclusive<usize>>,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "off")]
    pub no_intervening: Vec<NoInterveningChoice>,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "label")]
    pub stutter: Vec<StutterArg>,
    #[arg(long)]
    pub exact_scope: bool,
    #[arg(long)]
    pub symmetry: bool,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,
    #[arg(long)]
    pub max_states: Option<usize>,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ValidateArgs {
    /// JSON report produced by `check --format json`; `-` reads stdin.
    pub path: PathBuf,
}
