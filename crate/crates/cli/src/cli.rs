use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ltab", version, about = "Count, enumerate and cross-check L- and L'-tableaux")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Ascii)]
    pub format: Format,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,

    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    /// Reserved; every operation is deterministic.
    #[arg(long, global = true, value_name = "SEED")]
    pub seed: Option<u64>,

    /// Include elapsed milliseconds in reports.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Ascii,
    Latex,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print an exact count, with the closed-form prediction where one applies.
    Count {
        #[arg(value_enum)]
        family: CountFamily,
        #[command(flatten)]
        params: Params,
    },
    /// Emit every tableau of a family in canonical order.
    Enumerate {
        #[arg(value_enum)]
        family: EnumFamily,
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum)]
        sign: Option<SignArg>,
        /// Stop after this many records.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Apply one bijection or map to a single input.
    Map {
        #[arg(value_enum)]
        map: MapName,
        /// JSON file, `-` for stdin, or inline JSON.
        input: Option<String>,
        /// Comma-separated letters, for maps taking a word.
        #[arg(long, value_delimiter = ',')]
        word: Option<Vec<u32>>,
        #[command(flatten)]
        params: Params,
    },
    /// Run cross-checks over a bounded parameter box.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 3)]
        g_max: usize,
        #[arg(long, default_value_t = 2)]
        r_max: usize,
        #[arg(long, default_value_t = 2)]
        d_slack: usize,
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        /// Deliberately break a map to exercise failure reporting.
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
}

#[derive(Debug, Clone, Copy, Default, Args)]
pub struct Params {
    #[arg(long)]
    pub g: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub i: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountFamily {
    L,
    Lprime,
    Restricted,
    Castelnuovo,
    IntegralL,
    IntegralLprime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumFamily {
    L,
    Lprime,
    Restricted,
    Trssyt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    LToWord,
    WordToL,
    Phi,
    PhiI,
    Psi,
    Rsk,
    RskInverse,
    LprimeToBinary,
    BinaryToLprime,
    Truncate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Counts,
    Bijections,
    Oracles,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FaultArg {
    CorruptWord,
    DropTableau,
}
