use std::path::PathBuf;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Construct, enumerate and verify equal sums of like powers.
#[derive(Debug, Parser)]
#[command(name = "equalpow", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format for records.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Keep only solutions with nonzero components of one sign
    /// (`--positive-only false` to disable).
    #[arg(
        long,
        global = true,
        action = ArgAction::Set,
        num_args = 0..=1,
        default_value_t = true,
        default_missing_value = "true"
    )]
    pub positive_only: bool,

    /// Also emit minus-branch cube identities.
    #[arg(long, global = true)]
    pub include_negative_branch: bool,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Identities sharing the common difference DELTA.
    Solve {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        /// Explicit divisor list, required when DELTA exceeds 127 bits.
        #[arg(long, value_delimiter = ',')]
        divisors: Vec<String>,
    },
    /// Closed-form cube identities for c1 in FROM..=TO.
    Gen {
        from: u64,
        to: u64,
        /// Print only the sums A³ + B³, one per line.
        #[arg(long)]
        emit_sums_only: bool,
        /// Print digit counts of A against the growth model instead.
        #[arg(long, conflicts_with = "emit_sums_only")]
        digits: bool,
        /// Drop rows with a zero or negative component.
        #[arg(long)]
        skip_nonpositive: bool,
    },
    /// Check Aⁿ + Bⁿ = Cⁿ + Dⁿ.
    #[command(allow_negative_numbers = true)]
    Verify {
        n: u32,
        a: String,
        b: String,
        c: String,
        d: String,
    },
    /// Sums with several representations, by exhaustive search.
    Oracle {
        #[arg(long)]
        n: u32,
        #[arg(long, required_unless_present = "load_index")]
        limit: Option<u32>,
        #[arg(long, default_value_t = 2)]
        ways: usize,
        /// Allow components in -LIMIT..=LIMIT (cubes only).
        #[arg(long)]
        signed: bool,
        #[arg(long)]
        save_index: Option<PathBuf>,
        #[arg(long, conflicts_with_all = ["limit", "signed"])]
        load_index: Option<PathBuf>,
    },
    /// Time the generator, the sum index and the naive pair search.
    Bench {
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long, value_delimiter = ',', default_values_t = [50u32, 100, 200])]
        limits: Vec<u32>,
        #[arg(long = "c1", value_delimiter = ',', default_values_t = [1u64, 5, 8, 100])]
        c1: Vec<u64>,
        /// Also run the naive pair-against-pair search (N <= 200).
        #[arg(long)]
        naive: bool,
    },
}
