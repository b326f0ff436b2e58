use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hvec_core::{HVector, SocleVector};

#[derive(Debug, Parser)]
#[command(name = "hvec", version, about = "Exact h-vector invariants and multiplicity bounds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Profile f(n), the invariants t, i, j, m and the multiplicity.
    Invariants {
        #[arg(long)]
        h: HVector,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compressed h-vectors and socle vectors.
    #[command(subcommand)]
    Compressed(CompressedCmd),
    /// Evaluate the multiplicity bounds read off an h-vector.
    Bounds(BoundsArgs),
    /// Check the bounds over a file, an enumeration or a family.
    Verify(VerifyArgs),
    /// h-vector of an inverse system.
    Invsys(InvsysArgs),
}

#[derive(Debug, Subcommand)]
pub enum CompressedCmd {
    /// Generic upper bound H, the numbers r_d and the bound bracket.
    Gen {
        /// Number of variables.
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long)]
        socle: SocleVector,
        /// Accept socle vectors with entries below the pivot degree.
        #[arg(long)]
        raw: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Socle vector of a compressed h-vector.
    Recover {
        #[arg(long)]
        h: HVector,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub h: HVector,
    /// The algebra is known to be level.
    #[arg(long)]
    pub level: bool,
    /// Add approximate decimal values.
    #[arg(long)]
    pub decimal: bool,
    /// Minimal shifts of a resolution, for the shift-based bracket.
    #[arg(long, value_delimiter = ',', requires = "max_shifts")]
    pub min_shifts: Option<Vec<u64>>,
    #[arg(long, value_delimiter = ',', requires = "min_shifts")]
    pub max_shifts: Option<Vec<u64>>,
    /// JSON file with `min_shifts` and `max_shifts`.
    #[arg(long, conflicts_with_all = ["min_shifts", "max_shifts"])]
    pub shifts: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    /// Type-2 level family.
    Type2,
    /// Level h-vectors with h_2 <= 4.
    Iii,
    /// Compressed level h-vectors.
    CompressedLevel,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("source").required(true))]
pub struct VerifyArgs {
    /// One h-vector per line; `-` reads standard input.
    #[arg(long, group = "source")]
    pub input: Option<PathBuf>,
    /// All O-sequences within the caps.
    #[arg(long, group = "source", requires = "max_c")]
    pub enumerate: bool,
    #[arg(long, value_enum, group = "source", requires = "max_c")]
    pub family: Option<FamilyKind>,
    /// Largest socle degree.
    #[arg(long)]
    pub max_c: Option<usize>,
    /// Largest entry (enumeration and the open-ended h_2 <= 4 patterns).
    #[arg(long, default_value_t = 30)]
    pub max_entry: u64,
    #[arg(long, value_delimiter = ',')]
    pub prefix: Option<Vec<u64>>,
    /// Plateau values for the type-2 family.
    #[arg(long, value_delimiter = ',', default_value = "3,4,5,6,7")]
    pub p: Vec<u64>,
    /// Largest type for compressed level h-vectors.
    #[arg(long, default_value_t = 6)]
    pub max_type: u64,
    /// Treat every h-vector as level.
    #[arg(long)]
    pub level: bool,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("generators").required(true))]
pub struct InvsysArgs {
    /// Generator file, one form in y1, y2, y3 per line.
    #[arg(long, group = "generators")]
    pub file: Option<PathBuf>,
    /// Degrees of generic powers of linear forms.
    #[arg(long, group = "generators", value_delimiter = ',')]
    pub degrees: Option<Vec<u32>>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 3)]
    pub attempts: usize,
    /// Accept the first seed producing this h-vector.
    #[arg(long)]
    pub expect: Option<HVector>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}
