//! Command-line grammar.

use clap::{Args, Parser, Subcommand, ValueEnum};
use superfilt_core::repro::DEFAULT_SEED;

#[derive(Parser, Debug)]
#[command(name = "superfilt", version, about = "Exact checks for filtrations of GL(m|n) coordinate superalgebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Size of the even upper block
    #[arg(long, global = true, default_value_t = 1)]
    pub m: usize,
    /// Size of the even lower block
    #[arg(long, global = true, default_value_t = 1)]
    pub n: usize,
    /// Field characteristic: 0 for the rationals or a prime
    #[arg(long = "char", global = true, default_value_t = 0)]
    pub characteristic: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Partitions and tableaux
    #[command(subcommand)]
    Partitions(PartitionsCmd),
    /// Dominant weights and their orders
    #[command(subcommand)]
    Weights(WeightsCmd),
    /// Apply the substitution x -> y to an even expression
    Phistar {
        #[arg(long)]
        expr: String,
    },
    /// Apply a superderivation to an expression
    Derive {
        #[arg(long, value_enum)]
        side: SideArg,
        /// Position as k,l
        #[arg(long)]
        pos: String,
        #[arg(long)]
        expr: String,
        /// Apply the derivation this many times
        #[arg(long, default_value_t = 1)]
        times: u32,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        what: VerifyWhat,
        /// Weight as "a,b,..|c,..." (closure, quotient)
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, default_value_t = 2)]
        lmax: u32,
    },
    /// List basis vectors
    Basis {
        #[arg(value_enum)]
        what: BasisWhat,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 1)]
        lmax: u32,
    },
    /// Run the acceptance suite
    Repro {
        /// Criteria by number or name, comma separated
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum PartitionsCmd {
    /// Box-moving listing of partitions of r with at most m parts
    List {
        #[arg(long)]
        r: u32,
        /// Every partition in the total order instead of the box-moving listing
        #[arg(long)]
        all: bool,
        /// Draw Young diagrams
        #[arg(long)]
        diagrams: bool,
    },
    /// Semistandard tableaux of a shape
    Tableaux {
        /// Shape as comma-separated parts
        #[arg(long)]
        shape: String,
        #[arg(long)]
        alphabet: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum WeightsCmd {
    /// Order on dominant GL(m) weights of size r
    GlOrder {
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Interleaved order on dominant GL(m|n) weights of a bidegree
    SuperOrder {
        #[arg(long, allow_negative_numbers = true)]
        r_plus: i64,
        #[arg(long, allow_negative_numbers = true)]
        r_minus: i64,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Weights covered by lambda in the dominance order
    Predecessors {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = superfilt_core::weightcomb::DEFAULT_HEIGHT_BOUND)]
        height: u32,
    },
    /// Successive generator sets of the descending chain of ideals
    Chain {
        /// Generators separated by ';'
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = superfilt_core::weightcomb::DEFAULT_HEIGHT_BOUND)]
        height: u32,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyWhat {
    Tables,
    Mixed,
    Jacobi,
    Laplace,
    Divpow,
    Detderiv,
    Gl11,
    Closure,
    Quotient,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisWhat {
    M,
    CQuotient,
    CTrunc,
}
