use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "liemap", version, about = "Polynomial maps on Chevalley algebras, with JSON output")]
pub struct Cli {
    /// Write the JSON document here instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Exit with status 1 unless the document's "result" equals this value
    #[arg(long, global = true, value_name = "RESULT")]
    pub expect: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root list, heights and Cartan matrix
    Roots(AlgebraArgs),
    /// Chevalley basis summary and, optionally, the full bracket table
    Algebra(AlgebraCmd),
    /// Parse a polynomial and show its Lyndon normal form
    Parse(ParseCmd),
    /// Decide whether a polynomial is an identity of sl(2)
    Identity(IdentityCmd),
    /// Check that two matrix triples are separated by their θ values
    Witness(WitnessCmd),
    /// Search for separating matrix triples
    WitnessSearch(WitnessSearchCmd),
    /// Solve P(X, Y) = target for an Engel-type polynomial
    EngelSolve(EngelSolveCmd),
    /// Enumerate or sample the image of a polynomial map
    Scan(ScanCmd),
    /// Which central elements E_m attains, over a range of m
    CentralProbe(ProbeCmd),
    /// Compare the closed form of the quartic example against direct evaluation
    Example48(Example48Cmd),
}

#[derive(Debug, Clone, Args)]
pub struct AlgebraArgs {
    /// Algebra label such as A2 or G2 (alternative to --type/--rank)
    #[arg(long, conflicts_with_all = ["kind", "rank"])]
    pub algebra: Option<String>,
    /// Root system type: A, B, C, D or G
    #[arg(long = "type", value_name = "TYPE", requires = "rank")]
    pub kind: Option<String>,
    #[arg(long, requires = "kind")]
    pub rank: Option<usize>,
    /// Q, F<p> or Fp:<p>
    #[arg(long, default_value = "Q")]
    pub field: String,
}

#[derive(Debug, Clone, Args)]
pub struct PolyArg {
    /// Inline polynomial, or @FILE; @NAME also finds the bundled polynomials
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Enumeration or sampling cap; LIEMAP_BUDGET sets the default
    #[arg(long)]
    pub budget: Option<u64>,
    /// Worker threads, 0 for one per core
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
}

#[derive(Debug, Args)]
pub struct AlgebraCmd {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    #[arg(long)]
    pub print_structure: bool,
}

#[derive(Debug, Args)]
pub struct ParseCmd {
    #[command(flatten)]
    pub poly: PolyArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentityModeArg {
    Exact,
    Randomized,
}

#[derive(Debug, Args)]
pub struct IdentityCmd {
    #[command(flatten)]
    pub poly: PolyArg,
    #[arg(long, default_value = "Q")]
    pub field: String,
    #[arg(long, value_enum, default_value_t = IdentityModeArg::Exact)]
    pub mode: IdentityModeArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Randomized mode: number of sample points
    #[arg(long, default_value_t = 8)]
    pub trials: u32,
    /// Randomized mode: coordinates are drawn from this many values
    #[arg(long, default_value_t = 1 << 20)]
    pub grid: u64,
}

#[derive(Debug, Args)]
pub struct WitnessCmd {
    /// Bundled fixture name
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    pub fixtures: Option<String>,
    /// Fixture JSON file
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// sl3 or so5; must agree with the fixture
    #[arg(long)]
    pub realization: Option<String>,
    #[arg(long, default_value = "Q")]
    pub field: String,
}

#[derive(Debug, Args)]
pub struct WitnessSearchCmd {
    #[command(flatten)]
    pub poly: PolyArg,
    #[arg(long)]
    pub realization: String,
    #[arg(long, default_value = "Q")]
    pub field: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Debug, Args)]
pub struct EngelSolveCmd {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    /// Plain Engel polynomial E_m
    #[arg(long, conflicts_with = "coeffs", required_unless_present = "coeffs")]
    pub m: Option<usize>,
    /// Comma-separated coefficients c_1,...,c_m of Σ c_i E_i
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub coeffs: Option<Vec<String>>,
    /// Comma-separated Chevalley coordinates of the target
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub target: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanModeArg {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Args)]
pub struct ScanCmd {
    #[command(flatten)]
    pub poly: PolyArg,
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    #[arg(long, value_enum, default_value_t = ScanModeArg::Exhaustive)]
    pub mode: ScanModeArg,
    /// Sampled mode: number of samples (default 100000, at most the budget)
    #[arg(long)]
    pub count: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Args)]
pub struct ProbeCmd {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    #[arg(long, default_value_t = 1)]
    pub m_from: usize,
    #[arg(long, default_value_t = 12)]
    pub m_to: usize,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Args)]
pub struct Example48Cmd {
    #[arg(long, default_value = "F5")]
    pub field: String,
    /// Skip the image scan on sl(2)
    #[arg(long)]
    pub no_scan: bool,
    #[command(flatten)]
    pub run: RunArgs,
}
