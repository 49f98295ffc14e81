//! Command-line flags.

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "bohr-lab", version, about = "Bohr-type radii and numerical verification of coefficient inequalities")]
pub struct Cli {
    /// JSON object of flag values for the subcommand; explicit flags win.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve for a radius.
    Radius(RadiusArgs),
    /// Run a seeded verification suite.
    Verify(VerifyArgs),
    /// Dump series coefficients.
    Series(SeriesArgs),
    /// Sweep a radius over a parameter grid.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    QuasiStarlike,
    QuasiConvex,
    Rogosinski,
    LogStarlike,
    LogStarlikeWrt1,
    LogConvex,
    LogHallen,
    LogP2,
    StarlikeUnivalent,
    ConvexUnivalent,
    OrderAlpha,
    Kucst,
}

impl TheoremArg {
    pub fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

#[derive(Debug, Args)]
pub struct PsiArgs {
    /// ψ specifier, e.g. `janowski:1,-1`, `exp:0`, `custom:@coeffs.csv`.
    #[arg(long, default_value = "janowski:1,-1", allow_hyphen_values = true)]
    pub psi: String,

    /// Quasiconformality constant K >= 1.
    #[arg(long = "K", default_value_t = 1.0, allow_negative_numbers = true)]
    pub big_k: f64,

    /// Decimal digits in numeric output.
    #[arg(long, default_value_t = 12)]
    pub precision: usize,
}

#[derive(Debug, Args)]
#[command(args_override_self = true)]
pub struct RadiusArgs {
    #[arg(long, value_enum)]
    pub theorem: TheoremArg,

    #[command(flatten)]
    pub common: PsiArgs,

    /// Power in the head term `|f(z^n)|` (rogosinski).
    #[arg(long, default_value_t = 1)]
    pub n: u32,

    /// First index of the tail sum (rogosinski).
    #[arg(long = "N", default_value_t = 1)]
    pub big_n: usize,

    /// Order parameter for `order-alpha` and `kucst`.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,

    /// Uniform-convexity parameter k for `kucst`.
    #[arg(long = "k-uniform", allow_negative_numbers = true)]
    pub k_uniform: Option<f64>,

    /// Upper cap for the reported radius (default 1/3 for the quasiconformal theorems).
    #[arg(long, allow_negative_numbers = true)]
    pub cap: Option<f64>,

    #[arg(long, default_value_t = 1e-12, allow_negative_numbers = true)]
    pub tol: f64,

    /// Base truncation order; evaluations double it up to 512 as needed.
    #[arg(long, default_value_t = 64)]
    pub order: usize,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Bohr,
    Rogosinski,
    Majorant,
    LogGamma,
    LogBohr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Starlike,
    Convex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    StarlikeConvexPsi,
    StarlikeWrt1,
    ConvexClass,
    Hallen,
    P2,
}

#[derive(Debug, Args)]
#[command(args_override_self = true)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: SuiteArg,

    #[command(flatten)]
    pub common: PsiArgs,

    /// Function class of the sampled members (bohr).
    #[arg(long, value_enum, default_value_t = ClassArg::Starlike)]
    pub class: ClassArg,

    /// Head power (rogosinski).
    #[arg(long, default_value_t = 1)]
    pub n: u32,

    /// Tail start index; a comma-separated list for the majorant suite.
    #[arg(long = "N", value_delimiter = ',', default_value = "1")]
    pub big_n: Vec<usize>,

    /// Bound τ on |φ| (majorant); values other than 1 select the generalized form.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub tau: f64,

    /// Multiplier M (majorant).
    #[arg(long = "M", default_value_t = 1.0, allow_negative_numbers = true)]
    pub big_m: f64,

    /// Radius for the plain majorant suite (default 1/3).
    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<f64>,

    /// Hypothesis mode for log-gamma and log-bohr.
    #[arg(long, value_enum, default_value_t = ModeArg::StarlikeConvexPsi)]
    pub mode: ModeArg,

    /// Number of logarithmic coefficients checked (log-gamma).
    #[arg(long, default_value_t = 40)]
    pub terms: usize,

    #[arg(long, default_value_t = 1000)]
    pub samples: usize,

    #[arg(long, default_value_t = 42)]
    pub seed: u64,

    #[arg(long, default_value_t = 48)]
    pub order: usize,

    /// Add `runtime_ms` to the report (makes output run-dependent).
    #[arg(long)]
    pub timing: bool,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesTarget {
    Psi,
    ExtremalStarlike,
    ExtremalConvex,
    BbDominant,
    HallenDominant,
    SqrtDominant,
    LogGamma,
}

#[derive(Debug, Args)]
#[command(args_override_self = true)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub target: SeriesTarget,

    #[command(flatten)]
    pub common: PsiArgs,

    #[arg(long, default_value_t = 10)]
    pub order: usize,

    /// Rotation index n of the starlike extremal `z f'/f = ψ(z^{n+1})`.
    #[arg(long, default_value_t = 0)]
    pub n: usize,

    /// Function whose logarithmic coefficients are listed (log-gamma).
    #[arg(long, value_enum, default_value_t = SeriesTarget::ExtremalStarlike)]
    pub of: SeriesTarget,

    /// Number of logarithmic coefficients (log-gamma).
    #[arg(long, default_value_t = 10)]
    pub terms: usize,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepArg {
    K,
    Alpha,
    De,
    B1,
}

#[derive(Debug, Args)]
#[command(args_override_self = true)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub sweep: SweepArg,

    /// Theorem per row (default: quasi-starlike, or log-starlike for the B1 sweep).
    #[arg(long, value_enum)]
    pub theorem: Option<TheoremArg>,

    #[command(flatten)]
    pub common: PsiArgs,

    #[arg(long = "k-list", value_delimiter = ',', default_value = "1,2,3,5,10", allow_negative_numbers = true)]
    pub k_list: Vec<f64>,

    #[arg(long = "alpha-list", value_delimiter = ',', default_value = "0,0.25,0.5", allow_negative_numbers = true)]
    pub alpha_list: Vec<f64>,

    /// `D:E` pairs separated by `;`.
    #[arg(long = "de-grid", default_value = "1:-1;0.5:-0.5;1:0;0.5:0", allow_hyphen_values = true)]
    pub de_grid: String,

    /// ψ specifiers separated by `;` (B1 sweep).
    #[arg(
        long = "psi-list",
        default_value = "janowski:1,-1;alpha:0.25;power:0.5;crescent;root:2,1;exp:0;sqrt:0;sigmoid",
        allow_hyphen_values = true
    )]
    pub psi_list: String,

    #[arg(long, default_value_t = 1e-12, allow_negative_numbers = true)]
    pub tol: f64,

    #[arg(long, default_value_t = 64)]
    pub order: usize,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}
