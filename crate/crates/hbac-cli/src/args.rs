//! Command-line definition and validation.

use clap::{Args, Parser, Subcommand, ValueEnum};
use hbac_core::channels::CompressionVariant;
use hbac_core::engine::RefrigeratorConfig;

#[derive(Debug, Parser)]
#[command(
    name = "hbac",
    about = "Three-qubit heat-bath algorithmic cooling refrigerator toolkit",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run N cooling cycles and emit the per-cycle thermodynamic record.
    Simulate(SimulateArgs),
    /// Run simulations over a (gamma, theta) grid, one record block per point.
    Sweep(SweepArgs),
    /// Optimal compression angle per cycle, confirmed by a fine theta sweep.
    #[command(name = "optimize-theta")]
    OptimizeTheta(OptimizeArgs),
    /// Compare every closed-form expression against brute-force propagation.
    Audit(AuditArgs),
    /// Analyze a measured polarization series with error propagation.
    Analyze(AnalyzeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VariantArg {
    /// sin^2/cos^2 mixture of the ideal swap and the identity (trace preserving).
    RandomUnitary,
    /// Two-operator transcription as printed; not trace preserving (audit only).
    VerbatimKraus,
    /// Two-operator transcription with the sign restoring trace preservation.
    CorrectedKraus,
}

impl From<VariantArg> for CompressionVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::RandomUnitary => CompressionVariant::RandomUnitary,
            VariantArg::VerbatimKraus => CompressionVariant::VerbatimKraus,
            VariantArg::CorrectedKraus => CompressionVariant::CorrectedKraus,
        }
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Also emit a gnuplot script next to the output file (requires --out,
    /// csv format).
    #[arg(long)]
    pub plot: bool,
}

#[derive(Debug, Args)]
pub struct PhysicsArgs {
    /// Damping rate of the target qubit per cycle, in [0, 1].
    #[arg(allow_negative_numbers = true, long, default_value_t = 0.0)]
    pub gamma: f64,
    /// Compression mixing angle in radians, in [0, pi] (pi/2 = ideal swap).
    #[arg(allow_negative_numbers = true, long, default_value_t = std::f64::consts::FRAC_PI_2)]
    pub theta: f64,
    /// Initial target polarization, in [-1, 1].
    #[arg(allow_negative_numbers = true, long, default_value_t = 0.0)]
    pub eps1: f64,
    /// Initial polarization of the first reset qubit, in [-1, 1].
    #[arg(allow_negative_numbers = true, long, default_value_t = 0.6)]
    pub eps2: f64,
    /// Initial polarization of the second reset qubit, in [-1, 1].
    #[arg(allow_negative_numbers = true, long, default_value_t = 0.6)]
    pub eps3: f64,
    /// Number of cooling cycles.
    #[arg(long, default_value_t = 20)]
    pub cycles: usize,
    /// Compression variant.
    #[arg(long, value_enum, default_value_t = VariantArg::RandomUnitary)]
    pub variant: VariantArg,
}

impl PhysicsArgs {
    /// Validate ranges by building the engine configuration. Error messages
    /// name the offending flag.
    pub fn to_config(&self) -> Result<RefrigeratorConfig, String> {
        RefrigeratorConfig::new(
            self.gamma,
            self.theta,
            self.eps1,
            self.eps2,
            self.eps3,
            self.cycles,
            self.variant.into(),
        )
        .map_err(flag_error)
    }
}

/// Rewrites core range errors into flag-named CLI messages.
pub fn flag_error(err: hbac_core::Error) -> String {
    match err {
        hbac_core::Error::OutOfRange {
            name,
            value,
            min,
            max,
        } => format!("--{name} must be within [{min}, {max}] (got {value})"),
        other => other.to_string(),
    }
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub physics: PhysicsArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub physics: PhysicsArgs,
    /// Comma-separated damping rates for the grid.
    #[arg(allow_negative_numbers = true, long, value_delimiter = ',', required = true)]
    pub grid_gamma: Vec<f64>,
    /// Comma-separated mixing angles for the grid.
    #[arg(allow_negative_numbers = true, long, value_delimiter = ',', required = true)]
    pub grid_theta: Vec<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OptimizeArgs {
    /// Largest cycle index of the table (rows for n = 0..=N).
    #[arg(long = "n", default_value_t = 6)]
    pub max_n: usize,
    /// Initial target polarization, in [0, 1] (must not exceed the resets).
    #[arg(allow_negative_numbers = true, long, default_value_t = 0.0)]
    pub eps1: f64,
    /// Initial polarization of the first reset qubit, in [0, 1].
    #[arg(allow_negative_numbers = true, long, default_value_t = 0.6)]
    pub eps2: f64,
    /// Initial polarization of the second reset qubit, in [0, 1].
    #[arg(allow_negative_numbers = true, long, default_value_t = 0.6)]
    pub eps3: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    /// Comma-separated damping rates for the audit grid.
    #[arg(allow_negative_numbers = true, long, value_delimiter = ',', default_values_t = vec![0.0, 1e-4, 0.01, 0.1])]
    pub grid_gamma: Vec<f64>,
    /// Comma-separated mixing angles for the audit grid. Defaults to
    /// {0, pi/6, pi/3.4, pi/3, pi/2}.
    #[arg(allow_negative_numbers = true, long, value_delimiter = ',', default_values_t = default_audit_thetas())]
    pub grid_theta: Vec<f64>,
    /// Initial target polarization.
    #[arg(allow_negative_numbers = true, long, default_value_t = 0.0)]
    pub eps1: f64,
    /// Initial polarization of the first reset qubit.
    #[arg(allow_negative_numbers = true, long, default_value_t = 0.6)]
    pub eps2: f64,
    /// Initial polarization of the second reset qubit.
    #[arg(allow_negative_numbers = true, long, default_value_t = 0.6)]
    pub eps3: f64,
    /// Audit every cycle index 0..=N instead of the default sparse set.
    #[arg(long = "n")]
    pub max_n: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn default_audit_thetas() -> Vec<f64> {
    use std::f64::consts::PI;
    vec![0.0, PI / 6.0, PI / 3.4, PI / 3.0, PI / 2.0]
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Input series file (preamble of key=value lines, then n,eps1,sigma_eps1).
    #[arg(long, required = true)]
    pub data: std::path::PathBuf,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Parse an argv list into a validated command. Used by main and by tests.
pub fn parse_args<I, T>(argv: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(argv)
}
