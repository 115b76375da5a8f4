use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::grid::Grid;

#[derive(Parser, Debug)]
#[command(name = "skewinfo", version, about = "Lower bounds on sums of metric-adjusted skew information")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Pauli observables on a qubit with Bloch vector (√3/2)(cos θ, sin θ, 0).
    Example1(Example1Args),
    /// I⊗σx, I⊗σy, I⊗σz on the two-qubit Gisin state over (λ, θ).
    Example2(Example2Args),
    /// Bit flip, phase flip and amplitude damping channels over θ.
    Example3(Example3Args),
    /// Bit flip, phase flip and a π/8 rotation, Kraus lists zero-padded.
    Example4(Example4Args),
    /// Bounds for a state and observables or channels read from JSON files.
    Custom(CustomArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Metric: wy, sld, wyd (with --alpha) or wyd:<alpha>.
    #[arg(long, default_value = "wyd")]
    pub metric: String,

    /// Exponent for the wyd metric [default: 1/3].
    #[arg(long)]
    pub alpha: Option<f64>,

    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Raise one bound above the sum before the self-check.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Args, Debug)]
pub struct Example1Args {
    #[command(flatten)]
    pub common: Common,

    #[arg(long, default_value = "0:pi:50")]
    pub theta_grid: Grid,

    /// Sweep the wyd exponent as well, e.g. 0.01:0.99:50.
    #[arg(long)]
    pub alpha_grid: Option<Grid>,
}

#[derive(Args, Debug)]
pub struct Example2Args {
    #[command(flatten)]
    pub common: Common,

    #[arg(long, default_value = "0:2pi:20")]
    pub theta_grid: Grid,

    #[arg(long, default_value = "0:1:20")]
    pub lambda_grid: Grid,
}

#[derive(Args, Debug)]
pub struct Example3Args {
    #[command(flatten)]
    pub common: Common,

    #[arg(long, default_value = "0:pi:100")]
    pub theta_grid: Grid,

    /// Channel noise parameter.
    #[arg(long, default_value_t = 0.7)]
    pub p: f64,

    /// Use K₂ = √p|1⟩⟨1| for amplitude damping instead of √p|0⟩⟨1|.
    #[arg(long)]
    pub paper_literal_ad_kraus: bool,
}

#[derive(Args, Debug)]
pub struct Example4Args {
    #[command(flatten)]
    pub common: Common,

    #[arg(long, default_value = "0:pi:100")]
    pub theta_grid: Grid,

    #[arg(long, default_value_t = 0.7)]
    pub p: f64,
}

#[derive(Args, Debug)]
pub struct CustomArgs {
    #[command(flatten)]
    pub common: Common,

    /// State matrix as JSON.
    #[arg(long)]
    pub state: PathBuf,

    #[arg(long, conflicts_with = "channels", required_unless_present = "channels")]
    pub observables: Option<PathBuf>,

    #[arg(long)]
    pub channels: Option<PathBuf>,
}
