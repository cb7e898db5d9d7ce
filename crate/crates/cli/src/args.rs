use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Environment variable consulted when `--digits` is not given.
pub const DIGITS_ENV: &str = "DILOGINT_DIGITS";
pub const DEFAULT_EVAL_DIGITS: u32 = 32;
pub const DEFAULT_VERIFY_DIGITS: u32 = 64;
pub const DEFAULT_PSLQ_DIGITS: u32 = 64;
pub const DEFAULT_NORM_BOUND: u64 = 100;

#[derive(Debug, Parser)]
#[command(
    name = "dilogint",
    version,
    about = "High-precision checks of the I7 dilogarithmic integral identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate Cl2, the Hurwitz zeta function or a Dirichlet L-series.
    Eval(EvalArgs),
    /// Compute I7 by tanh-sinh quadrature.
    Integrate(IntegrateArgs),
    /// Run identity checks and report digits of agreement.
    Verify(VerifyArgs),
    /// Search for an integer relation among constant expressions.
    Pslq(PslqArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(subcommand)]
    pub function: EvalFunction,
    /// Significant digits [default: 32]
    #[arg(long, global = true, env = DIGITS_ENV)]
    pub digits: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum EvalFunction {
    /// Cl2(theta)
    Cl2 {
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
    },
    /// zeta(s, a)
    Hurwitz {
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// L_d(s) for the Kronecker character of discriminant d
    Lseries {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
}

#[derive(Debug, Args)]
pub struct IntegrateArgs {
    /// Significant digits [default: 64]
    #[arg(long, env = DIGITS_ENV)]
    pub digits: Option<u32>,
    /// Maximum tanh-sinh refinement levels.
    #[arg(long, default_value_t = dilogint::quadrature::DEFAULT_MAX_LEVELS)]
    pub max_levels: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run every identity.
    #[arg(long, conflicts_with = "identity")]
    pub all: bool,
    /// Identity to run; may be repeated.
    #[arg(long, value_name = "ID", required_unless_present = "all")]
    pub identity: Vec<String>,
    /// Working digits [default: 64]
    #[arg(long, env = DIGITS_ENV)]
    pub digits: Option<u32>,
    /// Digits of agreement needed to pass [default: digits - 10]
    #[arg(long)]
    pub required: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Identities evaluated concurrently.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: u32,
    /// Maximum tanh-sinh refinement levels.
    #[arg(long, default_value_t = dilogint::quadrature::DEFAULT_MAX_LEVELS)]
    pub max_levels: u32,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PslqArgs {
    /// Constant expressions, e.g. `cl2(2*phi7)` or `7*sqrt(7)/4*L(-7,2)`.
    #[arg(required = true, num_args = 2.., allow_negative_numbers = true)]
    pub values: Vec<String>,
    /// Working digits [default: max(64, 20 * number of values)]
    #[arg(long, env = DIGITS_ENV)]
    pub digits: Option<u32>,
    /// Largest coefficient magnitude searched.
    #[arg(long, default_value_t = DEFAULT_NORM_BOUND)]
    pub norm_bound: u64,
}
