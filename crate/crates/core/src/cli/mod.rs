//! The `hypersym` command line: argument parsing, budgets, exit codes and
//! the JSON envelope. Each subcommand renders both a text and a JSON form.

mod commands;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use thiserror::Error;

use crate::abelian::{AbelianError, FactorConfig, RHO_SEED};
use crate::classify::{ClassifyError, DEFAULT_BUDGET};
use crate::diagact::DiagError;
use crate::polyforms::PolyError;

pub const BUDGET_ENV: &str = "HYPERSYM_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "hypersym", version, about = "Automorphism orders of smooth hypersurfaces")]
pub struct Cli {
    /// Cap on enumerated objects and on trial division during factoring.
    #[arg(long, global = true, env = BUDGET_ENV)]
    pub budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximal automorphism orders for degree d in N variables.
    Orders {
        #[arg(long)]
        d: u32,
        #[arg(long = "N")]
        n: u32,
        /// Also list every divisor of the maximal orders.
        #[arg(long)]
        expand: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Diagonal symmetry group of a simple type or of a support file.
    Group {
        #[arg(long)]
        d: u32,
        /// A simple type such as "T2+K4".
        #[arg(long = "type", conflicts_with = "support", required_unless_present = "support")]
        simple_type: Option<String>,
        /// JSON file with a list of exponent vectors, or {"d", "n_vars", "monomials"}.
        #[arg(long)]
        support: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Smoothness of x_1^{d-1} x_{i_1} + ... + x_k^{d-1} x_{i_k}.
    Smooth {
        #[arg(long)]
        d: u32,
        /// Comma-separated 1-based targets i_1,...,i_k.
        #[arg(long, value_delimiter = ',', required = true)]
        targets: Vec<usize>,
        /// Print a verified singular point when the form is singular.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// An explicit smooth simple form with an automorphism of a given order.
    Witness {
        #[arg(long)]
        d: u32,
        #[arg(long = "N")]
        n: u32,
        #[arg(long)]
        order: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Automorphism orders of smooth cubic fourfolds and their uniqueness.
    Cubic4 {
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Emit the JSON envelope instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    /// `--help` or `--version`: not a failure.
    #[error("{0}")]
    Info(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Budget(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Info(_) => 0,
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Verification(_) => 4,
        }
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::ComplexityRefusal { .. } => CliError::Budget(e.to_string()),
            ClassifyError::VerificationFailure(_) => CliError::Verification(e.to_string()),
            ClassifyError::Abelian(a) => a.into(),
            ClassifyError::Diag(d) => d.into(),
            ClassifyError::Poly(p) => p.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<AbelianError> for CliError {
    fn from(e: AbelianError) -> Self {
        match e {
            AbelianError::FactorizationLimit(_) => CliError::Budget(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::ComplexityRefusal { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<DiagError> for CliError {
    fn from(e: DiagError) -> Self {
        match e {
            DiagError::Internal(_) => CliError::Verification(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

/// Budgets in effect for one invocation.
#[derive(Clone, Debug)]
pub struct Limits {
    pub enumeration: u64,
    pub factor: FactorConfig,
}

impl Limits {
    fn new(budget: Option<u64>) -> Self {
        let mut factor = FactorConfig::default();
        if let Some(b) = budget {
            factor.trial_bound = b;
        }
        Limits { enumeration: budget.unwrap_or(DEFAULT_BUDGET), factor }
    }
}

/// What a subcommand produced.
pub struct Rendered {
    pub text: String,
    pub d: Option<u32>,
    pub n: Option<u64>,
    pub args: Value,
    pub result: Value,
}

/// Parses `args` (including the program name) and runs the command,
/// returning what should go to stdout.
pub fn run<I, T>(args: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => CliError::Info(e.to_string()),
        _ => CliError::Usage(e.to_string()),
    })?;
    let limits = Limits::new(cli.budget);
    let (name, json_out, rendered) = match &cli.command {
        Command::Orders { d, n, expand, out } => ("orders", out.json, commands::orders(*d, *n, *expand, &limits)?),
        Command::Group { d, simple_type, support, out } => {
            ("group", out.json, commands::group(*d, simple_type.as_deref(), support.as_deref(), &limits)?)
        }
        Command::Smooth { d, targets, witness, out } => ("smooth", out.json, commands::smooth(*d, targets, *witness)?),
        Command::Witness { d, n, order, out } => ("witness", out.json, commands::witness(*d, *n, *order, &limits)?),
        Command::Cubic4 { out } => ("cubic4", out.json, commands::cubic4(&limits)?),
    };
    if json_out {
        Ok(format!("{}\n", serde_json::to_string_pretty(&envelope(name, &cli, rendered)).expect("values serialize")))
    } else {
        Ok(rendered.text)
    }
}

fn envelope(name: &str, cli: &Cli, r: Rendered) -> Value {
    let mut args = r.args;
    if let (Some(b), Value::Object(map)) = (cli.budget, &mut args) {
        map.insert("budget".into(), json!(b.to_string()));
    }
    json!({
        "command": name,
        "args": args,
        "d": r.d,
        "N": r.n,
        "result": r.result,
        "version": env!("CARGO_PKG_VERSION"),
        "seed": format!("{RHO_SEED:#018x}"),
    })
}
