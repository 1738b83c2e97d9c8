mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use uqpath_core::cyclotomic::DEFAULT_PRIME_FLOOR;
use uqpath_core::quiver::DEFAULT_VERTEX_BUDGET;
use uqpath_core::CartanMatrix;

const DEFAULT_DIMENSION_BUDGET: u128 = 50_000_000;

#[derive(Parser, Debug)]
#[command(name = "uqpath", version, about = "Quiver presentations of half-quantum groups at roots of unity")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Named Cartan type: A<t>, D<t>, E6, E7, E8, or products such as A1xA1
    #[arg(long = "type", global = true, conflicts_with = "cartan_file")]
    cartan_type: Option<String>,

    /// JSON file holding {"type": "<name>"} or {"matrix": [[...]]}
    #[arg(long, global = true)]
    cartan_file: Option<PathBuf>,

    /// Order of the root of unity q
    #[arg(long, global = true)]
    n: Option<u32>,

    /// Scalar backend (default: modular for dimension counts, exact for identity checks)
    #[arg(long, global = true, value_enum)]
    backend: Option<Backend>,

    /// Lower bound for the modular prime
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME_FLOOR)]
    prime_floor: u64,

    /// Degree cap for quotient construction (default: one past the PBW top degree)
    #[arg(long, global = true)]
    max_degree: Option<usize>,

    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_BUDGET)]
    vertex_budget: u64,

    /// Refuse to build quotients whose PBW dimension exceeds this, unless --max-degree is given
    #[arg(long, global = true, default_value_t = DEFAULT_DIMENSION_BUDGET)]
    dimension_budget: u128,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case", tag = "name")]
pub enum Command {
    /// Cayley quiver: vertices, arrows, components
    Quiver {
        /// Also write the quiver in DOT format
        #[arg(long)]
        emit_graph: Option<PathBuf>,
    },
    /// Total dimension of the quotient
    Dim,
    /// Graded dimensions against the PBW series
    Graded,
    /// Blocks and their dimensions
    Blocks,
    /// Ext¹ between simples, read off the radical layer
    Ext,
    /// Representation type with its evidence
    Classify,
    /// Identity checks
    Verify {
        #[arg(long, value_delimiter = ',', default_value = "hopf,fourier,crossed,ideal,complement")]
        suite: Vec<Suite>,
    },
    /// Witness presentations for t = 2
    Witness,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Modular,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Hopf,
    Fourier,
    Crossed,
    Ideal,
    Complement,
}

#[derive(Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum CartanFile {
    Named { r#type: String },
    Matrix { matrix: Vec<Vec<i64>> },
}

/// Everything a report needs to be reproduced.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: Command,
    #[serde(rename = "type")]
    pub cartan_type: Option<String>,
    pub cartan_file: Option<PathBuf>,
    pub n: u32,
    pub backend: Backend,
    pub prime_floor: u64,
    pub max_degree: Option<usize>,
    pub vertex_budget: u64,
    pub dimension_budget: u128,
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub cartan: CartanMatrix,
}

fn load_cartan(cli: &Cli) -> anyhow::Result<(CartanMatrix, Option<String>)> {
    if let Some(name) = &cli.cartan_type {
        return Ok((CartanMatrix::named(name)?, Some(name.clone())));
    }
    let Some(path) = &cli.cartan_file else {
        bail!("one of --type or --cartan-file is required");
    };
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let parsed: CartanFile =
        serde_json::from_str(&text).with_context(|| format!("{}: expected {{\"type\": ...}} or {{\"matrix\": [[...]]}}", path.display()))?;
    let (c, name) = match parsed {
        CartanFile::Named { r#type } => (CartanMatrix::named(&r#type)?, Some(r#type)),
        CartanFile::Matrix { matrix } => (CartanMatrix::from_rows(matrix)?, None),
    };
    c.require_ade().with_context(|| format!("{}: rejected", path.display()))?;
    Ok((c, name))
}

fn config(cli: Cli) -> anyhow::Result<RunConfig> {
    let (cartan, name) = load_cartan(&cli)?;
    let Some(n) = cli.n else { bail!("--n is required") };
    if n == 0 {
        bail!("--n must be positive");
    }
    if cli.vertex_budget == 0 || cli.dimension_budget == 0 {
        bail!("budgets must be positive");
    }
    let identity_checks = matches!(cli.command, Command::Verify { .. } | Command::Classify | Command::Witness);
    let backend = cli.backend.unwrap_or(if identity_checks { Backend::Exact } else { Backend::Modular });
    Ok(RunConfig {
        command: cli.command,
        cartan_type: name,
        cartan_file: cli.cartan_file,
        n,
        backend,
        prime_floor: cli.prime_floor,
        max_degree: cli.max_degree,
        vertex_budget: cli.vertex_budget,
        dimension_budget: cli.dimension_budget,
        out: cli.out,
        cartan,
    })
}

fn init_workers() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var("UQPATH_WORKERS") {
        let threads: usize = v.parse().with_context(|| format!("UQPATH_WORKERS={v} is not a number"))?;
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    init_workers()?;
    let cfg = config(cli)?;
    let report = commands::run(&cfg)?;
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    match &cfg.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
