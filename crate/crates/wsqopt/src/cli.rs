//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use wsqopt_core::problem::{complete_graph, gbm_portfolio, random_graph, GbmConfig};
use wsqopt_core::sim::DEFAULT_MAX_QUBITS;

use crate::error::{CliError, CliResult};
use crate::experiments::{self, DiffusionSettings, SpeedKind};
use crate::formats::{parse_instance, write_graph, PortfolioFile};
use crate::solve::{self, Method, SolveParams, WarmMode};

/// Environment variable overriding the statevector qubit cap.
pub const MAX_QUBITS_VAR: &str = "WSQOPT_MAX_QUBITS";

#[derive(Debug, Parser)]
#[command(name = "wsqopt", version, about = "Warm-started QAOA, relaxations and recursive solvers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a random instance.
    Generate(GenerateArgs),
    /// Solve one instance and write a JSON result.
    Solve(SolveArgs),
    /// Run a recipe over an ensemble and write CSV.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenerateKind {
    GraphEr,
    GraphComplete,
    Portfolio,
}

#[derive(Debug, Args, Serialize)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub kind: GenerateKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Edge probability of `graph-er`.
    #[arg(long, default_value_t = 0.5)]
    pub p_edge: f64,
    /// Weights drawn uniformly for `graph-er` edges.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub weights: Vec<f64>,
    /// Integer weight range of `graph-complete`.
    #[arg(long, default_value_t = -10, allow_hyphen_values = true)]
    pub lo: i64,
    #[arg(long, default_value_t = 10, allow_hyphen_values = true)]
    pub hi: i64,
    #[arg(long, default_value_t = 2.0)]
    pub q: f64,
    #[arg(long, default_value_t = 3)]
    pub budget: usize,
    #[arg(long, default_value_t = 3.0)]
    pub lambda: f64,
    #[arg(long, default_value_t = 250)]
    pub days: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct SolveArgs {
    #[arg(value_enum)]
    pub method: Method,
    /// Graph edge list or portfolio JSON.
    #[arg(long)]
    pub instance: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// QAOA depth.
    #[arg(long, visible_alias = "depth", default_value_t = 1)]
    pub p: usize,
    #[arg(long, default_value_t = 0.25)]
    pub epsilon: f64,
    /// Recursion stops at this many nodes; default `n/2`.
    #[arg(long)]
    pub n_stop: Option<usize>,
    /// GW roundings drawn (`N`).
    #[arg(long, default_value_t = 10)]
    pub gw_samples: usize,
    /// Best GW cuts retained (`M`).
    #[arg(long, default_value_t = 5)]
    pub gw_keep: usize,
    /// Grid points per axis for seeding the first layer.
    #[arg(long, default_value_t = 24)]
    pub grid: usize,
    /// Random starts instead of grid seeding.
    #[arg(long)]
    pub multistart: Option<usize>,
    /// Warm start of `ws-qaoa`.
    #[arg(long, value_enum)]
    pub mode: Option<WarmMode>,
    /// JSON-lines file receiving one record per RQAOA iteration.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Recipe {
    Fig2,
    Fig4,
    Fig6,
    Fig7,
    Prop2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpeedArg {
    Krivine,
    Poly,
}

#[derive(Debug, Args, Serialize)]
pub struct ExperimentArgs {
    #[arg(value_enum)]
    pub recipe: Recipe,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Problem size (assets, nodes); vector dimension for `prop2`.
    #[arg(long)]
    pub n: Option<usize>,
    /// Instances (vector pairs for `prop2`).
    #[arg(long)]
    pub instances: Option<usize>,
    #[arg(long, visible_alias = "depth")]
    pub p: Option<usize>,
    /// One value, or the sweep list of `fig4`.
    #[arg(long, value_delimiter = ',')]
    pub epsilon: Option<Vec<f64>>,
    #[arg(long)]
    pub n_stop: Option<usize>,
    /// One value, or the list of sample counts of `fig7`.
    #[arg(long, value_delimiter = ',')]
    pub gw_samples: Option<Vec<usize>>,
    #[arg(long)]
    pub gw_keep: Option<usize>,
    #[arg(long)]
    pub grid: Option<usize>,
    #[arg(long)]
    pub multistart: Option<usize>,
    /// Speed function of `prop2`.
    #[arg(long, value_enum)]
    pub mode: Option<SpeedArg>,
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long)]
    pub trajectories: Option<usize>,
    #[arg(long)]
    pub dt: Option<f64>,
}

/// Qubit cap from the environment, or the default.
pub fn max_qubits() -> CliResult<usize> {
    match std::env::var(MAX_QUBITS_VAR) {
        Err(_) => Ok(DEFAULT_MAX_QUBITS),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&q| (1..=30).contains(&q))
            .ok_or_else(|| CliError::config(format!("{MAX_QUBITS_VAR} must be an integer in 1..=30"))),
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn generate(a: &GenerateArgs) -> CliResult<()> {
    let text = match a.kind {
        GenerateKind::GraphEr => write_graph(&random_graph(a.n, a.p_edge, &a.weights, a.seed).map_err(config)?),
        GenerateKind::GraphComplete => write_graph(&complete_graph(a.n, a.lo, a.hi, a.seed).map_err(config)?),
        GenerateKind::Portfolio => {
            let cfg = GbmConfig { n_days: a.days, ..GbmConfig::new(a.n, a.seed) };
            let p = gbm_portfolio(&cfg, a.q, a.budget, a.lambda).map_err(config)?;
            let mut s = serde_json::to_string_pretty(&PortfolioFile::from_instance(&p, Some(a.seed)))?;
            s.push('\n');
            s
        }
    };
    emit(a.out.as_ref(), &text)
}

fn config(e: wsqopt_core::Error) -> CliError {
    CliError::Config(e.to_string())
}

fn solve_cmd(a: &SolveArgs) -> CliResult<()> {
    let text = fs::read_to_string(&a.instance)?;
    let instance = parse_instance(&text)?;
    if !(0.0..=0.5).contains(&a.epsilon) {
        return Err(CliError::config("--epsilon must lie in [0, 0.5]"));
    }
    if a.p == 0 {
        return Err(CliError::config("--p must be at least 1"));
    }
    let params = SolveParams {
        seed: a.seed,
        p: a.p,
        epsilon: a.epsilon,
        n_stop: a.n_stop,
        gw_samples: a.gw_samples,
        gw_keep: a.gw_keep,
        grid: a.grid,
        multistart: a.multistart,
        mode: a.mode,
        max_qubits: max_qubits()?,
    };
    let out = solve::solve(a.method, &instance, &params)?;
    let mut result = out.result;
    result["instance"] = json!(a.instance.display().to_string());
    if let (Some(path), Some(lines)) = (&a.trace, &out.trace) {
        let mut body = String::new();
        for l in lines {
            body.push_str(&serde_json::to_string(l)?);
            body.push('\n');
        }
        fs::write(path, body)?;
    }
    let mut s = serde_json::to_string_pretty(&result)?;
    s.push('\n');
    emit(a.out.as_ref(), &s)
}

fn single<T: Copy>(list: &Option<Vec<T>>, name: &str) -> CliResult<Option<T>> {
    match list.as_deref() {
        None => Ok(None),
        Some([v]) => Ok(Some(*v)),
        Some(_) => Err(CliError::config(format!("--{name} takes a single value for this recipe"))),
    }
}

fn experiment(a: &ExperimentArgs) -> CliResult<()> {
    let csv = match a.recipe {
        Recipe::Fig2 => {
            let d = experiments::Fig2Config::default();
            let cfg = experiments::Fig2Config {
                instances: a.instances.unwrap_or(d.instances),
                n: a.n.unwrap_or(d.n),
                depth: a.p.unwrap_or(d.depth),
                multistart: a.multistart.unwrap_or(d.multistart),
                epsilon: single(&a.epsilon, "epsilon")?.unwrap_or(d.epsilon),
                max_qubits: max_qubits()?,
                seed: a.seed,
                ..d
            };
            experiments::to_csv(&experiments::fig2(&cfg)?)?
        }
        Recipe::Fig4 => {
            let d = experiments::Fig4Config::default();
            let cfg = experiments::Fig4Config {
                instances: a.instances.unwrap_or(d.instances),
                n: a.n.unwrap_or(d.n),
                epsilons: a.epsilon.clone().unwrap_or(d.epsilons),
                gw_samples: single(&a.gw_samples, "gw-samples")?.unwrap_or(d.gw_samples),
                grid: a.grid.unwrap_or(d.grid),
                max_qubits: max_qubits()?,
                seed: a.seed,
            };
            if cfg.epsilons.iter().any(|e| !(0.0..=0.5).contains(e)) {
                return Err(CliError::config("--epsilon values must lie in [0, 0.5]"));
            }
            experiments::to_csv(&experiments::fig4(&cfg)?)?
        }
        Recipe::Fig6 => {
            let d = experiments::Fig6Config::default();
            let n = a.n.unwrap_or(d.n);
            let cfg = experiments::Fig6Config {
                instances: a.instances.unwrap_or(d.instances),
                n,
                n_stop: a.n_stop.unwrap_or((n / 2).max(1)),
                gw_samples: single(&a.gw_samples, "gw-samples")?.unwrap_or(d.gw_samples),
                gw_keep: a.gw_keep.unwrap_or(d.gw_keep),
                epsilon: single(&a.epsilon, "epsilon")?.unwrap_or(d.epsilon),
                grid: a.grid.unwrap_or(d.grid),
                seed: a.seed,
            };
            if cfg.n_stop == 0 || cfg.gw_keep == 0 || cfg.gw_samples < cfg.gw_keep {
                return Err(CliError::config("need n-stop ≥ 1 and gw-samples ≥ gw-keep ≥ 1"));
            }
            experiments::to_csv(&experiments::fig6(&cfg)?)?
        }
        Recipe::Fig7 => {
            let d = experiments::Fig7Config::default();
            let cfg = experiments::Fig7Config {
                instances: a.instances.unwrap_or(d.instances),
                n: a.n.unwrap_or(d.n),
                samples: a.gw_samples.clone().unwrap_or(d.samples),
                seed: a.seed,
            };
            if cfg.n > solve::REFERENCE_LIMIT {
                return Err(CliError::config("fig7 needs brute-force references (n ≤ 20)"));
            }
            experiments::to_csv(&experiments::fig7(&cfg)?)?
        }
        Recipe::Prop2 => {
            let d = experiments::Prop2Config::default();
            let speed = match a.mode.unwrap_or(SpeedArg::Krivine) {
                SpeedArg::Krivine => SpeedKind::Krivine,
                SpeedArg::Poly => SpeedKind::Polynomial { alpha: a.alpha },
            };
            let cfg = experiments::Prop2Config {
                pairs: a.instances.unwrap_or(d.pairs),
                dim: a.n.unwrap_or(d.dim),
                speed,
                diffusion: DiffusionSettings {
                    dt: a.dt.unwrap_or(d.diffusion.dt),
                    trajectories: a.trajectories.unwrap_or(d.diffusion.trajectories),
                    ..d.diffusion
                },
                seed: a.seed,
            };
            experiments::to_csv(&experiments::prop2(&cfg)?)?
        }
    };
    emit(a.out.as_ref(), &csv)
}

pub fn run(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::Generate(a) => generate(a),
        Command::Solve(a) => solve_cmd(a),
        Command::Experiment(a) => experiment(a),
    }
}

/// Parse, run and map the outcome to an exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("wsqopt: {e}");
            e.exit_code()
        }
    }
}
