//! Single-instance solvers behind `wsqopt solve`.

use std::time::Instant;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};
use wsqopt_core::problem::{
    brute_force, brute_force_maxcut, maxcut_to_ising, portfolio_qubo, qubo_to_ising, CutAssignment, IsingModel,
    PortfolioInstance, WeightedGraph,
};
use wsqopt_core::relaxation::{gw_best_cuts, gw_samples, solve_maxcut_sdp, solve_qp, QpOptions, SdpOptions};
use wsqopt_core::rqaoa::{run_rqaoa, RqaoaConfig, RqaoaMode, RqaoaOutcome};
use wsqopt_core::sim::{MixerKind, MixerSpec};
use wsqopt_core::variational::{run_qaoa, GridSpec, OptimizerConfig, QaoaResult, Seeding, Target};

use crate::error::{CliError, CliResult};
use crate::formats::{GramFile, Instance, QaoaFile};

/// Exact references are computed up to this size.
pub const REFERENCE_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Qp,
    Sdp,
    Gw,
    Qaoa,
    WsQaoa,
    Rqaoa,
    WsRqaoa,
    ClassicalGw,
    Brute,
}

/// Source of `c*` for a warm-started circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WarmMode {
    /// Relaxed optimum, warm mixer.
    Continuous,
    /// Binary solution, rounded warm mixer.
    Rounded,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveParams {
    pub seed: u64,
    pub p: usize,
    pub epsilon: f64,
    pub n_stop: Option<usize>,
    pub gw_samples: usize,
    pub gw_keep: usize,
    pub grid: usize,
    pub multistart: Option<usize>,
    pub mode: Option<WarmMode>,
    pub max_qubits: usize,
}

impl SolveParams {
    pub fn seeding(&self) -> CliResult<Seeding> {
        match self.multistart {
            Some(0) => Err(CliError::config("--multistart must be positive")),
            Some(starts) => Ok(Seeding::Random { starts, seed: wsqopt_core::seed::derive(self.seed, "solve-starts", &[]) }),
            None => Ok(Seeding::Grid(default_grid(self.grid)?)),
        }
    }
}

pub fn default_grid(points: usize) -> CliResult<GridSpec> {
    if points < 2 {
        return Err(CliError::config("--grid needs at least 2 points"));
    }
    let pi = std::f64::consts::PI;
    Ok(GridSpec::half_open((0.0, pi), (0.0, 2.0 * pi), points, points))
}

/// Index of the basis state whose qubit `i` is `1` exactly where `z_i = -1`.
pub fn basis_index(z: &CutAssignment) -> usize {
    z.index()
}

/// `c*` of a binary warm start: `1` where `x_i = 1`.
pub fn cut_to_c_star(cut: &CutAssignment) -> Vec<f64> {
    cut.bits().iter().map(|&b| f64::from(u8::from(b))).collect()
}

fn bits_json(cut: &CutAssignment) -> Value {
    json!(cut.bits().iter().map(|&b| u8::from(b)).collect::<Vec<_>>())
}

fn most_likely(r: &QaoaResult) -> CutAssignment {
    let probs = r.state.probabilities();
    let mut best = 0;
    for (i, &p) in probs.iter().enumerate() {
        if p > probs[best] {
            best = i;
        }
    }
    CutAssignment::from_index(best, r.state.n())
}

struct Reference {
    assignment: CutAssignment,
    value: f64,
}

fn graph_reference(g: &WeightedGraph) -> CliResult<Option<Reference>> {
    if g.n() > REFERENCE_LIMIT {
        return Ok(None);
    }
    let (assignment, value) = brute_force_maxcut(g)?;
    Ok(Some(Reference { assignment, value }))
}

fn portfolio_reference(ising: &IsingModel) -> CliResult<Option<Reference>> {
    if ising.n() > REFERENCE_LIMIT {
        return Ok(None);
    }
    let gs = brute_force(ising)?;
    Ok(Some(Reference { assignment: gs.z, value: gs.energy }))
}

fn portfolio_ising(p: &PortfolioInstance) -> IsingModel {
    qubo_to_ising(&portfolio_qubo(p))
}

fn portfolio_value(p: &PortfolioInstance, cut: &CutAssignment) -> f64 {
    let x: Vec<f64> = cut_to_c_star(cut);
    p.objective(&x)
}

fn qaoa_json(r: &QaoaResult) -> Value {
    serde_json::to_value(QaoaFile::from(r)).expect("plain data")
}

fn rqaoa_mode(method: Method) -> RqaoaMode {
    match method {
        Method::WsRqaoa => RqaoaMode::WarmStart,
        Method::ClassicalGw => RqaoaMode::ClassicalGw,
        _ => RqaoaMode::Standard,
    }
}

pub fn rqaoa_config(mode: RqaoaMode, n: usize, params: &SolveParams) -> CliResult<RqaoaConfig> {
    let cfg = RqaoaConfig {
        gw_samples: params.gw_samples,
        gw_keep: params.gw_keep,
        epsilon: params.epsilon,
        grid: default_grid(params.grid)?,
        allow_ambiguous: true,
        ..RqaoaConfig::new(mode, params.n_stop.unwrap_or((n / 2).max(1)))
    };
    cfg.validate().map_err(|e| CliError::Config(e.to_string()))?;
    Ok(cfg)
}

/// Everything `solve` reports; `trace` holds RQAOA iterations when present.
pub struct SolveOutput {
    pub result: Value,
    pub trace: Option<Vec<Value>>,
}

pub fn trace_lines(out: &RqaoaOutcome) -> Vec<Value> {
    out.trace
        .iter()
        .map(|t| {
            json!({
                "iter": t.iter,
                "n": t.n,
                "chosen_pair": [t.pair.0, t.pair.1],
                "sign": t.sign,
                "correlator": t.correlator,
                "gw_best_value": t.gw_best_value,
            })
        })
        .collect()
}

pub fn solve(method: Method, instance: &Instance, params: &SolveParams) -> CliResult<SolveOutput> {
    let start = Instant::now();
    let mut fields = serde_json::Map::new();
    let mut trace = None;
    let (n, value, assignment, reference, maximize) = match instance {
        Instance::Graph(g) => {
            let reference = graph_reference(g)?;
            let (value, cut) = solve_graph(method, g, params, reference.as_ref(), &mut fields, &mut trace)?;
            (g.n(), value, cut, reference, true)
        }
        Instance::Portfolio(p) => {
            let ising = portfolio_ising(p);
            let reference = portfolio_reference(&ising)?;
            let (value, cut) = solve_portfolio(method, p, &ising, params, reference.as_ref(), &mut fields)?;
            (p.n(), value, cut, reference, false)
        }
    };
    fields.insert("method".into(), json!(method));
    fields.insert("seed".into(), json!(params.seed));
    fields.insert("config".into(), serde_json::to_value(params)?);
    fields.insert("n".into(), json!(n));
    fields.insert("objective".into(), json!(if maximize { "maximize" } else { "minimize" }));
    fields.insert("value".into(), json!(value));
    if let Some(cut) = &assignment {
        fields.insert("assignment".into(), bits_json(cut));
    }
    if let Some(r) = &reference {
        let ref_value = if maximize { r.value } else { portfolio_value_of(instance, &r.assignment) };
        fields.insert("brute_force_value".into(), json!(ref_value));
        fields.insert("brute_force_assignment".into(), bits_json(&r.assignment));
        if ref_value != 0.0 {
            fields.insert("ratio_to_brute_force".into(), json!(value / ref_value));
        }
        if matches!(method, Method::Rqaoa | Method::WsRqaoa | Method::ClassicalGw) {
            fields.insert("optimal".into(), json!((value - ref_value).abs() <= 1e-9 * ref_value.abs().max(1.0)));
        }
    }
    fields.insert("wall_time_s".into(), json!(start.elapsed().as_secs_f64()));
    Ok(SolveOutput { result: Value::Object(fields), trace })
}

fn portfolio_value_of(instance: &Instance, cut: &CutAssignment) -> f64 {
    match instance {
        Instance::Portfolio(p) => portfolio_value(p, cut),
        Instance::Graph(g) => g.cut_value(cut.spins()).unwrap_or(f64::NAN),
    }
}

type Solved = (f64, Option<CutAssignment>);

fn solve_graph(
    method: Method,
    g: &WeightedGraph,
    params: &SolveParams,
    reference: Option<&Reference>,
    fields: &mut serde_json::Map<String, Value>,
    trace: &mut Option<Vec<Value>>,
) -> CliResult<Solved> {
    let cut_value = |c: &CutAssignment| g.cut_value(c.spins()).map_err(CliError::from);
    let target = reference.map(|r| Target::Cut(r.assignment.clone()));
    match method {
        Method::Qp => Err(CliError::config("qp needs a convex (portfolio) instance")),
        Method::Brute => {
            let (cut, value) = brute_force_maxcut(g)?;
            Ok((value, Some(cut)))
        }
        Method::Sdp => {
            let out = solve_maxcut_sdp(g, SdpOptions::default(), params.seed)?;
            fields.insert("factor".into(), serde_json::to_value(GramFile::from(&out.factor))?);
            fields.insert("sweeps".into(), json!(out.sweeps));
            fields.insert("residual".into(), json!(out.residual));
            fields.insert("converged".into(), json!(out.converged));
            Ok((out.factor.objective(), None))
        }
        Method::Gw => {
            let (cuts, factor) = gw_best_cuts(g, params.gw_samples, 1, SdpOptions::default(), params.seed)?;
            let values = gw_samples(&factor, params.gw_samples, params.seed)
                .iter()
                .map(cut_value)
                .collect::<CliResult<Vec<f64>>>()?;
            fields.insert("sdp_value".into(), json!(factor.objective()));
            fields.insert("mean_value".into(), json!(values.iter().sum::<f64>() / values.len() as f64));
            Ok((cuts[0].value, Some(cuts[0].cut.clone())))
        }
        Method::Qaoa | Method::WsQaoa => {
            let mixer = if method == Method::Qaoa {
                MixerSpec::standard(g.n())
            } else {
                if params.mode == Some(WarmMode::Continuous) {
                    return Err(CliError::config("graphs only support the rounded warm start"));
                }
                let (cuts, _) = gw_best_cuts(g, params.gw_samples, 1, SdpOptions::default(), params.seed)?;
                fields.insert("warm_start_value".into(), json!(cuts[0].value));
                fields.insert("warm_start".into(), bits_json(&cuts[0].cut));
                MixerSpec::new(MixerKind::WarmStartRounded, g.n(), Some(&cut_to_c_star(&cuts[0].cut)), params.epsilon)?
            };
            let ising = maxcut_to_ising(g);
            let r = run_qaoa(&ising, mixer, params.p, &params.seeding()?, &OptimizerConfig::default(), target.as_ref(), params.max_qubits)?;
            fields.insert("qaoa".into(), qaoa_json(&r));
            fields.insert("expected_value".into(), json!(-r.energy));
            let cut = most_likely(&r).canonical();
            Ok((cut_value(&cut)?, Some(cut)))
        }
        Method::Rqaoa | Method::WsRqaoa | Method::ClassicalGw => {
            let cfg = rqaoa_config(rqaoa_mode(method), g.n(), params)?;
            let out = run_rqaoa(g, &cfg, params.seed)?;
            fields.insert("cut".into(), json!(out.cut.spins()));
            *trace = Some(trace_lines(&out));
            Ok((out.value, Some(out.cut)))
        }
    }
}

fn solve_portfolio(
    method: Method,
    p: &PortfolioInstance,
    ising: &IsingModel,
    params: &SolveParams,
    reference: Option<&Reference>,
    fields: &mut serde_json::Map<String, Value>,
) -> CliResult<Solved> {
    let target = reference.map(|r| Target::Index(basis_index(&r.assignment)));
    match method {
        Method::Sdp | Method::Gw | Method::Rqaoa | Method::WsRqaoa | Method::ClassicalGw => {
            Err(CliError::config("method needs a MAXCUT graph instance"))
        }
        Method::Brute => {
            let gs = brute_force(ising)?;
            Ok((portfolio_value(p, &gs.z), Some(gs.z)))
        }
        Method::Qp => {
            let relaxed = solve_qp(&portfolio_qubo(p), QpOptions::default())?;
            let rounded = CutAssignment::from_bits(&relaxed.c_star.iter().map(|&c| c >= 0.5).collect::<Vec<_>>());
            fields.insert("c_star".into(), json!(relaxed.c_star));
            fields.insert("relaxed_value".into(), json!(relaxed.objective));
            fields.insert("iterations".into(), json!(relaxed.iterations));
            fields.insert("kkt_residual".into(), json!(relaxed.kkt_residual));
            Ok((portfolio_value(p, &rounded), Some(rounded)))
        }
        Method::Qaoa | Method::WsQaoa => {
            let mixer = if method == Method::Qaoa {
                MixerSpec::standard(p.n())
            } else {
                let relaxed = solve_qp(&portfolio_qubo(p), QpOptions::default())?;
                fields.insert("c_star".into(), json!(relaxed.c_star));
                match params.mode.unwrap_or(WarmMode::Continuous) {
                    WarmMode::Continuous => MixerSpec::new(MixerKind::WarmStart, p.n(), Some(&relaxed.c_star), params.epsilon)?,
                    WarmMode::Rounded => {
                        let c: Vec<f64> = relaxed.c_star.iter().map(|&c| if c >= 0.5 { 1.0 } else { 0.0 }).collect();
                        MixerSpec::new(MixerKind::WarmStartRounded, p.n(), Some(&c), params.epsilon)?
                    }
                }
            };
            let r = run_qaoa(ising, mixer, params.p, &params.seeding()?, &OptimizerConfig::default(), target.as_ref(), params.max_qubits)?;
            fields.insert("qaoa".into(), qaoa_json(&r));
            let x = most_likely(&r);
            Ok((portfolio_value(p, &x), Some(x)))
        }
    }
}
