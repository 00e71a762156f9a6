//! Desk-scale experiment recipes. Each recipe returns plain rows; cells
//! (instances or pairs) run on the rayon pool and rows come back in cell
//! order, so output is independent of scheduling.

use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;
use wsqopt_core::diffusion::{correlation_report, simulate_signs, DiffusionConfig, SpeedFunction};
use wsqopt_core::problem::{
    brute_force, brute_force_maxcut, complete_graph, gbm_portfolio, maxcut_to_ising, portfolio_qubo, qubo_to_ising,
    GbmConfig, WeightedGraph,
};
use wsqopt_core::relaxation::{gw_best_cuts, gw_samples, solve_maxcut_sdp, solve_qp, GramFactor, QpOptions, SdpOptions};
use wsqopt_core::rqaoa::{run_rqaoa, RqaoaConfig, RqaoaMode};
use wsqopt_core::seed;
use wsqopt_core::sim::{MixerKind, MixerSpec};
use wsqopt_core::variational::{run_qaoa, run_qaoa_starts, GridSpec, OptimizerConfig, Seeding, Target};

use crate::error::CliResult;
use crate::solve::cut_to_c_star;

/// Seed of cell `index` of a recipe.
pub fn cell_seed(master: u64, recipe: &str, index: usize) -> u64 {
    seed::derive(master, recipe, &[index as u64])
}

fn run_cells<T: Send>(count: usize, f: impl Fn(usize) -> CliResult<Vec<T>> + Sync + Send) -> CliResult<Vec<T>> {
    let cells: Vec<Vec<T>> = (0..count).into_par_iter().map(f).collect::<CliResult<_>>()?;
    Ok(cells.into_iter().flatten().collect())
}

fn median(mut xs: Vec<f64>) -> f64 {
    assert!(!xs.is_empty(), "median of nothing");
    xs.sort_by(f64::total_cmp);
    let m = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[m]
    } else {
        0.5 * (xs[m - 1] + xs[m])
    }
}

pub fn median_of(xs: impl IntoIterator<Item = f64>) -> f64 {
    median(xs.into_iter().collect())
}

// ---------------------------------------------------------------- fig2

#[derive(Debug, Clone, Serialize)]
pub struct Fig2Config {
    pub instances: usize,
    pub n: usize,
    pub q: f64,
    pub budget: usize,
    pub lambda: f64,
    pub depth: usize,
    pub multistart: usize,
    /// Regularization of the continuous warm start.
    pub epsilon: f64,
    pub max_qubits: usize,
    pub seed: u64,
}

impl Default for Fig2Config {
    fn default() -> Self {
        Self {
            instances: 25,
            n: 6,
            q: 2.0,
            budget: 3,
            lambda: 3.0,
            depth: 1,
            multistart: 10,
            epsilon: 0.0,
            max_qubits: wsqopt_core::sim::DEFAULT_MAX_QUBITS,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fig2Row {
    pub instance: usize,
    pub method: &'static str,
    pub depth: usize,
    pub start: usize,
    pub energy: f64,
    pub ground_energy: f64,
    pub p_opt: f64,
    /// Lowest energy among the starts of this method on this instance.
    pub best: bool,
}

/// Standard and continuously warm-started QAOA on GBM portfolios, from the
/// same random starts.
pub fn fig2(cfg: &Fig2Config) -> CliResult<Vec<Fig2Row>> {
    run_cells(cfg.instances, |inst| {
        let s = cell_seed(cfg.seed, "fig2", inst);
        let portfolio = gbm_portfolio(&GbmConfig::new(cfg.n, s), cfg.q, cfg.budget, cfg.lambda)?;
        let qubo = portfolio_qubo(&portfolio);
        let ising = qubo_to_ising(&qubo);
        let ground = brute_force(&ising)?;
        let target = Target::Index(ground.z.index());
        let c_star = solve_qp(&qubo, QpOptions::default())?.c_star;
        let seeding = Seeding::Random { starts: cfg.multistart, seed: seed::derive(s, "fig2-starts", &[]) };
        let mixers = [
            ("standard", MixerSpec::standard(cfg.n)),
            ("warm", MixerSpec::new(MixerKind::WarmStart, cfg.n, Some(&c_star), cfg.epsilon)?),
        ];
        let mut rows = Vec::new();
        for (method, mixer) in mixers {
            let runs = run_qaoa_starts(&ising, mixer, cfg.depth, &seeding, &OptimizerConfig::default(), Some(&target), cfg.max_qubits)?;
            let best = (0..runs.len()).fold(0, |b, k| if runs[k].energy < runs[b].energy { k } else { b });
            rows.extend(runs.iter().enumerate().map(|(k, r)| Fig2Row {
                instance: inst,
                method,
                depth: cfg.depth,
                start: k,
                energy: r.energy,
                ground_energy: ground.energy,
                p_opt: r.p_target.expect("target set"),
                best: k == best,
            }));
        }
        Ok(rows)
    })
}

/// Per instance, `P(optimal)` of the best warm run over that of the best
/// standard run.
pub fn fig2_probability_ratios(rows: &[Fig2Row]) -> Vec<f64> {
    let instances = rows.iter().map(|r| r.instance).max().map_or(0, |m| m + 1);
    (0..instances)
        .map(|i| {
            let p = |m: &str| rows.iter().find(|r| r.instance == i && r.method == m && r.best).map_or(0.0, |r| r.p_opt);
            p("warm") / p("standard")
        })
        .collect()
}

// ---------------------------------------------------------------- fig4

#[derive(Debug, Clone, Serialize)]
pub struct Fig4Config {
    pub instances: usize,
    pub n: usize,
    pub epsilons: Vec<f64>,
    pub gw_samples: usize,
    pub grid: usize,
    pub max_qubits: usize,
    pub seed: u64,
}

impl Default for Fig4Config {
    fn default() -> Self {
        Self {
            instances: 5,
            n: 12,
            epsilons: vec![0.0, 0.1, 0.25, 0.4, 0.5],
            gw_samples: 10,
            grid: 24,
            max_qubits: wsqopt_core::sim::DEFAULT_MAX_QUBITS,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fig4Row {
    pub instance: usize,
    pub epsilon: f64,
    pub energy: f64,
    /// Expected cut of the optimized state over the maximum cut.
    pub energy_ratio: f64,
    pub warm_start_ratio: f64,
    pub p_opt: f64,
    pub beta: f64,
    pub gamma: f64,
}

pub fn complete_instance(n: usize, s: u64) -> CliResult<WeightedGraph> {
    Ok(complete_graph(n, -10, 10, s)?)
}

/// Depth-one rounded WS-QAOA from the best GW cut, swept over `ε`.
pub fn fig4(cfg: &Fig4Config) -> CliResult<Vec<Fig4Row>> {
    let grid = crate::solve::default_grid(cfg.grid)?;
    run_cells(cfg.instances, |inst| {
        let s = cell_seed(cfg.seed, "fig4", inst);
        let g = complete_instance(cfg.n, s)?;
        let (opt_cut, opt) = brute_force_maxcut(&g)?;
        let (cuts, _) = gw_best_cuts(&g, cfg.gw_samples, 1, SdpOptions::default(), s)?;
        let c = cut_to_c_star(&cuts[0].cut);
        let ising = maxcut_to_ising(&g);
        let target = Target::Cut(opt_cut);
        cfg.epsilons
            .iter()
            .map(|&eps| {
                let mixer = MixerSpec::new(MixerKind::WarmStartRounded, cfg.n, Some(&c), eps)?;
                let r = run_qaoa(&ising, mixer, 1, &Seeding::Grid(grid), &OptimizerConfig::default(), Some(&target), cfg.max_qubits)?;
                Ok(Fig4Row {
                    instance: inst,
                    epsilon: eps,
                    energy: r.energy,
                    energy_ratio: -r.energy / opt,
                    warm_start_ratio: cuts[0].value / opt,
                    p_opt: r.p_target.expect("target set"),
                    beta: r.params.betas[0],
                    gamma: r.params.gammas[0],
                })
            })
            .collect()
    })
}

// ---------------------------------------------------------------- fig6

#[derive(Debug, Clone, Serialize)]
pub struct Fig6Config {
    pub instances: usize,
    pub n: usize,
    pub n_stop: usize,
    pub gw_samples: usize,
    pub gw_keep: usize,
    pub epsilon: f64,
    pub grid: usize,
    pub seed: u64,
}

impl Default for Fig6Config {
    fn default() -> Self {
        Self { instances: 30, n: 12, n_stop: 6, gw_samples: 10, gw_keep: 5, epsilon: 0.25, grid: 24, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fig6Row {
    pub instance: usize,
    pub method: &'static str,
    pub value: f64,
    pub optimum: f64,
    pub ratio: f64,
    pub optimal: bool,
}

pub const FIG6_METHODS: [(&str, RqaoaMode); 3] =
    [("rqaoa", RqaoaMode::Standard), ("ws-rqaoa", RqaoaMode::WarmStart), ("classical-gw", RqaoaMode::ClassicalGw)];

/// Standard, warm-started and classical recursive solvers against brute force.
pub fn fig6(cfg: &Fig6Config) -> CliResult<Vec<Fig6Row>> {
    let grid: GridSpec = crate::solve::default_grid(cfg.grid)?;
    run_cells(cfg.instances, |inst| {
        let s = cell_seed(cfg.seed, "fig6", inst);
        let g = complete_instance(cfg.n, s)?;
        let (_, opt) = brute_force_maxcut(&g)?;
        FIG6_METHODS
            .iter()
            .map(|&(method, mode)| {
                let rc = RqaoaConfig {
                    gw_samples: cfg.gw_samples,
                    gw_keep: cfg.gw_keep,
                    epsilon: cfg.epsilon,
                    grid,
                    allow_ambiguous: true,
                    ..RqaoaConfig::new(mode, cfg.n_stop)
                };
                let out = run_rqaoa(&g, &rc, s)?;
                Ok(Fig6Row {
                    instance: inst,
                    method,
                    value: out.value,
                    optimum: opt,
                    ratio: out.value / opt,
                    optimal: (out.value - opt).abs() <= 1e-9 * opt.abs().max(1.0),
                })
            })
            .collect()
    })
}

// ---------------------------------------------------------------- fig7

#[derive(Debug, Clone, Serialize)]
pub struct Fig7Config {
    pub instances: usize,
    pub n: usize,
    /// Numbers of roundings `N`; each is a prefix of one sample stream.
    pub samples: Vec<usize>,
    pub seed: u64,
}

impl Default for Fig7Config {
    fn default() -> Self {
        Self { instances: 20, n: 12, samples: vec![1, 10, 100], seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fig7Row {
    pub instance: usize,
    pub samples: usize,
    pub best_ratio: f64,
    pub mean_ratio: f64,
    pub sdp_ratio: f64,
}

/// GW cut quality against brute force as a function of the number of
/// roundings.
pub fn fig7(cfg: &Fig7Config) -> CliResult<Vec<Fig7Row>> {
    let max_n = cfg.samples.iter().copied().max().unwrap_or(0);
    run_cells(cfg.instances, |inst| {
        let s = cell_seed(cfg.seed, "fig7", inst);
        let g = complete_instance(cfg.n, s)?;
        let (_, opt) = brute_force_maxcut(&g)?;
        let factor = solve_maxcut_sdp(&g, SdpOptions::default(), seed::derive(s, "gw-sdp", &[]))?.factor;
        let values: Vec<f64> = gw_samples(&factor, max_n, s)
            .iter()
            .map(|c| g.cut_value(c.spins()))
            .collect::<Result<_, _>>()?;
        Ok(cfg
            .samples
            .iter()
            .filter(|&&k| k > 0)
            .map(|&k| {
                let prefix = &values[..k];
                Fig7Row {
                    instance: inst,
                    samples: k,
                    best_ratio: prefix.iter().copied().fold(f64::NEG_INFINITY, f64::max) / opt,
                    mean_ratio: prefix.iter().sum::<f64>() / (k as f64 * opt),
                    sdp_ratio: factor.objective() / opt,
                }
            })
            .collect())
    })
}

// ---------------------------------------------------------------- prop2

#[derive(Debug, Clone, Serialize)]
pub struct Prop2Config {
    pub pairs: usize,
    pub dim: usize,
    pub speed: SpeedKind,
    pub diffusion: DiffusionSettings,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpeedKind {
    Krivine,
    Polynomial { alpha: f64 },
}

impl SpeedKind {
    pub fn speed(self) -> SpeedFunction {
        match self {
            SpeedKind::Krivine => SpeedFunction::Krivine,
            SpeedKind::Polynomial { alpha } => SpeedFunction::Polynomial(alpha),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct DiffusionSettings {
    pub dt: f64,
    pub absorb_tol: f64,
    pub max_steps: usize,
    pub trajectories: usize,
}

impl Default for DiffusionSettings {
    fn default() -> Self {
        let d = DiffusionConfig::default();
        Self { dt: d.dt, absorb_tol: d.absorb_tol, max_steps: d.max_steps, trajectories: d.trajectories }
    }
}

impl Default for Prop2Config {
    fn default() -> Self {
        Self { pairs: 10, dim: 8, speed: SpeedKind::Krivine, diffusion: DiffusionSettings::default(), seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Prop2Row {
    pub pair: usize,
    pub u_dot_v: f64,
    pub empirical: f64,
    pub predicted: f64,
    pub abs_err: f64,
    pub stderr: f64,
    pub truncated_frac: f64,
}

/// Two independent uniformly random unit vectors in `dim` dimensions.
pub fn random_pair(dim: usize, s: u64) -> CliResult<GramFactor> {
    let mut rng = seed::rng(s, "prop2-pair", &[]);
    let mut unit = || loop {
        let v: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(&mut rng)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-12 {
            break v.into_iter().map(|x| x / norm).collect::<Vec<f64>>();
        }
    };
    let rows = vec![unit(), unit()];
    let g = WeightedGraph::new(2, Vec::new())?;
    Ok(GramFactor::new(&g, rows)?)
}

/// Sign correlations of the sticky diffusion on random vector pairs.
pub fn prop2(cfg: &Prop2Config) -> CliResult<Vec<Prop2Row>> {
    run_cells(cfg.pairs, |pair| {
        let s = cell_seed(cfg.seed, "prop2", pair);
        let f = random_pair(cfg.dim, s)?;
        let d = cfg.diffusion;
        let dc = DiffusionConfig { dt: d.dt, absorb_tol: d.absorb_tol, max_steps: d.max_steps, trajectories: d.trajectories, seed: s };
        let signs = simulate_signs(&f, cfg.speed.speed(), &dc)?;
        let r = correlation_report(&signs, &f, &[(0, 1)])?[0];
        Ok(vec![Prop2Row {
            pair,
            u_dot_v: r.u_dot_v,
            empirical: r.empirical,
            predicted: r.predicted,
            abs_err: r.abs_err,
            stderr: r.stderr,
            truncated_frac: r.truncated_frac,
        }])
    })
}

/// CSV with a header row.
pub fn to_csv<T: Serialize>(rows: &[T]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| crate::error::CliError::Format(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
