use alloc::vec::Vec;

use super::correlation::mixture;
use super::{eliminate, CorrelationMatrix, EliminationRecord};
use crate::problem::{brute_force_maxcut, CutAssignment, WeightedGraph};
use crate::relaxation::{gw_best_cuts, SdpOptions};
use crate::sim::correlator::correlator_with_weights;
use crate::sim::{MixerKind, MixerSpec};
use crate::variational::{grid_search, minimize, GridSpec, OptimizerConfig};
use crate::{seed, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RqaoaMode {
    /// One depth-one QAOA from `|+⟩^n` per iteration.
    Standard,
    /// Rounded warm starts from the best GW cuts, correlators averaged.
    WarmStart,
    /// Correlators taken directly from the best GW cuts; no circuit.
    ClassicalGw,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RqaoaConfig {
    pub mode: RqaoaMode,
    /// Recursion stops once at most this many nodes remain.
    pub n_stop: usize,
    /// Hyperplane roundings drawn per iteration (`N`).
    pub gw_samples: usize,
    /// Distinct best cuts retained per iteration (`M`).
    pub gw_keep: usize,
    pub epsilon: f64,
    pub grid: GridSpec,
    pub optimizer: OptimizerConfig,
    pub sdp: SdpOptions,
    /// Eliminate along the first edge instead of failing when every
    /// correlator is exactly zero.
    pub allow_ambiguous: bool,
}

impl RqaoaConfig {
    pub fn new(mode: RqaoaMode, n_stop: usize) -> Self {
        Self {
            mode,
            n_stop,
            gw_samples: 10,
            gw_keep: 5,
            epsilon: 0.25,
            grid: GridSpec::default(),
            optimizer: OptimizerConfig::default(),
            sdp: SdpOptions::default(),
            allow_ambiguous: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_stop == 0 {
            return Err(Error::invalid("n_stop must be at least 1"));
        }
        if self.mode != RqaoaMode::Standard && (self.gw_keep == 0 || self.gw_samples < self.gw_keep) {
            return Err(Error::invalid("need gw_samples ≥ gw_keep ≥ 1"));
        }
        if !(0.0..=0.5).contains(&self.epsilon) {
            return Err(Error::invalid("epsilon must lie in [0, 0.5]"));
        }
        self.grid.validate()
    }
}

/// One recursion step; node ids are original ids.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationTrace {
    pub iter: usize,
    /// Nodes before the step.
    pub n: usize,
    /// `(kept, eliminated)`.
    pub pair: (usize, usize),
    pub sign: i8,
    pub correlator: f64,
    pub gw_best_value: Option<f64>,
    /// Optimized `(β, γ)` per branch; empty in the classical mode.
    pub angles: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RqaoaOutcome {
    pub cut: CutAssignment,
    /// Cut value on the input graph.
    pub value: f64,
    pub records: Vec<EliminationRecord>,
    pub trace: Vec<IterationTrace>,
    /// Exact optimum of the final reduced graph.
    pub reduced_value: f64,
    /// Sum of the reduction offsets; `value = reduced_value + offset_total`.
    pub offset_total: f64,
}

/// Grid seed plus local refinement of `Σ ω_ij ⟨Z_i Z_j⟩`, which is the
/// depth-one MAXCUT energy up to an affine map.
fn optimize_depth1(g: &WeightedGraph, mixer: &MixerSpec, cfg: &RqaoaConfig) -> Result<(f64, f64, CorrelationMatrix)> {
    let w = g.weight_matrix();
    let energy = |beta: f64, gamma: f64| -> f64 {
        g.edges().iter().map(|e| e.w * correlator_with_weights(&w, mixer, beta, gamma, e.i, e.j)).sum()
    };
    let start = grid_search(energy, &cfg.grid)?;
    let m = minimize(|x| energy(x[0], x[1]), &[start.beta, start.gamma], &cfg.optimizer);
    let (beta, gamma) = (m.x[0], m.x[1]);
    let corr = CorrelationMatrix::from_edges(g, |i, j| correlator_with_weights(&w, mixer, beta, gamma, i, j));
    Ok((beta, gamma, corr))
}

struct Step {
    corr: CorrelationMatrix,
    gw_best_value: Option<f64>,
    angles: Vec<(f64, f64)>,
}

fn correlations(g: &WeightedGraph, cfg: &RqaoaConfig, seed: u64, iter: usize) -> Result<Step> {
    if cfg.mode == RqaoaMode::Standard {
        let (b, gm, corr) = optimize_depth1(g, &MixerSpec::standard(g.n()), cfg)?;
        return Ok(Step { corr, gw_best_value: None, angles: alloc::vec![(b, gm)] });
    }
    let gw_seed = seed::derive(seed, "rqaoa-gw", &[iter as u64]);
    let (cuts, _) = gw_best_cuts(g, cfg.gw_samples, cfg.gw_keep, cfg.sdp, gw_seed)?;
    let gw_best_value = cuts.first().map(|c| c.value);
    let mut runs = Vec::with_capacity(cuts.len());
    let mut angles = Vec::new();
    for scored in &cuts {
        if cfg.mode == RqaoaMode::ClassicalGw {
            runs.push(CorrelationMatrix::from_cut(g, &scored.cut)?);
            continue;
        }
        let c: Vec<f64> = scored.cut.bits().iter().map(|&b| f64::from(u8::from(b))).collect();
        let mixer = MixerSpec::new(MixerKind::WarmStartRounded, g.n(), Some(&c), cfg.epsilon)?;
        let (b, gm, corr) = optimize_depth1(g, &mixer, cfg)?;
        angles.push((b, gm));
        runs.push(corr);
    }
    Ok(Step { corr: mixture(runs)?, gw_best_value, angles })
}

/// Eliminate one node per iteration until `n_stop` nodes remain, solve the
/// remainder exactly and back-substitute. Randomness enters only through
/// the GW presolve of iteration `t`, seeded by `(seed, t)`; the circuit
/// branches are deterministic.
pub fn run_rqaoa(g: &WeightedGraph, cfg: &RqaoaConfig, seed: u64) -> Result<RqaoaOutcome> {
    cfg.validate()?;
    let n = g.n();
    if n == 0 {
        return Err(Error::Empty("graph"));
    }
    let mut graph = g.clone();
    let mut labels: Vec<usize> = (0..n).collect();
    let mut records = Vec::new();
    let mut trace = Vec::new();
    let mut offset_total = 0.0;
    while graph.n() > cfg.n_stop {
        let iter = records.len();
        let step = correlations(&graph, cfg, seed, iter)?;
        let el = eliminate(&graph, &step.corr, cfg.allow_ambiguous)?;
        let record = EliminationRecord { eliminated: labels[el.eliminated], kept: labels[el.kept], sign: el.sign };
        trace.push(IterationTrace {
            iter,
            n: graph.n(),
            pair: (record.kept, record.eliminated),
            sign: el.sign,
            correlator: el.correlator,
            gw_best_value: step.gw_best_value,
            angles: step.angles,
        });
        records.push(record);
        labels.remove(el.eliminated);
        offset_total += el.offset;
        graph = el.graph;
    }

    let (reduced, reduced_value) = brute_force_maxcut(&graph)?;
    let mut z = alloc::vec![0i8; n];
    for (&label, &s) in labels.iter().zip(reduced.spins()) {
        z[label] = s;
    }
    for r in records.iter().rev() {
        z[r.eliminated] = r.sign * z[r.kept];
    }
    let value = g.cut_value(&z)?;
    Ok(RqaoaOutcome { cut: CutAssignment::new(z)?.canonical(), value, records, trace, reduced_value, offset_total })
}

/// The recursion driven by the mean correlations of the best GW cuts.
pub fn run_classical_recursive_gw(g: &WeightedGraph, cfg: &RqaoaConfig, seed: u64) -> Result<RqaoaOutcome> {
    let cfg = RqaoaConfig { mode: RqaoaMode::ClassicalGw, ..cfg.clone() };
    run_rqaoa(g, &cfg, seed)
}
