use alloc::vec::Vec;
use core::f64::consts::PI;

use rand::Rng as _;

use super::{grid_search, minimize, GridSpec, OptimizerConfig, Termination};
use crate::problem::{CutAssignment, IsingModel};
use crate::seed;
use crate::sim::{probability_of, probability_of_cut, MixerSpec, QaoaCircuit, QaoaParams, StateVector};
use crate::{Error, Result};

/// Starting point(s) for the local search.
#[derive(Debug, Clone, PartialEq)]
pub enum Seeding {
    /// Grid over the first layer; deeper layers start at zero.
    Grid(GridSpec),
    /// `starts` independent points with `β ∈ [0, π)`, `γ ∈ [0, 2π)` per layer.
    Random { starts: usize, seed: u64 },
    Explicit(QaoaParams),
}

/// Bitstring whose sampling probability is reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    /// Exact basis-state index.
    Index(usize),
    /// A cut; `z` and `-z` both count.
    Cut(CutAssignment),
}

impl Target {
    pub fn probability(&self, s: &StateVector) -> f64 {
        match self {
            Target::Index(idx) => probability_of(s, *idx),
            Target::Cut(cut) => probability_of_cut(s, cut),
        }
    }
}

#[derive(Debug, Clone)]
pub struct QaoaResult {
    pub params: QaoaParams,
    /// Expectation of the cost in `state`.
    pub energy: f64,
    pub state: StateVector,
    pub evals: usize,
    pub termination: Termination,
    pub p_target: Option<f64>,
}

fn start_points(p: usize, seeding: &Seeding, circuit: &QaoaCircuit, evals: &mut usize) -> Result<Vec<Vec<f64>>> {
    match seeding {
        Seeding::Explicit(params) => {
            if params.depth() != p {
                return Err(Error::DimensionMismatch { expected: p, found: params.depth() });
            }
            Ok(alloc::vec![params.to_flat()])
        }
        Seeding::Grid(spec) => {
            let mut x = alloc::vec![0.0; 2 * p];
            let best = grid_search(
                |beta, gamma| {
                    *evals += 1;
                    x[0] = beta;
                    x[p] = gamma;
                    circuit.energy(&QaoaParams::from_flat(&x).expect("even length"))
                },
                spec,
            )?;
            let mut x0 = alloc::vec![0.0; 2 * p];
            x0[0] = best.beta;
            x0[p] = best.gamma;
            Ok(alloc::vec![x0])
        }
        Seeding::Random { starts, seed } => {
            if *starts == 0 {
                return Err(Error::invalid("random seeding needs at least one start"));
            }
            Ok((0..*starts)
                .map(|k| {
                    let mut rng = seed::rng(*seed, "qaoa-start", &[k as u64]);
                    let betas: Vec<f64> = (0..p).map(|_| rng.random::<f64>() * PI).collect();
                    let gammas: Vec<f64> = (0..p).map(|_| rng.random::<f64>() * 2.0 * PI).collect();
                    betas.into_iter().chain(gammas).collect()
                })
                .collect())
        }
    }
}

/// One local search per starting point, in seeding order. Grid evaluations
/// are charged to the single resulting run.
pub fn run_qaoa_starts(
    ising: &IsingModel,
    mixer: MixerSpec,
    p: usize,
    seeding: &Seeding,
    cfg: &OptimizerConfig,
    target: Option<&Target>,
    max_qubits: usize,
) -> Result<Vec<QaoaResult>> {
    if p == 0 {
        return Err(Error::invalid("depth must be at least 1"));
    }
    let circuit = QaoaCircuit::new(ising, mixer, max_qubits)?;
    let mut seed_evals = 0;
    let starts = start_points(p, seeding, &circuit, &mut seed_evals)?;
    let objective = |x: &[f64]| circuit.energy(&QaoaParams::from_flat(x).expect("even length"));
    Ok(starts
        .iter()
        .map(|x0| {
            let m = minimize(objective, x0, cfg);
            let params = QaoaParams::from_flat(&m.x).expect("even length");
            let state = circuit.state(&params);
            let energy = crate::sim::measure_diag(&state, circuit.diagonal());
            QaoaResult {
                p_target: target.map(|t| t.probability(&state)),
                params,
                energy,
                state,
                evals: m.evals + seed_evals,
                termination: m.termination,
            }
        })
        .collect())
}

/// Optimize the `2p` angles of the ansatz; with several starts the run with
/// the lowest energy is returned (earliest on ties).
pub fn run_qaoa(
    ising: &IsingModel,
    mixer: MixerSpec,
    p: usize,
    seeding: &Seeding,
    cfg: &OptimizerConfig,
    target: Option<&Target>,
    max_qubits: usize,
) -> Result<QaoaResult> {
    let runs = run_qaoa_starts(ising, mixer, p, seeding, cfg, target, max_qubits)?;
    let mut best: Option<QaoaResult> = None;
    for run in runs {
        if best.as_ref().is_none_or(|b| run.energy < b.energy) {
            best = Some(run);
        }
    }
    Ok(best.expect("at least one start"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::{complete_graph, maxcut_to_ising, random_graph};
    use crate::relaxation::{gw_best_cuts, SdpOptions};
    use crate::sim::{expectation, MixerKind, DEFAULT_MAX_QUBITS};
    use alloc::vec;

    const CAP: usize = DEFAULT_MAX_QUBITS;

    #[test]
    fn single_qubit_field_reaches_ground_state() {
        let ising = IsingModel::new(1, core::iter::empty(), vec![1.0], 0.0).unwrap();
        let r = run_qaoa(
            &ising,
            MixerSpec::standard(1),
            1,
            &Seeding::Grid(GridSpec::default()),
            &OptimizerConfig::default(),
            Some(&Target::Index(1)),
            CAP,
        )
        .unwrap();
        assert!((r.energy + 1.0).abs() < 1e-6, "{}", r.energy);
        assert!(r.p_target.unwrap() > 1.0 - 1e-6);
    }

    #[test]
    fn energy_matches_state_expectation() {
        let g = random_graph(6, 0.5, &[1.0, 2.0], 3).unwrap();
        let ising = maxcut_to_ising(&g);
        let r = run_qaoa(
            &ising,
            MixerSpec::standard(6),
            2,
            &Seeding::Random { starts: 2, seed: 9 },
            &OptimizerConfig::default(),
            None,
            CAP,
        )
        .unwrap();
        assert!((r.energy - expectation(&r.state, &ising).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn rounded_warm_start_never_worse_than_gw_cut() {
        for s in 0..4u64 {
            let g = complete_graph(6, -10, 10, s).unwrap();
            let ising = maxcut_to_ising(&g);
            let (cuts, _) = gw_best_cuts(&g, 5, 1, SdpOptions::default(), s).unwrap();
            let c: Vec<f64> = cuts[0].cut.bits().iter().map(|&b| f64::from(b)).collect();
            let mixer = MixerSpec::new(MixerKind::WarmStartRounded, 6, Some(&c), 0.25).unwrap();
            let grid = GridSpec::default();
            let circuit = QaoaCircuit::new(&ising, mixer.clone(), CAP).unwrap();
            let at_recovery = circuit.energy(&QaoaParams::new(vec![PI / 2.0], vec![0.0]).unwrap());
            let best = grid_search(
                |b, g| circuit.energy(&QaoaParams::new(vec![b], vec![g]).unwrap()),
                &grid,
            )
            .unwrap();
            assert!(best.value <= at_recovery);
            let r = run_qaoa(&ising, mixer, 1, &Seeding::Grid(grid), &OptimizerConfig::default(), None, CAP)
                .unwrap();
            assert!(r.energy <= -cuts[0].value + 1e-9, "{} vs {}", r.energy, -cuts[0].value);
        }
    }

    #[test]
    fn zero_padding_never_hurts() {
        let g = random_graph(5, 0.6, &[1.0], 4).unwrap();
        let ising = maxcut_to_ising(&g);
        let cfg = OptimizerConfig { max_evals: 400, ..OptimizerConfig::default() };
        let mut seeding = Seeding::Grid(GridSpec::default());
        let mut prev = f64::INFINITY;
        for p in 1..=3 {
            let r = run_qaoa(&ising, MixerSpec::standard(5), p, &seeding, &cfg, None, CAP).unwrap();
            assert!(r.energy <= prev + 1e-9);
            prev = r.energy;
            seeding = Seeding::Explicit(r.params.zero_padded());
        }
    }

    #[test]
    fn deterministic_and_best_of_starts() {
        let g = random_graph(5, 0.7, &[1.0, 3.0], 8).unwrap();
        let ising = maxcut_to_ising(&g);
        let seeding = Seeding::Random { starts: 3, seed: 21 };
        let cfg = OptimizerConfig { max_evals: 200, ..OptimizerConfig::default() };
        let all = run_qaoa_starts(&ising, MixerSpec::standard(5), 1, &seeding, &cfg, None, CAP).unwrap();
        let best = run_qaoa(&ising, MixerSpec::standard(5), 1, &seeding, &cfg, None, CAP).unwrap();
        assert_eq!(all.len(), 3);
        let min = all.iter().map(|r| r.energy).fold(f64::INFINITY, f64::min);
        assert_eq!(best.energy, min);
        let again = run_qaoa(&ising, MixerSpec::standard(5), 1, &seeding, &cfg, None, CAP).unwrap();
        assert_eq!(best.params, again.params);
    }

    #[test]
    fn explicit_depth_must_match() {
        let ising = IsingModel::new(1, core::iter::empty(), vec![1.0], 0.0).unwrap();
        let seeding = Seeding::Explicit(QaoaParams::new(vec![0.1], vec![0.2]).unwrap());
        let err = run_qaoa(&ising, MixerSpec::standard(1), 2, &seeding, &OptimizerConfig::default(), None, CAP);
        assert!(err.is_err());
    }
}
