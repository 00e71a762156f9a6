use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;
use rand::Rng;

use super::*;
use crate::problem::{complete_graph, maxcut_to_ising, random_graph, CutAssignment, IsingModel, WeightedGraph};
use crate::seed;

const ALL_KINDS: [MixerKind; 3] = [MixerKind::Standard, MixerKind::WarmStart, MixerKind::WarmStartRounded];

fn prepared(m: &MixerSpec) -> StateVector {
    let qubits: Vec<_> = (0..m.n()).map(|q| m.initial_qubit(q)).collect();
    StateVector::product(&qubits, DEFAULT_MAX_QUBITS).unwrap()
}

/// Largest amplitude difference after removing the relative global phase.
fn phase_aligned_distance(a: &StateVector, b: &StateVector) -> f64 {
    let overlap: Complex64 = a.amplitudes().iter().zip(b.amplitudes()).map(|(x, y)| x.conj() * y).sum();
    let ph = if overlap.norm() > 0.0 { overlap / overlap.norm() } else { Complex64::new(1.0, 0.0) };
    a.amplitudes().iter().zip(b.amplitudes()).map(|(x, y)| (x * ph - y).norm()).fold(0.0, f64::max)
}

fn random_state(n: usize, rng: &mut seed::Rng) -> StateVector {
    let amps = (0..1 << n).map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
    StateVector::from_amplitudes(amps).unwrap()
}

fn random_c_star(n: usize, rng: &mut seed::Rng) -> Vec<f64> {
    (0..n).map(|_| rng.random::<f64>()).collect()
}

#[test]
fn warm_state_half_is_plus() {
    let m = MixerSpec::new(MixerKind::WarmStart, 1, Some(&[0.5]), 0.1).unwrap();
    let s = prepared(&m);
    for a in s.amplitudes() {
        assert!((a.re - FRAC_1_SQRT_2).abs() < 1e-15 && a.im == 0.0);
    }
}

#[test]
fn warm_state_exact_bits() {
    let m = MixerSpec::new(MixerKind::WarmStart, 2, Some(&[1.0, 0.0]), 0.0).unwrap();
    let s = prepared(&m);
    // qubit 0 in |1⟩, qubit 1 in |0⟩: index 0b01
    assert!((s.amplitudes()[1].norm() - 1.0).abs() < 1e-15);
    assert!((probability_of(&s, 1) - 1.0).abs() < 1e-15);
}

#[test]
fn warm_state_regularized_zero() {
    let m = MixerSpec::new(MixerKind::WarmStart, 1, Some(&[0.0]), 0.25).unwrap();
    let s = prepared(&m);
    assert!((m.angles().theta()[0] - PI / 3.0).abs() < 1e-15);
    assert!((s.amplitudes()[0].re - libm::sqrt(3.0) / 2.0).abs() < 1e-15);
    assert!((s.amplitudes()[1].re - 0.5).abs() < 1e-15);
    assert!((probability_of(&s, 1) - 0.25).abs() < 1e-15);
}

#[test]
fn cost_evolution_phases() {
    let ising = IsingModel::new(1, vec![], vec![1.0], 0.0).unwrap();
    let plus = prepared(&MixerSpec::standard(1));
    let mut s = plus.clone();
    apply_cost_evolution(&mut s, &ising, 0.0).unwrap();
    assert_eq!(s, plus);
    apply_cost_evolution(&mut s, &ising, PI).unwrap();
    // E(|0⟩) = +1 → e^{-iπ}, E(|1⟩) = -1 → e^{+iπ}
    let expect0 = Complex64::new(libm::cos(-PI), libm::sin(-PI)) * FRAC_1_SQRT_2;
    let expect1 = Complex64::new(libm::cos(PI), libm::sin(PI)) * FRAC_1_SQRT_2;
    assert!((s.amplitudes()[0] - expect0).norm() < 1e-15);
    assert!((s.amplitudes()[1] - expect1).norm() < 1e-15);
}

#[test]
fn gates_preserve_norm() {
    let mut rng = seed::rng(2, "sim-norm", &[]);
    for t in 0..20 {
        let g = complete_graph(6, -10, 10, t).unwrap();
        let ising = maxcut_to_ising(&g);
        let c = random_c_star(6, &mut rng);
        let mut s = random_state(6, &mut rng);
        for kind in ALL_KINDS {
            let m = MixerSpec::new(kind, 6, Some(&c), 0.1).unwrap();
            for _ in 0..3 {
                apply_cost_evolution(&mut s, &ising, rng.random_range(-3.0..3.0)).unwrap();
                assert!((s.norm_sqr() - 1.0).abs() <= 1e-10);
                apply_mixer(&mut s, &m, rng.random_range(-3.0..3.0)).unwrap();
                assert!((s.norm_sqr() - 1.0).abs() <= 1e-10);
            }
        }
    }
}

#[test]
fn zero_beta_mixer_is_identity() {
    let mut rng = seed::rng(3, "sim", &[]);
    let s0 = random_state(4, &mut rng);
    let c = random_c_star(4, &mut rng);
    for kind in ALL_KINDS {
        let mut s = s0.clone();
        apply_mixer(&mut s, &MixerSpec::new(kind, 4, Some(&c), 0.0).unwrap(), 0.0).unwrap();
        assert!(phase_aligned_distance(&s, &s0) < 1e-15);
    }
}

#[test]
fn warm_state_is_mixer_eigenstate() {
    let mut rng = seed::rng(4, "sim", &[]);
    for _ in 0..50 {
        let c = random_c_star(5, &mut rng);
        let eps = rng.random_range(0.0..0.5);
        let m = MixerSpec::new(MixerKind::WarmStart, 5, Some(&c), eps).unwrap();
        let phi = prepared(&m);
        let mut out = phi.clone();
        let beta = rng.random_range(-PI..PI);
        apply_mixer(&mut out, &m, beta).unwrap();
        assert!((fidelity(&phi, &out) - 1.0).abs() < 1e-10);
        // global phase e^{+iβ} per qubit
        let ph = Complex64::new(libm::cos(5.0 * beta), libm::sin(5.0 * beta));
        let dist = phi.amplitudes().iter().zip(out.amplitudes()).map(|(a, b)| (a * ph - b).norm()).fold(0.0, f64::max);
        assert!(dist < 1e-10);
    }
}

#[test]
fn rounded_mixer_recovers_flipped_bit() {
    let m = MixerSpec::new(MixerKind::WarmStartRounded, 1, Some(&[0.25]), 0.25).unwrap();
    let mut s = prepared(&m);
    apply_mixer(&mut s, &m, PI / 2.0).unwrap();
    assert!(s.amplitudes()[0].norm() < 1e-10);
    assert!((s.amplitudes()[1] - Complex64::new(0.0, -1.0)).norm() < 1e-10);
    let m = MixerSpec::new(MixerKind::WarmStartRounded, 1, Some(&[0.75]), 0.25).unwrap();
    let mut s = prepared(&m);
    apply_mixer(&mut s, &m, PI / 2.0).unwrap();
    assert!((s.amplitudes()[0] - Complex64::new(0.0, -1.0)).norm() < 1e-10);
}

#[test]
fn zero_parameters_leave_initial_state() {
    let g = complete_graph(5, -10, 10, 1).unwrap();
    let ising = maxcut_to_ising(&g);
    let c = [0.2, 0.9, 0.5, 0.0, 1.0];
    let params = QaoaParams::new(vec![0.0], vec![0.0]).unwrap();
    for kind in ALL_KINDS {
        let m = MixerSpec::new(kind, 5, Some(&c), 0.1).unwrap();
        let s = qaoa_state(&ising, &m, &params).unwrap();
        assert!(phase_aligned_distance(&s, &prepared(&m)) < 1e-15);
    }
}

#[test]
fn rounded_start_recovers_gw_cut() {
    let eps = 0.25;
    for seed in 0..10 {
        let g = complete_graph(8, -10, 10, seed).unwrap();
        let ising = maxcut_to_ising(&g);
        let cut = CutAssignment::from_index(seed as usize * 37 % 256, 8).canonical();
        let c: Vec<f64> = cut.bits().iter().map(|&b| if b { 1.0 - eps } else { eps }).collect();
        let m = MixerSpec::new(MixerKind::WarmStartRounded, 8, Some(&c), eps).unwrap();
        let params = QaoaParams::new(vec![PI / 2.0], vec![0.0]).unwrap();
        let s = qaoa_state(&ising, &m, &params).unwrap();
        let flipped = cut.complement().index();
        assert!((s.amplitudes()[flipped].norm() - 1.0).abs() < 1e-9);
        assert!((expectation(&s, &ising).unwrap() + g.cut_value(cut.spins()).unwrap()).abs() < 1e-9);
    }
}

#[test]
fn half_epsilon_is_standard_qaoa() {
    let mut rng = seed::rng(5, "sim", &[]);
    for t in 0..10 {
        let g = complete_graph(6, -10, 10, t).unwrap();
        let ising = maxcut_to_ising(&g);
        let c = random_c_star(6, &mut rng);
        let p = 1 + t as usize % 3;
        let params = QaoaParams::new(
            (0..p).map(|_| rng.random_range(-PI..PI)).collect(),
            (0..p).map(|_| rng.random_range(-PI..PI)).collect(),
        )
        .unwrap();
        let std = qaoa_state(&ising, &MixerSpec::standard(6), &params).unwrap();
        let warm = qaoa_state(&ising, &MixerSpec::new(MixerKind::WarmStart, 6, Some(&c), 0.5).unwrap(), &params).unwrap();
        assert!(phase_aligned_distance(&std, &warm) < 1e-12);
    }
}

#[test]
fn expectation_values() {
    let edge = maxcut_to_ising(&WeightedGraph::new(2, vec![(0, 1, 1.0)]).unwrap());
    let basis = StateVector::basis(2, 0b01, DEFAULT_MAX_QUBITS).unwrap();
    assert_eq!(expectation(&basis, &edge).unwrap(), -1.0);

    let g = complete_graph(5, -10, 10, 2).unwrap();
    let ising = maxcut_to_ising(&g);
    let plus = prepared(&MixerSpec::standard(5));
    let diag = ising.diagonal();
    let mean = diag.iter().sum::<f64>() / diag.len() as f64;
    assert!((expectation(&plus, &ising).unwrap() - mean).abs() < 1e-12);
    assert!((mean - ising.offset()).abs() < 1e-12);

    let mut rng = seed::rng(6, "sim", &[]);
    for n in 1..=8 {
        let couplings: Vec<_> = (1..n).map(|i| (i - 1, i, rng.random_range(-2.0..2.0))).collect();
        let ising = IsingModel::new(n, couplings, random_c_star(n, &mut rng), 0.3).unwrap();
        let s = random_state(n, &mut rng);
        let oracle: f64 = (0..1 << n).map(|idx| s.amplitudes()[idx].norm_sqr() * ising.energy_of_index(idx)).sum();
        assert!((expectation(&s, &ising).unwrap() - oracle).abs() < 1e-12);
    }
}

#[test]
fn sampling() {
    let basis = StateVector::basis(3, 5, DEFAULT_MAX_QUBITS).unwrap();
    let counts = sample(&basis, 100, 1);
    assert_eq!(counts.len(), 1);
    assert_eq!(counts[&5], 100);

    let plus = prepared(&MixerSpec::standard(1));
    let shots = 100_000;
    let counts = sample(&plus, shots, 7);
    assert_eq!(counts.values().sum::<usize>(), shots);
    let sigma = libm::sqrt(shots as f64 * 0.25);
    assert!((counts[&0] as f64 - shots as f64 / 2.0).abs() < 4.0 * sigma);
    assert_eq!(counts, sample(&plus, shots, 7));
}

#[test]
fn target_probabilities() {
    let plus = prepared(&MixerSpec::standard(4));
    assert!((probability_of(&plus, 3) - 1.0 / 16.0).abs() < 1e-15);
    let basis = StateVector::basis(3, 0b110, DEFAULT_MAX_QUBITS).unwrap();
    let cut = CutAssignment::from_index(0b001, 3);
    assert_eq!(probability_of_cut(&basis, &cut), 1.0);
}

#[test]
fn qubit_cap() {
    let ising = IsingModel::new(5, vec![], vec![0.0; 5], 0.0).unwrap();
    assert!(matches!(
        QaoaCircuit::new(&ising, MixerSpec::standard(5), 4),
        Err(crate::Error::TooLarge { n: 5, limit: 4 })
    ));
}

#[test]
fn correlator_closed_forms() {
    let g = complete_graph(6, -10, 10, 3).unwrap();
    let c = [0.1, 0.8, 0.4, 0.0, 1.0, 0.6];
    let eps = 0.2;
    let m = MixerSpec::new(MixerKind::WarmStart, 6, Some(&c), eps).unwrap();
    let ct = m.angles().clamped().to_vec();
    for (i, j) in [(0, 1), (2, 5), (3, 4)] {
        let v = depth1_correlator(&g, &m, 0.0, 0.0, i, j).unwrap();
        assert!((v - (1.0 - 2.0 * ct[i]) * (1.0 - 2.0 * ct[j])).abs() < 1e-12);
    }
    let half = MixerSpec::new(MixerKind::WarmStart, 6, Some(&c), 0.5).unwrap();
    for gamma in [0.3, 1.7, -2.2] {
        assert!(depth1_correlator(&g, &half, 0.0, gamma, 1, 4).unwrap().abs() < 1e-12);
    }
    assert!(depth1_correlator(&g, &m, 0.1, 0.1, 2, 2).is_err());
    assert!(depth1_correlator(&g, &m, 0.1, 0.1, 2, 6).is_err());
}

#[test]
fn correlator_matches_statevector() {
    let mut rng = seed::rng(8, "sim-corr", &[]);
    for t in 0..12 {
        let g = if t % 2 == 0 { complete_graph(8, -10, 10, t).unwrap() } else { random_graph(8, 0.5, &[-1.0, 1.0, 2.5], t).unwrap() };
        let ising = maxcut_to_ising(&g);
        let c = random_c_star(8, &mut rng);
        for kind in ALL_KINDS {
            let m = MixerSpec::new(kind, 8, Some(&c), rng.random_range(0.0..0.5)).unwrap();
            let (beta, gamma) = (rng.random_range(-PI..PI), rng.random_range(-PI..PI));
            let s = qaoa_state(&ising, &m, &QaoaParams::new(vec![beta], vec![gamma]).unwrap()).unwrap();
            for (i, j) in [(0, 1), (3, 7), (6, 2)] {
                let fast = depth1_correlator(&g, &m, beta, gamma, i, j).unwrap();
                assert!((fast - zz_expectation(&s, i, j)).abs() < 1e-9, "{kind:?} ({i},{j})");
            }
        }
    }
}
