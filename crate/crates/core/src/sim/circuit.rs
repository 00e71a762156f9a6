use alloc::vec::Vec;

use num_complex::Complex64;

use super::{MixerSpec, StateVector, DEFAULT_MAX_QUBITS};
use crate::problem::IsingModel;
use crate::{Error, Result};

/// Layer angles; layer `k` applies the cost evolution with `gammas[k]` and
/// then the mixer with `betas[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QaoaParams {
    pub betas: Vec<f64>,
    pub gammas: Vec<f64>,
}

impl QaoaParams {
    pub fn new(betas: Vec<f64>, gammas: Vec<f64>) -> Result<Self> {
        if betas.is_empty() {
            return Err(Error::invalid("depth must be at least 1"));
        }
        if betas.len() != gammas.len() {
            return Err(Error::DimensionMismatch { expected: betas.len(), found: gammas.len() });
        }
        Ok(Self { betas, gammas })
    }

    pub fn depth(&self) -> usize {
        self.betas.len()
    }

    /// Flat layout `[β_1..β_p, γ_1..γ_p]` used by the optimizers.
    pub fn to_flat(&self) -> Vec<f64> {
        self.betas.iter().chain(&self.gammas).copied().collect()
    }

    pub fn from_flat(x: &[f64]) -> Result<Self> {
        if !x.len().is_multiple_of(2) {
            return Err(Error::invalid("flat parameter vector has odd length"));
        }
        let p = x.len() / 2;
        Self::new(x[..p].to_vec(), x[p..].to_vec())
    }

    /// Append a layer with `β = γ = 0`.
    pub fn zero_padded(&self) -> Self {
        let mut out = self.clone();
        out.betas.push(0.0);
        out.gammas.push(0.0);
        out
    }
}

fn apply_diagonal(s: &mut StateVector, diag: &[f64], gamma: f64) {
    if gamma == 0.0 {
        return;
    }
    for (a, &e) in s.amplitudes_mut().iter_mut().zip(diag) {
        let phi = -gamma * e;
        *a *= Complex64::new(libm::cos(phi), libm::sin(phi));
    }
}

/// Multiply every amplitude by `exp(-iγ E(x))`, offset included.
pub fn apply_cost_evolution(s: &mut StateVector, ising: &IsingModel, gamma: f64) -> Result<()> {
    if ising.n() != s.n() {
        return Err(Error::DimensionMismatch { expected: s.n(), found: ising.n() });
    }
    apply_diagonal(s, &ising.diagonal(), gamma);
    Ok(())
}

/// Apply the per-qubit mixer unitary on every qubit.
pub fn apply_mixer(s: &mut StateVector, m: &MixerSpec, beta: f64) -> Result<()> {
    let n = s.n();
    if m.n() != n {
        return Err(Error::DimensionMismatch { expected: n, found: m.n() });
    }
    let amps = s.amplitudes_mut();
    for q in 0..n {
        let u = m.unitary(q, beta);
        let bit = 1usize << q;
        for base in (0..amps.len()).filter(|idx| idx & bit == 0) {
            let (a0, a1) = (amps[base], amps[base | bit]);
            amps[base] = u[0][0] * a0 + u[0][1] * a1;
            amps[base | bit] = u[1][0] * a0 + u[1][1] * a1;
        }
    }
    Ok(())
}

/// Cost diagonal, mixer and initial state of a QAOA ansatz, prepared once
/// and evaluated for many parameter vectors.
#[derive(Debug, Clone)]
pub struct QaoaCircuit {
    diag: Vec<f64>,
    mixer: MixerSpec,
    initial: StateVector,
}

impl QaoaCircuit {
    pub fn new(ising: &IsingModel, mixer: MixerSpec, max_qubits: usize) -> Result<Self> {
        let n = ising.n();
        if mixer.n() != n {
            return Err(Error::DimensionMismatch { expected: n, found: mixer.n() });
        }
        if n > max_qubits {
            return Err(Error::TooLarge { n, limit: max_qubits });
        }
        let qubits: Vec<_> = (0..n).map(|q| mixer.initial_qubit(q)).collect();
        let initial = StateVector::product(&qubits, max_qubits)?;
        Ok(Self { diag: ising.diagonal(), mixer, initial })
    }

    pub fn n(&self) -> usize {
        self.initial.n()
    }

    pub fn mixer(&self) -> &MixerSpec {
        &self.mixer
    }

    /// Energies of the basis states.
    pub fn diagonal(&self) -> &[f64] {
        &self.diag
    }

    pub fn initial_state(&self) -> &StateVector {
        &self.initial
    }

    pub fn state(&self, params: &QaoaParams) -> StateVector {
        let mut s = self.initial.clone();
        for (&beta, &gamma) in params.betas.iter().zip(&params.gammas) {
            apply_diagonal(&mut s, &self.diag, gamma);
            apply_mixer(&mut s, &self.mixer, beta).expect("dimensions checked at construction");
        }
        s
    }

    pub fn energy(&self, params: &QaoaParams) -> f64 {
        super::measure::expectation_diag(&self.state(params), &self.diag)
    }
}

/// Trial state `Π_k U_M(β_k) U_C(γ_k) |ψ_0⟩` with the default qubit cap.
pub fn qaoa_state(ising: &IsingModel, mixer: &MixerSpec, params: &QaoaParams) -> Result<StateVector> {
    Ok(QaoaCircuit::new(ising, mixer.clone(), DEFAULT_MAX_QUBITS)?.state(params))
}
