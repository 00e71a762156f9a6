//! Dense statevector simulation of QAOA circuits with standard, warm-start
//! and rounded warm-start mixers, plus the closed-form depth-one two-qubit
//! correlator.
//!
//! Qubit `i` is bit `i` of the basis-state index. Equality of states is
//! always meant up to a global phase.

mod angles;
mod circuit;
pub(crate) mod correlator;
mod measure;
mod mixer;
mod state;

pub use angles::{clamp_epsilon, WarmStartAngles};
pub use circuit::{apply_cost_evolution, apply_mixer, qaoa_state, QaoaCircuit, QaoaParams};
pub use correlator::depth1_correlator;
pub use measure::{
    expectation, fidelity, probability_of, probability_of_cut, sample, zz_expectation,
};
pub use mixer::{MixerKind, MixerSpec, Unitary2};
pub use state::{StateVector, DEFAULT_MAX_QUBITS};
pub(crate) use measure::expectation_diag as measure_diag;

#[cfg(test)]
mod tests;
