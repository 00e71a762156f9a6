use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::Rng as _;

use super::StateVector;
use crate::problem::{CutAssignment, IsingModel};
use crate::seed;
use crate::{Error, Result};

pub(crate) fn expectation_diag(s: &StateVector, diag: &[f64]) -> f64 {
    s.amplitudes().iter().zip(diag).map(|(a, e)| a.norm_sqr() * e).sum()
}

/// `⟨ψ|H_C|ψ⟩` for a diagonal Ising Hamiltonian.
pub fn expectation(s: &StateVector, ising: &IsingModel) -> Result<f64> {
    if ising.n() != s.n() {
        return Err(Error::DimensionMismatch { expected: s.n(), found: ising.n() });
    }
    Ok(expectation_diag(s, &ising.diagonal()))
}

/// `⟨ψ|Z_i Z_j|ψ⟩`.
pub fn zz_expectation(s: &StateVector, i: usize, j: usize) -> f64 {
    s.amplitudes()
        .iter()
        .enumerate()
        .map(|(idx, a)| if (idx >> i ^ idx >> j) & 1 == 1 { -a.norm_sqr() } else { a.norm_sqr() })
        .sum()
}

/// `|⟨a|b⟩|`, insensitive to global phase.
pub fn fidelity(a: &StateVector, b: &StateVector) -> f64 {
    a.amplitudes().iter().zip(b.amplitudes()).map(|(x, y)| x.conj() * y).sum::<num_complex::Complex64>().norm()
}

/// `|⟨index|ψ⟩|²`.
pub fn probability_of(s: &StateVector, index: usize) -> f64 {
    s.amplitudes().get(index).map_or(0.0, |a| a.norm_sqr())
}

/// Probability of measuring the cut `z` in either orientation; `z` and `-z`
/// encode the same cut, the larger of the two probabilities is reported.
pub fn probability_of_cut(s: &StateVector, cut: &CutAssignment) -> f64 {
    probability_of(s, cut.index()).max(probability_of(s, cut.complement().index()))
}

/// `shots` i.i.d. measurements in the computational basis, as counts per
/// basis-state index.
pub fn sample(s: &StateVector, shots: usize, seed: u64) -> BTreeMap<usize, usize> {
    let mut cdf: Vec<f64> = Vec::with_capacity(s.amplitudes().len());
    let mut acc = 0.0;
    for a in s.amplitudes() {
        acc += a.norm_sqr();
        cdf.push(acc);
    }
    let mut rng = seed::rng(seed, "measure", &[]);
    let mut counts = BTreeMap::new();
    for _ in 0..shots {
        let u = rng.random::<f64>() * acc;
        let idx = cdf.partition_point(|&c| c <= u).min(cdf.len() - 1);
        *counts.entry(idx).or_insert(0) += 1;
    }
    counts
}
