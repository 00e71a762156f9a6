use alloc::vec::Vec;

use crate::linalg::{zeros, Matrix};
use crate::problem::{CutAssignment, WeightedGraph};
use crate::sim::correlator::correlator_with_weights;
use crate::sim::{zz_expectation, MixerSpec, StateVector};
use crate::{Error, Result};

/// Symmetric `n × n` matrix of `⟨Z_i Z_j⟩`, zero on the diagonal and on
/// every non-edge.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationMatrix {
    m: Matrix,
}

impl CorrelationMatrix {
    /// Fill the edge entries of `g` from `f(i, j)`.
    pub fn from_edges(g: &WeightedGraph, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = zeros(g.n());
        for e in g.edges() {
            let v = f(e.i, e.j);
            m[e.i][e.j] = v;
            m[e.j][e.i] = v;
        }
        Self { m }
    }

    /// Correlators of a full statevector on the edges of `g`.
    pub fn from_state(g: &WeightedGraph, s: &StateVector) -> Result<Self> {
        if s.n() != g.n() {
            return Err(Error::DimensionMismatch { expected: g.n(), found: s.n() });
        }
        Ok(Self::from_edges(g, |i, j| zz_expectation(s, i, j)))
    }

    /// `z_i z_j` of a single cut on the edges of `g`.
    pub fn from_cut(g: &WeightedGraph, cut: &CutAssignment) -> Result<Self> {
        if cut.n() != g.n() {
            return Err(Error::DimensionMismatch { expected: g.n(), found: cut.n() });
        }
        let z = cut.spins();
        Ok(Self::from_edges(g, |i, j| f64::from(z[i] * z[j])))
    }

    pub fn n(&self) -> usize {
        self.m.len()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.m[i][j]
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.m
    }

    /// `Σ_edges ω_ij M_ij`; the MAXCUT energy is `(this - Σω) / 2`.
    pub fn weighted_sum(&self, g: &WeightedGraph) -> f64 {
        g.edges().iter().map(|e| e.w * self.m[e.i][e.j]).sum()
    }
}

/// Depth-one correlators on every edge of `g`.
pub fn correlation_matrix_depth1(
    g: &WeightedGraph,
    mixer: &MixerSpec,
    beta: f64,
    gamma: f64,
) -> Result<CorrelationMatrix> {
    if mixer.n() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), found: mixer.n() });
    }
    let w = g.weight_matrix();
    Ok(CorrelationMatrix::from_edges(g, |i, j| correlator_with_weights(&w, mixer, beta, gamma, i, j)))
}

/// Correlators of the equal-weight mixture of the runs' distributions, which
/// by linearity is the entrywise mean.
pub fn aggregate_correlations(runs: &[CorrelationMatrix]) -> Result<CorrelationMatrix> {
    let first = runs.first().ok_or(Error::Empty("correlation matrices"))?;
    let n = first.n();
    let mut m = zeros(n);
    for r in runs {
        if r.n() != n {
            return Err(Error::DimensionMismatch { expected: n, found: r.n() });
        }
        for (row, src) in m.iter_mut().zip(&r.m) {
            for (a, b) in row.iter_mut().zip(src) {
                *a += b;
            }
        }
    }
    let k = runs.len() as f64;
    m.iter_mut().flatten().for_each(|x| *x /= k);
    Ok(CorrelationMatrix { m })
}

pub(crate) fn mixture(runs: Vec<CorrelationMatrix>) -> Result<CorrelationMatrix> {
    if runs.len() == 1 {
        return Ok(runs.into_iter().next().expect("one run"));
    }
    aggregate_correlations(&runs)
}
