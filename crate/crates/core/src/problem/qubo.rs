use alloc::vec::Vec;

use super::IsingModel;
use crate::linalg::{self, Matrix};
use crate::{Error, Result};

/// `min xᵀ Σ x + μᵀ x + offset` over `x ∈ {0,1}ⁿ`.
///
/// `sigma` is stored symmetrized; the objective is invariant under
/// `Σ → (Σ + Σᵀ)/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuboProblem {
    sigma: Matrix,
    mu: Vec<f64>,
    offset: f64,
}

impl QuboProblem {
    pub fn new(sigma: Matrix, mu: Vec<f64>) -> Result<Self> {
        Self::with_offset(sigma, mu, 0.0)
    }

    pub fn with_offset(sigma: Matrix, mu: Vec<f64>, offset: f64) -> Result<Self> {
        let n = mu.len();
        if n == 0 {
            return Err(Error::Empty("QUBO needs at least one variable"));
        }
        if sigma.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: sigma.len() });
        }
        if let Some(row) = sigma.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: row.len() });
        }
        if !sigma.iter().flatten().chain(&mu).all(|v| v.is_finite()) || !offset.is_finite() {
            return Err(Error::invalid("QUBO coefficients must be finite"));
        }
        Ok(Self { sigma: linalg::symmetrize(&sigma), mu, offset })
    }

    pub fn n(&self) -> usize {
        self.mu.len()
    }

    pub fn sigma(&self) -> &Matrix {
        &self.sigma
    }

    pub fn mu(&self) -> &[f64] {
        &self.mu
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    /// Objective at a real point (binary or relaxed).
    pub fn objective(&self, x: &[f64]) -> f64 {
        let sx = linalg::mat_vec(&self.sigma, x);
        linalg::dot(x, &sx) + linalg::dot(&self.mu, x) + self.offset
    }

    /// Objective at a binary point.
    pub fn objective_bits(&self, x: &[bool]) -> f64 {
        let xf: Vec<f64> = x.iter().map(|&b| if b { 1.0 } else { 0.0 }).collect();
        self.objective(&xf)
    }
}

/// Substitute `x_i = (1 - z_i)/2`; the Ising energy of `z` equals the QUBO
/// objective of `x`.
pub fn qubo_to_ising(q: &QuboProblem) -> IsingModel {
    let n = q.n();
    let s = q.sigma();
    let mut fields = alloc::vec![0.0; n];
    let mut couplings = Vec::new();
    let mut offset = q.offset();
    for i in 0..n {
        let lin = s[i][i] + q.mu()[i];
        fields[i] -= 0.5 * lin;
        offset += 0.5 * lin;
        for j in (i + 1)..n {
            // 2 Σ_ij x_i x_j = Σ_ij (1 - z_i - z_j + z_i z_j) / 2
            let w = s[i][j];
            if w != 0.0 {
                couplings.push((i, j, 0.5 * w));
                fields[i] -= 0.5 * w;
                fields[j] -= 0.5 * w;
                offset += 0.5 * w;
            }
        }
    }
    IsingModel::new(n, couplings, fields, offset).expect("indices are in range by construction")
}
