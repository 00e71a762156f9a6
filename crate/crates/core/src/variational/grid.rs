use core::f64::consts::PI;

use crate::{Error, Result};

/// Rectangular `(β, γ)` grid with inclusive endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub beta_range: (f64, f64),
    pub gamma_range: (f64, f64),
    pub beta_points: usize,
    pub gamma_points: usize,
}

impl Default for GridSpec {
    /// `β ∈ [0, π)`, `γ ∈ [0, 2π)`, 24 points per axis.
    fn default() -> Self {
        Self::half_open((0.0, PI), (0.0, 2.0 * PI), 24, 24)
    }
}

impl GridSpec {
    /// Grid over `[lo, hi)` on each axis.
    pub fn half_open(beta: (f64, f64), gamma: (f64, f64), beta_points: usize, gamma_points: usize) -> Self {
        let last = |(lo, hi): (f64, f64), pts: usize| hi - (hi - lo) / pts as f64;
        Self {
            beta_range: (beta.0, last(beta, beta_points)),
            gamma_range: (gamma.0, last(gamma, gamma_points)),
            beta_points,
            gamma_points,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.beta_points < 2 || self.gamma_points < 2 {
            return Err(Error::invalid("grid needs at least two points per axis"));
        }
        let ok = |(lo, hi): (f64, f64)| lo.is_finite() && hi.is_finite() && lo <= hi;
        if !ok(self.beta_range) || !ok(self.gamma_range) {
            return Err(Error::invalid("grid ranges must be finite and ordered"));
        }
        Ok(())
    }

    fn axis((lo, hi): (f64, f64), points: usize, k: usize) -> f64 {
        lo + (hi - lo) * k as f64 / (points - 1) as f64
    }

    pub fn beta(&self, k: usize) -> f64 {
        Self::axis(self.beta_range, self.beta_points, k)
    }

    pub fn gamma(&self, k: usize) -> f64 {
        Self::axis(self.gamma_range, self.gamma_points, k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub beta: f64,
    pub gamma: f64,
    pub value: f64,
}

/// Exhaustive grid evaluation; the first minimum in `(β, γ)` order wins.
pub fn grid_search<F>(mut objective: F, spec: &GridSpec) -> Result<GridPoint>
where
    F: FnMut(f64, f64) -> f64,
{
    spec.validate()?;
    let mut best = GridPoint { beta: spec.beta(0), gamma: spec.gamma(0), value: f64::INFINITY };
    for b in 0..spec.beta_points {
        for g in 0..spec.gamma_points {
            let (beta, gamma) = (spec.beta(b), spec.gamma(g));
            let value = objective(beta, gamma);
            if value < best.value {
                best = GridPoint { beta, gamma, value };
            }
        }
    }
    Ok(best)
}
