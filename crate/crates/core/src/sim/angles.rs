use alloc::vec::Vec;

use crate::{Error, Result};

/// Regularized warm-start value: `ε` if `c ≤ ε`, `1-ε` if `c ≥ 1-ε`,
/// otherwise `c` unchanged.
pub fn clamp_epsilon(c: f64, epsilon: f64) -> f64 {
    if c <= epsilon {
        epsilon
    } else if c >= 1.0 - epsilon {
        1.0 - epsilon
    } else {
        c
    }
}

/// Rotation angles `θ_i = 2 arcsin √c̃_i` of a warm-start product state,
/// where `c̃ = clamp_epsilon(c*, ε)`. The same angles drive the mixer.
#[derive(Debug, Clone, PartialEq)]
pub struct WarmStartAngles {
    theta: Vec<f64>,
    clamped: Vec<f64>,
    epsilon: f64,
}

impl WarmStartAngles {
    pub fn new(c_star: &[f64], epsilon: f64) -> Result<Self> {
        if !(0.0..=0.5).contains(&epsilon) {
            return Err(Error::invalid("epsilon must lie in [0, 0.5]"));
        }
        if c_star.iter().any(|c| !(0.0..=1.0).contains(c)) {
            return Err(Error::invalid("warm-start values must lie in [0, 1]"));
        }
        let clamped: Vec<f64> = c_star.iter().map(|&c| clamp_epsilon(c, epsilon)).collect();
        let theta = clamped.iter().map(|&c| 2.0 * libm::asin(libm::sqrt(c))).collect();
        Ok(Self { theta, clamped, epsilon })
    }

    /// Uniform superposition angles (`θ = π/2` on every qubit).
    pub fn uniform(n: usize) -> Self {
        Self::new(&alloc::vec![0.5; n], 0.5).expect("valid by construction")
    }

    pub fn n(&self) -> usize {
        self.theta.len()
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    /// Probability of `|1⟩` on each qubit of the initial state.
    pub fn clamped(&self) -> &[f64] {
        &self.clamped
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}
