use alloc::vec::Vec;

use rand_distr::{Distribution, StandardNormal};

use super::SpeedFunction;
use crate::relaxation::GramFactor;
use crate::seed;
use crate::{Error, Result};

/// Euler-Maruyama settings. Trajectory `t` draws from its own stream
/// `(seed, t)`, so trajectories may be simulated in any order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffusionConfig {
    pub dt: f64,
    /// A coordinate sticks once `|W| ≥ 1 - absorb_tol`.
    pub absorb_tol: f64,
    pub max_steps: usize,
    pub trajectories: usize,
    pub seed: u64,
}

impl Default for DiffusionConfig {
    fn default() -> Self {
        Self { dt: 1e-3, absorb_tol: 1e-4, max_steps: 20_000, trajectories: 20_000, seed: 0 }
    }
}

impl DiffusionConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return Err(Error::invalid("dt must be positive"));
        }
        if !(self.absorb_tol > 0.0 && self.absorb_tol < 1.0) {
            return Err(Error::invalid("absorb_tol must lie in (0, 1)"));
        }
        if self.trajectories == 0 {
            return Err(Error::invalid("need at least one trajectory"));
        }
        Ok(())
    }
}

/// Limiting signs, one row of `n` entries per trajectory.
#[derive(Debug, Clone, PartialEq)]
pub struct SignSamples {
    n: usize,
    signs: Vec<i8>,
    /// Set where the coordinate had not stuck after `max_steps`.
    truncated: Vec<bool>,
}

impl SignSamples {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn trajectories(&self) -> usize {
        if self.n == 0 {
            0
        } else {
            self.signs.len() / self.n
        }
    }

    pub fn row(&self, t: usize) -> &[i8] {
        &self.signs[t * self.n..(t + 1) * self.n]
    }

    pub fn sign(&self, t: usize, i: usize) -> i8 {
        self.signs[t * self.n + i]
    }

    pub fn truncated(&self, t: usize, i: usize) -> bool {
        self.truncated[t * self.n + i]
    }

    /// Fraction of all recorded signs taken at truncation.
    pub fn truncated_fraction(&self) -> f64 {
        if self.truncated.is_empty() {
            return 0.0;
        }
        self.truncated.iter().filter(|&&t| t).count() as f64 / self.truncated.len() as f64
    }

    /// Independent runs over the same factor, concatenated.
    pub fn concat(parts: Vec<SignSamples>) -> Result<Self> {
        let n = parts.first().ok_or(Error::Empty("sign samples"))?.n;
        let mut out = SignSamples { n, signs: Vec::new(), truncated: Vec::new() };
        for p in parts {
            if p.n != n {
                return Err(Error::DimensionMismatch { expected: n, found: p.n });
            }
            out.signs.extend(p.signs);
            out.truncated.extend(p.truncated);
        }
        Ok(out)
    }
}

fn sign(w: f64) -> i8 {
    if w < 0.0 {
        -1
    } else {
        1
    }
}

/// Simulate trajectories `range` of the configured run.
pub fn simulate_range(
    f: &GramFactor,
    speed: SpeedFunction,
    cfg: &DiffusionConfig,
    range: core::ops::Range<usize>,
) -> Result<SignSamples> {
    cfg.validate()?;
    speed.validate()?;
    let (n, k) = (f.n(), f.k());
    let v = f.vectors();
    let sqrt_dt = libm::sqrt(cfg.dt);
    let edge = 1.0 - cfg.absorb_tol;
    let mut signs = Vec::with_capacity(range.len() * n);
    let mut truncated = Vec::with_capacity(range.len() * n);
    let mut w = alloc::vec![0.0f64; n];
    let mut active = alloc::vec![true; n];
    let mut db = alloc::vec![0.0f64; k];
    for t in range {
        let mut rng = seed::rng(cfg.seed, "diffusion", &[t as u64]);
        w.iter_mut().for_each(|x| *x = 0.0);
        active.iter_mut().for_each(|a| *a = true);
        let mut live = n;
        let mut step = 0;
        while live > 0 && step < cfg.max_steps {
            for x in db.iter_mut() {
                let z: f64 = StandardNormal.sample(&mut rng);
                *x = sqrt_dt * z;
            }
            for i in 0..n {
                if !active[i] {
                    continue;
                }
                let proj: f64 = v[i].iter().zip(&db).map(|(a, b)| a * b).sum();
                w[i] = (w[i] + speed.eval_unchecked(w[i]) * proj).clamp(-1.0, 1.0);
                if w[i].abs() >= edge {
                    active[i] = false;
                    live -= 1;
                }
            }
            step += 1;
        }
        for i in 0..n {
            signs.push(sign(w[i]));
            truncated.push(active[i]);
        }
    }
    Ok(SignSamples { n, signs, truncated })
}

/// Limiting signs of `cfg.trajectories` independent runs of the diffusion.
/// Coordinates that never stick take `sign(W)` with `sign(0) = +1`.
pub fn simulate_signs(f: &GramFactor, speed: SpeedFunction, cfg: &DiffusionConfig) -> Result<SignSamples> {
    simulate_range(f, speed, cfg, 0..cfg.trajectories)
}
