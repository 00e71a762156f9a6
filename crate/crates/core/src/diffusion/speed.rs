use core::f64::consts::PI;

use super::normal_quantile;
use crate::{Error, Result};

/// Diffusion coefficient `φ(s)`; zero at `±1`, positive inside.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpeedFunction {
    /// `(1 - s²)^α` with `α > 0`.
    Polynomial(f64),
    /// `√(2/π) exp(-½ Φ⁻¹((1-s)/2)²)`, whose signs follow the arcsin law.
    Krivine,
}

impl SpeedFunction {
    pub fn validate(&self) -> Result<()> {
        match *self {
            SpeedFunction::Polynomial(a) if !(a > 0.0 && a.is_finite()) => {
                Err(Error::invalid("polynomial exponent must be positive"))
            }
            _ => Ok(()),
        }
    }

    pub fn eval(&self, s: f64) -> Result<f64> {
        self.validate()?;
        if !(-1.0..=1.0).contains(&s) {
            return Err(Error::invalid("speed argument outside [-1, 1]"));
        }
        Ok(self.eval_unchecked(s))
    }

    pub(crate) fn eval_unchecked(&self, s: f64) -> f64 {
        if s.abs() >= 1.0 {
            return 0.0;
        }
        match *self {
            SpeedFunction::Polynomial(a) => libm::pow((1.0 - s) * (1.0 + s), a),
            SpeedFunction::Krivine => {
                let x = normal_quantile(0.5 * (1.0 - s));
                libm::sqrt(2.0 / PI) * libm::exp(-0.5 * x * x)
            }
        }
    }
}

pub fn krivine_speed(s: f64) -> Result<f64> {
    SpeedFunction::Krivine.eval(s)
}

pub fn poly_speed(alpha: f64, s: f64) -> Result<f64> {
    SpeedFunction::Polynomial(alpha).eval(s)
}
