use alloc::vec::Vec;
use core::f64::consts::FRAC_2_PI;

use super::SignSamples;
use crate::relaxation::GramFactor;
use crate::{Error, Result};

/// Sign statistics of one node pair against the arcsin law.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairReport {
    pub i: usize,
    pub j: usize,
    pub u_dot_v: f64,
    pub empirical: f64,
    /// `(2/π) arcsin(uᵀv)`.
    pub predicted: f64,
    pub abs_err: f64,
    /// Standard error of `empirical`.
    pub stderr: f64,
    /// Trajectories in which either sign was taken at truncation.
    pub truncated_frac: f64,
}

pub fn correlation_report(samples: &SignSamples, f: &GramFactor, pairs: &[(usize, usize)]) -> Result<Vec<PairReport>> {
    if samples.n() != f.n() {
        return Err(Error::DimensionMismatch { expected: f.n(), found: samples.n() });
    }
    let t = samples.trajectories();
    if t == 0 {
        return Err(Error::Empty("sign samples"));
    }
    pairs
        .iter()
        .map(|&(i, j)| {
            for idx in [i, j] {
                if idx >= f.n() {
                    return Err(Error::InvalidIndex { index: idx, n: f.n() });
                }
            }
            let mut sum = 0i64;
            let mut trunc = 0usize;
            for r in 0..t {
                sum += i64::from(samples.sign(r, i) * samples.sign(r, j));
                trunc += usize::from(samples.truncated(r, i) || samples.truncated(r, j));
            }
            let empirical = sum as f64 / t as f64;
            let u_dot_v = f.inner(i, j);
            let predicted = FRAC_2_PI * libm::asin(u_dot_v);
            // products are ±1, so the sample variance is (1 - m²) t/(t-1)
            let stderr = if t > 1 { libm::sqrt((1.0 - empirical * empirical).max(0.0) / (t - 1) as f64) } else { 0.0 };
            Ok(PairReport {
                i,
                j,
                u_dot_v,
                empirical,
                predicted,
                abs_err: (empirical - predicted).abs(),
                stderr,
                truncated_frac: trunc as f64 / t as f64,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::{simulate_signs, DiffusionConfig, SpeedFunction};
    use super::*;
    use crate::problem::WeightedGraph;
    use alloc::vec;

    #[test]
    fn degenerate_pairs_are_exact() {
        let rows = vec![vec![0.0, 1.0], vec![0.0, 1.0], vec![0.0, -1.0]];
        let g = WeightedGraph::new(3, Vec::new()).unwrap();
        let f = GramFactor::new(&g, rows).unwrap();
        let cfg = DiffusionConfig { dt: 1e-2, trajectories: 100, ..Default::default() };
        let s = simulate_signs(&f, SpeedFunction::Krivine, &cfg).unwrap();
        let r = correlation_report(&s, &f, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!((r[0].empirical, r[0].predicted, r[0].abs_err, r[0].stderr), (1.0, 1.0, 0.0, 0.0));
        assert_eq!((r[1].empirical, r[1].predicted, r[1].abs_err), (-1.0, -1.0, 0.0));
        assert!(correlation_report(&s, &f, &[(0, 3)]).is_err());
    }
}
