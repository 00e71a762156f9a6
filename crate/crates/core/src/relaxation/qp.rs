use alloc::vec::Vec;

use crate::linalg;
use crate::problem::QuboProblem;
use crate::{Error, Result};

/// Optimum `c*` of the box relaxation `min_{x ∈ [0,1]ⁿ} xᵀΣx + μᵀx`.
#[derive(Debug, Clone, PartialEq)]
pub struct RelaxedSolution {
    pub c_star: Vec<f64>,
    pub objective: f64,
    pub iterations: usize,
    pub kkt_residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QpOptions {
    pub tol: f64,
    pub max_iters: usize,
}

impl Default for QpOptions {
    fn default() -> Self {
        Self { tol: 1e-9, max_iters: 20_000_000 }
    }
}

fn kkt_residual(x: &[f64], grad: &[f64]) -> f64 {
    x.iter()
        .zip(grad)
        .map(|(&xi, &gi)| {
            if xi <= 0.0 {
                (-gi).max(0.0)
            } else if xi >= 1.0 {
                gi.max(0.0)
            } else {
                gi.abs()
            }
        })
        .fold(0.0, f64::max)
}

/// Accelerated projected gradient with the fixed step `1/L`, where `L` is
/// twice the largest eigenvalue of `Σ`. Stops once the box-KKT residual is at most
/// `tol`.
pub fn solve_qp(q: &QuboProblem, opts: QpOptions) -> Result<RelaxedSolution> {
    let n = q.n();
    let sigma = q.sigma();
    let ev = linalg::symmetric_eigenvalues(sigma);
    if ev[0] < -1e-9 {
        return Err(Error::NotConvex { min_eigenvalue: ev[0] });
    }
    let lipschitz = 2.0 * ev[n - 1];
    let step = if lipschitz > 0.0 { 1.0 / lipschitz } else { 1.0 };
    let gradient = |x: &[f64]| -> Vec<f64> {
        linalg::mat_vec(sigma, x).iter().zip(q.mu()).map(|(s, m)| 2.0 * s + m).collect()
    };

    // accelerated projected gradient, momentum reset whenever it points uphill
    let mut x = alloc::vec![0.5; n];
    let mut y = x.clone();
    let mut t = 1.0f64;
    let mut grad = gradient(&x);
    let mut residual = kkt_residual(&x, &grad);
    let mut iterations = 0;
    while residual > opts.tol {
        if iterations == opts.max_iters {
            return Err(Error::IterationLimit { iterations, residual });
        }
        let grad_y = gradient(&y);
        let next: Vec<f64> = y.iter().zip(&grad_y).map(|(yi, gi)| (yi - step * gi).clamp(0.0, 1.0)).collect();
        let uphill: f64 = grad_y.iter().zip(next.iter().zip(&x)).map(|(g, (a, b))| g * (a - b)).sum();
        let t_next = if uphill > 0.0 { 1.0 } else { 0.5 * (1.0 + libm::sqrt(1.0 + 4.0 * t * t)) };
        let momentum = if uphill > 0.0 { 0.0 } else { (t - 1.0) / t_next };
        y = next.iter().zip(&x).map(|(a, b)| a + momentum * (a - b)).collect();
        x = next;
        t = t_next;
        grad = gradient(&x);
        residual = kkt_residual(&x, &grad);
        iterations += 1;
    }
    Ok(RelaxedSolution { objective: q.objective(&x), c_star: x, iterations, kkt_residual: residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::{gbm_portfolio, portfolio_qubo, GbmConfig};
    use alloc::vec;

    fn identity2() -> Vec<Vec<f64>> {
        vec![vec![1.0, 0.0], vec![0.0, 1.0]]
    }

    #[test]
    fn norm_minimum_at_origin() {
        let q = QuboProblem::new(identity2(), vec![0.0, 0.0]).unwrap();
        let s = solve_qp(&q, QpOptions::default()).unwrap();
        assert!(s.c_star.iter().all(|c| c.abs() < 1e-9));
        assert!(s.objective.abs() < 1e-9);
    }

    #[test]
    fn clipped_unconstrained_optimum() {
        // unconstrained minimizer (2, 0.5); the first coordinate clips to 1
        let q = QuboProblem::new(identity2(), vec![-4.0, -1.0]).unwrap();
        let s = solve_qp(&q, QpOptions::default()).unwrap();
        assert!((s.c_star[0] - 1.0).abs() < 1e-12);
        assert!((s.c_star[1] - 0.5).abs() < 1e-9);
        assert!((s.objective + 3.25).abs() < 1e-9);
    }

    #[test]
    fn linear_objective_goes_to_bounds() {
        let q = QuboProblem::new(vec![vec![0.0; 3]; 3], vec![-1.0, 2.0, 3.0]).unwrap();
        let s = solve_qp(&q, QpOptions::default()).unwrap();
        assert_eq!(s.c_star, vec![1.0, 0.0, 0.0]);
    }

    #[test]
    fn rejects_nonconvex() {
        let q = QuboProblem::new(vec![vec![0.0, 1.0], vec![1.0, 0.0]], vec![0.0, 0.0]).unwrap();
        assert!(matches!(solve_qp(&q, QpOptions::default()), Err(Error::NotConvex { .. })));
    }

    #[test]
    fn reports_iteration_limit() {
        let q = QuboProblem::new(vec![vec![1.0, 0.99], vec![0.99, 1.0]], vec![-1.0, 0.5]).unwrap();
        let r = solve_qp(&q, QpOptions { tol: 1e-12, max_iters: 3 });
        assert!(matches!(r, Err(Error::IterationLimit { iterations: 3, .. })));
    }

    #[test]
    fn heavy_penalty_meets_budget() {
        let p = gbm_portfolio(&GbmConfig::new(6, 3), 2.0, 3, 50.0).unwrap();
        let s = solve_qp(&portfolio_qubo(&p), QpOptions::default()).unwrap();
        let total: f64 = s.c_star.iter().sum();
        assert!((total - 3.0).abs() <= 0.05, "sum {total}");
    }
}
