use alloc::vec::Vec;

use rand::Rng as _;
use rand_distr::{Distribution, StandardNormal};

use super::QuboProblem;
use crate::linalg::{self, Matrix};
use crate::seed;
use crate::{Error, Result};

/// Budget-constrained mean-variance selection
/// `min q xᵀΣx - μᵀx  s.t.  1ᵀx = B`, with the constraint enforced by the
/// penalty `λ (1ᵀx - B)²`.
#[derive(Debug, Clone, PartialEq)]
pub struct PortfolioInstance {
    pub sigma: Matrix,
    pub mu: Vec<f64>,
    pub q: f64,
    pub budget: usize,
    pub lambda: f64,
}

impl PortfolioInstance {
    pub fn new(sigma: Matrix, mu: Vec<f64>, q: f64, budget: usize, lambda: f64) -> Result<Self> {
        let n = mu.len();
        if n == 0 {
            return Err(Error::Empty("portfolio without assets"));
        }
        if !linalg::is_square(&sigma, n) {
            return Err(Error::DimensionMismatch { expected: n, found: sigma.len() });
        }
        if budget > n {
            return Err(Error::invalid("budget exceeds the number of assets"));
        }
        for i in 0..n {
            for j in 0..i {
                if (sigma[i][j] - sigma[j][i]).abs() > 1e-9 {
                    return Err(Error::invalid("covariance matrix is not symmetric"));
                }
            }
        }
        let min_ev = linalg::symmetric_eigenvalues(&sigma)[0];
        if min_ev < -1e-9 {
            return Err(Error::NotConvex { min_eigenvalue: min_ev });
        }
        Ok(Self { sigma, mu, q, budget, lambda })
    }

    pub fn n(&self) -> usize {
        self.mu.len()
    }

    /// `q xᵀΣx - μᵀx + λ(1ᵀx - B)²` evaluated directly.
    pub fn objective(&self, x: &[f64]) -> f64 {
        let risk = linalg::dot(x, &linalg::mat_vec(&self.sigma, x));
        let excess = x.iter().sum::<f64>() - self.budget as f64;
        self.q * risk - linalg::dot(&self.mu, x) + self.lambda * excess * excess
    }
}

/// Penalized QUBO: `Σ' = qΣ + λ11ᵀ`, `μ' = -μ - 2λB·1`, offset `λB²`.
pub fn portfolio_qubo(p: &PortfolioInstance) -> QuboProblem {
    let n = p.n();
    let b = p.budget as f64;
    let sigma = (0..n)
        .map(|i| (0..n).map(|j| p.q * p.sigma[i][j] + p.lambda).collect())
        .collect();
    let mu = p.mu.iter().map(|m| -m - 2.0 * p.lambda * b).collect();
    QuboProblem::with_offset(sigma, mu, p.lambda * b * b).expect("portfolio invariants hold")
}

/// Geometric-Brownian-motion price simulation settings.
#[derive(Debug, Clone, PartialEq)]
pub struct GbmConfig {
    pub n_assets: usize,
    pub n_days: usize,
    /// Drift `μ_i` is drawn uniformly from this range.
    pub mu_range: (f64, f64),
    /// Volatility `σ_i` is drawn uniformly from this range (sign included).
    pub sigma_range: (f64, f64),
    pub seed: u64,
}

impl GbmConfig {
    pub fn new(n_assets: usize, seed: u64) -> Self {
        Self { n_assets, n_days: 250, mu_range: (-0.05, 0.05), sigma_range: (-0.2, 0.2), seed }
    }
}

/// Simulate `n_days` of prices per asset,
/// `S_ik = exp[(μ_i - σ_i²/2) k/N + σ_i W_ik]` with `S_i0 = 1` and an
/// independent random walk `W_ik = Σ_{l≤k} ξ_il / √N` per asset, then use the
/// mean daily return and the sample covariance of daily returns.
pub fn gbm_portfolio(cfg: &GbmConfig, q: f64, budget: usize, lambda: f64) -> Result<PortfolioInstance> {
    let n = cfg.n_assets;
    let days = cfg.n_days;
    if n == 0 {
        return Err(Error::Empty("portfolio without assets"));
    }
    if days < 2 {
        return Err(Error::invalid("need at least two days of prices"));
    }
    let (mlo, mhi) = cfg.mu_range;
    let (slo, shi) = cfg.sigma_range;
    if !(mlo.is_finite() && mhi.is_finite() && slo.is_finite() && shi.is_finite()) || mlo > mhi || slo > shi {
        return Err(Error::invalid("invalid drift or volatility range"));
    }
    let mut rng = seed::rng(cfg.seed, "gbm", &[]);
    let drift: Vec<f64> = (0..n).map(|_| rng.random_range(mlo..=mhi)).collect();
    let vol: Vec<f64> = (0..n).map(|_| rng.random_range(slo..=shi)).collect();
    let nd = days as f64;
    let returns: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut w = 0.0;
            let mut prev = 1.0;
            (1..=days)
                .map(|k| {
                    let xi: f64 = StandardNormal.sample(&mut rng);
                    w += xi / libm::sqrt(nd);
                    let s = libm::exp((drift[i] - 0.5 * vol[i] * vol[i]) * k as f64 / nd + vol[i] * w);
                    let r = s / prev - 1.0;
                    prev = s;
                    r
                })
                .collect()
        })
        .collect();
    let mu: Vec<f64> = returns.iter().map(|r| r.iter().sum::<f64>() / nd).collect();
    let mut sigma = linalg::zeros(n);
    for i in 0..n {
        for j in 0..=i {
            let c = returns[i]
                .iter()
                .zip(&returns[j])
                .map(|(a, b)| (a - mu[i]) * (b - mu[j]))
                .sum::<f64>()
                / (nd - 1.0);
            sigma[i][j] = c;
            sigma[j][i] = c;
        }
    }
    PortfolioInstance::new(sigma, mu, q, budget, lambda)
}
