use alloc::vec::Vec;

use rand_distr::{Distribution, StandardNormal};

use crate::linalg;
use crate::problem::WeightedGraph;
use crate::seed;
use crate::{Error, Result};

/// Unit vectors `v_i ∈ S^{k-1}` (rows) forming a feasible point `Y = VVᵀ` of
/// the MAXCUT semidefinite relaxation, with its objective
/// `½ Σ ω_ij (1 - v_iᵀv_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GramFactor {
    vectors: Vec<Vec<f64>>,
    objective: f64,
}

impl GramFactor {
    /// Rows must have unit norm within `1e-9` and a common dimension `k ≥ 1`.
    pub fn new(g: &WeightedGraph, vectors: Vec<Vec<f64>>) -> Result<Self> {
        if vectors.len() != g.n() {
            return Err(Error::DimensionMismatch { expected: g.n(), found: vectors.len() });
        }
        let k = vectors.first().map_or(1, Vec::len);
        if k == 0 {
            return Err(Error::invalid("Gram vectors need dimension k ≥ 1"));
        }
        for v in &vectors {
            if v.len() != k {
                return Err(Error::DimensionMismatch { expected: k, found: v.len() });
            }
            if (linalg::norm(v) - 1.0).abs() > 1e-9 {
                return Err(Error::invalid("Gram vectors must have unit norm"));
            }
        }
        let objective = relaxation_value(g, &vectors);
        Ok(Self { vectors, objective })
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    pub fn k(&self) -> usize {
        self.vectors.first().map_or(0, Vec::len)
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    pub fn objective(&self) -> f64 {
        self.objective
    }

    /// `v_iᵀ v_j` clamped to `[-1, 1]`.
    pub fn inner(&self, i: usize, j: usize) -> f64 {
        linalg::dot(&self.vectors[i], &self.vectors[j]).clamp(-1.0, 1.0)
    }
}

fn relaxation_value(g: &WeightedGraph, v: &[Vec<f64>]) -> f64 {
    g.edges().iter().map(|e| 0.5 * e.w * (1.0 - linalg::dot(&v[e.i], &v[e.j]))).sum()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SdpOptions {
    /// Factor rank; `None` picks `ceil(sqrt(2n))` (at least 2).
    pub rank: Option<usize>,
    /// Bound on the stationarity residual `max_i ‖g_i + ‖g_i‖ v_i‖`.
    pub tol: f64,
    pub max_sweeps: usize,
}

impl Default for SdpOptions {
    fn default() -> Self {
        Self { rank: None, tol: 1e-9, max_sweeps: 200_000 }
    }
}

impl SdpOptions {
    pub fn rank_for(&self, n: usize) -> usize {
        self.rank.unwrap_or_else(|| (libm::ceil(libm::sqrt(2.0 * n as f64)) as usize).max(2))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SdpOutcome {
    pub factor: GramFactor,
    pub sweeps: usize,
    pub residual: f64,
    /// `false` when `max_sweeps` ran out before the residual reached `tol`;
    /// the factor is then the last iterate.
    pub converged: bool,
}

/// Low-rank coordinate ascent on the MAXCUT relaxation: every sweep sets
/// `v_i ← -g_i / ‖g_i‖` with `g_i = Σ_j ω_ij v_j`, starting from a seeded
/// random factor. A vanishing `g_i` leaves `v_i` unchanged.
pub fn solve_maxcut_sdp(g: &WeightedGraph, opts: SdpOptions, seed: u64) -> Result<SdpOutcome> {
    let n = g.n();
    let k = opts.rank_for(n);
    if k == 0 {
        return Err(Error::invalid("rank must be at least 1"));
    }
    let adj = g.adjacency();
    let mut rng = seed::rng(seed, "sdp-init", &[]);
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|_| loop {
            let mut row: Vec<f64> = (0..k).map(|_| StandardNormal.sample(&mut rng)).collect();
            let nr = linalg::norm(&row);
            if nr > 1e-12 {
                row.iter_mut().for_each(|x| *x /= nr);
                break row;
            }
        })
        .collect();

    let mut field = alloc::vec![0.0; k];
    let weighted_sum = |v: &[Vec<f64>], i: usize, out: &mut [f64]| {
        out.iter_mut().for_each(|x| *x = 0.0);
        for &(j, w) in &adj[i] {
            for (o, x) in out.iter_mut().zip(&v[j]) {
                *o += w * x;
            }
        }
    };
    let stationarity = |v: &[Vec<f64>], field: &mut [f64]| -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..n {
            weighted_sum(v, i, field);
            let gn = linalg::norm(field);
            let r: f64 = field.iter().zip(&v[i]).map(|(gk, vk)| (gk + gn * vk) * (gk + gn * vk)).sum();
            worst = worst.max(libm::sqrt(r));
        }
        worst
    };

    let mut residual = stationarity(&v, &mut field);
    let mut sweeps = 0;
    while residual > opts.tol && sweeps < opts.max_sweeps {
        for i in 0..n {
            weighted_sum(&v, i, &mut field);
            let gn = linalg::norm(&field);
            if gn > 1e-300 {
                for (vk, gk) in v[i].iter_mut().zip(&field) {
                    *vk = -gk / gn;
                }
            }
        }
        sweeps += 1;
        residual = stationarity(&v, &mut field);
    }
    let objective = relaxation_value(g, &v);
    Ok(SdpOutcome {
        factor: GramFactor { vectors: v, objective },
        sweeps,
        residual,
        converged: residual <= opts.tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::{brute_force_maxcut, random_graph};
    use alloc::vec;

    #[test]
    fn single_edge_is_antipodal() {
        let g = WeightedGraph::new(2, vec![(0, 1, 1.0)]).unwrap();
        let out = solve_maxcut_sdp(&g, SdpOptions::default(), 1).unwrap();
        assert!(out.converged);
        assert!((out.factor.objective() - 1.0).abs() < 1e-9);
        assert!((out.factor.inner(0, 1) + 1.0).abs() < 1e-9);
    }

    #[test]
    fn unit_triangle_at_120_degrees() {
        // oracle: three unit vectors at a common pairwise angle θ exist iff
        // cos θ ≥ -1/2; maximize ½·3·(1 - cos θ) over that range
        let oracle = (0..=300_000)
            .map(|s| core::f64::consts::PI * s as f64 / 300_000.0)
            .filter(|&t| libm::cos(t) >= -0.5 - 1e-9)
            .map(|t| 1.5 * (1.0 - libm::cos(t)))
            .fold(0.0, f64::max);
        let g = WeightedGraph::new(3, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        let out = solve_maxcut_sdp(&g, SdpOptions::default(), 4).unwrap();
        assert!((oracle - 2.25).abs() < 1e-6);
        assert!((out.factor.objective() - oracle).abs() < 1e-6);
        assert!((out.factor.objective() - 2.25).abs() < 1e-8);
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            assert!((out.factor.inner(i, j) + 0.5).abs() < 1e-6);
        }
    }

    #[test]
    fn upper_bounds_max_cut() {
        for s in 0..100 {
            let g = random_graph(8, 0.6, &[1.0, 2.0, 3.0], s).unwrap();
            let out = solve_maxcut_sdp(&g, SdpOptions::default(), s).unwrap();
            let (_, best) = brute_force_maxcut(&g).unwrap();
            assert!(out.factor.objective() >= best - 1e-6, "seed {s}");
        }
    }

    #[test]
    fn factor_validation() {
        let g = WeightedGraph::new(2, vec![(0, 1, 1.0)]).unwrap();
        assert!(GramFactor::new(&g, vec![vec![1.0, 0.0], vec![0.5, 0.0]]).is_err());
        assert!(GramFactor::new(&g, vec![vec![1.0, 0.0]]).is_err());
        let f = GramFactor::new(&g, vec![vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert!((f.objective() - 0.5).abs() < 1e-15);
    }
}
