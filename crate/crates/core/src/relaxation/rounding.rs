use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::f64::consts::PI;

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use super::{solve_maxcut_sdp, GramFactor, SdpOptions};
use crate::linalg;
use crate::problem::{CutAssignment, WeightedGraph};
use crate::seed;
use crate::Result;

/// `(2/π) min_{0<θ≤π} θ / (1 - cos θ)`, by golden-section search.
pub fn gw_alpha() -> f64 {
    let f = |t: f64| t / (1.0 - libm::cos(t));
    let inv_phi = (libm::sqrt(5.0) - 1.0) / 2.0;
    let (mut a, mut b) = (1.0, PI);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    while b - a > 1e-12 {
        if f(c) < f(d) {
            b = d;
        } else {
            a = c;
        }
        c = b - inv_phi * (b - a);
        d = a + inv_phi * (b - a);
    }
    2.0 / PI * f(0.5 * (a + b))
}

/// Random-hyperplane rounding: draw `r ~ N(0, I_k)` and set
/// `z_i = +1` iff `rᵀv_i ≥ 0`.
pub fn gw_round<R: Rng + ?Sized>(f: &GramFactor, rng: &mut R) -> CutAssignment {
    let r: Vec<f64> = (0..f.k()).map(|_| StandardNormal.sample(rng)).collect();
    let z = f
        .vectors()
        .iter()
        .map(|v| if linalg::dot(&r, v) >= 0.0 { 1 } else { -1 })
        .collect();
    CutAssignment::new(z).expect("spins are ±1 by construction")
}

/// Expected hyperplane-rounding cut, `(1/π) Σ ω_ij arccos(v_iᵀv_j)`.
pub fn expected_cut_value(g: &WeightedGraph, f: &GramFactor) -> f64 {
    g.edges().iter().map(|e| e.w * libm::acos(f.inner(e.i, e.j))).sum::<f64>() / PI
}

/// `count` independent roundings; draw `d` uses the stream
/// `(seed, "gw-round", [d])`.
pub fn gw_samples(f: &GramFactor, count: usize, seed: u64) -> Vec<CutAssignment> {
    (0..count as u64).map(|d| gw_round(f, &mut seed::rng(seed, "gw-round", &[d]))).collect()
}

/// A cut together with its value on the graph it was generated for.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoredCut {
    pub cut: CutAssignment,
    pub value: f64,
}

/// Solve the SDP once, draw `samples` roundings and keep the `keep` best
/// distinct cuts (canonical form, value descending, ties broken by the
/// canonical ordering).
pub fn gw_best_cuts(
    g: &WeightedGraph,
    samples: usize,
    keep: usize,
    sdp: SdpOptions,
    seed: u64,
) -> Result<(Vec<ScoredCut>, GramFactor)> {
    if keep == 0 || samples < keep {
        return Err(crate::Error::invalid("need samples ≥ keep ≥ 1"));
    }
    let factor = solve_maxcut_sdp(g, sdp, seed::derive(seed, "gw-sdp", &[]))?.factor;
    let mut unique = BTreeMap::new();
    for cut in gw_samples(&factor, samples, seed) {
        let cut = cut.canonical();
        let value = g.cut_value(cut.spins())?;
        unique.entry(cut).or_insert(value);
    }
    let mut scored: Vec<ScoredCut> =
        unique.into_iter().map(|(cut, value)| ScoredCut { cut, value }).collect();
    scored.sort_by(|a, b| b.value.total_cmp(&a.value).then_with(|| a.cut.cmp(&b.cut)));
    scored.truncate(keep);
    Ok((scored, factor))
}
