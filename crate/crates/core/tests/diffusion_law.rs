//! Monte Carlo checks of the sticky diffusion at reduced sample sizes.

use wsqopt_core::diffusion::{correlation_report, simulate_signs, DiffusionConfig, SpeedFunction};
use wsqopt_core::problem::WeightedGraph;
use wsqopt_core::relaxation::GramFactor;

fn pair(rho: f64) -> GramFactor {
    let g = WeightedGraph::new(2, Vec::new()).unwrap();
    let u = vec![1.0, 0.0, 0.0];
    let v = vec![rho, (1.0 - rho * rho).sqrt(), 0.0];
    GramFactor::new(&g, vec![u, v]).unwrap()
}

fn arcsin_law(rho: f64) -> f64 {
    2.0 / std::f64::consts::PI * rho.asin()
}

#[test]
fn krivine_signs_follow_the_arcsin_law() {
    for (k, rho) in [-0.7, 0.0, 0.4].into_iter().enumerate() {
        let f = pair(rho);
        let cfg = DiffusionConfig { dt: 2e-3, trajectories: 3000, seed: k as u64, ..Default::default() };
        let s = simulate_signs(&f, SpeedFunction::Krivine, &cfg).unwrap();
        let r = correlation_report(&s, &f, &[(0, 1)]).unwrap()[0];
        assert!((r.predicted - arcsin_law(rho)).abs() < 1e-12);
        assert!(r.abs_err <= 4.0 * r.stderr + 0.01, "{r:?}");
        assert!(s.truncated_fraction() <= 0.01);
    }
}

#[test]
fn halving_dt_is_within_monte_carlo_noise() {
    let f = pair(0.5);
    let run = |dt: f64| {
        let cfg = DiffusionConfig { dt, trajectories: 3000, seed: 9, ..Default::default() };
        let s = simulate_signs(&f, SpeedFunction::Krivine, &cfg).unwrap();
        correlation_report(&s, &f, &[(0, 1)]).unwrap()[0]
    };
    let (coarse, fine) = (run(4e-3), run(2e-3));
    let se = (coarse.stderr.powi(2) + fine.stderr.powi(2)).sqrt();
    assert!((coarse.empirical - fine.empirical).abs() <= 3.0 * se, "{coarse:?} {fine:?}");
}

#[test]
fn polynomial_speed_signs_are_valid_and_symmetric() {
    let f = pair(0.0);
    let cfg = DiffusionConfig { dt: 2e-3, trajectories: 2000, seed: 3, ..Default::default() };
    let s = simulate_signs(&f, SpeedFunction::Polynomial(1.0), &cfg).unwrap();
    let mut plus = 0usize;
    for t in 0..s.trajectories() {
        assert!(s.row(t).iter().all(|&x| x == 1 || x == -1));
        plus += usize::from(s.sign(t, 0) == 1);
    }
    // fair coin: 2000 flips stay within 5 standard deviations of 1000
    assert!((plus as f64 - 1000.0).abs() < 5.0 * 500f64.sqrt());
}
