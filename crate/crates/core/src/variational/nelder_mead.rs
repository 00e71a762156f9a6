use alloc::vec::Vec;

/// Nelder-Mead settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizerConfig {
    pub max_evals: usize,
    /// Simplex diameter (max distance to the best vertex) below which the
    /// search may stop.
    pub x_tolerance: f64,
    /// Spread of simplex values below which the search may stop.
    pub f_tolerance: f64,
    /// Offset of the initial vertices from `x0` along each axis.
    pub initial_simplex_scale: f64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self { max_evals: 2000, x_tolerance: 1e-6, f_tolerance: 1e-10, initial_simplex_scale: 0.1 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    Converged,
    MaxEvals,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub f: f64,
    pub evals: usize,
    pub termination: Termination,
}

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

/// Downhill simplex minimization. The starting point is a vertex of the
/// initial simplex and the best vertex is never replaced by a worse one, so
/// the result never exceeds `f(x0)`. Non-finite values count as `+∞`.
pub fn minimize<F>(mut f: F, x0: &[f64], cfg: &OptimizerConfig) -> Minimum
where
    F: FnMut(&[f64]) -> f64,
{
    let dim = x0.len();
    let mut evals = 0usize;
    let mut eval = |x: &[f64], evals: &mut usize| -> f64 {
        *evals += 1;
        let v = f(x);
        if v.is_finite() {
            v
        } else {
            f64::INFINITY
        }
    };

    let f0 = eval(x0, &mut evals);
    if dim == 0 || cfg.max_evals <= 1 {
        return Minimum { x: x0.to_vec(), f: f0, evals, termination: Termination::MaxEvals };
    }
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    simplex.push((x0.to_vec(), f0));
    for i in 0..dim {
        if evals >= cfg.max_evals {
            break;
        }
        let mut x = x0.to_vec();
        x[i] += cfg.initial_simplex_scale;
        let fx = eval(&x, &mut evals);
        simplex.push((x, fx));
    }
    if simplex.len() < dim + 1 {
        return best_of(simplex, evals, Termination::MaxEvals);
    }

    loop {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let (best, worst) = (simplex[0].1, simplex[dim].1);
        let diameter = simplex[1..]
            .iter()
            .map(|(x, _)| x.iter().zip(&simplex[0].0).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
            .fold(0.0, f64::max);
        if worst - best <= cfg.f_tolerance && diameter <= cfg.x_tolerance {
            return best_of(simplex, evals, Termination::Converged);
        }
        if evals >= cfg.max_evals {
            return best_of(simplex, evals, Termination::MaxEvals);
        }

        let centroid: Vec<f64> = (0..dim)
            .map(|k| simplex[..dim].iter().map(|(x, _)| x[k]).sum::<f64>() / dim as f64)
            .collect();
        let toward = |t: f64| -> Vec<f64> {
            centroid.iter().zip(&simplex[dim].0).map(|(c, w)| c + t * (c - w)).collect()
        };

        let xr = toward(REFLECT);
        let fr = eval(&xr, &mut evals);
        if fr < best {
            let xe = toward(EXPAND);
            let fe = eval(&xe, &mut evals);
            simplex[dim] = if fe < fr { (xe, fe) } else { (xr, fr) };
            continue;
        }
        if fr < simplex[dim - 1].1 {
            simplex[dim] = (xr, fr);
            continue;
        }
        // contraction: outside if the reflection helped at all, inside otherwise
        let (xc, fc) = if fr < worst {
            let xc = toward(CONTRACT * REFLECT);
            let fc = eval(&xc, &mut evals);
            (xc, fc)
        } else {
            let xc = toward(-CONTRACT);
            let fc = eval(&xc, &mut evals);
            (xc, fc)
        };
        if fc < worst.min(fr) {
            simplex[dim] = (xc, fc);
            continue;
        }
        let anchor = simplex[0].0.clone();
        for vertex in simplex.iter_mut().skip(1) {
            if evals >= cfg.max_evals {
                break;
            }
            let x: Vec<f64> = anchor.iter().zip(&vertex.0).map(|(a, v)| a + SHRINK * (v - a)).collect();
            let fx = eval(&x, &mut evals);
            *vertex = (x, fx);
        }
    }
}

fn best_of(simplex: Vec<(Vec<f64>, f64)>, evals: usize, termination: Termination) -> Minimum {
    let (x, f) = simplex
        .into_iter()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("simplex has at least one vertex");
    Minimum { x, f, evals, termination }
}
