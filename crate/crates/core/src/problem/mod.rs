//! Problem representations and conversions: QUBO, Ising, weighted MAXCUT
//! graphs, budget-constrained portfolios, graph reduction and an exhaustive
//! ground-state oracle.

mod brute;
mod cut;
mod graph;
mod ising;
mod portfolio;
mod qubo;

pub use brute::{brute_force, brute_force_maxcut, GroundState, BRUTE_FORCE_LIMIT};
pub use cut::CutAssignment;
pub use graph::{complete_graph, random_graph, reduce_maxcut, Edge, WeightedGraph};
pub use ising::{maxcut_to_ising, IsingModel};
pub use portfolio::{gbm_portfolio, portfolio_qubo, GbmConfig, PortfolioInstance};
pub use qubo::{qubo_to_ising, QuboProblem};

/// Spin of bit `b` (`0 → +1`, `1 → -1`).
#[inline]
pub fn spin(bit: bool) -> f64 {
    if bit {
        -1.0
    } else {
        1.0
    }
}
