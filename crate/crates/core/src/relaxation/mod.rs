//! Continuous relaxations and classical randomized rounding.

mod qp;
mod rounding;
mod sdp;

pub use qp::{solve_qp, QpOptions, RelaxedSolution};
pub use rounding::{
    expected_cut_value, gw_alpha, gw_best_cuts, gw_round, gw_samples, ScoredCut,
};
pub use sdp::{solve_maxcut_sdp, GramFactor, SdpOptions, SdpOutcome};
