//! Sticky Brownian rounding: every node follows `dW_i = φ(W_i) v_iᵀ dB`
//! with one Brownian motion shared by all nodes, until it sticks at `±1`.

mod normal;
mod report;
mod speed;
mod sticky;

pub use normal::{normal_cdf, normal_quantile};
pub use report::{correlation_report, PairReport};
pub use speed::{krivine_speed, poly_speed, SpeedFunction};
pub use sticky::{simulate_range, simulate_signs, DiffusionConfig, SignSamples};
