//! Classical outer loop: Nelder-Mead local search, grid seeding and the
//! QAOA parameter optimization built on them.

mod grid;
mod nelder_mead;
mod qaoa;

pub use grid::{grid_search, GridPoint, GridSpec};
pub use nelder_mead::{minimize, Minimum, OptimizerConfig, Termination};
pub use qaoa::{run_qaoa, run_qaoa_starts, QaoaResult, Seeding, Target};
