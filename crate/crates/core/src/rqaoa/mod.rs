//! Recursive QAOA on MAXCUT: depth-one correlators pick a pair of nodes,
//! the strongest correlation is imposed as `z_i = ±z_j`, and the reduced
//! graph is solved again until it is small enough to enumerate.

mod correlation;
mod eliminate;
mod recursion;

pub use correlation::{aggregate_correlations, correlation_matrix_depth1, CorrelationMatrix};
pub use eliminate::{eliminate, select_pair, Elimination, EliminationRecord};
pub use recursion::{
    run_classical_recursive_gw, run_rqaoa, IterationTrace, RqaoaConfig, RqaoaMode, RqaoaOutcome,
};
