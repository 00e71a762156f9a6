//! Warm-started quantum optimization, classically simulated.
//!
//! The crate is `no_std` (it needs `alloc`). It contains the problem
//! representations (QUBO, Ising, weighted MAXCUT graphs), the convex box QP
//! and low-rank MAXCUT SDP relaxations with hyperplane rounding, a dense
//! statevector QAOA simulator with warm-start mixers, the derivative-free
//! outer loop, recursive QAOA and the sticky-diffusion rounding schemes.
//!
//! Conventions used throughout:
//!
//! * spins `z_i ∈ {-1, +1}` and bits `x_i = (1 - z_i) / 2`;
//! * qubit `i` is bit `i` (least significant first) of a basis-state index,
//!   and `|1⟩` on qubit `i` means `x_i = 1`, i.e. `z_i = -1`;
//! * every random quantity is drawn from a [`seed`]-derived ChaCha stream.
#![no_std]
#![deny(rust_2018_idioms)]
#![warn(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod diffusion;
mod error;
pub mod linalg;
pub mod problem;
pub mod relaxation;
pub mod rqaoa;
pub mod seed;
pub mod sim;
pub mod variational;

pub use error::{Error, Result};
