use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{maxcut_to_ising, CutAssignment, IsingModel, WeightedGraph};
use crate::{Error, Result};

/// Largest spin count accepted by [`brute_force`].
pub const BRUTE_FORCE_LIMIT: usize = 30;

/// Exact ground state of an Ising model.
#[derive(Debug, Clone, PartialEq)]
pub struct GroundState {
    pub z: CutAssignment,
    pub energy: f64,
}

/// Exhaustive minimization over `{-1,+1}ⁿ`.
///
/// Assignments are visited in Gray-code order with O(degree) energy updates.
/// Among energies equal within a relative `1e-9`, the lexicographically
/// smallest bit vector `(x_0, x_1, ...)` wins.
pub fn brute_force(ising: &IsingModel) -> Result<GroundState> {
    let n = ising.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { n, limit: BRUTE_FORCE_LIMIT });
    }
    let mut adj: Vec<Vec<(usize, f64)>> = alloc::vec![Vec::new(); n];
    for (&(i, j), &w) in ising.couplings() {
        adj[i].push((j, w));
        adj[j].push((i, w));
    }
    let h = ising.fields();
    let mut z = alloc::vec![1.0f64; n];
    let mut bits = alloc::vec![false; n];
    let mut energy = ising.energy(&z);
    let mut best_energy = energy;
    let mut best_bits = bits.clone();

    for step in 1u64..(1u64 << n) {
        let i = step.trailing_zeros() as usize;
        let local: f64 = h[i] + adj[i].iter().map(|&(j, w)| w * z[j]).sum::<f64>();
        energy -= 2.0 * z[i] * local;
        z[i] = -z[i];
        bits[i] = !bits[i];
        let tol = 1e-9 * best_energy.abs().max(1.0);
        if energy < best_energy - tol
            || (energy <= best_energy + tol && bits.cmp(&best_bits) == Ordering::Less)
        {
            best_energy = energy;
            best_bits.clone_from(&bits);
        }
    }
    let z = CutAssignment::from_bits(&best_bits);
    let energy = ising.energy(&z.spins_f64());
    Ok(GroundState { z, energy })
}

/// Maximum cut and its value; the returned cut is canonical (`z_0 = +1`).
pub fn brute_force_maxcut(g: &WeightedGraph) -> Result<(CutAssignment, f64)> {
    let gs = brute_force(&maxcut_to_ising(g))?;
    let value = g.cut_value(gs.z.spins())?;
    Ok((gs.z.canonical(), value))
}
