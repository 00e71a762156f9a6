use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::{Error, Result};

/// Spin assignment `z ∈ {-1, +1}ⁿ` describing a cut.
///
/// Ordering is lexicographic on the bit vector `x_i = (1 - z_i)/2`,
/// comparing `x_0` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CutAssignment {
    z: Vec<i8>,
}

impl CutAssignment {
    pub fn new(z: Vec<i8>) -> Result<Self> {
        if z.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::invalid("spins must be ±1"));
        }
        Ok(Self { z })
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        Self { z: bits.iter().map(|&b| if b { -1 } else { 1 }).collect() }
    }

    /// Cut encoded by basis-state index `idx` over `n` qubits.
    pub fn from_index(idx: usize, n: usize) -> Self {
        Self { z: (0..n).map(|i| if idx >> i & 1 == 1 { -1 } else { 1 }).collect() }
    }

    pub fn n(&self) -> usize {
        self.z.len()
    }

    pub fn spins(&self) -> &[i8] {
        &self.z
    }

    pub fn spins_f64(&self) -> Vec<f64> {
        self.z.iter().map(|&s| f64::from(s)).collect()
    }

    pub fn bits(&self) -> Vec<bool> {
        self.z.iter().map(|&s| s == -1).collect()
    }

    /// Basis-state index (qubit `i` is bit `i`).
    pub fn index(&self) -> usize {
        self.z
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == -1)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn complement(&self) -> Self {
        Self { z: self.z.iter().map(|&s| -s).collect() }
    }

    /// Representative with `z_0 = +1`.
    pub fn canonical(&self) -> Self {
        match self.z.first() {
            Some(&-1) => self.complement(),
            _ => self.clone(),
        }
    }

    pub fn same_cut(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl PartialOrd for CutAssignment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CutAssignment {
    fn cmp(&self, other: &Self) -> Ordering {
        // +1 (bit 0) sorts before -1 (bit 1)
        other.z.cmp(&self.z)
    }
}
