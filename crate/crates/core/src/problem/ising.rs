use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::WeightedGraph;
use crate::{Error, Result};

/// Diagonal cost Hamiltonian
/// `E(z) = offset + Σ_i h_i z_i + Σ_{i<j} J_ij z_i z_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct IsingModel {
    n: usize,
    couplings: BTreeMap<(usize, usize), f64>,
    fields: Vec<f64>,
    offset: f64,
}

impl IsingModel {
    /// Couplings given in either index order are stored with `i < j`;
    /// repeated pairs are summed.
    pub fn new(
        n: usize,
        couplings: impl IntoIterator<Item = (usize, usize, f64)>,
        fields: Vec<f64>,
        offset: f64,
    ) -> Result<Self> {
        if fields.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: fields.len() });
        }
        let mut map = BTreeMap::new();
        for (a, b, w) in couplings {
            if a == b {
                return Err(Error::invalid("self-coupling in Ising model"));
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if j >= n {
                return Err(Error::InvalidIndex { index: j, n });
            }
            if !w.is_finite() {
                return Err(Error::invalid("non-finite coupling"));
            }
            *map.entry((i, j)).or_insert(0.0) += w;
        }
        if !offset.is_finite() || !fields.iter().all(|h| h.is_finite()) {
            return Err(Error::invalid("non-finite field or offset"));
        }
        Ok(Self { n, couplings: map, fields, offset })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn couplings(&self) -> &BTreeMap<(usize, usize), f64> {
        &self.couplings
    }

    pub fn fields(&self) -> &[f64] {
        &self.fields
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn energy(&self, z: &[f64]) -> f64 {
        debug_assert_eq!(z.len(), self.n);
        let mut e = self.offset;
        for (h, zi) in self.fields.iter().zip(z) {
            e += h * zi;
        }
        for (&(i, j), &w) in &self.couplings {
            e += w * z[i] * z[j];
        }
        e
    }

    /// Energy of the basis state `index` (qubit `i` is bit `i`).
    pub fn energy_of_index(&self, index: usize) -> f64 {
        let z: Vec<f64> = (0..self.n).map(|i| super::spin(index >> i & 1 == 1)).collect();
        self.energy(&z)
    }

    /// Energies of all `2ⁿ` basis states, indexed as in the statevector.
    pub fn diagonal(&self) -> Vec<f64> {
        let dim = 1usize << self.n;
        let mut diag = alloc::vec![self.offset; dim];
        for (idx, e) in diag.iter_mut().enumerate() {
            for (i, h) in self.fields.iter().enumerate() {
                if *h != 0.0 {
                    *e += if idx >> i & 1 == 1 { -h } else { *h };
                }
            }
            for (&(i, j), &w) in &self.couplings {
                let parity = (idx >> i ^ idx >> j) & 1;
                *e += if parity == 1 { -w } else { w };
            }
        }
        diag
    }
}

/// Ising form of MAXCUT whose energy is minus the cut value:
/// `J_ij = ω_ij/2`, `offset = -½ Σ ω_ij`.
pub fn maxcut_to_ising(g: &WeightedGraph) -> IsingModel {
    let offset = -0.5 * g.total_weight();
    let couplings = g.edges().iter().map(|e| (e.i, e.j, 0.5 * e.w));
    IsingModel::new(g.n(), couplings, alloc::vec![0.0; g.n()], offset)
        .expect("graph invariants guarantee valid couplings")
}
