use alloc::vec::Vec;

use num_complex::Complex64;

use crate::{Error, Result};

/// Default qubit cap: 2²⁴ amplitudes take 256 MiB.
pub const DEFAULT_MAX_QUBITS: usize = 24;

/// `2ⁿ` complex amplitudes of an `n`-qubit state.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Product state with per-qubit amplitudes `(⟨0|q⟩, ⟨1|q⟩)`.
    pub fn product(qubits: &[[Complex64; 2]], max_qubits: usize) -> Result<Self> {
        let n = qubits.len();
        if n > max_qubits {
            return Err(Error::TooLarge { n, limit: max_qubits });
        }
        let mut amps = alloc::vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[0] = Complex64::new(1.0, 0.0);
        for (q, pair) in qubits.iter().enumerate() {
            let half = 1usize << q;
            for idx in (0..half).rev() {
                let a = amps[idx];
                amps[idx | half] = a * pair[1];
                amps[idx] = a * pair[0];
            }
        }
        Ok(Self { n, amps })
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(n: usize, index: usize, max_qubits: usize) -> Result<Self> {
        if n > max_qubits {
            return Err(Error::TooLarge { n, limit: max_qubits });
        }
        if index >> n != 0 {
            return Err(Error::InvalidIndex { index, n: 1 << n });
        }
        let mut amps = alloc::vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(Self { n, amps })
    }

    /// Arbitrary amplitudes; normalized on construction.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let dim = amps.len();
        if dim == 0 || !dim.is_power_of_two() {
            return Err(Error::invalid("amplitude count must be a power of two"));
        }
        let norm = libm::sqrt(amps.iter().map(Complex64::norm_sqr).sum::<f64>());
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::invalid("state has zero or non-finite norm"));
        }
        let amps = amps.into_iter().map(|a| a / norm).collect();
        Ok(Self { n: dim.trailing_zeros() as usize, amps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(Complex64::norm_sqr).sum()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(Complex64::norm_sqr).collect()
    }
}
