use num_complex::Complex64;

use super::{MixerSpec, Unitary2};
use crate::problem::WeightedGraph;
use crate::{Error, Result};

type Mat4 = [[Complex64; 4]; 4];

/// Spin of qubit `i` (`bit 0`) or `j` (`bit 1`) in the two-qubit basis index.
fn spin(idx: usize, bit: usize) -> f64 {
    if idx >> bit & 1 == 1 {
        -1.0
    } else {
        1.0
    }
}

fn phase(phi: f64) -> Complex64 {
    Complex64::new(libm::cos(phi), libm::sin(phi))
}

/// `⟨Z_i Z_j⟩` of the depth-one state on the MAXCUT Hamiltonian of `g`
/// (couplings `ω/2`), computed from the 4×4 density matrix of qubits `i`
/// and `j` alone.
///
/// Steps: product state of `i, j`; the single-qubit phases from all other
/// neighbours aggregated into one diagonal; for every other qubit `k` the
/// mixture `(1-c_k) ρ + c_k U_ijk ρ U_ijk†`; the `ZZ` phase of edge `(i,j)`;
/// the mixers on `i` and `j`; trace against `Z⊗Z`. Diagonal steps act
/// entrywise on `ρ`. Mixers of other qubits cancel in the partial trace.
pub fn depth1_correlator(
    g: &WeightedGraph,
    mixer: &MixerSpec,
    beta: f64,
    gamma: f64,
    i: usize,
    j: usize,
) -> Result<f64> {
    let n = g.n();
    if mixer.n() != n {
        return Err(Error::DimensionMismatch { expected: n, found: mixer.n() });
    }
    for idx in [i, j] {
        if idx >= n {
            return Err(Error::InvalidIndex { index: idx, n });
        }
    }
    if i == j {
        return Err(Error::invalid("correlator needs two distinct qubits"));
    }
    let weights = g.weight_matrix();
    Ok(correlator_with_weights(&weights, mixer, beta, gamma, i, j))
}

pub(crate) fn correlator_with_weights(
    w: &[alloc::vec::Vec<f64>],
    mixer: &MixerSpec,
    beta: f64,
    gamma: f64,
    i: usize,
    j: usize,
) -> f64 {
    let n = w.len();
    let c_tilde = mixer.angles().clamped();
    let qi = mixer.initial_qubit(i);
    let qj = mixer.initial_qubit(j);
    let psi: [Complex64; 4] = core::array::from_fn(|a| qi[a & 1] * qj[a >> 1 & 1]);

    // aggregated single-qubit phases exp(-iγ s Σ_k J_·k), J = ω/2
    let (mut sum_i, mut sum_j) = (0.0, 0.0);
    for k in (0..n).filter(|&k| k != i && k != j) {
        sum_i += 0.5 * w[i][k];
        sum_j += 0.5 * w[j][k];
    }
    let psi: [Complex64; 4] = core::array::from_fn(|a| {
        psi[a] * phase(-gamma * (sum_i * spin(a, 0) + sum_j * spin(a, 1)))
    });
    let mut rho: Mat4 = core::array::from_fn(|a| core::array::from_fn(|b| psi[a] * psi[b].conj()));

    // qubit k in |1⟩ (spin -1) flips the sign of its phase: U_ijk = exp(iγ(ω_ik s_i + ω_jk s_j))
    for k in (0..n).filter(|&k| k != i && k != j) {
        let (wik, wjk) = (w[i][k], w[j][k]);
        if wik == 0.0 && wjk == 0.0 {
            continue;
        }
        let u: [Complex64; 4] =
            core::array::from_fn(|a| phase(gamma * (wik * spin(a, 0) + wjk * spin(a, 1))));
        for a in 0..4 {
            for b in 0..4 {
                rho[a][b] *= (1.0 - c_tilde[k]) + c_tilde[k] * u[a] * u[b].conj();
            }
        }
    }

    // edge (i, j): exp(-iγ (ω_ij/2) s_i s_j)
    let u: [Complex64; 4] = core::array::from_fn(|a| phase(-gamma * 0.5 * w[i][j] * spin(a, 0) * spin(a, 1)));
    for a in 0..4 {
        for b in 0..4 {
            rho[a][b] *= u[a] * u[b].conj();
        }
    }

    let m = kron(&mixer.unitary(i, beta), &mixer.unitary(j, beta));
    let rho = conjugate(&m, &rho);
    (0..4).map(|a| rho[a][a].re * spin(a, 0) * spin(a, 1)).sum()
}

/// `U_i ⊗ U_j` in the basis `a = bit_i + 2·bit_j`.
fn kron(ui: &Unitary2, uj: &Unitary2) -> Mat4 {
    core::array::from_fn(|a| core::array::from_fn(|b| ui[a & 1][b & 1] * uj[a >> 1][b >> 1]))
}

fn conjugate(m: &Mat4, rho: &Mat4) -> Mat4 {
    let mut tmp = [[Complex64::new(0.0, 0.0); 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            tmp[a][b] = (0..4).map(|c| m[a][c] * rho[c][b]).sum();
        }
    }
    core::array::from_fn(|a| core::array::from_fn(|b| (0..4).map(|c| tmp[a][c] * m[b][c].conj()).sum()))
}
