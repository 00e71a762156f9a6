use num_complex::Complex64;

use super::WarmStartAngles;
use crate::{Error, Result};

/// 2×2 complex matrix, row major.
pub type Unitary2 = [[Complex64; 2]; 2];

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn mul(a: &Unitary2, b: &Unitary2) -> Unitary2 {
    let mut out = [[c(0.0, 0.0); 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, o) in row.iter_mut().enumerate() {
            *o = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

fn ry(theta: f64) -> Unitary2 {
    let (s, co) = (libm::sin(0.5 * theta), libm::cos(0.5 * theta));
    [[c(co, 0.0), c(-s, 0.0)], [c(s, 0.0), c(co, 0.0)]]
}

fn rz(phi: f64) -> Unitary2 {
    let (s, co) = (libm::sin(0.5 * phi), libm::cos(0.5 * phi));
    [[c(co, -s), c(0.0, 0.0)], [c(0.0, 0.0), c(co, s)]]
}

/// Mixer families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MixerKind {
    /// `exp(-iβ H_M)` with `H_M = -Σ X_i`; starts from `|+⟩ⁿ`.
    Standard,
    /// `R_Y(θ_i) R_Z(-2β) R_Y(-θ_i)` per qubit; the warm-start state is its
    /// ground state.
    WarmStart,
    /// `R_Y(-θ_i) R_Z(-2β) R_Y(θ_i)` per qubit (off-diagonal signs flipped).
    WarmStartRounded,
}

/// Mixer kind with the angles it acts with. The initial state of a QAOA
/// circuit is the product state built from the same angles.
#[derive(Debug, Clone, PartialEq)]
pub struct MixerSpec {
    kind: MixerKind,
    angles: WarmStartAngles,
}

impl MixerSpec {
    pub fn standard(n: usize) -> Self {
        Self { kind: MixerKind::Standard, angles: WarmStartAngles::uniform(n) }
    }

    pub fn warm(kind: MixerKind, angles: WarmStartAngles) -> Self {
        match kind {
            MixerKind::Standard => Self::standard(angles.n()),
            _ => Self { kind, angles },
        }
    }

    /// Builds the spec for `kind`; warm kinds need `c*`.
    pub fn new(kind: MixerKind, n: usize, c_star: Option<&[f64]>, epsilon: f64) -> Result<Self> {
        match (kind, c_star) {
            (MixerKind::Standard, _) => Ok(Self::standard(n)),
            (_, None) => Err(Error::invalid("warm-start mixers need a relaxed solution")),
            (_, Some(c)) if c.len() != n => {
                Err(Error::DimensionMismatch { expected: n, found: c.len() })
            }
            (_, Some(c)) => Ok(Self::warm(kind, WarmStartAngles::new(c, epsilon)?)),
        }
    }

    pub fn kind(&self) -> MixerKind {
        self.kind
    }

    pub fn angles(&self) -> &WarmStartAngles {
        &self.angles
    }

    pub fn n(&self) -> usize {
        self.angles.n()
    }

    /// Per-qubit initial amplitudes `(cos θ/2, sin θ/2)`.
    pub fn initial_qubit(&self, q: usize) -> [Complex64; 2] {
        let t = self.angles.theta()[q];
        [c(libm::cos(0.5 * t), 0.0), c(libm::sin(0.5 * t), 0.0)]
    }

    /// Single-qubit mixer unitary on qubit `q` for angle `beta`.
    pub fn unitary(&self, q: usize, beta: f64) -> Unitary2 {
        let t = self.angles.theta()[q];
        match self.kind {
            MixerKind::Standard => {
                let (s, co) = (libm::sin(beta), libm::cos(beta));
                [[c(co, 0.0), c(0.0, s)], [c(0.0, s), c(co, 0.0)]]
            }
            MixerKind::WarmStart => mul(&ry(t), &mul(&rz(-2.0 * beta), &ry(-t))),
            MixerKind::WarmStartRounded => mul(&ry(-t), &mul(&rz(-2.0 * beta), &ry(t))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed;
    use rand::Rng;

    fn dagger(u: &Unitary2) -> Unitary2 {
        [[u[0][0].conj(), u[1][0].conj()], [u[0][1].conj(), u[1][1].conj()]]
    }

    fn dist(a: &Unitary2, b: &Unitary2) -> f64 {
        let mut s = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                s += (a[i][j] - b[i][j]).norm_sqr();
            }
        }
        libm::sqrt(s)
    }

    const I2: Unitary2 = [[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)], [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]];

    #[test]
    fn unitarity_for_random_angles() {
        let mut rng = seed::rng(0, "mixer", &[]);
        for _ in 0..200 {
            let c_star = [rng.random::<f64>()];
            let beta = rng.random_range(-4.0..4.0);
            for kind in [MixerKind::Standard, MixerKind::WarmStart, MixerKind::WarmStartRounded] {
                let m = MixerSpec::new(kind, 1, Some(&c_star), 0.1).unwrap();
                let u = m.unitary(0, beta);
                assert!(dist(&mul(&dagger(&u), &u), &I2) < 1e-12);
            }
        }
    }

    #[test]
    fn zero_beta_is_identity() {
        for kind in [MixerKind::Standard, MixerKind::WarmStart, MixerKind::WarmStartRounded] {
            let m = MixerSpec::new(kind, 1, Some(&[0.3]), 0.0).unwrap();
            assert!(dist(&m.unitary(0, 0.0), &I2) < 1e-15);
        }
    }

    #[test]
    fn warm_hamiltonian_matches_rotation_axis() {
        // H = [[2c-1, -2√(c(1-c))], [-2√(c(1-c)), 1-2c]] = -sin θ X - cos θ Z,
        // and exp(-iβH) = cos β I - i sin β H.
        let mut rng = seed::rng(1, "mixer", &[]);
        for _ in 0..100 {
            let cs: f64 = rng.random();
            let beta = rng.random_range(-3.0..3.0);
            let m = MixerSpec::new(MixerKind::WarmStart, 1, Some(&[cs]), 0.0).unwrap();
            let t = m.angles().theta()[0];
            let off = -2.0 * libm::sqrt(cs * (1.0 - cs));
            let h = [[2.0 * cs - 1.0, off], [off, 1.0 - 2.0 * cs]];
            let axis = [[-libm::cos(t), -libm::sin(t)], [-libm::sin(t), libm::cos(t)]];
            let mut expm = [[c(0.0, 0.0); 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    assert!((h[i][j] - axis[i][j]).abs() < 1e-12);
                    let id = if i == j { 1.0 } else { 0.0 };
                    expm[i][j] = c(libm::cos(beta) * id, -libm::sin(beta) * h[i][j]);
                }
            }
            assert!(dist(&expm, &m.unitary(0, beta)) < 1e-12);
        }
    }

    #[test]
    fn warm_kinds_need_relaxed_solution() {
        assert!(MixerSpec::new(MixerKind::WarmStart, 2, None, 0.0).is_err());
        assert!(MixerSpec::new(MixerKind::WarmStart, 2, Some(&[0.1]), 0.0).is_err());
        assert!(MixerSpec::new(MixerKind::Standard, 2, None, 0.0).is_ok());
    }
}
