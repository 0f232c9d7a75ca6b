//! Two-qubit pure states, concurrence, Bell-state generation and the
//! entangling-gate detector.
//!
//! A gate is entangling when it maps some product state to a state that is
//! not a product; together with local unitaries such a gate is universal.
//! The detector certifies "entangling" with an explicit witness. A negative
//! verdict only means no sampled product state became entangled.

use num_complex::Complex64;
// float math on targets without std
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::eightvertex::{build_b_phi, build_r_theta, Sign};
use crate::linalg::{c64, unitarity_residual, Dim, Matrix};
use crate::{Error, Result};

/// Allowed deviation of `Σ|a|²` from 1.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// Gates with a larger unitarity residual are rejected.
pub const UNITARITY_TOLERANCE: f64 = 1e-10;

/// Concurrence above this counts as entangled.
pub const DEFAULT_THRESHOLD: f64 = 1e-9;

/// Seed for the pseudorandom product states in [`is_entangling`].
pub const DEFAULT_SEED: u64 = 0x5EED;

/// Number of pseudorandom product states sampled after the Pauli grid.
pub const RANDOM_PRODUCT_STATES: usize = 64;

/// Normalized two-qubit state, amplitudes ordered `|00⟩, |01⟩, |10⟩, |11⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureState2Q {
    amps: [Complex64; 4],
}

impl PureState2Q {
    /// Fails with [`Error::NotNormalized`] unless `|Σ|a|² − 1| <= 1e-12`.
    pub fn new(amps: [Complex64; 4]) -> Result<Self> {
        let n: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (n - 1.0).abs() > NORM_TOLERANCE || !n.is_finite() {
            return Err(Error::NotNormalized);
        }
        Ok(PureState2Q { amps })
    }

    /// Rescales `amps` to unit norm.
    pub fn normalized(amps: [Complex64; 4]) -> Result<Self> {
        let n: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::NotNormalized);
        }
        Ok(PureState2Q {
            amps: amps.map(|a| a / n),
        })
    }

    /// Computational basis state `|index⟩`, `index` in `0..4`.
    pub fn basis(index: usize) -> Result<Self> {
        if index >= 4 {
            return Err(Error::BasisIndexOutOfRange(index));
        }
        let mut amps = [Complex64::zero(); 4];
        amps[index] = c64(1.0, 0.0);
        Ok(PureState2Q { amps })
    }

    /// `|u⟩ ⊗ |v⟩` for normalized single-qubit states.
    pub fn product(u: [Complex64; 2], v: [Complex64; 2]) -> Result<Self> {
        Self::new([u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]])
    }

    /// Amplitudes.
    pub fn amplitudes(&self) -> &[Complex64; 4] {
        &self.amps
    }

    /// `Σ|a|²`.
    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Max-entry distance to `other`.
    pub fn distance(&self, other: &PureState2Q) -> f64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .fold(0.0, |acc, (a, b)| acc.max((a - b).norm()))
    }
}

/// `g·ψ` for a unitary 4×4 gate.
pub fn apply_gate(g: &Matrix, psi: &PureState2Q) -> Result<PureState2Q> {
    if g.shape() != Dim::D4 {
        return Err(Error::DimMismatch {
            expected: 4,
            found: g.dim(),
        });
    }
    if unitarity_residual(g) > UNITARITY_TOLERANCE {
        return Err(Error::NonUnitaryGate);
    }
    Ok(PureState2Q {
        amps: g.apply(&psi.amps),
    })
}

/// `b±(φ)|k⟩`: a maximally entangled state for every basis input.
pub fn bell_from_b(sign: Sign, phi: f64, basis_index: usize) -> Result<PureState2Q> {
    apply_gate(&build_b_phi(sign, phi), &PureState2Q::basis(basis_index)?)
}

/// `Ř±(θ)|k⟩`.
pub fn r_theta_action(sign: Sign, phi: f64, theta: f64, basis_index: usize) -> Result<PureState2Q> {
    apply_gate(
        &build_r_theta(sign, phi, theta),
        &PureState2Q::basis(basis_index)?,
    )
}

/// `2·|a₀₀a₁₁ − a₀₁a₁₀|`: 0 for product states, 1 for Bell states.
pub fn concurrence(psi: &PureState2Q) -> f64 {
    let [a00, a01, a10, a11] = psi.amps;
    (2.0 * (a00 * a11 - a01 * a10).norm()).min(1.0)
}

/// Outcome of [`is_entangling`].
///
/// `entangling == true` is a certificate: `witness` is a product input whose
/// image has concurrence `concurrence_max`. `entangling == false` is a
/// sampled verdict over the Pauli eigenstate grid plus seeded random
/// product states, not a proof.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglingVerdict {
    /// Some sampled product state was mapped to an entangled state.
    pub entangling: bool,
    /// Product input achieving `concurrence_max`, present iff `entangling`.
    pub witness: Option<PureState2Q>,
    /// Largest output concurrence over all sampled inputs.
    pub concurrence_max: f64,
}

/// The six Pauli eigenstates `|0⟩, |1⟩, |+⟩, |−⟩, |+i⟩, |−i⟩`.
pub fn pauli_eigenstates() -> [[Complex64; 2]; 6] {
    let h = core::f64::consts::FRAC_1_SQRT_2;
    let (one, zero) = (c64(1.0, 0.0), Complex64::zero());
    [
        [one, zero],
        [zero, one],
        [c64(h, 0.0), c64(h, 0.0)],
        [c64(h, 0.0), c64(-h, 0.0)],
        [c64(h, 0.0), c64(0.0, h)],
        [c64(h, 0.0), c64(0.0, -h)],
    ]
}

/// Haar-random single-qubit state (uniform on the Bloch sphere).
pub fn random_qubit<R: Rng + ?Sized>(rng: &mut R) -> [Complex64; 2] {
    let z: f64 = 2.0 * rng.gen::<f64>() - 1.0;
    let azimuth: f64 = core::f64::consts::TAU * rng.gen::<f64>();
    [
        c64(((1.0 + z) / 2.0).sqrt(), 0.0),
        Complex64::from_polar(((1.0 - z) / 2.0).max(0.0).sqrt(), azimuth),
    ]
}

/// Pseudorandom normalized two-qubit states from `ChaCha8(seed)`, generally
/// entangled. Amplitudes are drawn uniformly from the unit square and
/// rescaled.
#[derive(Debug, Clone)]
pub struct RandomStates {
    rng: ChaCha8Rng,
}

impl RandomStates {
    /// Stream seeded with `seed`.
    pub fn new(seed: u64) -> Self {
        RandomStates {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Iterator for RandomStates {
    type Item = PureState2Q;

    fn next(&mut self) -> Option<PureState2Q> {
        loop {
            let mut amps = [Complex64::zero(); 4];
            for a in &mut amps {
                *a = c64(
                    2.0 * self.rng.gen::<f64>() - 1.0,
                    2.0 * self.rng.gen::<f64>() - 1.0,
                );
            }
            if let Ok(psi) = PureState2Q::normalized(amps) {
                return Some(psi);
            }
        }
    }
}

/// [`is_entangling_seeded`] with [`DEFAULT_SEED`].
pub fn is_entangling(g: &Matrix, threshold: f64) -> Result<EntanglingVerdict> {
    is_entangling_seeded(g, threshold, DEFAULT_SEED)
}

/// Evaluates the output concurrence of `g` on all 36 Pauli-eigenstate
/// products, then on 64 product states drawn from `ChaCha8(seed)`.
pub fn is_entangling_seeded(g: &Matrix, threshold: f64, seed: u64) -> Result<EntanglingVerdict> {
    let mut best: Option<(f64, PureState2Q)> = None;
    let mut consider = |input: PureState2Q| -> Result<()> {
        let c = concurrence(&apply_gate(g, &input)?);
        if best.is_none_or(|(m, _)| c > m) {
            best = Some((c, input));
        }
        Ok(())
    };

    let grid = pauli_eigenstates();
    for u in &grid {
        for v in &grid {
            consider(PureState2Q::product(*u, *v)?)?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_PRODUCT_STATES {
        let (u, v) = (random_qubit(&mut rng), random_qubit(&mut rng));
        consider(PureState2Q::normalized([
            u[0] * v[0],
            u[0] * v[1],
            u[1] * v[0],
            u[1] * v[1],
        ])?)?;
    }

    let (concurrence_max, witness) = best.expect("grid is non-empty");
    let entangling = concurrence_max > threshold;
    Ok(EntanglingVerdict {
        entangling,
        witness: entangling.then_some(witness),
        concurrence_max,
    })
}
