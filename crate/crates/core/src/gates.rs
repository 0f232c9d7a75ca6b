//! Single-qubit gates, SO(3) rotations and CNOT synthesis from the braid
//! gate.
//!
//! Two routes produce CNOT:
//!
//! 1. conjugating the braid gate `Ř = b₋(0)` by the fixed local gates
//!    `M = α⊗β`, `N = −γ⊗δ` ([`cnot_via_local_gates`]);
//! 2. rotating the evolution operator `U₊(π/2)` into `exp(−i(π/4)σz⊗σx)`
//!    and correcting with a phase gate on the control and an x-rotation on
//!    the target ([`cnot_via_evolution`]).

use core::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4};

use num_complex::Complex64;
// float math on targets without std
#[allow(unused_imports)]
use num_traits::Float;

use crate::eightvertex::{build_b_phi, Sign};
use crate::hamiltonian::{evolution_u, sigma_axis, PauliAxis2D};
use crate::linalg::{c64, kron, max_entry_diff, residual, Dim, Matrix, Pauli};
use crate::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Allowed deviation of `|n|` from 1.
pub const AXIS_TOLERANCE: f64 = 1e-12;

/// Unit rotation axis on the Bloch sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliAxis3D {
    n: [f64; 3],
}

impl PauliAxis3D {
    /// x axis.
    pub const X: PauliAxis3D = PauliAxis3D { n: [1.0, 0.0, 0.0] };
    /// y axis.
    pub const Y: PauliAxis3D = PauliAxis3D { n: [0.0, 1.0, 0.0] };
    /// z axis.
    pub const Z: PauliAxis3D = PauliAxis3D { n: [0.0, 0.0, 1.0] };

    /// Fails with [`Error::NonUnitAxis`] unless `||n| − 1| <= 1e-12`.
    pub fn new(nx: f64, ny: f64, nz: f64) -> Result<Self> {
        let norm = (nx * nx + ny * ny + nz * nz).sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > AXIS_TOLERANCE {
            return Err(Error::NonUnitAxis);
        }
        Ok(PauliAxis3D { n: [nx, ny, nz] })
    }

    /// Components.
    pub fn components(&self) -> [f64; 3] {
        self.n
    }

    /// `σ·n`.
    pub fn sigma(&self) -> Matrix {
        let [x, y, z] = self.n;
        Pauli::X.matrix().scale_re(x)
            + Pauli::Y.matrix().scale_re(y)
            + Pauli::Z.matrix().scale_re(z)
    }
}

/// The local gates conjugating `Ř` into CNOT.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalGateSet {
    /// Hadamard.
    pub alpha: Matrix,
    /// `[[−1, 1], [i, i]]/√2`.
    pub beta: Matrix,
    /// `[[1, i], [1, −i]]/√2`.
    pub gamma: Matrix,
    /// `diag(1, i)`.
    pub delta: Matrix,
}

/// `α, β, γ, δ`.
pub fn local_gates() -> LocalGateSet {
    let h = FRAC_1_SQRT_2;
    LocalGateSet {
        alpha: Matrix::from_real_rows([[h, h], [h, -h]]),
        beta: Matrix::from_rows([[c64(-h, 0.0), c64(h, 0.0)], [c64(0.0, h), c64(0.0, h)]]),
        gamma: Matrix::from_rows([[c64(h, 0.0), c64(0.0, h)], [c64(h, 0.0), c64(0.0, -h)]]),
        delta: Matrix::diag([ONE, I]),
    }
}

/// Controlled-NOT, control on the first qubit.
pub fn cnot() -> Matrix {
    Matrix::from_real_rows([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 1.0, 0.0],
    ])
}

/// SWAP.
pub fn swap() -> Matrix {
    Matrix::from_real_rows([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ])
}

/// `(P↑, P↓) = (|0⟩⟨0|, |1⟩⟨1|)`.
pub fn projectors() -> (Matrix, Matrix) {
    (Matrix::diag([ONE, ZERO]), Matrix::diag([ZERO, ONE]))
}

/// `(M, Ř, N)` with `M = α⊗β`, `Ř = b₋(0)`, `N = −γ⊗δ`.
pub fn local_gate_factors() -> (Matrix, Matrix, Matrix) {
    let g = local_gates();
    let m = kron(&g.alpha, &g.beta);
    let n = -kron(&g.gamma, &g.delta);
    (m, build_b_phi(Sign::Minus, 0.0), n)
}

/// `M·Ř·N`.
pub fn cnot_via_local_gates() -> Matrix {
    let (m, r, n) = local_gate_factors();
    m * r * n
}

/// How two gates relate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Equality {
    /// Max-entry residual below tolerance.
    Exact,
    /// Equal after multiplying the target by `e^{iχ}`, `χ` in radians.
    GlobalPhase {
        /// `χ`.
        phase: f64,
    },
    /// Neither.
    Different,
}

/// Result of [`compare_gates`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Comparison {
    /// `residual(candidate, target)`.
    pub residual: f64,
    /// Phase `χ` read off the largest-magnitude entry of `target`.
    pub phase: f64,
    /// `residual(candidate, e^{iχ}·target)`.
    pub phase_residual: f64,
    /// Verdict at the requested tolerance.
    pub verdict: Equality,
}

/// Compares `candidate` with `target`, first exactly and then up to a
/// global phase.
pub fn compare_gates(candidate: &Matrix, target: &Matrix, tol: f64) -> Result<Comparison> {
    let exact = residual(candidate, target)?;
    let (k, _) = target
        .entries()
        .iter()
        .enumerate()
        .fold((0, -1.0), |(bk, bv), (k, z)| {
            if z.norm() > bv {
                (k, z.norm())
            } else {
                (bk, bv)
            }
        });
    let (t, c) = (target.entries()[k], candidate.entries()[k]);
    let phase = if t.norm() == 0.0 || c.norm() == 0.0 {
        0.0
    } else {
        (c / t).arg()
    };
    let phase_residual =
        max_entry_diff(candidate, &target.scale(Complex64::from_polar(1.0, phase)));
    let verdict = if exact < tol {
        Equality::Exact
    } else if phase_residual < tol {
        Equality::GlobalPhase { phase }
    } else {
        Equality::Different
    };
    Ok(Comparison {
        residual: exact,
        phase,
        phase_residual,
        verdict,
    })
}

/// `D_n(θ) = exp(−iθ/2·σ·n) = cos(θ/2)·I − i·sin(θ/2)·σ·n`.
pub fn rotation(axis: PauliAxis3D, theta: f64) -> Matrix {
    let half = theta / 2.0;
    Matrix::identity(Dim::D2).scale_re(half.cos()) + axis.sigma().scale(c64(0.0, -half.sin()))
}

/// Residuals of the two axis-alignment identities
///
/// ```text
/// Dx(π/2) Dz(−φ/2) σn₁ Dz(φ/2) Dx(−π/2) = σz
/// Dz(−φ/2) σn₂ Dz(φ/2)                 = σx
/// ```
pub fn conjugation_identities(phi: f64) -> (f64, f64) {
    let dz_minus = rotation(PauliAxis3D::Z, -phi / 2.0);
    let dz_plus = rotation(PauliAxis3D::Z, phi / 2.0);
    let n1 = sigma_axis(PauliAxis2D::first(phi));
    let n2 = sigma_axis(PauliAxis2D::second(phi));
    let first = rotation(PauliAxis3D::X, FRAC_PI_2)
        * dz_minus
        * n1
        * dz_plus
        * rotation(PauliAxis3D::X, -FRAC_PI_2);
    let second = dz_minus * n2 * dz_plus;
    (
        max_entry_diff(&first, &Pauli::Z.matrix()),
        max_entry_diff(&second, &Pauli::X.matrix()),
    )
}

/// Rotates `U₊(θ)` into `exp(−iθ/2·σz⊗σx)`.
pub fn conjugate_to_zx(phi: f64, theta: f64) -> Matrix {
    let dz_minus = rotation(PauliAxis3D::Z, -phi / 2.0);
    let dz_plus = rotation(PauliAxis3D::Z, phi / 2.0);
    let left = kron(&(rotation(PauliAxis3D::X, FRAC_PI_2) * dz_minus), &dz_minus);
    let right = kron(&(dz_plus * rotation(PauliAxis3D::X, -FRAC_PI_2)), &dz_plus);
    left * evolution_u(Sign::Plus, phi, theta) * right
}

/// Candidate phase gates for the control qubit of the evolution route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhaseGate {
    /// `diag(1, i)`, the `δ` of the local gate set.
    PlusI,
    /// `diag(1, −i) = P↑ − i·P↓`.
    MinusI,
}

impl PhaseGate {
    /// The 2×2 matrix.
    pub fn matrix(self) -> Matrix {
        match self {
            PhaseGate::PlusI => Matrix::diag([ONE, I]),
            PhaseGate::MinusI => Matrix::diag([ONE, -I]),
        }
    }
}

/// The phase gate that makes the evolution route produce CNOT exactly.
/// [`PhaseGate::PlusI`] misses by 2.
pub const RESOLVED_PHASE_GATE: PhaseGate = PhaseGate::MinusI;

/// `(phase ⊗ exp(i(π/4)σx)) · conjugate_to_zx(φ, θ)`. Equals CNOT only at
/// `θ = π/2` with [`RESOLVED_PHASE_GATE`].
pub fn evolution_chain(phi: f64, theta: f64, phase: PhaseGate) -> Matrix {
    let target = rotation(PauliAxis3D::X, -FRAC_PI_2);
    kron(&phase.matrix(), &target) * conjugate_to_zx(phi, theta)
}

/// CNOT from `U₊(π/2)` and single-qubit gates; independent of `φ`.
pub fn cnot_via_evolution(phi: f64) -> Matrix {
    evolution_chain(phi, FRAC_PI_2, RESOLVED_PHASE_GATE)
}

/// `exp(iα·G)` for an involution `G² = I`.
fn exp_involution(alpha: f64, g: &Matrix) -> Matrix {
    Matrix::identity(g.shape()).scale_re(alpha.cos()) + g.scale(c64(0.0, alpha.sin()))
}

/// `(Dy(−π/2)⊗Dz(−π/2)) · exp(i(π/4)σx⊗σy) · (Dy(π/2)⊗Dz(π/2))`, which
/// equals `exp(i(π/4)σz⊗σx)`.
pub fn transform_r_to_zx() -> Matrix {
    let xy = kron(&Pauli::X.matrix(), &Pauli::Y.matrix());
    let left = kron(
        &rotation(PauliAxis3D::Y, -FRAC_PI_2),
        &rotation(PauliAxis3D::Z, -FRAC_PI_2),
    );
    let right = kron(
        &rotation(PauliAxis3D::Y, FRAC_PI_2),
        &rotation(PauliAxis3D::Z, FRAC_PI_2),
    );
    left * exp_involution(FRAC_PI_4, &xy) * right
}
