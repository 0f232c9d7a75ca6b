//! Hamiltonians generating the unitary `Ř±` families.
//!
//! With `W = b±(φ)²` (anti-Hermitian, `W² = −I`) both families are one
//! parameter subgroups:
//!
//! ```text
//! Ř±(θ)          = cos(π/4 − θ)·I + sin(π/4 − θ)·W
//! Ř±(x)/√ρ(x)    = Ř±(arctan x)
//! ```
//!
//! The constant Hamiltonian is `H± = −(i/2)·W`. The closed forms here are
//! cross-checked against [`generator_fd`], a central-difference generator
//! that makes no assumption about normalization.

use core::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;
// float math on targets without std
#[allow(unused_imports)]
use num_traits::Float;

use crate::eightvertex::{build_b_phi, build_r_x_normalized, Sign};
use crate::entangle::PureState2Q;
use crate::linalg::{c64, kron, Dim, Matrix, Pauli};
use crate::{Error, Result};

/// Default central-difference step.
pub const DEFAULT_STEP: f64 = 1e-5;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `H± = −(i/2)·b±(φ)²`. Hermitian, traceless, `H² = I/4`.
pub fn hamiltonian_const(sign: Sign, phi: f64) -> Matrix {
    let b = build_b_phi(sign, phi);
    (b * b).scale(c64(0.0, -0.5))
}

/// `H±(x) = −i/(1+x²)·b±(φ)²`, the generator of `x ↦ Ř±(x)/√ρ(x)`.
///
/// Equals [`hamiltonian_const`] at `x = 1` and twice it at `x = 0`.
pub fn hamiltonian_x(sign: Sign, phi: f64, x: f64) -> Matrix {
    let b = build_b_phi(sign, phi);
    (b * b).scale(c64(0.0, -1.0 / (1.0 + x * x)))
}

/// Central-difference generator `i·(U(t+h) − U(t−h))/(2h)·U(t)†`.
///
/// For a unitary family `U(t) = exp(−iG t)` this returns `G` up to `O(h²)`.
/// Steps between `1e-8` and `1e-3` keep both truncation and cancellation
/// error small.
pub fn generator_fd<F>(family: F, t: f64, h: f64) -> Matrix
where
    F: Fn(f64) -> Matrix,
{
    let derivative = (family(t + h) - family(t - h)).scale_re(0.5 / h);
    (derivative * family(t).dagger()).scale(I)
}

/// Unit vector `(cos α, sin α)` in the xy-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliAxis2D {
    angle: f64,
}

impl PauliAxis2D {
    /// Axis at angle `α` from x.
    pub fn new(angle: f64) -> Self {
        PauliAxis2D { angle }
    }

    /// `n₁ = ((π+φ)/2)`.
    pub fn first(phi: f64) -> Self {
        Self::new((PI + phi) / 2.0)
    }

    /// `n₂ = (φ/2)`.
    pub fn second(phi: f64) -> Self {
        Self::new(phi / 2.0)
    }

    /// `α`.
    pub fn angle(&self) -> f64 {
        self.angle
    }

    /// `(cos α, sin α)`.
    pub fn vector(&self) -> (f64, f64) {
        (self.angle.cos(), self.angle.sin())
    }
}

/// `σ·n = σ₊e^{−iα} + σ₋e^{iα}`.
pub fn sigma_axis(axis: PauliAxis2D) -> Matrix {
    let z = Complex64::new(0.0, 0.0);
    Matrix::from_rows([
        [z, Complex64::from_polar(1.0, -axis.angle)],
        [Complex64::from_polar(1.0, axis.angle), z],
    ])
}

/// `σn₁⊗σn₂` for `+`, `σn₂⊗σn₁` for `−`; equals `2·H±`.
pub fn interaction(sign: Sign, phi: f64) -> Matrix {
    let n1 = sigma_axis(PauliAxis2D::first(phi));
    let n2 = sigma_axis(PauliAxis2D::second(phi));
    match sign {
        Sign::Plus => kron(&n1, &n2),
        Sign::Minus => kron(&n2, &n1),
    }
}

/// Coefficients of a 4×4 matrix in the two-qubit Pauli basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliDecomposition {
    coefficients: [[Complex64; 4]; 4],
}

fn pauli_index(p: Pauli) -> usize {
    match p {
        Pauli::I => 0,
        Pauli::X => 1,
        Pauli::Y => 2,
        Pauli::Z => 3,
    }
}

impl PauliDecomposition {
    /// `c_ab`, the weight of `σa ⊗ σb`.
    pub fn coefficient(&self, a: Pauli, b: Pauli) -> Complex64 {
        self.coefficients[pauli_index(a)][pauli_index(b)]
    }

    /// All `(a, b, c_ab)` in `I, X, Y, Z` order.
    pub fn terms(&self) -> impl Iterator<Item = (Pauli, Pauli, Complex64)> + '_ {
        Pauli::ALL.into_iter().flat_map(move |a| {
            Pauli::ALL
                .into_iter()
                .map(move |b| (a, b, self.coefficient(a, b)))
        })
    }

    /// `Σ c_ab·(σa⊗σb)`.
    pub fn reconstruct(&self) -> Matrix {
        self.terms().fold(Matrix::zeros(Dim::D4), |acc, (a, b, c)| {
            acc + kron(&a.matrix(), &b.matrix()).scale(c)
        })
    }

    /// Largest imaginary part among the coefficients.
    pub fn max_imaginary(&self) -> f64 {
        self.terms().fold(0.0, |acc, (_, _, c)| acc.max(c.im.abs()))
    }
}

/// `c_ab = tr((σa⊗σb)·m)/4`.
pub fn pauli_decompose(m: &Matrix) -> Result<PauliDecomposition> {
    if m.shape() != Dim::D4 {
        return Err(Error::DimMismatch {
            expected: 4,
            found: m.dim(),
        });
    }
    let mut coefficients = [[Complex64::new(0.0, 0.0); 4]; 4];
    for a in Pauli::ALL {
        for b in Pauli::ALL {
            let basis = kron(&a.matrix(), &b.matrix());
            coefficients[pauli_index(a)][pauli_index(b)] = (basis * *m).trace() / 4.0;
        }
    }
    Ok(PauliDecomposition { coefficients })
}

/// `U±(θ) = exp(−iθ/2·G) = cos(θ/2)·I − i·sin(θ/2)·G` with
/// `G = `[`interaction`]`(sign, φ)`.
pub fn evolution_u(sign: Sign, phi: f64, theta: f64) -> Matrix {
    let g = interaction(sign, phi);
    let half = theta / 2.0;
    Matrix::identity(Dim::D4).scale_re(half.cos()) + g.scale(c64(0.0, -half.sin()))
}

/// `cos(π/4 − θ)·I + 2i·sin(π/4 − θ)·H± = exp(i(π/2 − 2θ)H±)`, which
/// reproduces `Ř±(θ)`.
pub fn r_from_h(sign: Sign, phi: f64, theta: f64) -> Matrix {
    let a = FRAC_PI_4 - theta;
    Matrix::identity(Dim::D4).scale_re(a.cos())
        + hamiltonian_const(sign, phi).scale(c64(0.0, 2.0 * a.sin()))
}

/// Euclidean norm of `i·∂ψ/∂x − H(x)ψ(x)` with `ψ(x) = (Ř±(x)/√ρ(x))·ψ₀`
/// and the derivative taken by central differences of step `h`.
pub fn schrodinger_residual(sign: Sign, phi: f64, psi0: &PureState2Q, x: f64, h: f64) -> f64 {
    let evolve = |t: f64| build_r_x_normalized(sign, phi, t).apply(psi0.amplitudes());
    let (ahead, behind, here) = (evolve(x + h), evolve(x - h), evolve(x));
    let h_psi = hamiltonian_x(sign, phi, x).apply(&here);
    (0..4)
        .map(|k| (I * (ahead[k] - behind[k]) / (2.0 * h) - h_psi[k]).norm_sqr())
        .sum::<f64>()
        .sqrt()
}
