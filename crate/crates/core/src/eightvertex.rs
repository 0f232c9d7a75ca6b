//! Eight-vertex braid matrices and their Yang–Baxterized unitary families.
//!
//! The braid matrix is parameterized by Boltzmann weights in the pattern
//!
//! ```text
//! | w1  0   0   w7 |
//! | 0   w5  w3  0  |
//! | 0   w4  w6  0  |
//! | w8  0   0   w2 |
//! ```
//!
//! Fixing `w1 = w2 = w5 = w6 = 1` and `w3 = −w4` leaves the two families
//! `b±(q)` with deformation `q`. On the unit circle `q = e^{−iφ}` and, after a
//! `1/√2` normalization, `b±(φ)` is unitary.

use core::f64::consts::FRAC_1_SQRT_2;
use core::fmt;
use core::str::FromStr;

use num_complex::Complex64;
// float math on targets without std
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;

use crate::linalg::{c64, Dim, Matrix};
use crate::yangbaxter::{self, EigenPair};
use crate::{Error, Result};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Which of the two `b±` families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    /// Upper sign: `+1` at entry (1,2), `−1` at (2,1).
    Plus,
    /// Lower sign: `−1` at entry (1,2), `+1` at (2,1).
    Minus,
}

impl Sign {
    /// Both signs, `+` first.
    pub const ALL: [Sign; 2] = [Sign::Plus, Sign::Minus];

    /// `±1.0`.
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Error returned when parsing a [`Sign`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseSignError;

impl fmt::Display for ParseSignError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("sign must be '+' or '-'")
    }
}

impl core::error::Error for ParseSignError {}

impl FromStr for Sign {
    type Err = ParseSignError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        match s {
            "+" | "plus" | "p" => Ok(Sign::Plus),
            "-" | "minus" | "m" => Ok(Sign::Minus),
            _ => Err(ParseSignError),
        }
    }
}

/// The eight Boltzmann weights; `w[0]` is `w1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EightVertexWeights {
    /// `w1..w8`.
    pub w: [Complex64; 8],
}

/// Residuals of the reduced-family constraints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstraintResiduals {
    /// `|w1 − w2|`, `|w1 − w5|`, `|w1 − w6|`.
    pub equal_diagonal: [f64; 3],
    /// `|w1² − w3²|`.
    pub w3_squared: f64,
    /// `|w1² − w4²|`.
    pub w4_squared: f64,
    /// `|w3² + w7·w8|`.
    pub cross: f64,
}

impl ConstraintResiduals {
    /// Residuals in a fixed order: the three diagonal equalities, then the
    /// two squared constraints, then the cross constraint.
    pub fn to_array(&self) -> [f64; 6] {
        let [a, b, c] = self.equal_diagonal;
        [a, b, c, self.w3_squared, self.w4_squared, self.cross]
    }

    /// Largest residual.
    pub fn max(&self) -> f64 {
        self.to_array().into_iter().fold(0.0, f64::max)
    }
}

impl EightVertexWeights {
    /// Weights from `w1..w8`.
    pub fn new(w: [Complex64; 8]) -> Self {
        EightVertexWeights { w }
    }

    /// Real-valued weights.
    pub fn from_real(w: [f64; 8]) -> Self {
        Self::new(w.map(|v| c64(v, 0.0)))
    }

    /// Reads the weights off a 4×4 matrix in the eight-vertex pattern.
    /// Entries outside the pattern are ignored.
    pub fn from_matrix(b: &Matrix) -> Result<Self> {
        if b.shape() != Dim::D4 {
            return Err(Error::DimMismatch {
                expected: 4,
                found: b.dim(),
            });
        }
        Ok(Self::new([
            b[(0, 0)],
            b[(3, 3)],
            b[(1, 2)],
            b[(2, 1)],
            b[(1, 1)],
            b[(2, 2)],
            b[(0, 3)],
            b[(3, 0)],
        ]))
    }

    /// The 4×4 matrix carrying these weights.
    pub fn to_matrix(&self) -> Matrix {
        let z = Complex64::zero();
        let [w1, w2, w3, w4, w5, w6, w7, w8] = self.w;
        Matrix::from_rows([
            [w1, z, z, w7],
            [z, w5, w3, z],
            [z, w4, w6, z],
            [w8, z, z, w2],
        ])
    }
}

/// Residuals of `w1 = w2 = w5 = w6`, `w1² = w3²`, `w1² = w4²` and
/// `w3² + w7·w8 = 0`. All of them vanish exactly for weights in the reduced
/// braid family.
pub fn check_constraints(weights: &EightVertexWeights) -> ConstraintResiduals {
    let [w1, w2, w3, w4, w5, w6, w7, w8] = weights.w;
    ConstraintResiduals {
        equal_diagonal: [(w1 - w2).norm(), (w1 - w5).norm(), (w1 - w6).norm()],
        w3_squared: (w1 * w1 - w3 * w3).norm(),
        w4_squared: (w1 * w1 - w4 * w4).norm(),
        cross: (w3 * w3 + w7 * w8).norm(),
    }
}

/// `(1 − i, 1 + i)`.
pub fn eigen_pair() -> EigenPair {
    EigenPair::eight_vertex()
}

/// `−0.0 → +0.0`; leaves everything else untouched.
fn positive_zero(z: Complex64) -> Complex64 {
    z + Complex64::zero()
}

fn b_pattern(sign: Sign, q: Complex64, q_inv: Complex64) -> Matrix {
    let s = c64(sign.value(), 0.0);
    let z = Complex64::zero();
    Matrix::from_rows([
        [ONE, z, z, q],
        [z, ONE, s, z],
        [z, -s, ONE, z],
        [-q_inv, z, z, ONE],
    ])
    .map(positive_zero)
}

/// Unnormalized braid matrix `b±(q)` with `w1 = 1`.
pub fn build_b(sign: Sign, q: Complex64) -> Result<Matrix> {
    if q.is_zero() || !q.is_finite() {
        return Err(Error::ZeroDeformation);
    }
    Ok(b_pattern(sign, q, q.inv()))
}

/// Unitary braid matrix `b±(φ) = b±(e^{−iφ}) / √2`.
pub fn build_b_phi(sign: Sign, phi: f64) -> Matrix {
    let q = Complex64::from_polar(1.0, -phi);
    let q_inv = Complex64::from_polar(1.0, phi);
    b_pattern(sign, q, q_inv).scale_re(FRAC_1_SQRT_2)
}

/// Yang–Baxterized `Ř±(x) = b± + x·λ₁λ₂·b±⁻¹`, entrywise
///
/// ```text
/// | 1+x          0        0        q(1−x) |
/// | 0            1+x      ±(1−x)   0      |
/// | 0            ∓(1−x)   1+x      0      |
/// | −q⁻¹(1−x)    0        0        1+x    |
/// ```
pub fn build_r_x(sign: Sign, q: Complex64, x: f64) -> Result<Matrix> {
    let b = build_b(sign, q)?;
    yangbaxter::yang_baxterize(&b, eigen_pair(), x)
}

/// `ρ(x) = (1+x)² + (1−x)²`, the scalar with `Ř(x)Ř(x)† = ρ(x)·I` on the
/// unit circle.
pub fn rho(x: f64) -> f64 {
    (1.0 + x) * (1.0 + x) + (1.0 - x) * (1.0 - x)
}

/// `Ř±(x) / √ρ(x)` for an arbitrary deformation `q`. Unitary only when
/// `|q| = 1`.
pub fn build_r_x_normalized_q(sign: Sign, q: Complex64, x: f64) -> Result<Matrix> {
    Ok(build_r_x(sign, q, x)?.scale_re(1.0 / rho(x).sqrt()))
}

/// Unitary `Ř±(x) / √ρ(x)` with `q = e^{−iφ}`.
pub fn build_r_x_normalized(sign: Sign, phi: f64, x: f64) -> Matrix {
    build_r_x_normalized_q(sign, Complex64::from_polar(1.0, -phi), x)
        .expect("unit-modulus deformation is never zero")
}

/// `Ř±(θ) = cos θ · b±(φ) + sin θ · b±(φ)⁻¹`; unitary for every real θ.
pub fn build_r_theta(sign: Sign, phi: f64, theta: f64) -> Matrix {
    let b = build_b_phi(sign, phi);
    // b±(φ) is unitary, so its inverse is its adjoint
    b.scale_re(theta.cos()) + b.dagger().scale_re(theta.sin())
}

/// `θ = arctan x`, in `(−π/2, π/2)`.
pub fn theta_from_x(x: f64) -> f64 {
    x.atan()
}

/// `x = tan θ`.
pub fn x_from_theta(theta: f64) -> f64 {
    theta.tan()
}

/// Spectral coordinate of a gate, either the raw parameter or its angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Spectral {
    /// Spectral parameter `x`.
    X(f64),
    /// Angle `θ = arctan x`.
    Theta(f64),
}

/// Full parameter set of a unitary `Ř±` gate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GateParams {
    /// Family sign.
    pub sign: Sign,
    /// Deformation angle, `q = e^{−iφ}`.
    pub phi: f64,
    /// Spectral coordinate.
    pub spectral: Spectral,
}

impl GateParams {
    /// `θ`, converting from `x` if needed.
    pub fn theta(&self) -> f64 {
        match self.spectral {
            Spectral::X(x) => theta_from_x(x),
            Spectral::Theta(t) => t,
        }
    }

    /// `x`, converting from `θ` if needed.
    pub fn x(&self) -> f64 {
        match self.spectral {
            Spectral::X(x) => x,
            Spectral::Theta(t) => x_from_theta(t),
        }
    }

    /// `q = e^{−iφ}`.
    pub fn deformation(&self) -> Complex64 {
        Complex64::from_polar(1.0, -self.phi)
    }

    /// The unitary gate in θ form.
    pub fn gate(&self) -> Matrix {
        build_r_theta(self.sign, self.phi, self.theta())
    }
}
