//! Braid relation and quantum Yang–Baxter equation verifiers.
//!
//! A two-qubit operator `R` is lifted to three strands as `R₁ = R ⊗ I₂` and
//! `R₂ = I₂ ⊗ R`. The braid relation reads `b₁b₂b₁ = b₂b₁b₂`; the QYBE with a
//! multiplicative spectral parameter reads
//!
//! ```text
//! R₁(x) R₂(xy) R₁(y) = R₂(y) R₁(xy) R₂(x)
//! ```
//!
//! Both verifiers return the max-entry residual between the two sides on the
//! 8×8 lift; callers pick the tolerance.

use num_complex::Complex64;

use crate::linalg::{self, kron, Dim, Matrix};
use crate::{Error, Result};

/// The two distinct eigenvalues of a braid matrix with a quadratic minimal
/// polynomial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenPair {
    first: Complex64,
    second: Complex64,
}

impl EigenPair {
    /// Fails with [`Error::DegenerateEigenvalues`] if `first == second`.
    pub fn new(first: Complex64, second: Complex64) -> Result<Self> {
        if first == second {
            return Err(Error::DegenerateEigenvalues);
        }
        Ok(EigenPair { first, second })
    }

    /// `λ₁ = 1 − i`, `λ₂ = 1 + i`, the spectrum of the eight-vertex `b±`.
    pub const fn eight_vertex() -> Self {
        EigenPair {
            first: Complex64::new(1.0, -1.0),
            second: Complex64::new(1.0, 1.0),
        }
    }

    /// `λ₁`.
    pub fn first(&self) -> Complex64 {
        self.first
    }

    /// `λ₂`.
    pub fn second(&self) -> Complex64 {
        self.second
    }

    /// `λ₁·λ₂`.
    pub fn product(&self) -> Complex64 {
        self.first * self.second
    }
}

/// Which argument the first right-hand factor of the QYBE carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QybeConvention {
    /// `R₂(y) R₁(xy) R₂(x)`.
    Standard,
    /// `R₂(x) R₁(xy) R₂(y)`.
    Swapped,
}

/// The convention the eight-vertex `Ř±(x)` family satisfies. The swapped
/// variant fails by O(1).
pub const RESOLVED_CONVENTION: QybeConvention = QybeConvention::Standard;

fn require_two_qubit(m: &Matrix) -> Result<()> {
    if m.shape() == Dim::D4 {
        Ok(())
    } else {
        Err(Error::DimMismatch {
            expected: 4,
            found: m.dim(),
        })
    }
}

/// `R ⊗ I₂`, acting on strands 1 and 2.
pub fn lift_first(r: &Matrix) -> Matrix {
    kron(r, &Matrix::identity(Dim::D2))
}

/// `I₂ ⊗ R`, acting on strands 2 and 3.
pub fn lift_second(r: &Matrix) -> Matrix {
    kron(&Matrix::identity(Dim::D2), r)
}

/// Residual of `b₁b₂b₁ = b₂b₁b₂`.
pub fn braid_residual(b: &Matrix) -> Result<f64> {
    require_two_qubit(b)?;
    let (b1, b2) = (lift_first(b), lift_second(b));
    linalg::residual(&(b1 * b2 * b1), &(b2 * b1 * b2))
}

/// Residual of the QYBE at `(x, y)` under [`RESOLVED_CONVENTION`].
///
/// `family` is evaluated at `x`, `y` and `xy`; it must return 4×4 matrices.
pub fn qybe_residual<F>(family: F, x: f64, y: f64) -> Result<f64>
where
    F: Fn(f64) -> Matrix,
{
    qybe_residual_with(family, x, y, RESOLVED_CONVENTION)
}

/// Residual of the QYBE at `(x, y)` under an explicit convention.
pub fn qybe_residual_with<F>(family: F, x: f64, y: f64, convention: QybeConvention) -> Result<f64>
where
    F: Fn(f64) -> Matrix,
{
    let (rx, ry, rxy) = (family(x), family(y), family(x * y));
    for m in [&rx, &ry, &rxy] {
        require_two_qubit(m)?;
    }
    let lhs = lift_first(&rx) * lift_second(&rxy) * lift_first(&ry);
    let rhs = match convention {
        QybeConvention::Standard => lift_second(&ry) * lift_first(&rxy) * lift_second(&rx),
        QybeConvention::Swapped => lift_second(&rx) * lift_first(&rxy) * lift_second(&ry),
    };
    linalg::residual(&lhs, &rhs)
}

/// Two-eigenvalue Yang–Baxterization `Ř(x) = b + x·λ₁λ₂·b⁻¹`.
pub fn yang_baxterize(b: &Matrix, eig: EigenPair, x: f64) -> Result<Matrix> {
    let b_inv = linalg::inverse(b)?;
    Ok(*b + b_inv.scale(eig.product() * x))
}

/// Minimal-polynomial check `max |(b − λ₁I)(b − λ₂I)|`.
pub fn verify_two_eigenvalues(b: &Matrix, eig: EigenPair) -> f64 {
    let id = Matrix::identity(b.shape());
    let p = (*b - id.scale(eig.first)) * (*b - id.scale(eig.second));
    p.max_abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eightvertex::{build_b, build_b_phi, build_r_x, Sign};
    use crate::linalg::{c64, residual, Pauli};

    fn b_minus() -> Matrix {
        build_b(Sign::Minus, c64(1.0, 0.0)).unwrap()
    }

    #[test]
    fn identity_braids() {
        assert_eq!(braid_residual(&Matrix::identity(Dim::D4)).unwrap(), 0.0);
    }

    #[test]
    fn unitary_b_braids() {
        assert!(braid_residual(&build_b_phi(Sign::Minus, 0.0)).unwrap() < 1e-12);
    }

    #[test]
    fn braid_rejects_wrong_dim() {
        assert_eq!(
            braid_residual(&Matrix::identity(Dim::D2)),
            Err(Error::DimMismatch {
                expected: 4,
                found: 2
            })
        );
    }

    #[test]
    fn yang_baxterize_at_zero_returns_b() {
        let b = b_minus();
        assert_eq!(
            yang_baxterize(&b, EigenPair::eight_vertex(), 0.0).unwrap(),
            b
        );
    }

    #[test]
    fn yang_baxterize_at_one_is_twice_identity() {
        let r = yang_baxterize(&b_minus(), EigenPair::eight_vertex(), 1.0).unwrap();
        let two = Matrix::identity(Dim::D4).scale_re(2.0);
        assert!(residual(&r, &two).unwrap() < 1e-15);
    }

    #[test]
    fn yang_baxterize_at_half() {
        let r = yang_baxterize(&b_minus(), EigenPair::eight_vertex(), 0.5).unwrap();
        let expected = Matrix::from_real_rows([
            [1.5, 0.0, 0.0, 0.5],
            [0.0, 1.5, -0.5, 0.0],
            [0.0, 0.5, 1.5, 0.0],
            [-0.5, 0.0, 0.0, 1.5],
        ]);
        assert!(residual(&r, &expected).unwrap() < 1e-15);
    }

    #[test]
    fn yang_baxterize_propagates_singularity() {
        let z = Matrix::zeros(Dim::D4);
        assert_eq!(
            yang_baxterize(&z, EigenPair::eight_vertex(), 0.3),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn two_eigenvalue_examples() {
        assert!(verify_two_eigenvalues(&b_minus(), EigenPair::eight_vertex()) < 1e-15);
        let pair = EigenPair::new(c64(1.0, 0.0), c64(2.0, 0.0)).unwrap();
        assert_eq!(
            verify_two_eigenvalues(&Matrix::identity(Dim::D4), pair),
            0.0
        );
        let xi = kron(&Pauli::X.matrix(), &Matrix::identity(Dim::D2));
        assert!(verify_two_eigenvalues(&xi, EigenPair::eight_vertex()) > 1.0);
    }

    #[test]
    fn eigen_pair_must_be_distinct() {
        assert_eq!(
            EigenPair::new(c64(1.0, 1.0), c64(1.0, 1.0)),
            Err(Error::DegenerateEigenvalues)
        );
    }

    #[test]
    fn qybe_holds_for_eight_vertex_family() {
        let family = |t: f64| build_r_x(Sign::Minus, c64(1.0, 0.0), t).unwrap();
        assert!(qybe_residual(family, 0.3, 0.7).unwrap() < 1e-12);
    }

    #[test]
    fn qybe_at_unit_parameters_is_trivial() {
        // Ř(1) = 2·I for this family
        let family = |t: f64| build_r_x(Sign::Plus, c64(0.0, 1.0), t).unwrap();
        assert_eq!(qybe_residual(family, 1.0, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn constant_family_reduces_to_braid() {
        let b = build_b_phi(Sign::Minus, 0.0);
        for (x, y) in [(0.2, 0.9), (1.5, 0.1), (3.0, 2.0)] {
            assert!(qybe_residual(|_| b, x, y).unwrap() < 1e-12);
        }
    }

    #[test]
    fn swapped_convention_fails() {
        let family = |t: f64| build_r_x(Sign::Plus, c64(1.0, 0.0), t).unwrap();
        let standard = qybe_residual_with(family, 0.3, 0.7, QybeConvention::Standard).unwrap();
        let swapped = qybe_residual_with(family, 0.3, 0.7, QybeConvention::Swapped).unwrap();
        assert!(standard < 1e-12);
        assert!(swapped > 1e-2, "{swapped}");
    }
}
