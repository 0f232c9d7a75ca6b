use core::fmt;

/// Errors raised by matrix construction and the verifiers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// Operand dimensions disagree.
    DimMismatch {
        /// Dimension required by the operation.
        expected: usize,
        /// Dimension that was supplied.
        found: usize,
    },
    /// Only 2, 4 and 8 dimensional matrices are supported.
    UnsupportedDim(usize),
    /// Entry count does not match `dim * dim`.
    EntryCount {
        /// Required number of entries.
        expected: usize,
        /// Number of entries supplied.
        found: usize,
    },
    /// A matrix entry is NaN or infinite.
    NonFinite,
    /// `|det| <= 1e-12`.
    SingularMatrix,
    /// The exponential series did not converge.
    NonConvergence,
    /// The deformation parameter `q` is zero.
    ZeroDeformation,
    /// The two eigenvalues of a Yang–Baxterization pair coincide.
    DegenerateEigenvalues,
    /// A rotation axis is not a unit vector.
    NonUnitAxis,
    /// A two-qubit gate fails the unitarity check.
    NonUnitaryGate,
    /// A state vector does not have unit norm.
    NotNormalized,
    /// Computational basis index outside `0..4`.
    BasisIndexOutOfRange(usize),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::UnsupportedDim(d) => write!(f, "unsupported dimension {d} (expected 2, 4 or 8)"),
            Error::EntryCount { expected, found } => {
                write!(f, "expected {expected} matrix entries, found {found}")
            }
            Error::NonFinite => f.write_str("matrix entry is not finite"),
            Error::SingularMatrix => f.write_str("matrix is singular"),
            Error::NonConvergence => f.write_str("matrix exponential series did not converge"),
            Error::ZeroDeformation => f.write_str("deformation parameter q must be non-zero"),
            Error::DegenerateEigenvalues => f.write_str("eigenvalues must be distinct"),
            Error::NonUnitAxis => f.write_str("rotation axis must have unit norm"),
            Error::NonUnitaryGate => f.write_str("gate is not unitary"),
            Error::NotNormalized => f.write_str("state is not normalized"),
            Error::BasisIndexOutOfRange(i) => write!(f, "basis index {i} out of range 0..4"),
        }
    }
}

impl core::error::Error for Error {}
