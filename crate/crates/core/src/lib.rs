//! Unitary solutions of the braid relation and the quantum Yang–Baxter
//! equation, realized as two-qubit gates.
//!
//! The crate is `no_std` and allocation-free: every object is a dense complex
//! matrix of dimension 2, 4 or 8 stored inline in a [`Matrix`].
//!
//! * [`linalg`]: Kronecker products, adjoints, inverses, the matrix
//!   exponential and max-entry residuals.
//! * [`yangbaxter`]: braid relation and QYBE residuals, Yang–Baxterization.
//! * [`eightvertex`]: the eight-vertex braid matrices `b±`, their unitary
//!   normalization and the `Ř±(x)` / `Ř±(θ)` families.
//! * [`hamiltonian`]: Hamiltonians generating those families, Pauli
//!   decomposition and the evolution operator.
//! * [`gates`]: single-qubit gates, SO(3) rotations and two CNOT constructions.
//! * [`entangle`]: two-qubit pure states, concurrence and the entangling
//!   detector.
#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod eightvertex;
pub mod entangle;
mod error;
pub mod gates;
pub mod hamiltonian;
pub mod linalg;
pub mod yangbaxter;

pub use eightvertex::Sign;
pub use entangle::PureState2Q;
pub use error::Error;
pub use linalg::{Dim, Matrix};
pub use num_complex::Complex64;

/// Result alias used across the crate.
pub type Result<T> = core::result::Result<T, Error>;
