//! Small dense complex linear algebra.
//!
//! Matrices are square with dimension 2, 4 or 8 (one, two or three qubits)
//! and live inline, so everything here is `Copy` and allocation-free.
//! All comparisons use the max-entry absolute residual.

use core::fmt;
use core::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
// float math on targets without std
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;

use crate::{Error, Result};

/// Largest supported dimension.
pub const MAX_DIM: usize = 8;

/// `|det|` at or below this value is treated as singular.
pub const SINGULAR_THRESHOLD: f64 = 1e-12;

/// Taylor order used by [`expm`] once the argument is scaled to norm <= 1/2.
const EXPM_ORDER: u32 = 16;
const EXPM_SCALED_NORM: f64 = 0.5;
const EXPM_MAX_SQUARINGS: u32 = 1024;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Shorthand for `Complex64::new`.
#[inline]
pub const fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Supported matrix dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dim {
    /// One qubit.
    D2,
    /// Two qubits.
    D4,
    /// Three qubits (the three-strand lift).
    D8,
}

impl Dim {
    /// Side length.
    pub const fn size(self) -> usize {
        match self {
            Dim::D2 => 2,
            Dim::D4 => 4,
            Dim::D8 => 8,
        }
    }
}

impl TryFrom<usize> for Dim {
    type Error = Error;

    fn try_from(n: usize) -> Result<Self> {
        match n {
            2 => Ok(Dim::D2),
            4 => Ok(Dim::D4),
            8 => Ok(Dim::D8),
            other => Err(Error::UnsupportedDim(other)),
        }
    }
}

/// Dense square complex matrix, row-major.
#[derive(Clone, Copy, PartialEq)]
pub struct Matrix {
    dim: Dim,
    data: [Complex64; MAX_DIM * MAX_DIM],
}

impl Matrix {
    /// All-zero matrix.
    pub const fn zeros(dim: Dim) -> Self {
        Matrix {
            dim,
            data: [ZERO; MAX_DIM * MAX_DIM],
        }
    }

    /// Identity matrix.
    pub fn identity(dim: Dim) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim.size() {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Diagonal matrix.
    ///
    /// # Panics
    /// If `N` is not 2, 4 or 8.
    pub fn diag<const N: usize>(d: [Complex64; N]) -> Self {
        let mut m = Self::zeros(Dim::try_from(N).expect("diag: N must be 2, 4 or 8"));
        for (i, v) in d.into_iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    /// Builds a matrix from literal rows.
    ///
    /// # Panics
    /// If `N` is not 2, 4 or 8.
    pub fn from_rows<const N: usize>(rows: [[Complex64; N]; N]) -> Self {
        let mut m = Self::zeros(Dim::try_from(N).expect("from_rows: N must be 2, 4 or 8"));
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = *v;
            }
        }
        m
    }

    /// Real-valued variant of [`Matrix::from_rows`].
    pub fn from_real_rows<const N: usize>(rows: [[f64; N]; N]) -> Self {
        Self::from_rows(rows.map(|r| r.map(|v| c64(v, 0.0))))
    }

    /// Builds a matrix from `dim * dim` row-major entries.
    pub fn from_entries(dim: usize, entries: &[Complex64]) -> Result<Self> {
        let d = Dim::try_from(dim)?;
        if entries.len() != dim * dim {
            return Err(Error::EntryCount {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        if entries.iter().any(|z| !z.is_finite()) {
            return Err(Error::NonFinite);
        }
        let mut m = Self::zeros(d);
        m.data[..entries.len()].copy_from_slice(entries);
        Ok(m)
    }

    /// Side length.
    #[inline]
    pub fn dim(&self) -> usize {
        self.dim.size()
    }

    /// Dimension tag.
    #[inline]
    pub fn shape(&self) -> Dim {
        self.dim
    }

    /// Row-major entries, `dim * dim` of them.
    pub fn entries(&self) -> &[Complex64] {
        let n = self.dim();
        &self.data[..n * n]
    }

    /// `true` when no entry is NaN or infinite.
    pub fn is_finite(&self) -> bool {
        self.entries().iter().all(|z| z.is_finite())
    }

    /// Entrywise map.
    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        let mut out = *self;
        let n = self.dim();
        for z in &mut out.data[..n * n] {
            *z = f(*z);
        }
        out
    }

    /// Multiplies every entry by `s`.
    pub fn scale(&self, s: Complex64) -> Self {
        self.map(|z| z * s)
    }

    /// Multiplies every entry by the real `s`.
    pub fn scale_re(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let n = self.dim();
        let mut out = Self::zeros(self.dim);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    /// Sum of the diagonal.
    pub fn trace(&self) -> Complex64 {
        (0..self.dim()).map(|i| self[(i, i)]).sum()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries().iter().fold(0.0, |acc, z| acc.max(z.norm()))
    }

    /// Induced infinity norm (max absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Matrix product, failing on a dimension mismatch instead of panicking.
    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        check_same_dim(self, rhs)?;
        let n = self.dim();
        let mut out = Self::zeros(self.dim);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Matrix–vector product on the first `dim` entries of `v`.
    ///
    /// # Panics
    /// If `N` differs from the matrix dimension.
    pub fn apply<const N: usize>(&self, v: &[Complex64; N]) -> [Complex64; N] {
        assert_eq!(N, self.dim(), "apply: vector length must equal dim");
        let mut out = [ZERO; N];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..N).map(|j| self[(i, j)] * v[j]).sum();
        }
        out
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Complex64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        let n = self.dim();
        assert!(i < n && j < n, "index ({i}, {j}) out of bounds for dim {n}");
        &self.data[i * n + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        let n = self.dim();
        assert!(i < n && j < n, "index ({i}, {j}) out of bounds for dim {n}");
        &mut self.data[i * n + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        writeln!(f, "Matrix({n}x{n}) [")?;
        for i in 0..n {
            f.write_str("  ")?;
            for j in 0..n {
                let z = self[(i, j)];
                write!(f, "{:+.6}{:+.6}i ", z.re, z.im)?;
            }
            f.write_str("\n")?;
        }
        f.write_str("]")
    }
}

fn zip_with(a: &Matrix, b: &Matrix, f: impl Fn(Complex64, Complex64) -> Complex64) -> Matrix {
    assert_eq!(a.dim, b.dim, "dimension mismatch");
    let mut out = *a;
    let n = a.dim();
    for (o, r) in out.data[..n * n].iter_mut().zip(&b.data[..n * n]) {
        *o = f(*o, *r);
    }
    out
}

impl Add for Matrix {
    type Output = Matrix;
    fn add(self, rhs: Matrix) -> Matrix {
        zip_with(&self, &rhs, |a, b| a + b)
    }
}

impl AddAssign for Matrix {
    fn add_assign(&mut self, rhs: Matrix) {
        *self = *self + rhs;
    }
}

impl Sub for Matrix {
    type Output = Matrix;
    fn sub(self, rhs: Matrix) -> Matrix {
        zip_with(&self, &rhs, |a, b| a - b)
    }
}

impl Neg for Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.map(|z| -z)
    }
}

/// Matrix product.
///
/// # Panics
/// On a dimension mismatch; use [`Matrix::try_mul`] for untrusted operands.
impl Mul for Matrix {
    type Output = Matrix;
    fn mul(self, rhs: Matrix) -> Matrix {
        self.try_mul(&rhs)
            .expect("matrix product dimension mismatch")
    }
}

impl Mul<Complex64> for Matrix {
    type Output = Matrix;
    fn mul(self, s: Complex64) -> Matrix {
        self.scale(s)
    }
}

impl Mul<f64> for Matrix {
    type Output = Matrix;
    fn mul(self, s: f64) -> Matrix {
        self.scale_re(s)
    }
}

impl Mul<Matrix> for Complex64 {
    type Output = Matrix;
    fn mul(self, m: Matrix) -> Matrix {
        m.scale(self)
    }
}

impl Mul<Matrix> for f64 {
    type Output = Matrix;
    fn mul(self, m: Matrix) -> Matrix {
        m.scale_re(self)
    }
}

fn check_same_dim(a: &Matrix, b: &Matrix) -> Result<()> {
    if a.dim == b.dim {
        Ok(())
    } else {
        Err(Error::DimMismatch {
            expected: a.dim(),
            found: b.dim(),
        })
    }
}

/// Kronecker product: entry `(i·n + k, j·n + l)` is `a(i,j)·b(k,l)`.
///
/// # Panics
/// If the product dimension exceeds 8.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (m, n) = (a.dim(), b.dim());
    let dim = Dim::try_from(m * n).expect("kron: product dimension must be 4 or 8");
    let mut out = Matrix::zeros(dim);
    for i in 0..m {
        for j in 0..m {
            let aij = a[(i, j)];
            for k in 0..n {
                for l in 0..n {
                    out[(i * n + k, j * n + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Conjugate transpose.
pub fn dagger(a: &Matrix) -> Matrix {
    a.dagger()
}

/// Matrix inverse.
///
/// 2×2 uses the cofactor formula; larger matrices use Gaussian elimination
/// with partial pivoting. Fails with [`Error::SingularMatrix`] when
/// `|det| <= 1e-12`.
pub fn inverse(a: &Matrix) -> Result<Matrix> {
    match a.shape() {
        Dim::D2 => {
            let det = a[(0, 0)] * a[(1, 1)] - a[(0, 1)] * a[(1, 0)];
            if det.norm() <= SINGULAR_THRESHOLD {
                return Err(Error::SingularMatrix);
            }
            let inv_det = det.inv();
            Ok(Matrix::from_rows([
                [a[(1, 1)] * inv_det, -a[(0, 1)] * inv_det],
                [-a[(1, 0)] * inv_det, a[(0, 0)] * inv_det],
            ]))
        }
        _ => gauss_jordan_inverse(a),
    }
}

fn gauss_jordan_inverse(a: &Matrix) -> Result<Matrix> {
    let n = a.dim();
    let mut work = *a;
    let mut inv = Matrix::identity(a.shape());
    let mut det = ONE;

    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r, &s| work[(r, col)].norm().total_cmp(&work[(s, col)].norm()))
            .unwrap_or(col);
        let pivot = work[(pivot_row, col)];
        if pivot.is_zero() {
            return Err(Error::SingularMatrix);
        }
        if pivot_row != col {
            for j in 0..n {
                let t = work[(col, j)];
                work[(col, j)] = work[(pivot_row, j)];
                work[(pivot_row, j)] = t;
                let t = inv[(col, j)];
                inv[(col, j)] = inv[(pivot_row, j)];
                inv[(pivot_row, j)] = t;
            }
            det = -det;
        }
        det *= pivot;
        let p_inv = pivot.inv();
        for j in 0..n {
            work[(col, j)] *= p_inv;
            inv[(col, j)] *= p_inv;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = work[(r, col)];
            if factor.is_zero() {
                continue;
            }
            for j in 0..n {
                let w = work[(col, j)];
                let v = inv[(col, j)];
                work[(r, j)] -= factor * w;
                inv[(r, j)] -= factor * v;
            }
        }
    }

    if det.norm() <= SINGULAR_THRESHOLD {
        return Err(Error::SingularMatrix);
    }
    Ok(inv)
}

/// Matrix exponential by scaling and squaring around a fixed-order Taylor
/// series.
pub fn expm(a: &Matrix) -> Result<Matrix> {
    if !a.is_finite() {
        return Err(Error::NonConvergence);
    }
    let mut squarings = 0u32;
    let mut norm = a.norm_inf();
    while norm > EXPM_SCALED_NORM {
        norm *= 0.5;
        squarings += 1;
        if squarings > EXPM_MAX_SQUARINGS {
            return Err(Error::NonConvergence);
        }
    }
    let scaled = a.scale_re(0.5_f64.powi(squarings as i32));

    let id = Matrix::identity(a.shape());
    let mut term = id;
    let mut sum = id;
    for k in 1..=EXPM_ORDER {
        term = (term * scaled).scale_re(1.0 / f64::from(k));
        sum += term;
    }
    for _ in 0..squarings {
        sum = sum * sum;
    }
    if sum.is_finite() {
        Ok(sum)
    } else {
        Err(Error::NonConvergence)
    }
}

/// Max-entry absolute difference `max |a − b|`.
pub fn residual(a: &Matrix, b: &Matrix) -> Result<f64> {
    check_same_dim(a, b)?;
    Ok(max_entry_diff(a, b))
}

pub(crate) fn max_entry_diff(a: &Matrix, b: &Matrix) -> f64 {
    a.entries()
        .iter()
        .zip(b.entries())
        .fold(0.0, |acc, (x, y)| acc.max((x - y).norm()))
}

/// `residual(U·U†, I)`.
pub fn unitarity_residual(u: &Matrix) -> f64 {
    max_entry_diff(&(*u * u.dagger()), &Matrix::identity(u.shape()))
}

/// `residual(H, H†)`.
pub fn hermiticity_residual(h: &Matrix) -> f64 {
    max_entry_diff(h, &h.dagger())
}

/// Single-qubit Pauli operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    /// Identity.
    I,
    /// σx.
    X,
    /// σy.
    Y,
    /// σz.
    Z,
}

impl Pauli {
    /// `[I, X, Y, Z]`.
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    /// The 2×2 matrix.
    pub fn matrix(self) -> Matrix {
        match self {
            Pauli::I => Matrix::identity(Dim::D2),
            Pauli::X => Matrix::from_real_rows([[0.0, 1.0], [1.0, 0.0]]),
            Pauli::Y => Matrix::from_rows([[ZERO, c64(0.0, -1.0)], [c64(0.0, 1.0), ZERO]]),
            Pauli::Z => Matrix::from_real_rows([[1.0, 0.0], [0.0, -1.0]]),
        }
    }

    /// Single-letter label.
    pub fn label(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}
