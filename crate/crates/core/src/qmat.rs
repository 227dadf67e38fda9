//! Dense complex matrices and two-qubit state vectors.
//!
//! Everything here is sized for the problem at hand: 2x2 single-qubit
//! operators, 4x4 two-qubit operators and densities, 4-component kets.
//! Basis order for two qubits is |00>, |01>, |10>, |11> with the first
//! (Alice's) qubit in the left slot of every Kronecker product.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type Complex = Complex64;

pub const ZERO: Complex = Complex::new(0.0, 0.0);
pub const ONE: Complex = Complex::new(1.0, 0.0);
pub const I: Complex = Complex::new(0.0, 1.0);

/// Tolerance for unitarity checks.
pub const UNITARY_TOL: f64 = 1e-12;
/// Tolerance for payoff comparisons.
pub const PAYOFF_TOL: f64 = 1e-9;

/// Row-major dense complex matrix. Operations return fresh values.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex>) -> Result<Self> {
        let expected = rows * cols;
        if rows == 0
            || cols == 0
            || entries.len() != expected
            || entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::InvalidEntries {
                expected,
                got: entries.len(),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    /// Builds a matrix from nested rows; panics on ragged input, so only
    /// use it for literals.
    pub fn from_rows<const R: usize, const C: usize>(rows: [[Complex; C]; R]) -> Self {
        let entries = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Self::new(R, C, entries).expect("literal matrix must be finite and non-empty")
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Result<Self> {
        let n = diag.len();
        let mut entries = vec![ZERO; n * n];
        for (k, &d) in diag.iter().enumerate() {
            entries[k * n + k] = Complex::new(d, 0.0);
        }
        Self::new(n, n, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.entries[k * n + k] = ONE;
        }
        m
    }

    pub fn pauli_x() -> Self {
        Self::from_rows([[ZERO, ONE], [ONE, ZERO]])
    }

    pub fn pauli_y() -> Self {
        Self::from_rows([[ZERO, -I], [I, ZERO]])
    }

    pub fn pauli_z() -> Self {
        Self::from_rows([[ONE, ZERO], [ZERO, -ONE]])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Complex {
        self.entries[row * self.cols + col]
    }

    pub fn diagonal(&self) -> Vec<Complex> {
        (0..self.rows.min(self.cols)).map(|k| self.get(k, k)).collect()
    }

    pub fn scale(&self, factor: Complex) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(self.mismatch("add", other));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-ONE))
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(self.mismatch("matmul", other));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; block (i, j) of the result is `self[i, j] * other`.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.entries[(i * other.rows + k) * cols + j * other.cols + l] = a * other.get(k, l);
                    }
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j).conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Result<Complex> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                op: "trace",
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.diagonal().into_iter().sum())
    }

    pub fn is_unitary(&self, tol: f64) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                op: "is_unitary",
                rows: self.rows,
                cols: self.cols,
            });
        }
        let gram = self.adjoint().matmul(self)?;
        let dev = gram.sub(&Self::identity(self.rows))?;
        Ok(dev.max_norm() <= tol)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.max_abs_diff(&self.adjoint()).is_some_and(|d| d <= tol)
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `None` when shapes differ.
    pub fn max_abs_diff(&self, other: &Self) -> Option<f64> {
        if self.shape() != other.shape() {
            return None;
        }
        Some(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max),
        )
    }

    /// Elementwise equality within an absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other).is_some_and(|d| d <= tol)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Complex]) -> Result<Vec<Complex>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                op: "apply",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: v.len(),
                right_cols: 1,
            });
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * v[j]).sum())
            .collect())
    }

    fn mismatch(&self, op: &'static str, other: &Self) -> Error {
        Error::DimensionMismatch {
            op,
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: other.rows,
            right_cols: other.cols,
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self.get(i, j);
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Normalized ket in the computational basis.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex>,
}

impl StateVector {
    const NORM_TOL: f64 = 1e-9;

    /// Accepts amplitudes that are already normalized.
    pub fn new(amplitudes: Vec<Complex>) -> Result<Self> {
        if amplitudes.is_empty() || amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidEntries {
                expected: 4,
                got: amplitudes.len(),
            });
        }
        let norm_sq: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > Self::NORM_TOL {
            return Err(Error::NotNormalized { norm_sq });
        }
        Ok(Self { amplitudes })
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(amplitudes: Vec<Complex>) -> Result<Self> {
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized { norm_sq: norm * norm });
        }
        Self::new(amplitudes.into_iter().map(|z| z / norm).collect())
    }

    /// Basis ket |index> in a space of dimension `dim`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::IndexOutOfRange {
                what: "basis",
                index,
                len: dim,
            });
        }
        let mut amps = vec![ZERO; dim];
        amps[index] = ONE;
        Self::new(amps)
    }

    /// (|00> + |11>)/sqrt(2)
    pub fn bell_plus() -> Self {
        let h = Complex::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self {
            amplitudes: vec![h, ZERO, ZERO, h],
        }
    }

    /// (|00> + i|11>)/sqrt(2)
    pub fn bell_i_phase() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self {
            amplitudes: vec![Complex::new(h, 0.0), ZERO, ZERO, Complex::new(0.0, h)],
        }
    }

    pub fn amplitudes(&self) -> &[Complex] {
        &self.amplitudes
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Applies a unitary; the result must stay normalized.
    pub fn evolve(&self, op: &ComplexMatrix) -> Result<Self> {
        Self::new(op.apply(&self.amplitudes)?)
    }

    /// |psi><psi|
    pub fn outer(&self) -> ComplexMatrix {
        let n = self.dim();
        let mut entries = Vec::with_capacity(n * n);
        for a in &self.amplitudes {
            for b in &self.amplitudes {
                entries.push(a * b.conj());
            }
        }
        ComplexMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }
}

/// Free-function form of [`StateVector::outer`].
pub fn outer(s: &StateVector) -> ComplexMatrix {
    s.outer()
}
