//! Hermitian eigendecomposition and singular values.
//!
//! The heavy lifting is delegated to `faer`; everything here adapts between
//! the crate's row-major [`ComplexMatrix`] and faer's column-major storage
//! and enforces the Hermiticity contract.

use faer::{c64, Mat};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Tolerance on `max |H - H^dag|` accepted by [`eigh`].
pub const HERMITICITY_TOL: f64 = 1e-10;

/// Eigenvalues in ascending order with matching orthonormal eigenvector
/// columns.
#[derive(Clone, Debug)]
pub struct HermitianEigensystem {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEigensystem {
    /// Column `n` of the eigenvector matrix.
    pub fn eigenvector(&self, n: usize) -> Vec<Complex64> {
        (0..self.eigenvectors.rows())
            .map(|i| self.eigenvectors[(i, n)])
            .collect()
    }
}

fn to_faer(m: &ComplexMatrix) -> Mat<c64> {
    Mat::from_fn(m.rows(), m.cols(), |i, j| m[(i, j)])
}

/// Symmetrizes to (H + H^dag)/2 after checking the deviation is within
/// tolerance, so that rounding-level asymmetry never reaches the solver.
fn checked_symmetrize(h: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !h.is_square() {
        return Err(Error::NotSquare {
            rows: h.rows(),
            cols: h.cols(),
        });
    }
    let dev = h.hermiticity_deviation();
    if dev > HERMITICITY_TOL {
        return Err(Error::NotHermitian {
            deviation: dev,
            tolerance: HERMITICITY_TOL,
        });
    }
    let half = Complex64::new(0.5, 0.0);
    Ok((h + &h.dagger()).scale(half))
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn eigh(h: &ComplexMatrix) -> Result<HermitianEigensystem> {
    let sym = checked_symmetrize(h)?;
    let n = sym.rows();
    let evd = to_faer(&sym)
        .self_adjoint_eigen(faer::Side::Lower)
        .map_err(|e| Error::EigenFailure(format!("{e:?}")))?;
    let eigenvalues: Vec<f64> = (0..n).map(|i| evd.S().column_vector()[i].re).collect();
    let u = evd.U();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| u[(i, j)]);
    Ok(HermitianEigensystem {
        eigenvalues,
        eigenvectors,
    })
}

/// Eigenvalues only (ascending); cheaper than [`eigh`] when vectors are not
/// needed.
pub fn eigvalsh(h: &ComplexMatrix) -> Result<Vec<f64>> {
    let sym = checked_symmetrize(h)?;
    to_faer(&sym)
        .self_adjoint_eigenvalues(faer::Side::Lower)
        .map_err(|e| Error::EigenFailure(format!("{e:?}")))
}

/// Singular values in descending order.
pub fn singular_values(m: &ComplexMatrix) -> Result<Vec<f64>> {
    to_faer(m)
        .singular_values()
        .map_err(|e| Error::EigenFailure(format!("{e:?}")))
}
