//! Local operators: Pauli ladder operators, truncated bosonic ladder
//! operators, number operators, and quadratures.
//!
//! Conventions: qubit basis order is `|0>, |1>` with the lowering operator
//! mapping `|1> -> |0>`. Quadratures carry the 1/2 normalization, so
//! `x = (a + a^dag)/2`, `p = (a - a^dag)/(2i)`, `[x, p] = i/2` away from the
//! truncation corner, and coherent states have variance 1/4 in both.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::space::Side;

/// A square operator tagged with the subsystem it acts on.
#[derive(Clone, Debug)]
pub struct LocalOperator {
    matrix: ComplexMatrix,
    side: Side,
}

impl LocalOperator {
    pub fn new(matrix: ComplexMatrix, side: Side) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        if !matrix.all_finite() {
            return Err(Error::InvalidParameter(
                "operator contains non-finite entries".into(),
            ));
        }
        Ok(Self { matrix, side })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn dagger(&self) -> Self {
        Self {
            matrix: self.matrix.dagger(),
            side: self.side,
        }
    }

    /// The associated number operator `A^dag A`.
    pub fn number(&self) -> ComplexMatrix {
        &self.matrix.dagger() * &self.matrix
    }
}

/// Pauli lowering operator: the only nonzero entry is `(0, 1) = 1`.
pub fn pauli_lower() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2, 2);
    m[(0, 1)] = Complex64::ONE;
    m
}

/// Pauli raising operator, the adjoint of [`pauli_lower`].
pub fn pauli_raise() -> ComplexMatrix {
    pauli_lower().dagger()
}

/// Bosonic annihilation operator on the truncated Fock basis `|0> .. |N>`:
/// entry `(n-1, n) = sqrt(n)`.
pub fn boson_annihilation(cutoff: usize) -> ComplexMatrix {
    assert!(cutoff >= 1, "cutoff must be at least 1");
    let d = cutoff + 1;
    let mut m = ComplexMatrix::zeros(d, d);
    for n in 1..d {
        m[(n - 1, n)] = Complex64::new((n as f64).sqrt(), 0.0);
    }
    m
}

pub fn boson_creation(cutoff: usize) -> ComplexMatrix {
    boson_annihilation(cutoff).dagger()
}

/// Fock number operator `diag(0, 1, .., N)`.
pub fn number_operator(cutoff: usize) -> ComplexMatrix {
    let vals: Vec<f64> = (0..=cutoff).map(|n| n as f64).collect();
    ComplexMatrix::diag_real(&vals)
}

/// `A^dag A` for an arbitrary square operator; always Hermitian PSD.
pub fn number_of(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    Ok(&a.dagger() * a)
}

/// Rotated quadrature `(e^{-i theta} a^dag + e^{i theta} a) / 2`.
pub fn quadrature(theta: f64, cutoff: usize) -> ComplexMatrix {
    let a = boson_annihilation(cutoff);
    let fwd = Complex64::from_polar(0.5, theta);
    let bwd = Complex64::from_polar(0.5, -theta);
    &a.scale(fwd) + &a.dagger().scale(bwd)
}

/// Position-like quadrature `x = (a + a^dag)/2`.
pub fn position(cutoff: usize) -> ComplexMatrix {
    quadrature(0.0, cutoff)
}

/// Momentum-like quadrature `p = (a - a^dag)/(2i)`.
pub fn momentum(cutoff: usize) -> ComplexMatrix {
    let a = boson_annihilation(cutoff);
    let half_over_i = Complex64::new(0.0, -0.5); // 1/(2i)
    &a.scale(half_over_i) - &a.dagger().scale(half_over_i)
}
