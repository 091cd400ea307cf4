//! Bipartite Hilbert-space structure.
//!
//! The composite index convention is subsystem-a-major: basis state
//! `|i_a> ⊗ |i_b>` lives at composite index `i_a * dim_b + i_b`. Every
//! operation in this module is written against that convention.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Which subsystem a local operator or reduction refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::A => write!(f, "a"),
            Side::B => write!(f, "b"),
        }
    }
}

/// Dimensions of the two subsystems.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BipartiteSpace {
    pub dim_a: usize,
    pub dim_b: usize,
}

impl BipartiteSpace {
    pub fn new(dim_a: usize, dim_b: usize) -> Self {
        assert!(dim_a > 0 && dim_b > 0, "subsystem dimensions must be positive");
        Self { dim_a, dim_b }
    }

    pub fn dim_total(&self) -> usize {
        self.dim_a * self.dim_b
    }

    pub fn dim_of(&self, side: Side) -> usize {
        match side {
            Side::A => self.dim_a,
            Side::B => self.dim_b,
        }
    }

    pub fn composite_index(&self, i_a: usize, i_b: usize) -> usize {
        i_a * self.dim_b + i_b
    }

    fn check_total(&self, m: &ComplexMatrix) -> Result<()> {
        if m.rows() != self.dim_total() || m.cols() != self.dim_total() {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {}x{} but the space has total dimension {}",
                m.rows(),
                m.cols(),
                self.dim_total()
            )));
        }
        Ok(())
    }
}

/// Embeds a local operator into the composite space: `op ⊗ I` for side a,
/// `I ⊗ op` for side b. Lifted a-side and b-side operators always commute.
pub fn lift(op: &ComplexMatrix, side: Side, space: BipartiteSpace) -> Result<ComplexMatrix> {
    if !op.is_square() {
        return Err(Error::NotSquare {
            rows: op.rows(),
            cols: op.cols(),
        });
    }
    if op.rows() != space.dim_of(side) {
        return Err(Error::DimensionMismatch(format!(
            "operator dimension {} does not match side {} dimension {}",
            op.rows(),
            side,
            space.dim_of(side)
        )));
    }
    match side {
        Side::A => op.kron(&ComplexMatrix::identity(space.dim_b)),
        Side::B => ComplexMatrix::identity(space.dim_a).kron(op),
    }
}

/// Applies a lifted local operator to a composite state vector without
/// materializing the Kronecker product. Cost is `O(dim_total * dim_side)`.
pub fn apply_lifted(
    op: &ComplexMatrix,
    side: Side,
    space: BipartiteSpace,
    v: &[Complex64],
) -> Result<Vec<Complex64>> {
    if v.len() != space.dim_total() {
        return Err(Error::DimensionMismatch(format!(
            "vector length {} does not match total dimension {}",
            v.len(),
            space.dim_total()
        )));
    }
    let d = space.dim_of(side);
    if !op.is_square() || op.rows() != d {
        return Err(Error::DimensionMismatch(format!(
            "operator is {}x{} but side {} has dimension {}",
            op.rows(),
            op.cols(),
            side,
            d
        )));
    }
    let (da, db) = (space.dim_a, space.dim_b);
    let mut out = vec![Complex64::ZERO; v.len()];
    match side {
        Side::A => {
            for ia in 0..da {
                for ka in 0..da {
                    let o = op[(ia, ka)];
                    if o == Complex64::ZERO {
                        continue;
                    }
                    let src = &v[ka * db..(ka + 1) * db];
                    let dst = &mut out[ia * db..(ia + 1) * db];
                    for (dv, sv) in dst.iter_mut().zip(src) {
                        *dv += o * sv;
                    }
                }
            }
        }
        Side::B => {
            for ia in 0..da {
                let src = &v[ia * db..(ia + 1) * db];
                let dst = &mut out[ia * db..(ia + 1) * db];
                for ib in 0..db {
                    let mut acc = Complex64::ZERO;
                    for (kb, sv) in src.iter().enumerate() {
                        acc += op[(ib, kb)] * sv;
                    }
                    dst[ib] = acc;
                }
            }
        }
    }
    Ok(out)
}

/// Left-multiplies a composite matrix by a lifted local operator,
/// `lift(op) * m`, in `O(dim_side * dim_total^2)` without building the lift.
pub fn apply_lifted_left(
    op: &ComplexMatrix,
    side: Side,
    space: BipartiteSpace,
    m: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    space.check_total(m)?;
    let d = space.dim_of(side);
    if !op.is_square() || op.rows() != d {
        return Err(Error::DimensionMismatch(format!(
            "operator is {}x{} but side {} has dimension {}",
            op.rows(),
            op.cols(),
            side,
            d
        )));
    }
    let (da, db) = (space.dim_a, space.dim_b);
    let n = space.dim_total();
    let mut out = ComplexMatrix::zeros(n, n);
    match side {
        Side::A => {
            // out[(ia ib), col] = sum_ka op[ia,ka] m[(ka ib), col]
            for ia in 0..da {
                for ka in 0..da {
                    let o = op[(ia, ka)];
                    if o == Complex64::ZERO {
                        continue;
                    }
                    for ib in 0..db {
                        let src_row = m.row(ka * db + ib);
                        let dst = out.as_mut_slice();
                        let base = (ia * db + ib) * n;
                        for (c, sv) in src_row.iter().enumerate() {
                            dst[base + c] += o * sv;
                        }
                    }
                }
            }
        }
        Side::B => {
            // out[(ia ib), col] = sum_kb op[ib,kb] m[(ia kb), col]
            for ia in 0..da {
                for ib in 0..db {
                    for kb in 0..db {
                        let o = op[(ib, kb)];
                        if o == Complex64::ZERO {
                            continue;
                        }
                        let src_row = m.row(ia * db + kb);
                        let dst = out.as_mut_slice();
                        let base = (ia * db + ib) * n;
                        for (c, sv) in src_row.iter().enumerate() {
                            dst[base + c] += o * sv;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Reduced density matrix of the kept subsystem; preserves the trace.
pub fn partial_trace(
    rho: &ComplexMatrix,
    space: BipartiteSpace,
    keep: Side,
) -> Result<ComplexMatrix> {
    space.check_total(rho)?;
    let (da, db) = (space.dim_a, space.dim_b);
    match keep {
        Side::A => {
            let mut out = ComplexMatrix::zeros(da, da);
            for ia in 0..da {
                for ja in 0..da {
                    let mut acc = Complex64::ZERO;
                    for kb in 0..db {
                        acc += rho[(ia * db + kb, ja * db + kb)];
                    }
                    out[(ia, ja)] = acc;
                }
            }
            Ok(out)
        }
        Side::B => {
            let mut out = ComplexMatrix::zeros(db, db);
            for ib in 0..db {
                for jb in 0..db {
                    let mut acc = Complex64::ZERO;
                    for ka in 0..da {
                        acc += rho[(ka * db + ib, ka * db + jb)];
                    }
                    out[(ib, jb)] = acc;
                }
            }
            Ok(out)
        }
    }
}

/// Transposes the b-subsystem indices only. Applying it twice gives back the
/// input bit-exactly.
pub fn partial_transpose_b(rho: &ComplexMatrix, space: BipartiteSpace) -> Result<ComplexMatrix> {
    space.check_total(rho)?;
    let (da, db) = (space.dim_a, space.dim_b);
    let mut out = ComplexMatrix::zeros(space.dim_total(), space.dim_total());
    for ia in 0..da {
        for ja in 0..da {
            for ib in 0..db {
                for jb in 0..db {
                    out[(ia * db + jb, ja * db + ib)] = rho[(ia * db + ib, ja * db + jb)];
                }
            }
        }
    }
    Ok(out)
}

/// Singular values (descending) of the coefficient matrix
/// `C[i_a][i_b] = psi[i_a * dim_b + i_b]` of a unit-norm composite vector.
pub fn schmidt_values(psi: &[Complex64], space: BipartiteSpace) -> Result<Vec<f64>> {
    if psi.len() != space.dim_total() {
        return Err(Error::DimensionMismatch(format!(
            "vector length {} does not match total dimension {}",
            psi.len(),
            space.dim_total()
        )));
    }
    let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::NormViolation { norm });
    }
    let coeff = ComplexMatrix::from_fn(space.dim_a, space.dim_b, |ia, ib| {
        psi[space.composite_index(ia, ib)]
    });
    crate::eigen::singular_values(&coeff)
}
