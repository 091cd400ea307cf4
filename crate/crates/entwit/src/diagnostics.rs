//! Purity, estimators for the density-matrix-weighted correlation term,
//! negativity, and entanglement entropy.

use num_complex::Complex64;

use crate::eigen::{eigh, eigvalsh};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::operators::LocalOperator;
use crate::space::{partial_transpose_b, schmidt_values, Side};
use crate::states::QuantumState;

/// Eigenvalues of the partially transposed state below this count as
/// genuinely negative; anything above is rounding noise.
pub const NEGATIVITY_EIG_FLOOR: f64 = -1e-12;

/// `Tr(rho^2)`; returns exactly 1 for pure states without computation.
pub fn purity(state: &QuantumState) -> f64 {
    state.purity()
}

/// An orthonormal (in the Hilbert-Schmidt sense) basis of Hermitian
/// observables: the scaled identity, symmetric and antisymmetric off-diagonal
/// pairs, and diagonal traceless elements.
#[derive(Clone, Debug)]
pub struct ObservableBasis {
    pub dim: usize,
    pub elements: Vec<ComplexMatrix>,
}

pub fn hermitian_operator_basis(dim: usize) -> ObservableBasis {
    assert!(dim >= 2, "basis needs dimension at least 2");
    let mut elements = Vec::with_capacity(dim * dim);
    let inv_sqrt_d = 1.0 / (dim as f64).sqrt();
    elements.push(ComplexMatrix::identity(dim).scale(Complex64::new(inv_sqrt_d, 0.0)));
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    for j in 0..dim {
        for k in (j + 1)..dim {
            let mut sym = ComplexMatrix::zeros(dim, dim);
            sym[(j, k)] = Complex64::new(inv_sqrt2, 0.0);
            sym[(k, j)] = Complex64::new(inv_sqrt2, 0.0);
            elements.push(sym);
            let mut asym = ComplexMatrix::zeros(dim, dim);
            asym[(j, k)] = Complex64::new(0.0, -inv_sqrt2);
            asym[(k, j)] = Complex64::new(0.0, inv_sqrt2);
            elements.push(asym);
        }
    }
    for l in 1..dim {
        let norm = 1.0 / ((l * (l + 1)) as f64).sqrt();
        let mut diag = ComplexMatrix::zeros(dim, dim);
        for m in 0..l {
            diag[(m, m)] = Complex64::new(norm, 0.0);
        }
        diag[(l, l)] = Complex64::new(-(l as f64) * norm, 0.0);
        elements.push(diag);
    }
    debug_assert_eq!(elements.len(), dim * dim);
    ObservableBasis { dim, elements }
}

/// Purity recovered from basis observables along both routes.
#[derive(Clone, Copy, Debug)]
pub struct BasisPurity {
    /// `sum_l <M_l>^2`.
    pub via_expectations: f64,
    /// `d - sum_l var(M_l)`.
    pub via_variances: f64,
}

fn expect_full(state: &QuantumState, m: &ComplexMatrix) -> Result<Complex64> {
    match state {
        QuantumState::Pure(s) => {
            let w = m.apply(s.amplitudes())?;
            Ok(s
                .amplitudes()
                .iter()
                .zip(&w)
                .map(|(a, b)| a.conj() * b)
                .sum())
        }
        QuantumState::Mixed(s) => {
            let rho = s.rho();
            let n = rho.rows();
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "observable is {}x{} but the state has dimension {}",
                    m.rows(),
                    m.cols(),
                    n
                )));
            }
            let mut acc = Complex64::ZERO;
            for i in 0..n {
                for (j, mv) in m.row(i).iter().enumerate() {
                    acc += mv * rho[(j, i)];
                }
            }
            Ok(acc)
        }
    }
}

fn second_moment(state: &QuantumState, m: &ComplexMatrix) -> Result<f64> {
    match state {
        QuantumState::Pure(s) => {
            let w = m.apply(s.amplitudes())?;
            Ok(w.iter().map(|z| z.norm_sqr()).sum())
        }
        QuantumState::Mixed(_) => Ok(expect_full(state, &(m * m))?.re),
    }
}

pub fn purity_from_basis(state: &QuantumState, basis: &ObservableBasis) -> Result<BasisPurity> {
    if basis.dim != state.space().dim_total() {
        return Err(Error::DimensionMismatch(format!(
            "basis dimension {} does not match state dimension {}",
            basis.dim,
            state.space().dim_total()
        )));
    }
    let mut sum_sq = 0.0;
    let mut sum_var = 0.0;
    for m in &basis.elements {
        let mean = expect_full(state, m)?.re;
        sum_sq += mean * mean;
        sum_var += second_moment(state, m)? - mean * mean;
    }
    Ok(BasisPurity {
        via_expectations: sum_sq,
        via_variances: basis.dim as f64 - sum_var,
    })
}

/// Which estimator replaces the density-matrix-weighted correlation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EstimatorKind {
    /// Measurement-statistics route: `sum_n P_n^2 X_n` over the
    /// eigendecomposition of the observable.
    Spectral,
    /// Mean-field route: `<X> Tr(rho^2)`.
    Meanfield,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EstimatorWarning {
    /// The observable has negative eigenvalues, so the spectral route loses
    /// its one-sided bound.
    IndefiniteObservable,
    /// The mean-field route underestimates only under mixture-structure
    /// conditions the caller must verify.
    ConditionalValidity,
}

/// Spectral estimate of `Tr(X rho^2)` from projective measurement
/// statistics. For positive semidefinite `X` the estimate is a lower bound.
#[derive(Clone, Copy, Debug)]
pub struct SpectralEstimate {
    pub value: f64,
    pub x_psd: bool,
}

pub fn estimator_spectral(x: &ComplexMatrix, state: &QuantumState) -> Result<SpectralEstimate> {
    let sys = eigh(x)?;
    let x_psd = sys.eigenvalues[0]
        >= -1e-12 * sys.eigenvalues.last().copied().unwrap_or(1.0).abs().max(1.0);
    let mut value = 0.0;
    for (n, &lam) in sys.eigenvalues.iter().enumerate() {
        let vn = sys.eigenvector(n);
        let p = match state {
            QuantumState::Pure(s) => {
                let overlap: Complex64 = vn
                    .iter()
                    .zip(s.amplitudes())
                    .map(|(v, a)| v.conj() * a)
                    .sum();
                overlap.norm_sqr()
            }
            QuantumState::Mixed(s) => {
                let rv = s.rho().apply(&vn)?;
                vn.iter().zip(&rv).map(|(v, w)| (v.conj() * w).re).sum()
            }
        };
        value += p * p * lam;
    }
    Ok(SpectralEstimate { value, x_psd })
}

/// Mean-field estimate `<X> Tr(rho^2)`.
pub fn estimator_meanfield(x: &ComplexMatrix, state: &QuantumState) -> Result<f64> {
    let dev = x.hermiticity_deviation();
    if dev > 1e-10 {
        return Err(Error::NotHermitian {
            deviation: dev,
            tolerance: 1e-10,
        });
    }
    Ok(expect_full(state, x)?.re * state.purity())
}

/// Product witness with the density-matrix-weighted term replaced by an
/// estimator.
#[derive(Clone, Copy, Debug)]
pub struct EstimatedWitness {
    pub value: f64,
    pub warning: Option<EstimatorWarning>,
}

pub fn estimated_witness(
    a: &LocalOperator,
    b: &LocalOperator,
    state: &QuantumState,
    kind: EstimatorKind,
) -> Result<EstimatedWitness> {
    let space = state.space();
    if a.dim() != space.dim_a || b.dim() != space.dim_b {
        return Err(Error::DimensionMismatch(
            "operator dimensions do not match the state".into(),
        ));
    }
    let n_a = a.number();
    let n_b = b.number();
    let lhs = state.expect_local(&n_a, Side::A)?.re * state.expect_local(&n_b, Side::B)?.re;
    // lift(n_A) lift(n_B) = n_A ⊗ n_B under the a-major convention.
    let x = n_a.kron(&n_b)?;
    match kind {
        EstimatorKind::Spectral => {
            let est = estimator_spectral(&x, state)?;
            Ok(EstimatedWitness {
                value: lhs - est.value,
                warning: (!est.x_psd).then_some(EstimatorWarning::IndefiniteObservable),
            })
        }
        EstimatorKind::Meanfield => {
            let est = estimator_meanfield(&x, state)?;
            Ok(EstimatedWitness {
                value: lhs - est,
                warning: Some(EstimatorWarning::ConditionalValidity),
            })
        }
    }
}

/// Absolute sum of the negative eigenvalues of the partial transpose.
pub fn negativity(state: &QuantumState) -> Result<f64> {
    let rho = state.density_matrix()?;
    let pt = partial_transpose_b(&rho, state.space())?;
    let ev = eigvalsh(&pt)?;
    Ok(ev
        .iter()
        .filter(|&&v| v < NEGATIVITY_EIG_FLOOR)
        .map(|v| -v)
        .sum())
}

/// Entropy of entanglement in bits; only defined for pure states.
pub fn entanglement_entropy(state: &QuantumState) -> Result<f64> {
    let QuantumState::Pure(s) = state else {
        return Err(Error::MixedStateInput);
    };
    let sv = schmidt_values(s.amplitudes(), s.space())?;
    Ok(sv
        .iter()
        .map(|s| {
            let p = s * s;
            if p > 0.0 {
                -p * p.log2()
            } else {
                0.0
            }
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling;
    use crate::space::{partial_trace, BipartiteSpace};
    use crate::states::{
        bell, product_pure, squeezed_thermal, tmsv, werner, BellState, MixedState, PureState,
    };
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn purity_limits() {
        let pure: QuantumState = bell(BellState::PhiPlus).into();
        assert_eq!(purity(&pure), 1.0);
        let mixed: QuantumState = werner(BellState::PhiPlus, 0.0).unwrap().into();
        assert!((purity(&mixed) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn qubit_basis_matches_scaled_paulis() {
        let basis = hermitian_operator_basis(2);
        assert_eq!(basis.elements.len(), 4);
        let inv = std::f64::consts::FRAC_1_SQRT_2;
        // Ordering: identity, sym(0,1) = x, asym(0,1) = y, diag = z.
        assert!((basis.elements[1][(0, 1)] - c(inv, 0.0)).norm() < 1e-15);
        assert!((basis.elements[2][(0, 1)] - c(0.0, -inv)).norm() < 1e-15);
        assert!((basis.elements[3][(0, 0)] - c(inv, 0.0)).norm() < 1e-15);
        assert!((basis.elements[3][(1, 1)] + c(inv, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn basis_gram_matrix_is_identity() {
        for dim in [2usize, 3, 4] {
            let basis = hermitian_operator_basis(dim);
            for (k, mk) in basis.elements.iter().enumerate() {
                assert!(mk.hermiticity_deviation() <= 1e-12);
                for (l, ml) in basis.elements.iter().enumerate() {
                    let g = (&mk.dagger() * ml).trace().unwrap();
                    let expected = if k == l { 1.0 } else { 0.0 };
                    assert!(
                        (g.re - expected).abs() < 1e-10 && g.im.abs() < 1e-10,
                        "Gram({k},{l}) = {g} at dim {dim}"
                    );
                }
            }
        }
    }

    #[test]
    fn basis_reconstructs_random_state() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let rho = sampling::random_density(3, &mut rng);
        let basis = hermitian_operator_basis(3);
        let mut rec = ComplexMatrix::zeros(3, 3);
        for m in &basis.elements {
            let coeff = (&m.dagger() * &rho).trace().unwrap();
            rec = &rec + &m.scale(coeff);
        }
        assert!((&rec - &rho).max_abs_entry() < 1e-9);
    }

    #[test]
    fn purity_from_basis_matches_direct_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        // Pure qubit pair.
        let pure: QuantumState = bell(BellState::PsiPlus).into();
        let basis = hermitian_operator_basis(4);
        let bp = purity_from_basis(&pure, &basis).unwrap();
        assert!((bp.via_expectations - 1.0).abs() < 1e-10);
        assert!((bp.via_variances - 1.0).abs() < 1e-10);

        // Maximally mixed single pair of levels.
        let space = BipartiteSpace::new(2, 1);
        let mm: QuantumState =
            MixedState::new(ComplexMatrix::identity(2).scale(c(0.5, 0.0)), space)
                .unwrap()
                .into();
        let basis2 = hermitian_operator_basis(2);
        let bp = purity_from_basis(&mm, &basis2).unwrap();
        assert!((bp.via_expectations - 0.5).abs() < 1e-12);
        assert!((bp.via_variances - 0.5).abs() < 1e-12);

        // Random two-qubit state against Tr(rho^2).
        let rho = sampling::random_density(4, &mut rng);
        let direct: f64 = rho.as_slice().iter().map(|z| z.norm_sqr()).sum();
        let state: QuantumState = MixedState::new(rho, BipartiteSpace::new(2, 2))
            .unwrap()
            .into();
        let bp = purity_from_basis(&state, &basis).unwrap();
        assert!((bp.via_expectations - direct).abs() < 1e-10);
        assert!((bp.via_variances - direct).abs() < 1e-10);
    }

    #[test]
    fn spectral_estimator_equalities() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let d = 4usize;
        let x = sampling::random_psd(d, &mut rng);
        let space = BipartiteSpace::new(2, 2);

        // Maximally mixed: estimator equals Tr(X rho^2) = Tr(X)/d^2 exactly.
        let mm: QuantumState = MixedState::new(
            ComplexMatrix::identity(d).scale(c(1.0 / d as f64, 0.0)),
            space,
        )
        .unwrap()
        .into();
        let est = estimator_spectral(&x, &mm).unwrap();
        let expected = x.trace().unwrap().re / (d * d) as f64;
        assert!((est.value - expected).abs() < 1e-10);
        assert!(est.x_psd);

        // Eigenstate of X: estimator returns that eigenvalue.
        let sys = eigh(&x).unwrap();
        let v = sys.eigenvector(2);
        let eig_state: QuantumState = PureState::new(v, space).unwrap().into();
        let est = estimator_spectral(&x, &eig_state).unwrap();
        assert!((est.value - sys.eigenvalues[2]).abs() < 1e-9);
    }

    #[test]
    fn spectral_estimator_lower_bounds_the_weighted_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let space = BipartiteSpace::new(2, 2);
        for _ in 0..200 {
            let x = sampling::random_psd(4, &mut rng);
            let rho = sampling::random_density(4, &mut rng);
            let state: QuantumState = MixedState::new(rho.clone(), space).unwrap().into();
            let est = estimator_spectral(&x, &state).unwrap();
            let exact = (&(&x * &rho) * &rho).trace().unwrap().re;
            assert!(
                est.value <= exact + 1e-9,
                "estimate {} above exact {}",
                est.value,
                exact
            );
        }
    }

    #[test]
    fn meanfield_reduces_to_expectation_on_pure_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let x = sampling::random_hermitian(4, &mut rng);
        let state: QuantumState = bell(BellState::PhiPlus).into();
        let est = estimator_meanfield(&x, &state).unwrap();
        let mean = expect_full(&state, &x).unwrap().re;
        assert!((est - mean).abs() < 1e-12);
    }

    #[test]
    fn two_component_mixture_identity() {
        // For rho = p |0><0| + (1-p) |1><1| with orthogonal components,
        // Tr(X rho^2) - <X> Tr(rho^2) = p(1-p)(2p-1)(<X>_0 - <X>_1).
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let space = BipartiteSpace::new(2, 2);
        for &p in &[0.3, 0.5, 0.7, 0.9] {
            for _ in 0..25 {
                let v0 = sampling::random_pure_local(4, &mut rng);
                let mut v1 = sampling::random_pure_local(4, &mut rng);
                // Orthogonalize v1 against v0.
                let overlap: Complex64 =
                    v0.iter().zip(&v1).map(|(a, b)| a.conj() * b).sum();
                for i in 0..4 {
                    let sub = overlap * v0[i];
                    v1[i] -= sub;
                }
                let norm = v1.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                for z in &mut v1 {
                    *z /= norm;
                }
                let x = sampling::random_hermitian(4, &mut rng);
                let mut rho = ComplexMatrix::zeros(4, 4);
                for i in 0..4 {
                    for j in 0..4 {
                        rho[(i, j)] = Complex64::new(p, 0.0) * v0[i] * v0[j].conj()
                            + Complex64::new(1.0 - p, 0.0) * v1[i] * v1[j].conj();
                    }
                }
                let state: QuantumState = MixedState::new(rho.clone(), space).unwrap().into();
                let exact = (&(&x * &rho) * &rho).trace().unwrap().re;
                let est = estimator_meanfield(&x, &state).unwrap();
                let x0 = v0
                    .iter()
                    .zip(&x.apply(&v0).unwrap())
                    .map(|(a, b)| (a.conj() * b).re)
                    .sum::<f64>();
                let x1 = v1
                    .iter()
                    .zip(&x.apply(&v1).unwrap())
                    .map(|(a, b)| (a.conj() * b).re)
                    .sum::<f64>();
                let identity = (1.0 - p) * p * (2.0 * p - 1.0) * (x0 - x1);
                assert!(
                    ((exact - est) - identity).abs() < 1e-10,
                    "identity residual {}",
                    (exact - est) - identity
                );
            }
        }
    }

    #[test]
    fn negativity_benchmarks() {
        let b: QuantumState = bell(BellState::PhiPlus).into();
        assert!((negativity(&b).unwrap() - 0.5).abs() < 1e-12);

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let ka = sampling::random_pure_local(2, &mut rng);
        let kb = sampling::random_pure_local(3, &mut rng);
        let prod: QuantumState = product_pure(&ka, &kb).unwrap().into();
        assert!(negativity(&prod).unwrap() <= 1e-9);
    }

    #[test]
    fn negativity_positive_across_squeezed_thermal_mixtures() {
        for &p in &[0.05, 0.3, 0.7] {
            let (s, _) = squeezed_thermal(p, 0.8, 22, 1e-6).unwrap();
            let neg = negativity(&s.into()).unwrap();
            assert!(neg > 1e-6, "negativity {neg} at p = {p}");
        }
    }

    #[test]
    fn negativity_vanishes_on_separable_mixtures() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..10 {
            let space = BipartiteSpace::new(2, 3);
            let state = sampling::random_separable(space, 4, &mut rng);
            let neg = negativity(&state.into()).unwrap();
            assert!(neg <= 1e-9, "separable mixture has negativity {neg}");
        }
    }

    #[test]
    fn negativity_is_invariant_under_local_unitaries() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let space = BipartiteSpace::new(2, 2);
        for _ in 0..20 {
            let rho = sampling::random_density(4, &mut rng);
            let ua = sampling::random_unitary(2, &mut rng);
            let ub = sampling::random_unitary(2, &mut rng);
            let u = ua.kron(&ub).unwrap();
            let rotated = &(&u * &rho) * &u.dagger();
            let n0 = negativity(&MixedState::new(rho, space).unwrap().into()).unwrap();
            let n1 = negativity(&MixedState::new(rotated, space).unwrap().into()).unwrap();
            assert!((n0 - n1).abs() < 1e-9, "negativity changed: {n0} vs {n1}");
        }
    }

    #[test]
    fn entropy_of_bell_product_and_squeezed_states() {
        assert!((entanglement_entropy(&bell(BellState::PsiPlus).into()).unwrap() - 1.0).abs()
            < 1e-12);

        let prod: QuantumState = product_pure(
            &[Complex64::ONE, Complex64::ZERO],
            &[Complex64::ZERO, Complex64::ONE],
        )
        .unwrap()
        .into();
        assert!(entanglement_entropy(&prod).unwrap().abs() < 1e-12);

        // Closed form for the squeezed vacuum:
        // cosh^2 r log2 cosh^2 r - sinh^2 r log2 sinh^2 r.
        let r: f64 = 0.9;
        let cutoff = crate::states::auto_cutoff_tmsv(r, 1e-13);
        let (s, _) = tmsv(r, cutoff, 1e-13).unwrap();
        let e = entanglement_entropy(&s.into()).unwrap();
        let ch2 = r.cosh().powi(2);
        let sh2 = r.sinh().powi(2);
        let closed = ch2 * ch2.log2() - sh2 * sh2.log2();
        assert!((e - closed).abs() < 1e-8, "entropy {e} vs {closed}");
    }

    #[test]
    fn entropy_matches_reduced_state_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let space = BipartiteSpace::new(3, 3);
        let amps = sampling::random_pure_local(space.dim_total(), &mut rng);
        let psi = PureState::new(amps, space).unwrap();
        let via_schmidt = entanglement_entropy(&psi.clone().into()).unwrap();
        let rho = psi.density_matrix().unwrap();
        let reduced = partial_trace(&rho, space, Side::A).unwrap();
        let ev = eigvalsh(&reduced).unwrap();
        let via_eigen: f64 = ev
            .iter()
            .filter(|&&p| p > 1e-15)
            .map(|p| -p * p.log2())
            .sum();
        assert!((via_schmidt - via_eigen).abs() < 1e-8);
    }

    #[test]
    fn entropy_rejects_mixed_states() {
        let state: QuantumState = werner(BellState::PhiPlus, 0.5).unwrap().into();
        assert!(matches!(
            entanglement_entropy(&state),
            Err(Error::MixedStateInput)
        ));
    }

    #[test]
    fn estimated_witness_pure_meanfield_equals_product_witness() {
        use crate::criteria::witness_product;
        use crate::operators::pauli_lower;
        let a = LocalOperator::new(pauli_lower(), Side::A).unwrap();
        let b = LocalOperator::new(pauli_lower(), Side::B).unwrap();
        let state: QuantumState = bell(BellState::PhiPlus).into();
        let est = estimated_witness(&a, &b, &state, EstimatorKind::Meanfield).unwrap();
        let w = witness_product(&a, &b, &state).unwrap();
        assert!((est.value - w).abs() < 1e-12);
        assert_eq!(est.warning, Some(EstimatorWarning::ConditionalValidity));
    }

    #[test]
    fn estimated_witness_spectral_on_maximally_mixed_matches_product() {
        use crate::criteria::witness_product;
        use crate::operators::pauli_lower;
        let a = LocalOperator::new(pauli_lower(), Side::A).unwrap();
        let b = LocalOperator::new(pauli_lower(), Side::B).unwrap();
        let state: QuantumState = werner(BellState::PhiPlus, 0.0).unwrap().into();
        let est = estimated_witness(&a, &b, &state, EstimatorKind::Spectral).unwrap();
        let w = witness_product(&a, &b, &state).unwrap();
        assert!((est.value - w).abs() < 1e-12);
        assert_eq!(est.warning, None);
    }

    #[test]
    fn meanfield_witness_is_weaker_on_squeezed_thermal_mixture() {
        use crate::criteria::witness_product;
        use crate::operators::boson_annihilation;
        let cutoff = 22;
        let (s, _) = squeezed_thermal(0.9, 0.8, cutoff, 1e-6).unwrap();
        let state: QuantumState = s.into();
        let a = LocalOperator::new(boson_annihilation(cutoff), Side::A).unwrap();
        let b = LocalOperator::new(boson_annihilation(cutoff), Side::B).unwrap();
        let w = witness_product(&a, &b, &state).unwrap();
        let est = estimated_witness(&a, &b, &state, EstimatorKind::Meanfield).unwrap();
        assert!(
            est.value >= w - 1e-12,
            "estimated witness {} below exact witness {}",
            est.value,
            w
        );
    }
}
