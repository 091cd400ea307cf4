//! State constructors: Bell and Werner states, coherent / two-mode squeezed /
//! thermal bosonic states with explicit Fock truncation control, and exact
//! cross-Kerr evolution of a coherent product.
//!
//! Truncated constructors renormalize and report the discarded weight; if the
//! discarded weight exceeds the caller's tail tolerance the construction
//! fails with the cutoff that would have been required.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{check_allocation, ComplexMatrix, DEFAULT_MEMORY_CAP_BYTES};
use crate::space::{apply_lifted, apply_lifted_left, partial_trace, BipartiteSpace, Side};

/// Default bound on the Fock-space weight a truncated constructor may drop.
pub const DEFAULT_TAIL_TOL: f64 = 1e-10;

/// The two maximally entangled qubit states used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BellState {
    /// `(|1>|0> + |0>|1>)/sqrt(2)` — one excitation shared between the modes.
    PsiPlus,
    /// `(|0>|0> + |1>|1>)/sqrt(2)` — pair creation.
    PhiPlus,
}

/// Cutoffs actually used and the total state weight discarded by truncation.
#[derive(Clone, Copy, Debug)]
pub struct TruncationReport {
    pub cutoff_a: usize,
    pub cutoff_b: usize,
    pub discarded_weight: f64,
}

/// Unit-norm state vector over a bipartite space.
#[derive(Clone, Debug)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
    space: BipartiteSpace,
}

impl PureState {
    /// Accepts a vector already normalized to within 1e-9 and snaps it to
    /// exact unit norm.
    pub fn new(amplitudes: Vec<Complex64>, space: BipartiteSpace) -> Result<Self> {
        if amplitudes.len() != space.dim_total() {
            return Err(Error::DimensionMismatch(format!(
                "amplitude vector length {} does not match total dimension {}",
                amplitudes.len(),
                space.dim_total()
            )));
        }
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-9 {
            return Err(Error::NormViolation { norm });
        }
        Ok(Self::renormalized(amplitudes, space, norm))
    }

    /// Normalizes an arbitrary nonzero vector (used after truncation).
    pub fn from_unnormalized(amplitudes: Vec<Complex64>, space: BipartiteSpace) -> Result<Self> {
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NormViolation { norm });
        }
        Ok(Self::renormalized(amplitudes, space, norm))
    }

    fn renormalized(mut amplitudes: Vec<Complex64>, space: BipartiteSpace, norm: f64) -> Self {
        for z in &mut amplitudes {
            *z /= norm;
        }
        Self { amplitudes, space }
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn space(&self) -> BipartiteSpace {
        self.space
    }

    /// Materializes the rank-one density matrix (subject to the memory cap).
    pub fn density_matrix(&self) -> Result<ComplexMatrix> {
        let n = self.amplitudes.len();
        check_allocation(n as u64 * n as u64, DEFAULT_MEMORY_CAP_BYTES)?;
        let mut rho = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                rho[(i, j)] = self.amplitudes[i] * self.amplitudes[j].conj();
            }
        }
        Ok(rho)
    }
}

/// Density matrix over a bipartite space.
#[derive(Clone, Debug)]
pub struct MixedState {
    rho: ComplexMatrix,
    space: BipartiteSpace,
}

impl MixedState {
    /// Checks finiteness, Hermiticity, and unit trace; in debug builds also
    /// checks positivity of the spectrum (an `O(n^3)` eigendecomposition).
    pub fn new(rho: ComplexMatrix, space: BipartiteSpace) -> Result<Self> {
        if rho.rows() != space.dim_total() || rho.cols() != space.dim_total() {
            return Err(Error::DimensionMismatch(format!(
                "density matrix is {}x{} but the space has total dimension {}",
                rho.rows(),
                rho.cols(),
                space.dim_total()
            )));
        }
        if !rho.all_finite() {
            return Err(Error::InvalidParameter(
                "density matrix contains non-finite entries".into(),
            ));
        }
        let dev = rho.hermiticity_deviation();
        if dev > 1e-10 {
            return Err(Error::NotHermitian {
                deviation: dev,
                tolerance: 1e-10,
            });
        }
        let tr = rho.trace()?;
        if (tr.re - 1.0).abs() > 1e-9 || tr.im.abs() > 1e-9 {
            return Err(Error::InvalidParameter(format!(
                "density matrix trace {tr} is not 1"
            )));
        }
        let state = Self { rho, space };
        debug_assert!(
            state.min_eigenvalue()? >= -1e-9,
            "density matrix has an eigenvalue below -1e-9"
        );
        Ok(state)
    }

    pub fn rho(&self) -> &ComplexMatrix {
        &self.rho
    }

    pub fn space(&self) -> BipartiteSpace {
        self.space
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        Ok(crate::eigen::eigvalsh(&self.rho)?[0])
    }
}

/// A pure or mixed state; evaluators pick the cheap path for pure inputs.
#[derive(Clone, Debug)]
pub enum QuantumState {
    Pure(PureState),
    Mixed(MixedState),
}

impl From<PureState> for QuantumState {
    fn from(s: PureState) -> Self {
        QuantumState::Pure(s)
    }
}

impl From<MixedState> for QuantumState {
    fn from(s: MixedState) -> Self {
        QuantumState::Mixed(s)
    }
}

impl QuantumState {
    pub fn space(&self) -> BipartiteSpace {
        match self {
            QuantumState::Pure(s) => s.space(),
            QuantumState::Mixed(s) => s.space(),
        }
    }

    /// Expectation of a lifted local operator.
    pub fn expect_local(&self, op: &ComplexMatrix, side: Side) -> Result<Complex64> {
        match self {
            QuantumState::Pure(s) => {
                let w = apply_lifted(op, side, s.space, &s.amplitudes)?;
                Ok(inner(&s.amplitudes, &w))
            }
            QuantumState::Mixed(s) => {
                let reduced = partial_trace(&s.rho, s.space, side)?;
                op.matmul(&reduced)?.trace()
            }
        }
    }

    /// Expectation of a product of lifted commuting local operators,
    /// `<lift(op_a) lift(op_b)>`.
    pub fn expect_joint(&self, op_a: &ComplexMatrix, op_b: &ComplexMatrix) -> Result<Complex64> {
        match self {
            QuantumState::Pure(s) => {
                let w = apply_lifted(op_b, Side::B, s.space, &s.amplitudes)?;
                let w = apply_lifted(op_a, Side::A, s.space, &w)?;
                Ok(inner(&s.amplitudes, &w))
            }
            QuantumState::Mixed(s) => {
                let m = apply_lifted_left(op_b, Side::B, s.space, &s.rho)?;
                let m = apply_lifted_left(op_a, Side::A, s.space, &m)?;
                m.trace()
            }
        }
    }

    /// `Tr(rho^2)`; exactly 1 for pure states without computation.
    pub fn purity(&self) -> f64 {
        match self {
            QuantumState::Pure(_) => 1.0,
            QuantumState::Mixed(s) => {
                // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
                s.rho.as_slice().iter().map(|z| z.norm_sqr()).sum()
            }
        }
    }

    /// Density-matrix view; materializes the projector for pure states.
    pub fn density_matrix(&self) -> Result<ComplexMatrix> {
        match self {
            QuantumState::Pure(s) => s.density_matrix(),
            QuantumState::Mixed(s) => Ok(s.rho.clone()),
        }
    }
}

fn inner(bra: &[Complex64], ket: &[Complex64]) -> Complex64 {
    bra.iter().zip(ket).map(|(b, k)| b.conj() * k).sum()
}

/// One of the two Bell states on a 2x2 space.
pub fn bell(which: BellState) -> PureState {
    let space = BipartiteSpace::new(2, 2);
    let inv = std::f64::consts::FRAC_1_SQRT_2;
    let mut amps = vec![Complex64::ZERO; 4];
    match which {
        // (|1>|0> + |0>|1>)/sqrt(2): composite indices 2 and 1.
        BellState::PsiPlus => {
            amps[2] = Complex64::new(inv, 0.0);
            amps[1] = Complex64::new(inv, 0.0);
        }
        // (|0>|0> + |1>|1>)/sqrt(2): composite indices 0 and 3.
        BellState::PhiPlus => {
            amps[0] = Complex64::new(inv, 0.0);
            amps[3] = Complex64::new(inv, 0.0);
        }
    }
    PureState::new(amps, space).expect("Bell state is normalized by construction")
}

/// Werner mixture `p |Bell><Bell| + (1-p) I/4`.
pub fn werner(which: BellState, p: f64) -> Result<MixedState> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "Werner mixing probability {p} is outside [0, 1]"
        )));
    }
    let pure = bell(which);
    let proj = pure.density_matrix()?;
    let iso = ComplexMatrix::identity(4).scale(Complex64::new((1.0 - p) / 4.0, 0.0));
    let rho = &proj.scale(Complex64::new(p, 0.0)) + &iso;
    MixedState::new(rho, pure.space())
}

/// Smallest cutoff at which a coherent state of amplitude `alpha` discards
/// less than `tail_tol` of its weight.
pub fn auto_cutoff_coherent(alpha: Complex64, tail_tol: f64) -> usize {
    let guess = (alpha.norm_sqr() + 8.0 * alpha.norm() + 10.0).ceil() as usize;
    let mut n = guess.max(1);
    while coherent_tail(alpha, n) > tail_tol {
        n += 1;
    }
    while n > 1 && coherent_tail(alpha, n - 1) <= tail_tol {
        n -= 1;
    }
    n
}

/// Poisson weight above the cutoff: `sum_{n>N} e^{-|alpha|^2} |alpha|^{2n}/n!`.
fn coherent_tail(alpha: Complex64, cutoff: usize) -> f64 {
    let x = alpha.norm_sqr();
    if x == 0.0 {
        return 0.0;
    }
    // term_n = e^{-x} x^n / n!, built up by recursion to avoid overflow.
    let mut term = (-x).exp();
    for n in 1..=cutoff + 1 {
        term *= x / n as f64;
    }
    let mut tail = 0.0;
    let mut n = cutoff + 1;
    loop {
        tail += term;
        n += 1;
        term *= x / n as f64;
        if term < tail * 1e-16 + f64::MIN_POSITIVE {
            break;
        }
    }
    tail
}

/// Coherent state amplitudes on `|0> .. |N>`, renormalized after truncation.
pub fn coherent(
    alpha: Complex64,
    cutoff: usize,
    tail_tol: f64,
) -> Result<(Vec<Complex64>, TruncationReport)> {
    let discarded = coherent_tail(alpha, cutoff);
    if discarded > tail_tol {
        return Err(Error::Truncation {
            requested: cutoff,
            required: auto_cutoff_coherent(alpha, tail_tol),
            discarded,
            tolerance: tail_tol,
        });
    }
    let mut amps = Vec::with_capacity(cutoff + 1);
    let mut c = Complex64::new((-alpha.norm_sqr() / 2.0).exp(), 0.0);
    amps.push(c);
    for n in 1..=cutoff {
        c *= alpha / Complex64::new((n as f64).sqrt(), 0.0);
        amps.push(c);
    }
    let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in &mut amps {
        *z /= norm;
    }
    Ok((
        amps,
        TruncationReport {
            cutoff_a: cutoff,
            cutoff_b: cutoff,
            discarded_weight: discarded,
        },
    ))
}

/// Smallest cutoff adequate for a two-mode squeezed vacuum (or the matching
/// thermal marginal) at squeezing `r`.
pub fn auto_cutoff_tmsv(r: f64, tail_tol: f64) -> usize {
    let lambda = r.tanh();
    if lambda == 0.0 {
        return 1;
    }
    // Geometric tail (1-l^2) sum_{n>N} l^{2n} = l^{2(N+1)}.
    let mut n = ((tail_tol.ln() / (2.0 * lambda.ln())).ceil() as usize).max(1);
    while tmsv_tail(lambda, n) > tail_tol {
        n += 1;
    }
    while n > 1 && tmsv_tail(lambda, n - 1) <= tail_tol {
        n -= 1;
    }
    n
}

fn tmsv_tail(lambda: f64, cutoff: usize) -> f64 {
    lambda.powi(2 * (cutoff as i32 + 1))
}

/// Two-mode squeezed vacuum with amplitudes `sqrt(1-l^2) l^n` on `|n>|n>`,
/// `l = tanh(r)`, renormalized after truncation at `cutoff`.
pub fn tmsv(r: f64, cutoff: usize, tail_tol: f64) -> Result<(PureState, TruncationReport)> {
    if r < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "squeezing parameter {r} must be nonnegative"
        )));
    }
    let lambda = r.tanh();
    let discarded = tmsv_tail(lambda, cutoff);
    if discarded > tail_tol {
        return Err(Error::Truncation {
            requested: cutoff,
            required: auto_cutoff_tmsv(r, tail_tol),
            discarded,
            tolerance: tail_tol,
        });
    }
    let d = cutoff + 1;
    let space = BipartiteSpace::new(d, d);
    let mut amps = vec![Complex64::ZERO; space.dim_total()];
    let scale = (1.0 - lambda * lambda).sqrt();
    let mut coeff = scale;
    for n in 0..d {
        amps[space.composite_index(n, n)] = Complex64::new(coeff, 0.0);
        coeff *= lambda;
    }
    let state = PureState::from_unnormalized(amps, space)?;
    Ok((
        state,
        TruncationReport {
            cutoff_a: cutoff,
            cutoff_b: cutoff,
            discarded_weight: discarded,
        },
    ))
}

/// Single-mode thermal state `diag((1-l^2) l^{2n})`, `l = tanh(r)`,
/// renormalized after truncation. Returned as a local density matrix.
pub fn thermal(r: f64, cutoff: usize, tail_tol: f64) -> Result<(ComplexMatrix, TruncationReport)> {
    if r < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "squeezing parameter {r} must be nonnegative"
        )));
    }
    let lambda = r.tanh();
    let l2 = lambda * lambda;
    // Same geometric weights as the squeezed-vacuum Schmidt spectrum.
    let discarded = tmsv_tail(lambda, cutoff);
    if discarded > tail_tol {
        return Err(Error::Truncation {
            requested: cutoff,
            required: auto_cutoff_tmsv(r, tail_tol),
            discarded,
            tolerance: tail_tol,
        });
    }
    let d = cutoff + 1;
    let mut weights = Vec::with_capacity(d);
    let mut w = 1.0 - l2;
    for _ in 0..d {
        weights.push(w);
        w *= l2;
    }
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    Ok((
        ComplexMatrix::diag_real(&weights),
        TruncationReport {
            cutoff_a: cutoff,
            cutoff_b: cutoff,
            discarded_weight: discarded,
        },
    ))
}

/// Mixture of a two-mode squeezed vacuum with the product of thermal states
/// of matching occupation: `p |r><r| + (1-p) rho_th ⊗ rho_th`.
pub fn squeezed_thermal(
    p: f64,
    r: f64,
    cutoff: usize,
    tail_tol: f64,
) -> Result<(MixedState, TruncationReport)> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "mixing probability {p} is outside [0, 1]"
        )));
    }
    let (sq, rep_sq) = tmsv(r, cutoff, tail_tol)?;
    let (th, rep_th) = thermal(r, cutoff, tail_tol)?;
    let space = sq.space();
    check_allocation(
        (space.dim_total() as u64).pow(2),
        DEFAULT_MEMORY_CAP_BYTES,
    )?;
    let proj = sq.density_matrix()?;
    let th_product = th.kron(&th)?;
    let rho = &proj.scale(Complex64::new(p, 0.0)) + &th_product.scale(Complex64::new(1.0 - p, 0.0));
    let state = MixedState::new(rho, space)?;
    // Conservative bound: each thermal factor can drop its own tail.
    let discarded = p * rep_sq.discarded_weight + (1.0 - p) * 2.0 * rep_th.discarded_weight;
    Ok((
        state,
        TruncationReport {
            cutoff_a: cutoff,
            cutoff_b: cutoff,
            discarded_weight: discarded,
        },
    ))
}

/// Product of two local pure states.
pub fn product_pure(local_a: &[Complex64], local_b: &[Complex64]) -> Result<PureState> {
    let space = BipartiteSpace::new(local_a.len(), local_b.len());
    let mut amps = vec![Complex64::ZERO; space.dim_total()];
    for (ia, a) in local_a.iter().enumerate() {
        for (ib, b) in local_b.iter().enumerate() {
            amps[space.composite_index(ia, ib)] = a * b;
        }
    }
    PureState::from_unnormalized(amps, space)
}

/// Exact state of two coherent modes after evolving under the cross-Kerr
/// coupling `n_a n_b` for time `t`: the amplitude on `|n>|m>` is the product
/// of coherent amplitudes times the phase `e^{-i t n m}`. The coupling is
/// diagonal in the Fock basis, so no time stepping is involved.
pub fn cross_kerr_evolve(
    alpha: Complex64,
    beta: Complex64,
    t: f64,
    cutoff_a: usize,
    cutoff_b: usize,
    tail_tol: f64,
) -> Result<(PureState, TruncationReport)> {
    let (ca, rep_a) = coherent(alpha, cutoff_a, tail_tol)?;
    let (cb, rep_b) = coherent(beta, cutoff_b, tail_tol)?;
    let space = BipartiteSpace::new(cutoff_a + 1, cutoff_b + 1);
    let mut amps = vec![Complex64::ZERO; space.dim_total()];
    for (n, a) in ca.iter().enumerate() {
        for (m, b) in cb.iter().enumerate() {
            let phase = Complex64::from_polar(1.0, -t * (n as f64) * (m as f64));
            amps[space.composite_index(n, m)] = a * b * phase;
        }
    }
    let state = PureState::from_unnormalized(amps, space)?;
    Ok((
        state,
        TruncationReport {
            cutoff_a,
            cutoff_b,
            discarded_weight: rep_a.discarded_weight + rep_b.discarded_weight,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagnostics::entanglement_entropy;
    use crate::operators::number_operator;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn bell_amplitudes_sit_at_the_expected_indices() {
        let b1 = bell(BellState::PsiPlus);
        let inv = std::f64::consts::FRAC_1_SQRT_2;
        assert!((b1.amplitudes()[1].re - inv).abs() < 1e-15);
        assert!((b1.amplitudes()[2].re - inv).abs() < 1e-15);
        assert_eq!(b1.amplitudes()[0], Complex64::ZERO);
        assert_eq!(b1.amplitudes()[3], Complex64::ZERO);

        let b2 = bell(BellState::PhiPlus);
        assert!((b2.amplitudes()[0].re - inv).abs() < 1e-15);
        assert!((b2.amplitudes()[3].re - inv).abs() < 1e-15);
    }

    #[test]
    fn bell_states_carry_one_bit_of_entanglement() {
        for which in [BellState::PsiPlus, BellState::PhiPlus] {
            let e = entanglement_entropy(&bell(which).into()).unwrap();
            assert!((e - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn werner_limits() {
        let w0 = werner(BellState::PhiPlus, 0.0).unwrap();
        let expected = ComplexMatrix::identity(4).scale(c(0.25, 0.0));
        assert!((w0.rho() - &expected).max_abs_entry() < 1e-15);

        let w1 = werner(BellState::PhiPlus, 1.0).unwrap();
        let proj = bell(BellState::PhiPlus).density_matrix().unwrap();
        assert!((w1.rho() - &proj).max_abs_entry() < 1e-15);

        assert!(werner(BellState::PhiPlus, 1.2).is_err());
    }

    #[test]
    fn werner_purity_closed_form() {
        // Oracle: expanding rho^2 gives purity (1 + 3 p^2)/4.
        for &p in &[0.0, 0.3, 0.6, 1.0] {
            let w: QuantumState = werner(BellState::PsiPlus, p).unwrap().into();
            let direct = w.purity();
            assert!((direct - (1.0 + 3.0 * p * p) / 4.0).abs() < 1e-12);
        }
        let w: QuantumState = werner(BellState::PhiPlus, 0.6).unwrap().into();
        assert!((w.purity() - 0.52).abs() < 1e-12);
    }

    #[test]
    fn coherent_vacuum_and_mean_occupation() {
        let (vac, rep) = coherent(Complex64::ZERO, 3, DEFAULT_TAIL_TOL).unwrap();
        assert_eq!(vac[0], Complex64::ONE);
        assert_eq!(rep.discarded_weight, 0.0);

        let alpha = c(1.2, -0.4);
        let cutoff = auto_cutoff_coherent(alpha, 1e-12);
        let (amps, _) = coherent(alpha, cutoff, 1e-12).unwrap();
        let n_op = number_operator(cutoff);
        let nv = n_op.apply(&amps).unwrap();
        let mean: f64 = amps.iter().zip(&nv).map(|(a, b)| (a.conj() * b).re).sum();
        assert!((mean - alpha.norm_sqr()).abs() < 1e-8);
    }

    #[test]
    fn coherent_truncation_error_names_required_cutoff() {
        // alpha = 2, N = 4: the tail-sum oracle (Poisson mass above the
        // cutoff at mean 4) gives 1 - CDF(4) ~ 0.3712.
        let err = coherent(c(2.0, 0.0), 4, DEFAULT_TAIL_TOL).unwrap_err();
        match err {
            Error::Truncation {
                requested,
                required,
                discarded,
                ..
            } => {
                assert_eq!(requested, 4);
                assert!((discarded - 0.3712).abs() < 1e-3, "tail {discarded}");
                assert!(required > 4);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn tmsv_at_zero_squeezing_is_the_vacuum() {
        let (s, _) = tmsv(0.0, 3, DEFAULT_TAIL_TOL).unwrap();
        assert_eq!(s.amplitudes()[0], Complex64::ONE);
        assert!(s.amplitudes()[1..].iter().all(|z| *z == Complex64::ZERO));
    }

    #[test]
    fn tmsv_mean_occupation_matches_series() {
        // Series oracle: <n_a> = sum (1-l^2) l^{2n} n = sinh^2(r).
        let r = 0.8;
        let cutoff = auto_cutoff_tmsv(r, 1e-12);
        let (s, _) = tmsv(r, cutoff, 1e-12).unwrap();
        let qs: QuantumState = s.into();
        let n = qs
            .expect_local(&number_operator(cutoff), Side::A)
            .unwrap()
            .re;
        assert!((n - r.sinh().powi(2)).abs() < 1e-8);
    }

    #[test]
    fn tmsv_schmidt_spectrum_is_geometric() {
        let r = 0.6;
        let cutoff = auto_cutoff_tmsv(r, 1e-12);
        let (s, _) = tmsv(r, cutoff, 1e-12).unwrap();
        let sv = crate::space::schmidt_values(s.amplitudes(), s.space()).unwrap();
        let lambda = r.tanh();
        let scale = (1.0 - lambda * lambda).sqrt();
        for (n, v) in sv.iter().enumerate().take(8) {
            let expected = scale * lambda.powi(n as i32);
            assert!((v - expected).abs() < 1e-9, "schmidt value {n}");
        }
    }

    #[test]
    fn thermal_occupation_and_purity() {
        let r: f64 = 0.7;
        let lambda = r.tanh();
        let cutoff = auto_cutoff_tmsv(r, 1e-13);
        let (th, _) = thermal(r, cutoff, 1e-13).unwrap();
        let mean: f64 = (0..=cutoff).map(|n| n as f64 * th[(n, n)].re).sum();
        assert!((mean - r.sinh().powi(2)).abs() < 1e-8);

        // Geometric series oracle: purity = (1-l^2)/(1+l^2).
        let purity: f64 = th.as_slice().iter().map(|z| z.norm_sqr()).sum();
        let expected = (1.0 - lambda * lambda) / (1.0 + lambda * lambda);
        assert!((purity - expected).abs() < 1e-9);

        let (th0, _) = thermal(0.0, 2, DEFAULT_TAIL_TOL).unwrap();
        assert_eq!(th0[(0, 0)], Complex64::ONE);
    }

    #[test]
    fn squeezed_thermal_limits_and_trace() {
        let (pure_limit, _) = squeezed_thermal(1.0, 0.8, 25, 1e-6).unwrap();
        let ev = crate::eigen::eigvalsh(pure_limit.rho()).unwrap();
        // Rank one within 1e-9: one eigenvalue near 1, the rest near 0.
        assert!((ev.last().unwrap() - 1.0).abs() < 1e-9);
        assert!(ev[ev.len() - 2].abs() < 1e-9);

        let (half, _) = squeezed_thermal(0.5, 0.8, 40, 1e-9).unwrap();
        let tr = half.rho().trace().unwrap();
        assert!((tr.re - 1.0).abs() < 1e-9 && tr.im.abs() < 1e-12);
    }

    #[test]
    fn cross_kerr_is_periodic_and_initially_product() {
        let alpha = c(1.5, 0.0);
        let n = auto_cutoff_coherent(alpha, DEFAULT_TAIL_TOL);
        let (s0, _) = cross_kerr_evolve(alpha, alpha, 0.0, n, n, DEFAULT_TAIL_TOL).unwrap();
        let e0 = entanglement_entropy(&s0.clone().into()).unwrap();
        assert!(e0.abs() < 1e-9);

        let t = 1.3;
        let tau = std::f64::consts::TAU;
        let (s1, _) = cross_kerr_evolve(alpha, alpha, t, n, n, DEFAULT_TAIL_TOL).unwrap();
        let (s2, _) = cross_kerr_evolve(alpha, alpha, t + tau, n, n, DEFAULT_TAIL_TOL).unwrap();
        let dev = s1
            .amplitudes()
            .iter()
            .zip(s2.amplitudes())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0f64, f64::max);
        assert!(dev <= 1e-12, "periodicity deviation {dev}");
    }

    #[test]
    fn cross_kerr_entangles_at_intermediate_times() {
        // Entropy oracle via the Schmidt route.
        let alpha = c(2.0, 0.0);
        let n = auto_cutoff_coherent(alpha, DEFAULT_TAIL_TOL);
        let (s, _) =
            cross_kerr_evolve(alpha, alpha, std::f64::consts::PI, n, n, DEFAULT_TAIL_TOL).unwrap();
        let e = entanglement_entropy(&s.into()).unwrap();
        assert!(e > 0.0, "entropy {e}");
    }

    #[test]
    fn pure_state_norm_is_enforced() {
        let space = BipartiteSpace::new(2, 2);
        let v = vec![c(0.9, 0.0), Complex64::ZERO, Complex64::ZERO, Complex64::ZERO];
        assert!(PureState::new(v.clone(), space).is_err());
        assert!(PureState::from_unnormalized(v, space).is_ok());
    }

    #[test]
    fn non_finite_inputs_are_rejected() {
        let space = BipartiteSpace::new(2, 2);
        let mut rho = ComplexMatrix::identity(4).scale(c(0.25, 0.0));
        rho[(1, 2)] = c(f64::NAN, 0.0);
        assert!(MixedState::new(rho, space).is_err());

        let v = vec![c(f64::INFINITY, 0.0); 4];
        assert!(PureState::from_unnormalized(v, space).is_err());
    }
}
