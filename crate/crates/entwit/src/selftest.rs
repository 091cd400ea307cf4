//! Seeded randomized property suite: soundness of the witness family on
//! separable states, estimator bounds, basis-purity agreement, trace-bracket
//! conjugacy, and the Hermitian-operator guarantee of the Hillery-Zubairy
//! inequalities.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::criteria::{evaluate_general, hz_test, trace_bracket_pair};
use crate::diagnostics::{estimator_spectral, hermitian_operator_basis, purity_from_basis};
use crate::error::Result;
use crate::matrix::ComplexMatrix;
use crate::operators::LocalOperator;
use crate::sampling;
use crate::space::{BipartiteSpace, Side};
use crate::states::{MixedState, QuantumState};
use num_complex::Complex64;

/// Result of one property check.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub name: &'static str,
    pub trials: usize,
    /// Worst observed margin, in the property's own units; negative means a
    /// violation for bound-style properties.
    pub worst: f64,
    pub passed: bool,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{:<28} trials={:<5} worst={:+.3e}  {}",
            self.name,
            self.trials,
            self.worst,
            if self.passed { "pass" } else { "FAIL" }
        )
    }
}

fn random_space<R: Rng>(rng: &mut R) -> BipartiteSpace {
    let da = 2 + rng.random_range(0..3usize);
    let db = 2 + rng.random_range(0..3usize);
    BipartiteSpace::new(da, db)
}

/// Random separable mixtures must never be flagged by any family member at
/// the optimal phase.
pub fn separability_soundness(seed: u64, trials: usize) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = f64::INFINITY;
    for _ in 0..trials {
        let space = random_space(&mut rng);
        let state: QuantumState = sampling::random_separable(space, 4, &mut rng).into();
        let spec = sampling::random_witness_spec(space.dim_a, space.dim_b, &mut rng);
        let r = evaluate_general(&spec, &state)?;
        worst = worst.min(r.value);
    }
    Ok(Outcome {
        name: "separability-soundness",
        trials,
        worst,
        passed: worst >= -1e-9,
    })
}

/// The spectral estimator never exceeds the exact density-weighted trace for
/// positive semidefinite observables, and is exact in the maximally mixed and
/// eigenstate limits.
pub fn spectral_estimator_bound(seed: u64, trials: usize) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let space = BipartiteSpace::new(2, 2);
    let d = space.dim_total();
    let mut worst = f64::INFINITY;
    for _ in 0..trials {
        let x = sampling::random_psd(d, &mut rng);
        let rho = sampling::random_density(d, &mut rng);
        let state: QuantumState = MixedState::new(rho.clone(), space)?.into();
        let est = estimator_spectral(&x, &state)?;
        let exact = (&(&x * &rho) * &rho).trace()?.re;
        worst = worst.min(exact - est.value);
    }
    // Equality checks at the two exact limits.
    let x = sampling::random_psd(d, &mut rng);
    let mm: QuantumState = MixedState::new(
        ComplexMatrix::identity(d).scale(Complex64::new(1.0 / d as f64, 0.0)),
        space,
    )?
    .into();
    let mm_gap = (estimator_spectral(&x, &mm)?.value - x.trace()?.re / (d * d) as f64).abs();
    let sys = crate::eigen::eigh(&x)?;
    let eig_state: QuantumState =
        crate::states::PureState::new(sys.eigenvector(1), space)?.into();
    let eig_gap = (estimator_spectral(&x, &eig_state)?.value - sys.eigenvalues[1]).abs();
    let passed = worst >= -1e-9 && mm_gap < 1e-9 && eig_gap < 1e-9;
    Ok(Outcome {
        name: "spectral-estimator-bound",
        trials,
        worst,
        passed,
    })
}

/// Exact difference identity for rank-two mixtures of orthogonal pure
/// states: `Tr(X rho^2) - <X> Tr(rho^2) = p(1-p)(2p-1)(<X>_0 - <X>_1)`.
pub fn two_component_identity(seed: u64, trials: usize) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let space = BipartiteSpace::new(2, 2);
    let d = space.dim_total();
    let ps = [0.3, 0.5, 0.7, 0.9];
    let mut worst: f64 = 0.0;
    for k in 0..trials {
        let p = ps[k % ps.len()];
        let v0 = sampling::random_pure_local(d, &mut rng);
        let mut v1 = sampling::random_pure_local(d, &mut rng);
        let overlap: Complex64 = v0.iter().zip(&v1).map(|(a, b)| a.conj() * b).sum();
        for i in 0..d {
            let sub = overlap * v0[i];
            v1[i] -= sub;
        }
        let norm = v1.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in &mut v1 {
            *z /= norm;
        }
        let x = sampling::random_hermitian(d, &mut rng);
        let mut rho = ComplexMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                rho[(i, j)] = Complex64::new(p, 0.0) * v0[i] * v0[j].conj()
                    + Complex64::new(1.0 - p, 0.0) * v1[i] * v1[j].conj();
            }
        }
        let exact = (&(&x * &rho) * &rho).trace()?.re;
        let state: QuantumState = MixedState::new(rho, space)?.into();
        let est = crate::diagnostics::estimator_meanfield(&x, &state)?;
        let moment = |v: &[Complex64]| -> f64 {
            let xv = x.apply(v).unwrap();
            v.iter().zip(&xv).map(|(a, b)| (a.conj() * b).re).sum()
        };
        let identity = (1.0 - p) * p * (2.0 * p - 1.0) * (moment(&v0) - moment(&v1));
        worst = worst.max(((exact - est) - identity).abs());
    }
    Ok(Outcome {
        name: "two-component-identity",
        trials,
        worst,
        passed: worst <= 1e-10,
    })
}

/// Both basis-purity formulas agree with the direct trace on random states
/// of dimension 2 through 4.
pub fn basis_purity_agreement(seed: u64, trials: usize) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for k in 0..trials {
        let d = 2 + k % 3;
        let space = BipartiteSpace::new(d, 1);
        let rho = sampling::random_density(d, &mut rng);
        let direct: f64 = rho.as_slice().iter().map(|z| z.norm_sqr()).sum();
        let state: QuantumState = MixedState::new(rho, space)?.into();
        let basis = hermitian_operator_basis(d);
        let bp = purity_from_basis(&state, &basis)?;
        worst = worst
            .max((bp.via_expectations - direct).abs())
            .max((bp.via_variances - direct).abs());
    }
    Ok(Outcome {
        name: "basis-purity-agreement",
        trials,
        worst,
        passed: worst <= 1e-9,
    })
}

/// The independently constructed second trace bracket must equal the
/// conjugate of the first on random states and specs.
pub fn trace_bracket_conjugacy(seed: u64, trials: usize) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for k in 0..trials {
        let space = random_space(&mut rng);
        let spec = sampling::random_witness_spec(space.dim_a, space.dim_b, &mut rng);
        let state: QuantumState = if k % 2 == 0 {
            sampling::random_state(space, &mut rng).into()
        } else {
            let amps = sampling::random_pure_local(space.dim_total(), &mut rng);
            crate::states::PureState::new(amps, space)?.into()
        };
        let (first, second) = trace_bracket_pair(&spec, &state)?;
        let dev = (second.conj() - first).norm() / first.norm().max(1.0);
        worst = worst.max(dev);
    }
    Ok(Outcome {
        name: "trace-bracket-conjugacy",
        trials,
        worst,
        passed: worst <= 1e-10,
    })
}

/// With a Hermitian operator on side a, neither Hillery-Zubairy form may
/// flag any state, separable or not.
pub fn hz_hermitian_never_fires(seed: u64, trials: usize) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = f64::NEG_INFINITY;
    let mut fired = false;
    for _ in 0..trials {
        let space = random_space(&mut rng);
        let state: QuantumState = sampling::random_state(space, &mut rng).into();
        let a = LocalOperator::new(sampling::random_hermitian(space.dim_a, &mut rng), Side::A)?;
        let b = LocalOperator::new(sampling::random_operator(space.dim_b, &mut rng), Side::B)?;
        let r = hz_test(&a, &b, &state)?;
        worst = worst.max(r.form1_margin).max(r.form2_margin);
        fired |= r.entangled_1 || r.entangled_2;
    }
    Ok(Outcome {
        name: "hz-hermitian-silence",
        trials,
        worst,
        passed: !fired,
    })
}

/// Runs the full suite with per-property derived seeds.
pub fn run_all(seed: u64) -> Result<Vec<Outcome>> {
    Ok(vec![
        separability_soundness(seed, 500)?,
        spectral_estimator_bound(seed.wrapping_add(1), 200)?,
        two_component_identity(seed.wrapping_add(2), 100)?,
        basis_purity_agreement(seed.wrapping_add(3), 100)?,
        trace_bracket_conjugacy(seed.wrapping_add(4), 100)?,
        hz_hermitian_never_fires(seed.wrapping_add(5), 100)?,
    ])
}
