//! Random ensembles for property suites and the `selftest` subcommand:
//! Ginibre density matrices, Haar-ish unitaries, random separable mixtures,
//! and random witness configurations.

use num_complex::Complex64;
use rand::Rng;

use crate::criteria::{PhaseChoice, SigmaFlags, WitnessSpec, WitnessVariant};
use crate::matrix::ComplexMatrix;
use crate::operators::LocalOperator;
use crate::space::{BipartiteSpace, Side};
use crate::states::MixedState;

pub fn uniform<R: Rng>(rng: &mut R) -> f64 {
    rng.random::<f64>()
}

/// Standard complex Gaussian via Box-Muller.
pub fn complex_gaussian<R: Rng>(rng: &mut R) -> Complex64 {
    let u1: f64 = rng.random::<f64>().max(f64::MIN_POSITIVE);
    let u2: f64 = rng.random();
    let r = (-2.0 * u1.ln()).sqrt();
    let angle = std::f64::consts::TAU * u2;
    // Halve the variance so that re and im are each N(0, 1/2).
    Complex64::new(r * angle.cos(), r * angle.sin()) / 2f64.sqrt()
}

/// Matrix with i.i.d. complex Gaussian entries.
pub fn random_operator<R: Rng>(dim: usize, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_fn(dim, dim, |_, _| complex_gaussian(rng))
}

pub fn random_hermitian<R: Rng>(dim: usize, rng: &mut R) -> ComplexMatrix {
    let g = random_operator(dim, rng);
    (&g + &g.dagger()).scale(Complex64::new(0.5, 0.0))
}

/// Positive semidefinite matrix `G G^dag`.
pub fn random_psd<R: Rng>(dim: usize, rng: &mut R) -> ComplexMatrix {
    let g = random_operator(dim, rng);
    &g * &g.dagger()
}

/// Normalized random local ket.
pub fn random_pure_local<R: Rng>(dim: usize, rng: &mut R) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..dim).map(|_| complex_gaussian(rng)).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            return v.into_iter().map(|z| z / norm).collect();
        }
    }
}

/// Ginibre-ensemble density matrix `G G^dag / Tr`.
pub fn random_density<R: Rng>(dim: usize, rng: &mut R) -> ComplexMatrix {
    let m = random_psd(dim, rng);
    let tr = m.trace().unwrap();
    m.scale(Complex64::new(1.0 / tr.re, 0.0))
}

/// Random full-rank state on a composite space.
pub fn random_state<R: Rng>(space: BipartiteSpace, rng: &mut R) -> MixedState {
    MixedState::new(random_density(space.dim_total(), rng), space)
        .expect("Ginibre construction yields a valid density matrix")
}

/// Random separable mixture `sum_k p_k rho_a^k ⊗ rho_b^k` with at most
/// `max_components` terms.
pub fn random_separable<R: Rng>(
    space: BipartiteSpace,
    max_components: usize,
    rng: &mut R,
) -> MixedState {
    let k = 1 + rng.random_range(0..max_components);
    let mut weights: Vec<f64> = (0..k).map(|_| uniform(rng) + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    let mut rho = ComplexMatrix::zeros(space.dim_total(), space.dim_total());
    for &w in &weights {
        let ra = random_density(space.dim_a, rng);
        let rb = random_density(space.dim_b, rng);
        let term = ra.kron(&rb).unwrap();
        rho = &rho + &term.scale(Complex64::new(w, 0.0));
    }
    MixedState::new(rho, space).expect("separable mixture is a valid density matrix")
}

/// Unitary from QR of a Ginibre matrix (modified Gram-Schmidt with phase
/// fixing).
pub fn random_unitary<R: Rng>(dim: usize, rng: &mut R) -> ComplexMatrix {
    let g = random_operator(dim, rng);
    let mut cols: Vec<Vec<Complex64>> = (0..dim)
        .map(|j| (0..dim).map(|i| g[(i, j)]).collect())
        .collect();
    for j in 0..dim {
        for k in 0..j {
            let proj: Complex64 = cols[k]
                .iter()
                .zip(&cols[j])
                .map(|(a, b)| a.conj() * b)
                .sum();
            let basis = cols[k].clone();
            for (cj, bk) in cols[j].iter_mut().zip(&basis) {
                *cj -= proj * bk;
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in &mut cols[j] {
            *z /= norm;
        }
    }
    ComplexMatrix::from_fn(dim, dim, |i, j| cols[j][i])
}

/// Random member of the witness family: Gaussian operator quadruple, random
/// placement flags, random variant, optimal phase.
pub fn random_witness_spec<R: Rng>(dim_a: usize, dim_b: usize, rng: &mut R) -> WitnessSpec {
    let a1 = LocalOperator::new(random_operator(dim_a, rng), Side::A).unwrap();
    let a2 = LocalOperator::new(random_operator(dim_a, rng), Side::A).unwrap();
    let b1 = LocalOperator::new(random_operator(dim_b, rng), Side::B).unwrap();
    let b2 = LocalOperator::new(random_operator(dim_b, rng), Side::B).unwrap();
    let sigma = SigmaFlags::new(
        rng.random::<bool>(),
        rng.random::<bool>(),
        rng.random::<bool>(),
        rng.random::<bool>(),
    );
    let variant = if rng.random::<bool>() {
        WitnessVariant::Product
    } else {
        WitnessVariant::Joint
    };
    WitnessSpec::new(a1, a2, b1, b2, sigma, variant, PhaseChoice::Optimal).unwrap()
}
