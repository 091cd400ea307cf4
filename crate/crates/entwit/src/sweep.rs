//! Deterministic parameter sweeps with CSV emission and threshold
//! refinement.
//!
//! Four studies are provided: detection thresholds across the Werner family,
//! a (mixing, squeezing) region scan of the mixed two-mode squeezed state,
//! cross-Kerr time evolution of a coherent pair, and the scaling of the
//! characteristic detection times with the coherent amplitude.
//!
//! Grid points are evaluated in parallel but collected in grid order, and the
//! dense solver is pinned to sequential mode, so a given configuration
//! produces byte-identical CSV no matter the thread count.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::criteria::{
    dgcz_crosskerr, evaluate_general, hz_test, witness_phase, witness_product,
    witness_product_sides, PhaseChoice, SigmaFlags, WitnessSpec, WitnessVariant,
    VERDICT_TOL_SCALE,
};
use crate::diagnostics::{
    entanglement_entropy, estimated_witness, negativity, EstimatorKind,
};
use crate::eigen::eigvalsh;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::operators::{
    boson_annihilation, number_of, pauli_lower, pauli_raise, quadrature, LocalOperator,
};
use crate::space::{partial_transpose_b, Side};
use crate::states::{
    auto_cutoff_coherent, auto_cutoff_tmsv, bell, cross_kerr_evolve, squeezed_thermal, thermal,
    tmsv, werner, BellState, QuantumState,
};

/// Uniform inclusive grid.
#[derive(Clone, Copy, Debug)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl GridSpec {
    pub fn new(start: f64, stop: f64, count: usize) -> Result<Self> {
        if count == 0 || (count > 1 && stop <= start) || !start.is_finite() || !stop.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "grid {start}:{stop}:{count} is not a nonempty strictly increasing range"
            )));
        }
        Ok(Self { start, stop, count })
    }

    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count).map(|k| self.start + step * k as f64).collect()
    }
}

#[derive(Clone, Copy, Debug)]
pub enum CutoffPolicy {
    /// Smallest cutoff meeting the tail tolerance, found by direct tail
    /// summation.
    Auto,
    /// Truncate at exactly this cutoff; the discarded weight is recorded in
    /// the output rather than enforced.
    Fixed(usize),
}

/// Scientific formatting matching C's `%.12e` (two-digit exponent).
pub fn fmt_sci(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".to_string()
        } else if x > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let raw = format!("{x:.12e}");
    let (mantissa, exp) = raw.split_once('e').expect("exponential format");
    let exp: i32 = exp.parse().expect("exponent parses");
    format!("{mantissa}e{}{:02}", if exp < 0 { "-" } else { "+" }, exp.abs())
}

fn fmt_bool(b: bool) -> &'static str {
    if b {
        "1"
    } else {
        "0"
    }
}

/// Renders one CSV document: a header row plus data rows, Unix newlines.
pub fn render_csv(header: &str, rows: &[String]) -> String {
    let mut out = String::with_capacity(header.len() + rows.iter().map(|r| r.len() + 1).sum::<usize>() + 1);
    out.push_str(header);
    out.push('\n');
    for row in rows {
        out.push_str(row);
        out.push('\n');
    }
    out
}

fn write_csv(path: &Path, header: &str, rows: &[String]) -> Result<()> {
    let file = File::create(path)
        .map_err(|e| Error::InvalidParameter(format!("cannot create {}: {e}", path.display())))?;
    let mut w = BufWriter::new(file);
    w.write_all(render_csv(header, rows).as_bytes())
        .and_then(|_| w.flush())
        .map_err(|e| Error::InvalidParameter(format!("write failed: {e}")))
}

/// Bisection on a sign change of `f` over `[lo, hi]` to absolute tolerance
/// `xtol`; `None` when the bracket does not change sign.
pub fn bisect_zero(f: impl Fn(f64) -> f64, lo: f64, hi: f64, xtol: f64) -> Option<f64> {
    let (mut lo, mut hi) = (lo, hi);
    let (flo, fhi) = (f(lo), f(hi));
    if flo == 0.0 {
        return Some(lo);
    }
    if fhi == 0.0 {
        return Some(hi);
    }
    if flo.signum() == fhi.signum() {
        return None;
    }
    while hi - lo > xtol {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return Some(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Golden-section minimization of a unimodal-enough `f` on `[a, b]`.
fn refine_minimum(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, xtol: f64) -> (f64, f64) {
    let inv_phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > xtol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    if fc < fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

fn pin_solver_threads() {
    // Determinism: keep the dense solver sequential; parallelism lives at the
    // grid-point level.
    faer::set_global_parallelism(faer::Par::Seq);
}

// ---------------------------------------------------------------------------
// Werner study
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug)]
pub struct WernerRecord {
    pub p: f64,
    pub tw_value: f64,
    pub hz1: f64,
    pub hz2: f64,
    pub negativity: f64,
    pub verdict_tw: bool,
    pub verdict_hz: bool,
}

/// Zero crossings of each criterion, refined by bisection.
#[derive(Clone, Copy, Debug)]
pub struct WernerThresholds {
    /// Product witness with the raised-operator pairing on the shared-excitation family.
    pub tw_psi_plus: f64,
    /// Product witness with the lowering pair on the pair-creation family.
    pub tw_phi_plus: f64,
    /// Joint Hillery-Zubairy inequality on the shared-excitation family.
    pub hz_psi_plus: f64,
    /// Negativity onset (identical for both families).
    pub ppt: f64,
}

#[derive(Clone, Debug)]
pub struct WernerStudy {
    pub psi_plus: Vec<WernerRecord>,
    pub phi_plus: Vec<WernerRecord>,
    pub thresholds: WernerThresholds,
}

fn werner_ops(which: BellState) -> (LocalOperator, LocalOperator) {
    // The lowering pair detects the pair-creation Bell state; the
    // shared-excitation state needs the raised partner on side b.
    let a = LocalOperator::new(pauli_lower(), Side::A).unwrap();
    let b = match which {
        BellState::PsiPlus => LocalOperator::new(pauli_raise(), Side::B).unwrap(),
        BellState::PhiPlus => LocalOperator::new(pauli_lower(), Side::B).unwrap(),
    };
    (a, b)
}

fn werner_record(which: BellState, p: f64) -> Result<WernerRecord> {
    let state: QuantumState = werner(which, p)?.into();
    let (a, b) = werner_ops(which);
    let tw_value = witness_product(&a, &b, &state)?;
    // Hillery-Zubairy margins are always reported for the lowering pair.
    let hz_a = LocalOperator::new(pauli_lower(), Side::A).unwrap();
    let hz_b = LocalOperator::new(pauli_lower(), Side::B).unwrap();
    let hz = hz_test(&hz_a, &hz_b, &state)?;
    let neg = negativity(&state)?;
    Ok(WernerRecord {
        p,
        tw_value,
        hz1: hz.form1_margin,
        hz2: hz.form2_margin,
        negativity: neg,
        verdict_tw: tw_value < -VERDICT_TOL_SCALE,
        verdict_hz: hz.entangled_1 || hz.entangled_2,
    })
}

fn min_pt_eigenvalue(which: BellState, p: f64) -> f64 {
    let state = werner(which, p).unwrap();
    let pt = partial_transpose_b(state.rho(), state.space()).unwrap();
    eigvalsh(&pt).unwrap()[0]
}

pub fn run_werner_study(points: usize) -> Result<WernerStudy> {
    pin_solver_threads();
    let grid = GridSpec::new(0.0, 1.0, points)?;
    let build = |which: BellState| -> Result<Vec<WernerRecord>> {
        grid.values()
            .par_iter()
            .map(|&p| werner_record(which, p))
            .collect()
    };
    let psi_plus = build(BellState::PsiPlus)?;
    let phi_plus = build(BellState::PhiPlus)?;

    let tw_cross = |which: BellState| {
        let (a, b) = werner_ops(which);
        bisect_zero(
            |p| {
                let state: QuantumState = werner(which, p).unwrap().into();
                witness_product(&a, &b, &state).unwrap()
            },
            0.0,
            1.0,
            1e-12,
        )
        .expect("product witness changes sign on [0, 1]")
    };
    let hz_cross = bisect_zero(
        |p| {
            let state: QuantumState = werner(BellState::PsiPlus, p).unwrap().into();
            let a = LocalOperator::new(pauli_lower(), Side::A).unwrap();
            let b = LocalOperator::new(pauli_lower(), Side::B).unwrap();
            hz_test(&a, &b, &state).unwrap().form2_margin
        },
        0.0,
        1.0,
        1e-12,
    )
    .expect("joint Hillery-Zubairy margin changes sign on [0, 1]");
    let ppt_cross = bisect_zero(
        |p| min_pt_eigenvalue(BellState::PhiPlus, p),
        0.0,
        1.0,
        1e-9,
    )
    .expect("partial-transpose minimum eigenvalue changes sign on [0, 1]");

    Ok(WernerStudy {
        psi_plus,
        phi_plus,
        thresholds: WernerThresholds {
            tw_psi_plus: tw_cross(BellState::PsiPlus),
            tw_phi_plus: tw_cross(BellState::PhiPlus),
            hz_psi_plus: hz_cross,
            ppt: ppt_cross,
        },
    })
}

pub const WERNER_CSV_HEADER: &str = "p,tw_value,hz1,hz2,negativity,verdict_tw,verdict_hz";

fn werner_rows(records: &[WernerRecord]) -> Vec<String> {
    records
        .iter()
        .map(|r| {
            format!(
                "{},{},{},{},{},{},{}",
                fmt_sci(r.p),
                fmt_sci(r.tw_value),
                fmt_sci(r.hz1),
                fmt_sci(r.hz2),
                fmt_sci(r.negativity),
                fmt_bool(r.verdict_tw),
                fmt_bool(r.verdict_hz)
            )
        })
        .collect()
}

pub fn render_werner_csv(records: &[WernerRecord]) -> String {
    render_csv(WERNER_CSV_HEADER, &werner_rows(records))
}

pub fn write_werner_csv(records: &[WernerRecord], path: &Path) -> Result<()> {
    write_csv(path, WERNER_CSV_HEADER, &werner_rows(records))
}

// ---------------------------------------------------------------------------
// Region sweep over (mixing probability, squeezing)
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct RegionConfig {
    pub p_grid: GridSpec,
    pub r_grid: GridSpec,
    pub cutoff: CutoffPolicy,
    pub tail_tol: f64,
}

impl Default for RegionConfig {
    fn default() -> Self {
        Self {
            p_grid: GridSpec::new(0.0, 1.0, 21).unwrap(),
            r_grid: GridSpec::new(0.05, 1.5, 21).unwrap(),
            cutoff: CutoffPolicy::Fixed(30),
            tail_tol: 1e-10,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RegionRecord {
    pub p: f64,
    pub r: f64,
    pub cutoff: usize,
    pub discarded_weight: f64,
    /// `<n_a><n_b>` side of the product witness (sets the verdict scale).
    pub tw_lhs: f64,
    pub tw_value: f64,
    /// Full-family value at the optimal phase for the same operator pair;
    /// the two family terms collapse pairwise, so this is twice `tw_value`
    /// up to rounding.
    pub tw_general_value: f64,
    pub twe_value: f64,
    /// Mean-field estimator validity: majority squeezed component whose
    /// joint occupation dominates the thermal one.
    pub twe_valid: bool,
    pub hz1: f64,
    pub hz2: f64,
    pub negativity: f64,
    pub verdict_tw: bool,
    pub verdict_twe: bool,
    pub verdict_hz: bool,
    pub verdict_neg: bool,
}

fn region_point(p: f64, r: f64, cutoff: usize, tol: f64) -> Result<RegionRecord> {
    let (state, report) = squeezed_thermal(p, r, cutoff, tol)?;
    let state: QuantumState = state.into();
    let ann = boson_annihilation(cutoff);
    let a = LocalOperator::new(ann.clone(), Side::A)?;
    let b = LocalOperator::new(ann, Side::B)?;

    let (tw_lhs, tw_rhs) = witness_product_sides(&a, &b, &state)?;
    let tw_value = tw_lhs - tw_rhs;
    let general = evaluate_general(
        &WitnessSpec::with_single_pair(
            a.clone(),
            b.clone(),
            SigmaFlags::new(true, true, false, false),
            WitnessVariant::Product,
            PhaseChoice::Optimal,
        )?,
        &state,
    )?;
    let est = estimated_witness(&a, &b, &state, EstimatorKind::Meanfield)?;

    // Validity of the mean-field route: the squeezed component must dominate
    // the mixture and carry the larger joint occupation.
    let (sq, _) = tmsv(r, cutoff, f64::INFINITY)?;
    let (th, _) = thermal(r, cutoff, f64::INFINITY)?;
    let n_op = crate::operators::number_operator(cutoff);
    let sq_state: QuantumState = sq.into();
    let joint_sq = sq_state.expect_joint(&n_op, &n_op)?.re;
    let th_mean: f64 = (0..=cutoff).map(|n| n as f64 * th[(n, n)].re).sum();
    let joint_th = th_mean * th_mean;
    let twe_valid = p > 0.5 && joint_sq >= joint_th;

    let hz = hz_test(&a, &b, &state)?;
    let neg = negativity(&state)?;
    let tol_scale = VERDICT_TOL_SCALE * tw_lhs.abs().max(1.0);
    Ok(RegionRecord {
        p,
        r,
        cutoff,
        discarded_weight: report.discarded_weight,
        tw_lhs,
        tw_value,
        tw_general_value: general.value,
        twe_value: est.value,
        twe_valid,
        hz1: hz.form1_margin,
        hz2: hz.form2_margin,
        negativity: neg,
        verdict_tw: tw_value < -tol_scale,
        verdict_twe: twe_valid && est.value < -tol_scale,
        verdict_hz: hz.entangled_1 || hz.entangled_2,
        verdict_neg: neg > 0.0,
    })
}

pub fn run_region_sweep(cfg: &RegionConfig) -> Result<Vec<RegionRecord>> {
    pin_solver_threads();
    let mut points = Vec::new();
    for &p in &cfg.p_grid.values() {
        for &r in &cfg.r_grid.values() {
            points.push((p, r));
        }
    }
    points
        .par_iter()
        .map(|&(p, r)| {
            let (cutoff, tol) = match cfg.cutoff {
                CutoffPolicy::Auto => (auto_cutoff_tmsv(r, cfg.tail_tol), cfg.tail_tol),
                CutoffPolicy::Fixed(n) => (n, f64::INFINITY),
            };
            region_point(p, r, cutoff, tol)
        })
        .collect()
}

pub const REGION_CSV_HEADER: &str = "p,r,cutoff,discarded_weight,tw_lhs,tw_value,\
tw_general_value,twe_value,twe_valid,hz1,hz2,negativity,verdict_tw,verdict_twe,verdict_hz,\
verdict_neg";

fn region_rows(records: &[RegionRecord]) -> Vec<String> {
    records
        .iter()
        .map(|r| {
            format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                fmt_sci(r.p),
                fmt_sci(r.r),
                r.cutoff,
                fmt_sci(r.discarded_weight),
                fmt_sci(r.tw_lhs),
                fmt_sci(r.tw_value),
                fmt_sci(r.tw_general_value),
                fmt_sci(r.twe_value),
                fmt_bool(r.twe_valid),
                fmt_sci(r.hz1),
                fmt_sci(r.hz2),
                fmt_sci(r.negativity),
                fmt_bool(r.verdict_tw),
                fmt_bool(r.verdict_twe),
                fmt_bool(r.verdict_hz),
                fmt_bool(r.verdict_neg)
            )
        })
        .collect()
}

pub fn render_region_csv(records: &[RegionRecord]) -> String {
    render_csv(REGION_CSV_HEADER, &region_rows(records))
}

pub fn write_region_csv(records: &[RegionRecord], path: &Path) -> Result<()> {
    write_csv(path, REGION_CSV_HEADER, &region_rows(records))
}

// ---------------------------------------------------------------------------
// Cross-Kerr time sweep
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct KerrConfig {
    pub alpha: f64,
    pub beta: f64,
    pub t_grid: GridSpec,
    pub cutoff: CutoffPolicy,
    pub theta_points: usize,
    pub tail_tol: f64,
}

impl KerrConfig {
    pub fn new(alpha: f64, beta: f64) -> Self {
        Self {
            alpha,
            beta,
            t_grid: GridSpec::new(0.0, std::f64::consts::TAU, 128).unwrap(),
            cutoff: CutoffPolicy::Auto,
            theta_points: 64,
            tail_tol: 1e-10,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct KerrRecord {
    pub t: f64,
    pub cutoff_a: usize,
    pub cutoff_b: usize,
    pub discarded_weight: f64,
    /// `<n_A><n_B>` at the optimal quadrature angle.
    pub tw_lhs: f64,
    /// Product witness minimized over the quadrature angle grid.
    pub tw_value: f64,
    /// Full-family value at the optimal phase and the optimal angle.
    pub tw_general_value: f64,
    pub theta_opt: f64,
    pub dgcz_margin: f64,
    pub dgcz_tau: f64,
    pub dgcz_tau_prime: f64,
    pub entropy: f64,
    pub verdict_tw: bool,
    pub verdict_dgcz: bool,
}

/// Product witness value and its positive side for a precomputed pair of
/// number operators (avoids rebuilding `A^dag A` in the angle loop).
fn tw_from_numbers(
    state: &QuantumState,
    n_a: &ComplexMatrix,
    n_b: &ComplexMatrix,
) -> Result<(f64, f64)> {
    let lhs = state.expect_local(n_a, Side::A)?.re * state.expect_local(n_b, Side::B)?.re;
    let rhs = state.expect_joint(n_a, n_b)?.re;
    Ok((lhs, lhs - rhs))
}

/// Minimum of the quadrature-angle witness over a uniform grid on `[0, 2pi)`.
fn tw_min_over_theta(
    state: &QuantumState,
    quad_numbers: &[(f64, ComplexMatrix)],
    n_b: &ComplexMatrix,
) -> Result<(f64, f64, f64)> {
    let mut best = (f64::INFINITY, 0.0, 0.0); // (value, theta, lhs)
    for (theta, n_a) in quad_numbers {
        let (lhs, value) = tw_from_numbers(state, n_a, n_b)?;
        if value < best.0 {
            best = (value, *theta, lhs);
        }
    }
    Ok(best)
}

fn quad_number_grid(theta_points: usize, cutoff: usize) -> Vec<(f64, ComplexMatrix)> {
    (0..theta_points)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / theta_points as f64;
            (theta, number_of(&quadrature(theta, cutoff)).unwrap())
        })
        .collect()
}

fn kerr_point(
    cfg: &KerrConfig,
    t: f64,
    cutoff_a: usize,
    cutoff_b: usize,
    tol: f64,
    quad_numbers: &[(f64, ComplexMatrix)],
    n_b: &ComplexMatrix,
) -> Result<KerrRecord> {
    let (psi, report) = cross_kerr_evolve(
        Complex64::new(cfg.alpha, 0.0),
        Complex64::new(cfg.beta, 0.0),
        t,
        cutoff_a,
        cutoff_b,
        tol,
    )?;
    let dgcz = dgcz_crosskerr(&psi, cfg.alpha, cfg.beta, t)?;
    let state: QuantumState = psi.into();
    let (tw_value, theta_opt, tw_lhs) = tw_min_over_theta(&state, quad_numbers, n_b)?;
    let general = evaluate_general(
        &WitnessSpec::new(
            LocalOperator::new(quadrature(theta_opt, cutoff_a), Side::A)?,
            LocalOperator::new(quadrature(theta_opt, cutoff_a), Side::A)?,
            LocalOperator::new(boson_annihilation(cutoff_b), Side::B)?,
            LocalOperator::new(boson_annihilation(cutoff_b), Side::B)?,
            SigmaFlags::new(true, true, false, false),
            WitnessVariant::Product,
            PhaseChoice::Optimal,
        )?,
        &state,
    )?;
    let entropy = entanglement_entropy(&state)?;
    let tol_scale = VERDICT_TOL_SCALE * tw_lhs.abs().max(1.0);
    Ok(KerrRecord {
        t,
        cutoff_a,
        cutoff_b,
        discarded_weight: report.discarded_weight,
        tw_lhs,
        tw_value,
        tw_general_value: general.value,
        theta_opt,
        dgcz_margin: dgcz.margin,
        dgcz_tau: dgcz.tau,
        dgcz_tau_prime: dgcz.tau_prime,
        entropy,
        verdict_tw: tw_value < -tol_scale,
        verdict_dgcz: dgcz.entangled,
    })
}

pub fn run_kerr_time_sweep(cfg: &KerrConfig) -> Result<Vec<KerrRecord>> {
    pin_solver_threads();
    let (cutoff_a, cutoff_b, tol) = match cfg.cutoff {
        CutoffPolicy::Auto => (
            auto_cutoff_coherent(Complex64::new(cfg.alpha, 0.0), cfg.tail_tol),
            auto_cutoff_coherent(Complex64::new(cfg.beta, 0.0), cfg.tail_tol),
            cfg.tail_tol,
        ),
        CutoffPolicy::Fixed(n) => (n, n, f64::INFINITY),
    };
    let quad_numbers = quad_number_grid(cfg.theta_points, cutoff_a);
    let n_b = crate::operators::number_operator(cutoff_b);
    cfg.t_grid
        .values()
        .par_iter()
        .map(|&t| kerr_point(cfg, t, cutoff_a, cutoff_b, tol, &quad_numbers, &n_b))
        .collect()
}

pub const KERR_CSV_HEADER: &str = "t,cutoff_a,cutoff_b,discarded_weight,tw_lhs,tw_value,\
tw_general_value,theta_opt,dgcz_margin,dgcz_tau,dgcz_tau_prime,entropy,verdict_tw,verdict_dgcz";

fn kerr_rows(records: &[KerrRecord]) -> Vec<String> {
    records
        .iter()
        .map(|r| {
            format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                fmt_sci(r.t),
                r.cutoff_a,
                r.cutoff_b,
                fmt_sci(r.discarded_weight),
                fmt_sci(r.tw_lhs),
                fmt_sci(r.tw_value),
                fmt_sci(r.tw_general_value),
                fmt_sci(r.theta_opt),
                fmt_sci(r.dgcz_margin),
                fmt_sci(r.dgcz_tau),
                fmt_sci(r.dgcz_tau_prime),
                fmt_sci(r.entropy),
                fmt_bool(r.verdict_tw),
                fmt_bool(r.verdict_dgcz)
            )
        })
        .collect()
}

pub fn render_kerr_csv(records: &[KerrRecord]) -> String {
    render_csv(KERR_CSV_HEADER, &kerr_rows(records))
}

pub fn write_kerr_csv(records: &[KerrRecord], path: &Path) -> Result<()> {
    write_csv(path, KERR_CSV_HEADER, &kerr_rows(records))
}

// ---------------------------------------------------------------------------
// Scaling of characteristic times with the coherent amplitude
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct ScalingConfig {
    pub alphas: Vec<f64>,
    pub theta_points: usize,
    pub tail_tol: f64,
    /// Points in the coarse scan used to bracket each feature.
    pub coarse_points: usize,
}

impl Default for ScalingConfig {
    fn default() -> Self {
        Self {
            alphas: vec![2.0, 3.0, 4.0, 5.0],
            theta_points: 64,
            tail_tol: 1e-10,
            coarse_points: 160,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ScalingRecord {
    pub alpha: f64,
    pub cutoff: usize,
    /// Time of deepest product-witness violation.
    pub t_tw_min: f64,
    pub tw_min_value: f64,
    /// First time the DGCZ margin returns to zero; absent when no sign
    /// change is found.
    pub t_dgcz_zero: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct ScalingStudy {
    pub records: Vec<ScalingRecord>,
    /// Log-log slope of `t_tw_min` against the amplitude.
    pub tw_slope: f64,
    /// Log-log slope of the DGCZ zero-crossing time, when every amplitude
    /// produced one.
    pub dgcz_slope: Option<f64>,
}

fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(x, y) in points {
        let (lx, ly) = (x.ln(), y.ln());
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

fn scaling_point(cfg: &ScalingConfig, alpha: f64) -> Result<ScalingRecord> {
    let cutoff = auto_cutoff_coherent(Complex64::new(alpha, 0.0), cfg.tail_tol);
    let quad_numbers = quad_number_grid(cfg.theta_points, cutoff);
    let n_b = crate::operators::number_operator(cutoff);

    let tw_at = |t: f64| -> f64 {
        let (psi, _) = cross_kerr_evolve(
            Complex64::new(alpha, 0.0),
            Complex64::new(alpha, 0.0),
            t,
            cutoff,
            cutoff,
            cfg.tail_tol,
        )
        .expect("cutoff chosen adequately");
        let state: QuantumState = psi.into();
        tw_min_over_theta(&state, &quad_numbers, &n_b)
            .expect("witness evaluation succeeds")
            .0
    };

    // Coarse scan of the primary violation window, then golden-section
    // refine. The window stays inside the first quarter period: the
    // half-period cat point is flanked by mirror lobes of the same depth as
    // the primary dip, and tracking those would mix two different features.
    let t_hi = (6.0 / alpha).min(std::f64::consts::FRAC_PI_2);
    let coarse: Vec<(f64, f64)> = (1..=cfg.coarse_points)
        .map(|k| {
            let t = t_hi * k as f64 / cfg.coarse_points as f64;
            (t, tw_at(t))
        })
        .collect();
    let (best_idx, _) = coarse
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.1.total_cmp(&b.1))
        .expect("coarse grid is nonempty");
    let lo = if best_idx == 0 { coarse[0].0 * 0.5 } else { coarse[best_idx - 1].0 };
    let hi = coarse.get(best_idx + 1).map_or(t_hi, |p| p.0);
    let (t_tw_min, tw_min_value) = refine_minimum(tw_at, lo, hi, 1e-6);

    // DGCZ margin: negative immediately after t = 0, recovers at the first
    // crossing; scan an expanding log grid for the bracket.
    let dgcz_at = |t: f64| -> f64 {
        let (psi, _) = cross_kerr_evolve(
            Complex64::new(alpha, 0.0),
            Complex64::new(alpha, 0.0),
            t,
            cutoff,
            cutoff,
            cfg.tail_tol,
        )
        .expect("cutoff chosen adequately");
        dgcz_crosskerr(&psi, alpha, alpha, t)
            .expect("DGCZ evaluation succeeds")
            .margin
    };
    let mut t_dgcz_zero = None;
    let t0 = 1e-4 / alpha;
    let t1 = 4.0 / alpha;
    let steps = cfg.coarse_points;
    let ratio = (t1 / t0).powf(1.0 / (steps - 1) as f64);
    let mut prev = (t0, dgcz_at(t0));
    for k in 1..steps {
        let t = t0 * ratio.powi(k as i32);
        let m = dgcz_at(t);
        if prev.1 < 0.0 && m >= 0.0 {
            t_dgcz_zero = bisect_zero(dgcz_at, prev.0, t, 1e-6);
            break;
        }
        prev = (t, m);
    }

    Ok(ScalingRecord {
        alpha,
        cutoff,
        t_tw_min,
        tw_min_value,
        t_dgcz_zero,
    })
}

pub fn run_scaling_sweep(cfg: &ScalingConfig) -> Result<ScalingStudy> {
    pin_solver_threads();
    if cfg.alphas.iter().any(|&a| a <= 0.0) {
        return Err(Error::InvalidParameter(
            "scaling amplitudes must be positive".into(),
        ));
    }
    let records: Vec<ScalingRecord> = cfg
        .alphas
        .par_iter()
        .map(|&alpha| scaling_point(cfg, alpha))
        .collect::<Result<_>>()?;
    let tw_points: Vec<(f64, f64)> = records.iter().map(|r| (r.alpha, r.t_tw_min)).collect();
    let tw_slope = log_log_slope(&tw_points);
    let dgcz_points: Option<Vec<(f64, f64)>> = records
        .iter()
        .map(|r| r.t_dgcz_zero.map(|t| (r.alpha, t)))
        .collect();
    let dgcz_slope = dgcz_points.map(|pts| log_log_slope(&pts));
    Ok(ScalingStudy {
        records,
        tw_slope,
        dgcz_slope,
    })
}

pub const SCALING_CSV_HEADER: &str = "alpha,cutoff,t_tw_min,tw_min_value,t_dgcz_zero";

fn scaling_rows(records: &[ScalingRecord]) -> Vec<String> {
    records
        .iter()
        .map(|r| {
            format!(
                "{},{},{},{},{}",
                fmt_sci(r.alpha),
                r.cutoff,
                fmt_sci(r.t_tw_min),
                fmt_sci(r.tw_min_value),
                r.t_dgcz_zero.map_or_else(|| "nan".to_string(), fmt_sci)
            )
        })
        .collect()
}

pub fn render_scaling_csv(records: &[ScalingRecord]) -> String {
    render_csv(SCALING_CSV_HEADER, &scaling_rows(records))
}

pub fn write_scaling_csv(records: &[ScalingRecord], path: &Path) -> Result<()> {
    write_csv(path, SCALING_CSV_HEADER, &scaling_rows(records))
}

// ---------------------------------------------------------------------------
// Bell-state table
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct BellRecord {
    pub state: &'static str,
    pub op_a: &'static str,
    pub op_b: &'static str,
    pub tw_value: f64,
    pub phase_value: f64,
    pub hz1: f64,
    pub hz2: f64,
    pub negativity: f64,
    pub entropy: f64,
}

/// Both Bell states against both ladder pairings; the table records which
/// operator choice detects which state.
pub fn run_bell_study() -> Result<Vec<BellRecord>> {
    pin_solver_threads();
    let mut rows = Vec::new();
    for (name, which) in [
        ("bell1", BellState::PsiPlus),
        ("bell2", BellState::PhiPlus),
    ] {
        for (b_name, b_matrix) in [("sigma-", pauli_lower()), ("sigma+", pauli_raise())] {
            let a = LocalOperator::new(pauli_lower(), Side::A)?;
            let b = LocalOperator::new(b_matrix, Side::B)?;
            let state: QuantumState = bell(which).into();
            let tw_value = witness_product(&a, &b, &state)?;
            let phase = witness_phase(&a, &b, &state, PhaseChoice::Optimal)?;
            let hz = hz_test(&a, &b, &state)?;
            rows.push(BellRecord {
                state: name,
                op_a: "sigma-",
                op_b: b_name,
                tw_value,
                phase_value: phase.value,
                hz1: hz.form1_margin,
                hz2: hz.form2_margin,
                negativity: negativity(&state)?,
                entropy: entanglement_entropy(&state)?,
            });
        }
    }
    Ok(rows)
}

pub const BELL_CSV_HEADER: &str =
    "state,op_a,op_b,tw_value,phase_value,hz1,hz2,negativity,entropy";

fn bell_rows(records: &[BellRecord]) -> Vec<String> {
    records
        .iter()
        .map(|r| {
            format!(
                "{},{},{},{},{},{},{},{},{}",
                r.state,
                r.op_a,
                r.op_b,
                fmt_sci(r.tw_value),
                fmt_sci(r.phase_value),
                fmt_sci(r.hz1),
                fmt_sci(r.hz2),
                fmt_sci(r.negativity),
                fmt_sci(r.entropy)
            )
        })
        .collect()
}

pub fn render_bell_csv(records: &[BellRecord]) -> String {
    render_csv(BELL_CSV_HEADER, &bell_rows(records))
}

pub fn write_bell_csv(records: &[BellRecord], path: &Path) -> Result<()> {
    write_csv(path, BELL_CSV_HEADER, &bell_rows(records))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_values_are_inclusive_and_uniform() {
        let g = GridSpec::new(0.0, 1.0, 5).unwrap();
        assert_eq!(g.values(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        assert!(GridSpec::new(1.0, 0.0, 5).is_err());
        assert!(GridSpec::new(0.0, 1.0, 0).is_err());
    }

    #[test]
    fn sci_format_matches_c_style() {
        assert_eq!(fmt_sci(2.5), "2.500000000000e+00");
        assert_eq!(fmt_sci(-0.0001234), "-1.234000000000e-04");
        assert_eq!(fmt_sci(0.0), "0.000000000000e+00");
        assert_eq!(fmt_sci(1e100), "1.000000000000e+100");
        assert_eq!(fmt_sci(f64::NAN), "nan");
    }

    #[test]
    fn bisection_finds_simple_roots() {
        let root = bisect_zero(|x| x * x - 2.0, 0.0, 2.0, 1e-12).unwrap();
        assert!((root - 2f64.sqrt()).abs() < 1e-11);
        assert!(bisect_zero(|x| x * x + 1.0, -1.0, 1.0, 1e-12).is_none());
    }

    #[test]
    fn golden_section_finds_parabola_minimum() {
        let (x, fx) = refine_minimum(|x| (x - 1.3).powi(2) + 0.5, 0.0, 3.0, 1e-9);
        assert!((x - 1.3).abs() < 1e-7);
        assert!((fx - 0.5).abs() < 1e-12);
    }

    #[test]
    fn werner_thresholds_hit_known_values() {
        let study = run_werner_study(21).unwrap();
        assert!((study.thresholds.tw_phi_plus - 0.6).abs() < 1e-9);
        assert!((study.thresholds.tw_psi_plus - 0.6).abs() < 1e-9);
        let golden = (5f64.sqrt() - 1.0) / 2.0;
        assert!((study.thresholds.hz_psi_plus - golden).abs() < 1e-9);
        assert!((study.thresholds.ppt - 1.0 / 3.0).abs() < 1e-6);
        assert_eq!(study.psi_plus.len(), 21);
        assert_eq!(study.phi_plus.len(), 21);
    }

    #[test]
    fn region_sweep_small_grid_sanity() {
        let cfg = RegionConfig {
            p_grid: GridSpec::new(0.0, 1.0, 3).unwrap(),
            r_grid: GridSpec::new(0.3, 0.8, 2).unwrap(),
            cutoff: CutoffPolicy::Auto,
            tail_tol: 1e-10,
        };
        let records = run_region_sweep(&cfg).unwrap();
        assert_eq!(records.len(), 6);
        for rec in &records {
            // The single-pair member collapses the family value to twice the
            // pairwise witness.
            assert!(
                (rec.tw_general_value - 2.0 * rec.tw_value).abs()
                    <= 1e-9 * rec.tw_lhs.abs().max(1.0)
            );
            if rec.p == 0.0 {
                // Product of thermals: nothing may fire.
                assert!(!rec.verdict_tw && !rec.verdict_twe && !rec.verdict_hz);
                assert!(rec.negativity <= 1e-9);
            }
            if rec.p == 1.0 {
                // Pure squeezed vacuum: closed form for the product witness.
                let lambda: f64 = rec.r.tanh();
                let l2 = lambda * lambda;
                let closed = -l2 / (1.0 - l2).powi(2);
                assert!(
                    (rec.tw_value - closed).abs() < 1e-6,
                    "tw {} vs closed {}",
                    rec.tw_value,
                    closed
                );
            }
        }
        // At fixed r, the witness weakens monotonically as the thermal
        // fraction grows.
        for r_idx in 0..2 {
            let col: Vec<f64> = records
                .iter()
                .filter(|rec| (rec.r - [0.3, 0.8][r_idx]).abs() < 1e-12)
                .map(|rec| rec.tw_value)
                .collect();
            for w in col.windows(2) {
                assert!(w[1] <= w[0] + 1e-12);
            }
        }
    }

    #[test]
    fn kerr_sweep_endpoints_are_separable() {
        let mut cfg = KerrConfig::new(1.5, 1.5);
        // t = 0, pi/2, pi, 3pi/2, 2pi.
        cfg.t_grid = GridSpec::new(0.0, std::f64::consts::TAU, 5).unwrap();
        cfg.theta_points = 16;
        let records = run_kerr_time_sweep(&cfg).unwrap();
        assert_eq!(records.len(), 5);
        let scale = records[0].tw_lhs.abs().max(1.0);
        assert!(records[0].tw_value.abs() <= 1e-8 * scale);
        assert!(records[0].entropy.abs() < 1e-9);
        assert!((records[0].dgcz_margin - 0.5).abs() < 1e-8);
        let last = records.last().unwrap();
        assert!(last.tw_value.abs() <= 1e-8 * scale);
        assert!(last.entropy.abs() < 1e-8);
        // Quarter period: entangled and detected.
        assert!(records[1].verdict_tw, "tw at pi/2 = {}", records[1].tw_value);
        assert!(records[1].entropy > 0.1);
        // Half period: the two-branch cat state is entangled (one full bit)
        // but invisible to the quadrature-number witness, whose covariance
        // vanishes identically by parity.
        assert!(records[2].entropy > 0.9);
        assert!(records[2].tw_value.abs() <= 1e-8 * scale);
    }

    #[test]
    fn csv_output_is_deterministic() {
        use std::fs;
        let dir = tempfile::tempdir().unwrap();
        let p1 = dir.path().join("a.csv");
        let p2 = dir.path().join("b.csv");
        let study1 = run_werner_study(11).unwrap();
        write_werner_csv(&study1.phi_plus, &p1).unwrap();
        let study2 = run_werner_study(11).unwrap();
        write_werner_csv(&study2.phi_plus, &p2).unwrap();
        assert_eq!(fs::read(&p1).unwrap(), fs::read(&p2).unwrap());
        let text = fs::read_to_string(&p1).unwrap();
        assert!(text.starts_with(WERNER_CSV_HEADER));
        assert_eq!(text.lines().count(), 12);
    }
}
