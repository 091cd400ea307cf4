//! Correlation-based entanglement criteria.
//!
//! The general witness family is parameterized by two operator pairs
//! `(A_1, A_2)` on subsystem a and `(B_1, B_2)` on subsystem b, four binary
//! placement flags, a product-form / joint-form variant selector, and a free
//! phase. Every member is non-negative on separable states, so a negative
//! value certifies entanglement. The two trace brackets of the family contain
//! the density matrix twice; the second bracket is always the complex
//! conjugate of the first, which the evaluator exploits (and cross-checks in
//! debug builds).
//!
//! Also implemented: the fast pairwise-product and phase special cases, the
//! Hillery-Zubairy product and joint inequalities, and the DGCZ variance
//! criterion specialized to cross-Kerr evolved coherent states.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::operators::{momentum, number_operator, position, LocalOperator};
use crate::space::{apply_lifted_left, BipartiteSpace, Side};
use crate::states::{PureState, QuantumState};

/// Relative scale for verdict tolerances: a witness value must undershoot
/// `-tol` with `tol = VERDICT_TOL_SCALE * max(1, scale)` to count as a
/// detection. Keeps large-cutoff sweeps from flagging rounding noise.
pub const VERDICT_TOL_SCALE: f64 = 1e-10;

fn verdict_tol(scale: f64) -> f64 {
    VERDICT_TOL_SCALE * scale.abs().max(1.0)
}

/// Placement flags for the four operators; `true` puts the operator on the
/// ket side of its projector in the underlying construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SigmaFlags {
    pub a1: bool,
    pub a2: bool,
    pub b1: bool,
    pub b2: bool,
}

impl SigmaFlags {
    pub fn new(a1: bool, a2: bool, b1: bool, b2: bool) -> Self {
        Self { a1, a2, b1, b2 }
    }
}

/// Which member of the witness family to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessVariant {
    /// Bound on the product of local expectations.
    Product,
    /// Bound on joint number expectations.
    Joint,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PhaseChoice {
    Fixed(f64),
    /// Phase chosen analytically to make the trace terms maximally negative.
    Optimal,
}

/// A fully specified member of the witness family.
#[derive(Clone, Debug)]
pub struct WitnessSpec {
    pub a1: LocalOperator,
    pub a2: LocalOperator,
    pub b1: LocalOperator,
    pub b2: LocalOperator,
    pub sigma: SigmaFlags,
    pub variant: WitnessVariant,
    pub phase: PhaseChoice,
}

impl WitnessSpec {
    pub fn new(
        a1: LocalOperator,
        a2: LocalOperator,
        b1: LocalOperator,
        b2: LocalOperator,
        sigma: SigmaFlags,
        variant: WitnessVariant,
        phase: PhaseChoice,
    ) -> Result<Self> {
        if a1.side() != Side::A || a2.side() != Side::A {
            return Err(Error::InvalidParameter(
                "A-pair operators must act on side a".into(),
            ));
        }
        if b1.side() != Side::B || b2.side() != Side::B {
            return Err(Error::InvalidParameter(
                "B-pair operators must act on side b".into(),
            ));
        }
        if a1.dim() != a2.dim() || b1.dim() != b2.dim() {
            return Err(Error::DimensionMismatch(
                "operator pairs must share a dimension per side".into(),
            ));
        }
        Ok(Self {
            a1,
            a2,
            b1,
            b2,
            sigma,
            variant,
            phase,
        })
    }

    /// Same-operator convenience: both pair slots on each side get the same
    /// operator.
    pub fn with_single_pair(
        a: LocalOperator,
        b: LocalOperator,
        sigma: SigmaFlags,
        variant: WitnessVariant,
        phase: PhaseChoice,
    ) -> Result<Self> {
        Self::new(a.clone(), a, b.clone(), b, sigma, variant, phase)
    }

    fn space(&self) -> BipartiteSpace {
        BipartiteSpace::new(self.a1.dim(), self.b1.dim())
    }

    fn check_state(&self, state: &QuantumState) -> Result<()> {
        if state.space() != self.space() {
            return Err(Error::DimensionMismatch(format!(
                "witness is for a {}x{} space but the state lives on {}x{}",
                self.a1.dim(),
                self.b1.dim(),
                state.space().dim_a,
                state.space().dim_b
            )));
        }
        Ok(())
    }
}

/// Evaluation record for one witness instance.
#[derive(Clone, Copy, Debug)]
pub struct WitnessResult {
    /// The two positive expectation terms.
    pub s_term: f64,
    /// First trace bracket; the second is its conjugate.
    pub trace_term: Complex64,
    pub phi_used: f64,
    /// `s_term - 2 Re(e^{i phi} trace_term)`.
    pub value: f64,
    pub entangled: bool,
}

fn finish_result(s_term: f64, c: Complex64, phase: PhaseChoice) -> WitnessResult {
    let phi = match phase {
        PhaseChoice::Fixed(phi) => phi,
        PhaseChoice::Optimal => -c.arg(),
    };
    let value = s_term - 2.0 * (Complex64::from_polar(1.0, phi) * c).re;
    WitnessResult {
        s_term,
        trace_term: c,
        phi_used: phi,
        value,
        entangled: value < -verdict_tol(s_term),
    }
}

/// Product of the flagged factors in written order; identity when none are
/// flagged.
fn bracket_factor(dim: usize, factors: &[(ComplexMatrix, bool)]) -> ComplexMatrix {
    let mut out = ComplexMatrix::identity(dim);
    for (m, included) in factors {
        if *included {
            out = &out * m;
        }
    }
    out
}

struct BracketOps {
    m_a: ComplexMatrix,
    m_b: ComplexMatrix,
    n_a: ComplexMatrix,
    n_b: ComplexMatrix,
}

/// Local factors of the first trace bracket (`swap = false`) or the second
/// (`swap = true`); both brackets factor into an a-side and a b-side product.
fn bracket_ops(spec: &WitnessSpec, swap: bool) -> BracketOps {
    let s = spec.sigma;
    let da = spec.a1.dim();
    let db = spec.b1.dim();
    let a1 = spec.a1.matrix();
    let a2 = spec.a2.matrix();
    let b1 = spec.b1.matrix();
    let b2 = spec.b2.matrix();

    let (m_a, m_b, n_a, n_b);
    match (spec.variant, swap) {
        (WitnessVariant::Product, false) => {
            m_a = bracket_factor(da, &[(a1.dagger(), s.a1), (a2.clone(), s.a2)]);
            m_b = bracket_factor(db, &[(b2.dagger(), !s.b2), (b1.clone(), !s.b1)]);
            n_a = bracket_factor(da, &[(a2.dagger(), !s.a2), (a1.clone(), !s.a1)]);
            n_b = bracket_factor(db, &[(b1.dagger(), s.b1), (b2.clone(), s.b2)]);
        }
        (WitnessVariant::Product, true) => {
            m_a = bracket_factor(da, &[(a2.dagger(), s.a2), (a1.clone(), s.a1)]);
            m_b = bracket_factor(db, &[(b1.dagger(), !s.b1), (b2.clone(), !s.b2)]);
            n_a = bracket_factor(da, &[(a1.dagger(), !s.a1), (a2.clone(), !s.a2)]);
            n_b = bracket_factor(db, &[(b2.dagger(), s.b2), (b1.clone(), s.b1)]);
        }
        (WitnessVariant::Joint, false) => {
            m_a = bracket_factor(da, &[(a1.dagger(), s.a1), (a2.clone(), s.a2)]);
            m_b = bracket_factor(db, &[(b1.dagger(), s.b1), (b2.clone(), s.b2)]);
            n_a = bracket_factor(da, &[(a2.dagger(), !s.a2), (a1.clone(), !s.a1)]);
            n_b = bracket_factor(db, &[(b2.dagger(), !s.b2), (b1.clone(), !s.b1)]);
        }
        (WitnessVariant::Joint, true) => {
            m_a = bracket_factor(da, &[(a2.dagger(), s.a2), (a1.clone(), s.a1)]);
            m_b = bracket_factor(db, &[(b2.dagger(), s.b2), (b1.clone(), s.b1)]);
            n_a = bracket_factor(da, &[(a1.dagger(), !s.a1), (a2.clone(), !s.a2)]);
            n_b = bracket_factor(db, &[(b1.dagger(), !s.b1), (b2.clone(), !s.b2)]);
        }
    }
    BracketOps { m_a, m_b, n_a, n_b }
}

/// Hilbert-Schmidt style contraction `Tr(P Q) = sum_ij P_ij Q_ji`.
fn trace_of_product(p: &ComplexMatrix, q: &ComplexMatrix) -> Complex64 {
    let n = p.rows();
    let mut acc = Complex64::ZERO;
    for i in 0..n {
        let prow = p.row(i);
        for (j, pv) in prow.iter().enumerate() {
            acc += pv * q[(j, i)];
        }
    }
    acc
}

/// `Tr[ lift(m_a) lift(m_b) rho lift(n_a) lift(n_b) rho ]`, or its pure-state
/// reduction `<M><N>`.
fn trace_bracket(state: &QuantumState, ops: &BracketOps) -> Result<Complex64> {
    match state {
        QuantumState::Pure(_) => {
            let m = state.expect_joint(&ops.m_a, &ops.m_b)?;
            let n = state.expect_joint(&ops.n_a, &ops.n_b)?;
            Ok(m * n)
        }
        QuantumState::Mixed(s) => {
            let space = s.space();
            let m_rho = apply_lifted_left(
                &ops.m_a,
                Side::A,
                space,
                &apply_lifted_left(&ops.m_b, Side::B, space, s.rho())?,
            )?;
            let n_rho = apply_lifted_left(
                &ops.n_a,
                Side::A,
                space,
                &apply_lifted_left(&ops.n_b, Side::B, space, s.rho())?,
            )?;
            Ok(trace_of_product(&m_rho, &n_rho))
        }
    }
}

/// Both trace brackets, each built independently from its own operator
/// ordering. Conjugacy of the pair is a structural identity and is what the
/// property suite checks.
pub fn trace_bracket_pair(
    spec: &WitnessSpec,
    state: &QuantumState,
) -> Result<(Complex64, Complex64)> {
    spec.check_state(state)?;
    let first = trace_bracket(state, &bracket_ops(spec, false))?;
    let second = trace_bracket(state, &bracket_ops(spec, true))?;
    Ok((first, second))
}

fn s_term(spec: &WitnessSpec, state: &QuantumState) -> Result<f64> {
    let n_a1 = spec.a1.number();
    let n_a2 = spec.a2.number();
    let n_b1 = spec.b1.number();
    let n_b2 = spec.b2.number();
    match spec.variant {
        WitnessVariant::Product => {
            let na1 = state.expect_local(&n_a1, Side::A)?.re;
            let na2 = state.expect_local(&n_a2, Side::A)?.re;
            let nb1 = state.expect_local(&n_b1, Side::B)?.re;
            let nb2 = state.expect_local(&n_b2, Side::B)?.re;
            Ok(na1 * nb1 + na2 * nb2)
        }
        WitnessVariant::Joint => {
            let first = state.expect_joint(&n_a1, &n_b1)?.re;
            let second = state.expect_joint(&n_a2, &n_b2)?.re;
            Ok(first + second)
        }
    }
}

/// Evaluates one member of the general witness family.
pub fn evaluate_general(spec: &WitnessSpec, state: &QuantumState) -> Result<WitnessResult> {
    spec.check_state(state)?;
    let s = s_term(spec, state)?;
    let c = trace_bracket(state, &bracket_ops(spec, false))?;
    #[cfg(debug_assertions)]
    {
        let c2 = trace_bracket(state, &bracket_ops(spec, true))?;
        let dev = (c2.conj() - c).norm();
        debug_assert!(
            dev <= 1e-10 * c.norm().max(1.0),
            "trace brackets lost conjugacy: {dev}"
        );
    }
    Ok(finish_result(s, c, spec.phase))
}

/// Pairwise-product witness: `<n_A><n_B> - Tr(n_A n_B rho^2)`.
///
/// This is the collapsed single-pair member of the product-form family; the
/// general evaluator applied to the corresponding spec returns exactly twice
/// this value because its two expectation terms and two trace terms coincide
/// pairwise.
pub fn witness_product(
    a: &LocalOperator,
    b: &LocalOperator,
    state: &QuantumState,
) -> Result<f64> {
    check_pair(a, b, state)?;
    let n_a = a.number();
    let n_b = b.number();
    let lhs = state.expect_local(&n_a, Side::A)?.re * state.expect_local(&n_b, Side::B)?.re;
    let rhs = match state {
        QuantumState::Pure(_) => state.expect_joint(&n_a, &n_b)?.re,
        QuantumState::Mixed(s) => {
            let space = s.space();
            let x_rho = apply_lifted_left(
                &n_a,
                Side::A,
                space,
                &apply_lifted_left(&n_b, Side::B, space, s.rho())?,
            )?;
            trace_of_product(&x_rho, s.rho()).re
        }
    };
    Ok(lhs - rhs)
}

/// The two sides of the pairwise-product witness, for callers that emit them
/// separately.
pub fn witness_product_sides(
    a: &LocalOperator,
    b: &LocalOperator,
    state: &QuantumState,
) -> Result<(f64, f64)> {
    let value = witness_product(a, b, state)?;
    let lhs = state.expect_local(&a.number(), Side::A)?.re
        * state.expect_local(&b.number(), Side::B)?.re;
    Ok((lhs, lhs - value))
}

/// Phase-form witness:
/// `2 <n_A n_B> - e^{i phi} <A^dag B rho A^dag B> - e^{-i phi} <A B^dag rho A B^dag>`.
///
/// For pure states the trace term reduces to the square of the plain
/// expectation `<A^dag B>`.
pub fn witness_phase(
    a: &LocalOperator,
    b: &LocalOperator,
    state: &QuantumState,
    phase: PhaseChoice,
) -> Result<WitnessResult> {
    check_pair(a, b, state)?;
    let s = 2.0 * state.expect_joint(&a.number(), &b.number())?.re;
    let m_a = a.matrix().dagger();
    let m_b = b.matrix().clone();
    let c = match state {
        QuantumState::Pure(_) => {
            let e = state.expect_joint(&m_a, &m_b)?;
            e * e
        }
        QuantumState::Mixed(st) => {
            let space = st.space();
            let m_rho = apply_lifted_left(
                &m_a,
                Side::A,
                space,
                &apply_lifted_left(&m_b, Side::B, space, st.rho())?,
            )?;
            trace_of_product(&m_rho, &m_rho)
        }
    };
    Ok(finish_result(s, c, phase))
}

fn check_pair(a: &LocalOperator, b: &LocalOperator, state: &QuantumState) -> Result<()> {
    if a.side() != Side::A || b.side() != Side::B {
        return Err(Error::InvalidParameter(
            "expected an (a-side, b-side) operator pair".into(),
        ));
    }
    let space = state.space();
    if a.dim() != space.dim_a || b.dim() != space.dim_b {
        return Err(Error::DimensionMismatch(format!(
            "operators are {}x{} / {}x{} but the state lives on {}x{}",
            a.dim(),
            a.dim(),
            b.dim(),
            b.dim(),
            space.dim_a,
            space.dim_b
        )));
    }
    Ok(())
}

/// Outcome of the two Hillery-Zubairy inequalities. Margins are
/// `LHS - RHS`, so a positive margin flags entanglement.
#[derive(Clone, Copy, Debug)]
pub struct HzResult {
    /// `|<AB>|^2 - <n_A><n_B>`.
    pub form1_margin: f64,
    /// `|<AB^dag>|^2 - <n_A n_B>`.
    pub form2_margin: f64,
    pub entangled_1: bool,
    pub entangled_2: bool,
}

pub fn hz_test(a: &LocalOperator, b: &LocalOperator, state: &QuantumState) -> Result<HzResult> {
    check_pair(a, b, state)?;
    let ab = state.expect_joint(a.matrix(), b.matrix())?;
    let ab_dag = state.expect_joint(a.matrix(), &b.matrix().dagger())?;
    let na = state.expect_local(&a.number(), Side::A)?.re;
    let nb = state.expect_local(&b.number(), Side::B)?.re;
    let nanb = state.expect_joint(&a.number(), &b.number())?.re;
    let form1_margin = ab.norm_sqr() - na * nb;
    let form2_margin = ab_dag.norm_sqr() - nanb;
    Ok(HzResult {
        form1_margin,
        form2_margin,
        entangled_1: form1_margin > verdict_tol(na * nb),
        entangled_2: form2_margin > verdict_tol(nanb),
    })
}

/// DGCZ variance criterion at its optimal weights.
#[derive(Clone, Copy, Debug)]
pub struct DgczResult {
    /// Variance sum at the optimal `(tau, tau')`.
    pub lhs: f64,
    /// Linear bound at the optimal `(tau, tau')`.
    pub rhs: f64,
    pub tau: f64,
    pub tau_prime: f64,
    /// `lhs - rhs`; negative flags entanglement.
    pub margin: f64,
    pub entangled: bool,
}

/// One-dimensional piece of the DGCZ objective:
/// `g(tau) = v + 2 u c tau + u^2 w tau^2 - u |x| |tau|`,
/// minimized in closed form per sign branch. Returns `(g_min, tau_min)`.
fn minimize_branchwise(v: f64, c: f64, w: f64, u: f64, x_abs: f64) -> (f64, f64) {
    if u == 0.0 {
        return (v, 0.0);
    }
    let quad = u * u * w;
    let g = |tau: f64| v + 2.0 * u * c * tau + quad * tau * tau - u * x_abs * tau.abs();
    let mut best = (v, 0.0);
    if quad <= f64::MIN_POSITIVE {
        // Degenerate quadratic coefficient: the objective is piecewise linear.
        let slope_pos = 2.0 * u * c - u * x_abs;
        let slope_neg = -2.0 * u * c - u * x_abs;
        if slope_pos < 0.0 || slope_neg < 0.0 {
            return (f64::NEG_INFINITY, if slope_pos < 0.0 { f64::INFINITY } else { f64::NEG_INFINITY });
        }
        return best;
    }
    // tau > 0 branch: stationary point of v + (2uc - u|x|) tau + quad tau^2.
    let tau_pos = (u * x_abs - 2.0 * u * c) / (2.0 * quad);
    if tau_pos > 0.0 {
        let val = g(tau_pos);
        if val < best.0 {
            best = (val, tau_pos);
        }
    }
    // tau < 0 branch.
    let tau_neg = -(u * x_abs + 2.0 * u * c) / (2.0 * quad);
    if tau_neg < 0.0 {
        let val = g(tau_neg);
        if val < best.0 {
            best = (val, tau_neg);
        }
    }
    best
}

/// Evaluates the DGCZ criterion, which bounds
/// `var(p_a + tau t alpha n_b) + var(p_b + tau' t beta n_a)` from below by
/// `|tau' t beta <x_a>| + |tau t alpha <x_b>|` on separable states, minimized
/// over `(tau, tau')`. The objective separates and each half is quadratic per
/// sign branch, so the optimum is taken over the closed-form branch
/// minimizers plus the origin.
pub fn dgcz_crosskerr(state: &PureState, alpha: f64, beta: f64, t: f64) -> Result<DgczResult> {
    if alpha < 0.0 || beta < 0.0 {
        return Err(Error::InvalidParameter(
            "coherent amplitudes must be nonnegative reals".into(),
        ));
    }
    let space = state.space();
    if space.dim_a < 2 || space.dim_b < 2 {
        return Err(Error::InvalidParameter(
            "DGCZ criterion requires a Fock space of dimension >= 2 per mode".into(),
        ));
    }
    let qs: QuantumState = QuantumState::Pure(state.clone());
    let p_a = momentum(space.dim_a - 1);
    let p_b = momentum(space.dim_b - 1);
    let x_a = position(space.dim_a - 1);
    let x_b = position(space.dim_b - 1);
    let n_a = number_operator(space.dim_a - 1);
    let n_b = number_operator(space.dim_b - 1);

    let mean = |op: &ComplexMatrix, side: Side| -> Result<f64> {
        Ok(qs.expect_local(op, side)?.re)
    };
    let pa = mean(&p_a, Side::A)?;
    let pa2 = mean(&(&p_a * &p_a), Side::A)?;
    let nb = mean(&n_b, Side::B)?;
    let nb2 = mean(&(&n_b * &n_b), Side::B)?;
    let pb = mean(&p_b, Side::B)?;
    let pb2 = mean(&(&p_b * &p_b), Side::B)?;
    let na = mean(&n_a, Side::A)?;
    let na2 = mean(&(&n_a * &n_a), Side::A)?;
    let xa = mean(&x_a, Side::A)?;
    let xb = mean(&x_b, Side::B)?;
    let pa_nb = qs.expect_joint(&p_a, &n_b)?.re;
    let na_pb = qs.expect_joint(&n_a, &p_b)?.re;

    let (g1, tau) = minimize_branchwise(
        pa2 - pa * pa,
        pa_nb - pa * nb,
        nb2 - nb * nb,
        t * alpha,
        xb.abs(),
    );
    let (g2, tau_prime) = minimize_branchwise(
        pb2 - pb * pb,
        na_pb - pb * na,
        na2 - na * na,
        t * beta,
        xa.abs(),
    );

    let margin = g1 + g2;
    let rhs = (tau_prime * t * beta * xa).abs() + (tau * t * alpha * xb).abs();
    let lhs = margin + rhs;
    Ok(DgczResult {
        lhs,
        rhs,
        tau,
        tau_prime,
        margin,
        entangled: margin < -verdict_tol(lhs),
    })
}

/// Grid evaluation of the raw DGCZ objective at fixed `(tau, tau')`; used as
/// an independent check that the closed-form optimum is a true minimum.
pub fn dgcz_objective(
    state: &PureState,
    alpha: f64,
    beta: f64,
    t: f64,
    tau: f64,
    tau_prime: f64,
) -> Result<f64> {
    let space = state.space();
    let qs: QuantumState = QuantumState::Pure(state.clone());
    let p_a = momentum(space.dim_a - 1);
    let p_b = momentum(space.dim_b - 1);
    let x_a = position(space.dim_a - 1);
    let x_b = position(space.dim_b - 1);
    let n_a = number_operator(space.dim_a - 1);
    let n_b = number_operator(space.dim_b - 1);

    // var(p_a + tau t alpha n_b) expanded over the commuting pair.
    let u = tau * t * alpha;
    let v = tau_prime * t * beta;
    let pa = qs.expect_local(&p_a, Side::A)?.re;
    let nb = qs.expect_local(&n_b, Side::B)?.re;
    let pb = qs.expect_local(&p_b, Side::B)?.re;
    let na = qs.expect_local(&n_a, Side::A)?.re;
    let var1 = qs.expect_local(&(&p_a * &p_a), Side::A)?.re
        + u * u * qs.expect_local(&(&n_b * &n_b), Side::B)?.re
        + 2.0 * u * qs.expect_joint(&p_a, &n_b)?.re
        - (pa + u * nb).powi(2);
    let var2 = qs.expect_local(&(&p_b * &p_b), Side::B)?.re
        + v * v * qs.expect_local(&(&n_a * &n_a), Side::A)?.re
        + 2.0 * v * qs.expect_joint(&n_a, &p_b)?.re
        - (pb + v * na).powi(2);
    let xa = qs.expect_local(&x_a, Side::A)?.re;
    let xb = qs.expect_local(&x_b, Side::B)?.re;
    Ok(var1 + var2 - (v * xa).abs() - (u * xb).abs())
}
