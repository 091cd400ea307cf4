//! C ABI for the witness toolkit: opaque state handles, enum-coded
//! operators, and status-code errors. The generated header lives in
//! `include/entwit.h`.
//!
//! # Safety
//!
//! Every function taking pointers requires the usual C contract: state
//! handles must be null or values previously returned by an `ew_state_*`
//! constructor and not yet freed, and output pointers must be null or valid
//! for a write of the pointed-to type. Null handles and null required
//! outputs are rejected with [`EwStatus::NullPointer`]; dangling or aliased
//! pointers are undefined behavior, as in any C API.

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_complex::Complex64;

use entwit::criteria::{
    dgcz_crosskerr, hz_test, witness_phase, witness_product, PhaseChoice,
};
use entwit::diagnostics::{
    entanglement_entropy, estimated_witness, negativity, purity, EstimatorKind,
};
use entwit::error::Error;
use entwit::operators::{
    boson_annihilation, boson_creation, momentum, number_operator, pauli_lower, pauli_raise,
    position, quadrature, LocalOperator,
};
use entwit::states::{
    auto_cutoff_coherent, auto_cutoff_tmsv, bell, cross_kerr_evolve, squeezed_thermal, tmsv,
    werner, BellState, QuantumState,
};
use entwit::Side;

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DimensionMismatch = 3,
    Truncation = 4,
    Numerical = 5,
    Panic = 6,
}

/// Operator selectors for witness evaluations. `Quadrature` uses the extra
/// angle parameter; all others ignore it.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EwOperator {
    SigmaMinus = 0,
    SigmaPlus = 1,
    Annihilation = 2,
    Creation = 3,
    Number = 4,
    Position = 5,
    Momentum = 6,
    Quadrature = 7,
}

/// Opaque handle to a bipartite quantum state.
pub struct EwState {
    inner: QuantumState,
}

fn status_of(err: &Error) -> EwStatus {
    match err {
        Error::DimensionMismatch(_) | Error::NotSquare { .. } => EwStatus::DimensionMismatch,
        Error::Truncation { .. } => EwStatus::Truncation,
        Error::InvalidParameter(_) => EwStatus::InvalidArgument,
        _ => EwStatus::Numerical,
    }
}

thread_local! {
    static LAST_ERROR: std::cell::RefCell<Option<CString>> = const { std::cell::RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Message for the most recent error on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ew_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null(), |c| c.as_ptr())
    })
}

fn guard<F: FnOnce() -> Result<(), EwStatus>>(f: F) -> EwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => EwStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_last_error("panic crossed the FFI boundary".into());
            EwStatus::Panic
        }
    }
}

fn fail(err: Error) -> EwStatus {
    let status = status_of(&err);
    set_last_error(err.to_string());
    status
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), EwStatus> {
    if out.is_null() {
        set_last_error("output pointer is null".into());
        return Err(EwStatus::NullPointer);
    }
    unsafe { out.write(value) };
    Ok(())
}

unsafe fn state_ref<'a>(state: *const EwState) -> Result<&'a QuantumState, EwStatus> {
    if state.is_null() {
        set_last_error("state handle is null".into());
        return Err(EwStatus::NullPointer);
    }
    Ok(unsafe { &(*state).inner })
}

unsafe fn store_state(out: *mut *mut EwState, state: QuantumState) -> Result<(), EwStatus> {
    let handle = Box::into_raw(Box::new(EwState { inner: state }));
    unsafe { write_out(out, handle) }
}

/// Frees a state handle; null is accepted and ignored.
///
/// # Safety
/// `state` must be null or an unfreed handle from an `ew_state_*` constructor.
#[no_mangle]
pub unsafe extern "C" fn ew_state_free(state: *mut EwState) {
    if !state.is_null() {
        drop(unsafe { Box::from_raw(state) });
    }
}

/// Subsystem dimensions of a state.
///
/// # Safety
/// `state` must be a live handle; `dim_a` and `dim_b` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ew_state_dims(
    state: *const EwState,
    dim_a: *mut usize,
    dim_b: *mut usize,
) -> EwStatus {
    guard(|| {
        let s = unsafe { state_ref(state) }?;
        let space = s.space();
        unsafe { write_out(dim_a, space.dim_a) }?;
        unsafe { write_out(dim_b, space.dim_b) }
    })
}

/// Bell state `which` (1: shared excitation, 2: pair creation).
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn ew_state_bell(which: u32, out: *mut *mut EwState) -> EwStatus {
    guard(|| {
        let kind = match which {
            1 => BellState::PsiPlus,
            2 => BellState::PhiPlus,
            _ => {
                set_last_error(format!("bell state selector must be 1 or 2, got {which}"));
                return Err(EwStatus::InvalidArgument);
            }
        };
        unsafe { store_state(out, bell(kind).into()) }
    })
}

/// Werner mixture of the selected Bell state with the maximally mixed state.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn ew_state_werner(which: u32, p: f64, out: *mut *mut EwState) -> EwStatus {
    guard(|| {
        let kind = match which {
            1 => BellState::PsiPlus,
            2 => BellState::PhiPlus,
            _ => {
                set_last_error(format!("bell state selector must be 1 or 2, got {which}"));
                return Err(EwStatus::InvalidArgument);
            }
        };
        let state = werner(kind, p).map_err(fail)?;
        unsafe { store_state(out, state.into()) }
    })
}

/// Two-mode squeezed vacuum at squeezing `r`. A negative `cutoff` selects
/// the smallest cutoff meeting `tail_tol`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn ew_state_tmsv(
    r: f64,
    cutoff: i64,
    tail_tol: f64,
    out: *mut *mut EwState,
) -> EwStatus {
    guard(|| {
        let n = if cutoff < 0 {
            auto_cutoff_tmsv(r, tail_tol)
        } else {
            cutoff as usize
        };
        let (state, _) = tmsv(r, n, tail_tol).map_err(fail)?;
        unsafe { store_state(out, state.into()) }
    })
}

/// Squeezed-thermal mixture with mixing probability `p` and squeezing `r`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn ew_state_squeezed_thermal(
    p: f64,
    r: f64,
    cutoff: i64,
    tail_tol: f64,
    out: *mut *mut EwState,
) -> EwStatus {
    guard(|| {
        let n = if cutoff < 0 {
            auto_cutoff_tmsv(r, tail_tol)
        } else {
            cutoff as usize
        };
        let (state, _) = squeezed_thermal(p, r, n, tail_tol).map_err(fail)?;
        unsafe { store_state(out, state.into()) }
    })
}

/// Two coherent modes evolved under the cross-Kerr coupling for time `t`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn ew_state_cross_kerr(
    alpha: f64,
    beta: f64,
    t: f64,
    cutoff: i64,
    tail_tol: f64,
    out: *mut *mut EwState,
) -> EwStatus {
    guard(|| {
        let n = if cutoff < 0 {
            auto_cutoff_coherent(Complex64::new(alpha.max(beta), 0.0), tail_tol)
        } else {
            cutoff as usize
        };
        let (state, _) = cross_kerr_evolve(
            Complex64::new(alpha, 0.0),
            Complex64::new(beta, 0.0),
            t,
            n,
            n,
            tail_tol,
        )
        .map_err(fail)?;
        unsafe { store_state(out, state.into()) }
    })
}

fn build_local(
    op: EwOperator,
    theta: f64,
    dim: usize,
    side: Side,
) -> Result<LocalOperator, EwStatus> {
    let cutoff = dim.saturating_sub(1).max(1);
    let matrix = match op {
        EwOperator::SigmaMinus | EwOperator::SigmaPlus if dim != 2 => {
            set_last_error(format!(
                "qubit ladder operator requested on a dimension-{dim} subsystem"
            ));
            return Err(EwStatus::DimensionMismatch);
        }
        EwOperator::SigmaMinus => pauli_lower(),
        EwOperator::SigmaPlus => pauli_raise(),
        EwOperator::Annihilation => boson_annihilation(cutoff),
        EwOperator::Creation => boson_creation(cutoff),
        EwOperator::Number => number_operator(dim - 1),
        EwOperator::Position => position(cutoff),
        EwOperator::Momentum => momentum(cutoff),
        EwOperator::Quadrature => quadrature(theta, cutoff),
    };
    LocalOperator::new(matrix, side).map_err(fail)
}

/// Pairwise-product witness `<n_A><n_B> - Tr(n_A n_B rho^2)`; negative
/// certifies entanglement.
///
/// # Safety
/// `state` must be a live handle; `value` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ew_witness_product(
    state: *const EwState,
    op_a: EwOperator,
    theta_a: f64,
    op_b: EwOperator,
    theta_b: f64,
    value: *mut f64,
) -> EwStatus {
    guard(|| {
        let s = unsafe { state_ref(state) }?;
        let space = s.space();
        let a = build_local(op_a, theta_a, space.dim_a, Side::A)?;
        let b = build_local(op_b, theta_b, space.dim_b, Side::B)?;
        let w = witness_product(&a, &b, s).map_err(fail)?;
        unsafe { write_out(value, w) }
    })
}

/// Phase-form witness at the optimal phase; negative certifies
/// entanglement.
///
/// # Safety
/// `state` must be a live handle; `value` must be valid for a write; `phi_used` may be null.
#[no_mangle]
pub unsafe extern "C" fn ew_witness_phase_optimal(
    state: *const EwState,
    op_a: EwOperator,
    theta_a: f64,
    op_b: EwOperator,
    theta_b: f64,
    value: *mut f64,
    phi_used: *mut f64,
) -> EwStatus {
    guard(|| {
        let s = unsafe { state_ref(state) }?;
        let space = s.space();
        let a = build_local(op_a, theta_a, space.dim_a, Side::A)?;
        let b = build_local(op_b, theta_b, space.dim_b, Side::B)?;
        let r = witness_phase(&a, &b, s, PhaseChoice::Optimal).map_err(fail)?;
        unsafe { write_out(value, r.value) }?;
        if !phi_used.is_null() {
            unsafe { phi_used.write(r.phi_used) };
        }
        Ok(())
    })
}

/// Both Hillery-Zubairy margins (`LHS - RHS`; positive flags entanglement).
///
/// # Safety
/// `state` must be a live handle; `form1` and `form2` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ew_hz_margins(
    state: *const EwState,
    op_a: EwOperator,
    theta_a: f64,
    op_b: EwOperator,
    theta_b: f64,
    form1: *mut f64,
    form2: *mut f64,
) -> EwStatus {
    guard(|| {
        let s = unsafe { state_ref(state) }?;
        let space = s.space();
        let a = build_local(op_a, theta_a, space.dim_a, Side::A)?;
        let b = build_local(op_b, theta_b, space.dim_b, Side::B)?;
        let r = hz_test(&a, &b, s).map_err(fail)?;
        unsafe { write_out(form1, r.form1_margin) }?;
        unsafe { write_out(form2, r.form2_margin) }
    })
}

/// Product witness with the weighted correlation replaced by the mean-field
/// estimate (`kind` = 1) or the spectral estimate (`kind` = 0).
///
/// # Safety
/// `state` must be a live handle; `value` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ew_estimated_witness(
    state: *const EwState,
    op_a: EwOperator,
    theta_a: f64,
    op_b: EwOperator,
    theta_b: f64,
    kind: u32,
    value: *mut f64,
) -> EwStatus {
    guard(|| {
        let s = unsafe { state_ref(state) }?;
        let space = s.space();
        let a = build_local(op_a, theta_a, space.dim_a, Side::A)?;
        let b = build_local(op_b, theta_b, space.dim_b, Side::B)?;
        let k = match kind {
            0 => EstimatorKind::Spectral,
            1 => EstimatorKind::Meanfield,
            _ => {
                set_last_error(format!("estimator kind must be 0 or 1, got {kind}"));
                return Err(EwStatus::InvalidArgument);
            }
        };
        let est = estimated_witness(&a, &b, s, k).map_err(fail)?;
        unsafe { write_out(value, est.value) }
    })
}

/// DGCZ variance criterion margin for a cross-Kerr evolved state; negative
/// flags entanglement.
///
/// # Safety
/// `state` must be a live handle; `margin` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ew_dgcz_margin(
    state: *const EwState,
    alpha: f64,
    beta: f64,
    t: f64,
    margin: *mut f64,
) -> EwStatus {
    guard(|| {
        let s = unsafe { state_ref(state) }?;
        let QuantumState::Pure(pure) = s else {
            set_last_error("DGCZ criterion requires a pure state handle".into());
            return Err(EwStatus::InvalidArgument);
        };
        let r = dgcz_crosskerr(pure, alpha, beta, t).map_err(fail)?;
        unsafe { write_out(margin, r.margin) }
    })
}

///
/// # Safety
/// `state` must be a live handle; `value` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ew_purity(state: *const EwState, value: *mut f64) -> EwStatus {
    guard(|| {
        let s = unsafe { state_ref(state) }?;
        unsafe { write_out(value, purity(s)) }
    })
}

/// Absolute sum of negative partial-transpose eigenvalues.
///
/// # Safety
/// `state` must be a live handle; `value` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ew_negativity(state: *const EwState, value: *mut f64) -> EwStatus {
    guard(|| {
        let s = unsafe { state_ref(state) }?;
        let n = negativity(s).map_err(fail)?;
        unsafe { write_out(value, n) }
    })
}

/// Entropy of entanglement in bits; fails on mixed states.
///
/// # Safety
/// `state` must be a live handle; `value` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ew_entanglement_entropy(state: *const EwState, value: *mut f64) -> EwStatus {
    guard(|| {
        let s = unsafe { state_ref(state) }?;
        let e = entanglement_entropy(s).map_err(fail)?;
        unsafe { write_out(value, e) }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn make_bell(which: u32) -> *mut EwState {
        let mut handle: *mut EwState = ptr::null_mut();
        assert_eq!(unsafe { ew_state_bell(which, &mut handle) }, EwStatus::Ok);
        assert!(!handle.is_null());
        handle
    }

    #[test]
    fn bell_witness_through_the_c_surface() {
        let state = make_bell(2);
        let mut value = 0.0;
        let status = unsafe {
            ew_witness_product(
                state,
                EwOperator::SigmaMinus,
                0.0,
                EwOperator::SigmaMinus,
                0.0,
                &mut value,
            )
        };
        assert_eq!(status, EwStatus::Ok);
        assert!((value - (-0.25)).abs() < 1e-12);
        unsafe { ew_state_free(state) };
    }

    #[test]
    fn phase_witness_and_entropy() {
        let state = make_bell(1);
        let (mut value, mut phi) = (0.0, 0.0);
        let status = unsafe {
            ew_witness_phase_optimal(
                state,
                EwOperator::SigmaMinus,
                0.0,
                EwOperator::SigmaMinus,
                0.0,
                &mut value,
                &mut phi,
            )
        };
        assert_eq!(status, EwStatus::Ok);
        assert!((value - (-0.5)).abs() < 1e-12);
        let mut entropy = 0.0;
        assert_eq!(
            unsafe { ew_entanglement_entropy(state, &mut entropy) },
            EwStatus::Ok
        );
        assert!((entropy - 1.0).abs() < 1e-12);
        unsafe { ew_state_free(state) };
    }

    #[test]
    fn errors_set_status_and_message() {
        let mut handle: *mut EwState = ptr::null_mut();
        let status = unsafe { ew_state_werner(2, 1.5, &mut handle) };
        assert_eq!(status, EwStatus::InvalidArgument);
        assert!(handle.is_null());
        let msg = ew_last_error_message();
        assert!(!msg.is_null());

        let status = unsafe { ew_state_bell(3, &mut handle) };
        assert_eq!(status, EwStatus::InvalidArgument);

        let mut value = 0.0;
        let status = unsafe {
            ew_witness_product(
                ptr::null(),
                EwOperator::SigmaMinus,
                0.0,
                EwOperator::SigmaMinus,
                0.0,
                &mut value,
            )
        };
        assert_eq!(status, EwStatus::NullPointer);
    }

    #[test]
    fn truncation_is_reported() {
        let mut handle: *mut EwState = ptr::null_mut();
        let status = unsafe { ew_state_cross_kerr(2.0, 2.0, 0.3, 4, 1e-10, &mut handle) };
        assert_eq!(status, EwStatus::Truncation);
    }

    #[test]
    fn squeezed_thermal_negativity_via_ffi() {
        let mut handle: *mut EwState = ptr::null_mut();
        assert_eq!(
            unsafe { ew_state_squeezed_thermal(0.5, 0.5, -1, 1e-8, &mut handle) },
            EwStatus::Ok
        );
        let mut neg = 0.0;
        assert_eq!(unsafe { ew_negativity(handle, &mut neg) }, EwStatus::Ok);
        assert!(neg > 1e-4);
        let mut da = 0usize;
        let mut db = 0usize;
        assert_eq!(
            unsafe { ew_state_dims(handle, &mut da, &mut db) },
            EwStatus::Ok
        );
        assert_eq!(da, db);
        unsafe { ew_state_free(handle) };
    }
}
