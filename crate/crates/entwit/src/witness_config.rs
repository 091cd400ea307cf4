//! Key-value configuration files for one-off witness evaluations.
//!
//! Format: one `key = value` pair per line, `#` starts a comment. Recognized
//! keys: `state`, `p`, `r`, `alpha`, `beta`, `t`, `cutoff`, `tail_tol`,
//! `variant`, `sigma_a1`, `sigma_a2`, `sigma_b1`, `sigma_b2`, `op_a1`,
//! `op_a2`, `op_b1`, `op_b2`, `phase`.
//!
//! States: `bell1`, `bell2`, `werner1`, `werner2` (need `p`), `tmsv`
//! (needs `r`), `squeezed-thermal` (needs `p`, `r`), `cross-kerr` (needs
//! `alpha`, `beta`, `t`). Operators: `sigma-`, `sigma+`, `a`, `adag`, `n`,
//! `x`, `p`, `quad:<theta>`. Phase: `optimal` or a value in radians.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::criteria::{PhaseChoice, SigmaFlags, WitnessSpec, WitnessVariant};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::operators::{
    boson_annihilation, boson_creation, momentum, number_operator, pauli_lower, pauli_raise,
    position, quadrature, LocalOperator,
};
use crate::space::Side;
use crate::states::{
    auto_cutoff_coherent, auto_cutoff_tmsv, bell, cross_kerr_evolve, squeezed_thermal, tmsv,
    werner, BellState, QuantumState, DEFAULT_TAIL_TOL,
};

#[derive(Clone, Debug)]
pub struct WitnessRun {
    pub state: QuantumState,
    pub spec: WitnessSpec,
    pub state_name: String,
    pub cutoff: usize,
}

fn parse_bool_flag(map: &BTreeMap<String, String>, key: &str, default: bool) -> Result<bool> {
    match map.get(key).map(String::as_str) {
        None => Ok(default),
        Some("0") => Ok(false),
        Some("1") => Ok(true),
        Some(other) => Err(Error::InvalidParameter(format!(
            "{key} must be 0 or 1, got {other}"
        ))),
    }
}

fn parse_f64(map: &BTreeMap<String, String>, key: &str) -> Result<f64> {
    let raw = map
        .get(key)
        .ok_or_else(|| Error::InvalidParameter(format!("missing required key {key}")))?;
    raw.parse::<f64>()
        .map_err(|_| Error::InvalidParameter(format!("{key} = {raw} is not a number")))
}

fn build_operator(token: &str, dim: usize) -> Result<ComplexMatrix> {
    let cutoff = dim.saturating_sub(1);
    let qubit = dim == 2;
    match token {
        "sigma-" if qubit => Ok(pauli_lower()),
        "sigma+" if qubit => Ok(pauli_raise()),
        "sigma-" | "sigma+" => Err(Error::InvalidParameter(format!(
            "{token} requires a two-level subsystem, got dimension {dim}"
        ))),
        "a" => Ok(boson_annihilation(cutoff.max(1))),
        "adag" => Ok(boson_creation(cutoff.max(1))),
        "n" => Ok(number_operator(cutoff)),
        "x" => Ok(position(cutoff.max(1))),
        "p" => Ok(momentum(cutoff.max(1))),
        _ => {
            if let Some(theta) = token.strip_prefix("quad:") {
                let theta: f64 = theta.parse().map_err(|_| {
                    Error::InvalidParameter(format!("bad quadrature angle in {token}"))
                })?;
                Ok(quadrature(theta, cutoff.max(1)))
            } else {
                Err(Error::InvalidParameter(format!(
                    "unknown operator token {token}"
                )))
            }
        }
    }
}

/// Parses the file contents into a ready-to-evaluate witness run.
pub fn parse_witness_config(text: &str) -> Result<WitnessRun> {
    let mut map = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::InvalidParameter(format!(
                "line {}: expected key = value, got {raw:?}",
                lineno + 1
            )));
        };
        map.insert(key.trim().to_string(), value.trim().to_string());
    }

    let state_name = map
        .get("state")
        .ok_or_else(|| Error::InvalidParameter("missing required key state".into()))?
        .clone();
    let tail_tol = match map.get("tail_tol") {
        Some(raw) => raw
            .parse::<f64>()
            .map_err(|_| Error::InvalidParameter(format!("bad tail_tol {raw}")))?,
        None => DEFAULT_TAIL_TOL,
    };
    let explicit_cutoff = match map.get("cutoff").map(String::as_str) {
        None | Some("auto") => None,
        Some(raw) => Some(raw.parse::<usize>().map_err(|_| {
            Error::InvalidParameter(format!("cutoff must be an integer or auto, got {raw}"))
        })?),
    };

    let (state, cutoff): (QuantumState, usize) = match state_name.as_str() {
        "bell1" => (bell(BellState::PsiPlus).into(), 1),
        "bell2" => (bell(BellState::PhiPlus).into(), 1),
        "werner1" => (werner(BellState::PsiPlus, parse_f64(&map, "p")?)?.into(), 1),
        "werner2" => (werner(BellState::PhiPlus, parse_f64(&map, "p")?)?.into(), 1),
        "tmsv" => {
            let r = parse_f64(&map, "r")?;
            let n = explicit_cutoff.unwrap_or_else(|| auto_cutoff_tmsv(r, tail_tol));
            (tmsv(r, n, tail_tol)?.0.into(), n)
        }
        "squeezed-thermal" => {
            let p = parse_f64(&map, "p")?;
            let r = parse_f64(&map, "r")?;
            let n = explicit_cutoff.unwrap_or_else(|| auto_cutoff_tmsv(r, tail_tol));
            (squeezed_thermal(p, r, n, tail_tol)?.0.into(), n)
        }
        "cross-kerr" => {
            let alpha = parse_f64(&map, "alpha")?;
            let beta = parse_f64(&map, "beta")?;
            let t = parse_f64(&map, "t")?;
            let n = explicit_cutoff.unwrap_or_else(|| {
                auto_cutoff_coherent(Complex64::new(alpha.max(beta), 0.0), tail_tol)
            });
            (
                cross_kerr_evolve(
                    Complex64::new(alpha, 0.0),
                    Complex64::new(beta, 0.0),
                    t,
                    n,
                    n,
                    tail_tol,
                )?
                .0
                .into(),
                n,
            )
        }
        other => {
            return Err(Error::InvalidParameter(format!("unknown state {other}")));
        }
    };

    let space = state.space();
    let op_a1_token = map
        .get("op_a1")
        .ok_or_else(|| Error::InvalidParameter("missing required key op_a1".into()))?
        .clone();
    let op_b1_token = map
        .get("op_b1")
        .ok_or_else(|| Error::InvalidParameter("missing required key op_b1".into()))?
        .clone();
    let op_a2_token = map.get("op_a2").cloned().unwrap_or_else(|| op_a1_token.clone());
    let op_b2_token = map.get("op_b2").cloned().unwrap_or_else(|| op_b1_token.clone());

    let a1 = LocalOperator::new(build_operator(&op_a1_token, space.dim_a)?, Side::A)?;
    let a2 = LocalOperator::new(build_operator(&op_a2_token, space.dim_a)?, Side::A)?;
    let b1 = LocalOperator::new(build_operator(&op_b1_token, space.dim_b)?, Side::B)?;
    let b2 = LocalOperator::new(build_operator(&op_b2_token, space.dim_b)?, Side::B)?;

    let sigma = SigmaFlags::new(
        parse_bool_flag(&map, "sigma_a1", true)?,
        parse_bool_flag(&map, "sigma_a2", true)?,
        parse_bool_flag(&map, "sigma_b1", false)?,
        parse_bool_flag(&map, "sigma_b2", false)?,
    );
    let variant = match map.get("variant").map(String::as_str) {
        None | Some("product") => WitnessVariant::Product,
        Some("joint") => WitnessVariant::Joint,
        Some(other) => {
            return Err(Error::InvalidParameter(format!(
                "variant must be product or joint, got {other}"
            )));
        }
    };
    let phase = match map.get("phase").map(String::as_str) {
        None | Some("optimal") => PhaseChoice::Optimal,
        Some(raw) => PhaseChoice::Fixed(raw.parse::<f64>().map_err(|_| {
            Error::InvalidParameter(format!("phase must be optimal or a number, got {raw}"))
        })?),
    };

    let spec = WitnessSpec::new(a1, a2, b1, b2, sigma, variant, phase)?;
    Ok(WitnessRun {
        state,
        spec,
        state_name,
        cutoff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::evaluate_general;

    #[test]
    fn parses_a_minimal_bell_config() {
        let cfg = "
            # pair-creation Bell state against the lowering pair
            state = bell2
            op_a1 = sigma-
            op_b1 = sigma-
            phase = 0.0
        ";
        let run = parse_witness_config(cfg).unwrap();
        let r = evaluate_general(&run.spec, &run.state).unwrap();
        assert!((r.value - (-0.5)).abs() < 1e-12);
    }

    #[test]
    fn parses_joint_variant_and_fixed_cutoff() {
        let cfg = "
            state = tmsv
            r = 0.4
            cutoff = 18
            op_a1 = a
            op_b1 = a
            variant = joint
            sigma_a1 = 1
            sigma_a2 = 0
            sigma_b1 = 0
            sigma_b2 = 1
        ";
        let run = parse_witness_config(cfg).unwrap();
        assert_eq!(run.cutoff, 18);
        assert_eq!(run.state.space().dim_a, 19);
        assert!(evaluate_general(&run.spec, &run.state).is_ok());
    }

    #[test]
    fn rejects_unknown_state_and_bad_lines() {
        assert!(parse_witness_config("state = nope\nop_a1 = a\nop_b1 = a").is_err());
        assert!(parse_witness_config("state bell2").is_err());
        let missing_param = "state = werner1\nop_a1 = sigma-\nop_b1 = sigma-";
        assert!(parse_witness_config(missing_param).is_err());
    }
}
