//! Correlation-based entanglement witnesses for bipartite quantum systems.
//!
//! The crate provides:
//!
//! - dense complex linear algebra over a bipartite Hilbert space
//!   ([`matrix`], [`space`], [`eigen`]);
//! - local operator constructors ([`operators`]) and state families
//!   ([`states`]): Bell and Werner states, coherent / squeezed / thermal
//!   bosonic states on truncated Fock spaces, and exact cross-Kerr evolution;
//! - the general two-operator-pair witness family together with its fast
//!   special cases, the Hillery-Zubairy inequalities, and the DGCZ variance
//!   criterion ([`criteria`]);
//! - purity estimators, negativity, and entanglement entropy
//!   ([`diagnostics`]);
//! - deterministic parameter sweeps with CSV output and threshold refinement
//!   ([`sweep`]), driven by the `entwit` binary.

pub mod criteria;
pub mod diagnostics;
pub mod eigen;
pub mod error;
pub mod matrix;
pub mod operators;
pub mod sampling;
pub mod selftest;
pub mod space;
pub mod states;
pub mod sweep;
pub mod witness_config;

pub use error::{Error, Result};
pub use matrix::ComplexMatrix;
pub use space::{BipartiteSpace, Side};
pub use states::{BellState, MixedState, PureState, QuantumState};
