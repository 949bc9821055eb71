//! Deterministic "turbulent diffusion" diagnostics for zero-dispersion limits
//! of KdV and semiclassical defocusing NLS.
//!
//! The crate computes the singular Whitham-region densities φ(η) and φ(λ),
//! the long-time weak-limit profiles they control, and the sign of the
//! effective (turbulent) viscosity they induce; it cross-checks those
//! predictions against direct pseudo-spectral simulation of the ε-dispersive
//! flows, and provides Wigner/defect-measure field diagnostics for weakly
//! converging families.
//!
//! Module map:
//! - [`quadrature`] — endpoint-singular integration (tanh-sinh, plus an
//!   independent sqrt-substitution scheme for cross-checking),
//! - [`profiles`] — single-well initial-data families and turning points,
//! - [`kdv`] — φ(η), the long-time weak limit, η-tables, sign classification,
//! - [`nls`] — φ(λ), the λ-tables, condition checks, soliton lattices,
//! - [`semiclassical`] — ε-KdV / ε-NLS spectral solvers, Madelung fields,
//!   empirical weak limits,
//! - [`wigner`] — space/time Wigner transforms, defect spectra, trace-free
//!   decomposition, strong-convergence diagnostics,
//! - [`field`], [`spectral`], [`report`], [`io`] — shared plumbing.

pub mod error;
pub mod field;
pub mod io;
pub mod kdv;
pub mod nls;
pub mod profiles;
pub mod quadrature;
pub mod report;
pub mod semiclassical;
pub mod spectral;
pub mod wigner;

pub use error::{CoreError, Result};
