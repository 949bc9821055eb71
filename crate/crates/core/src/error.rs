//! Crate-wide error type.

use crate::quadrature::QuadResult;

pub type Result<T> = std::result::Result<T, CoreError>;

#[derive(Debug, thiserror::Error)]
pub enum CoreError {
    /// A parameter lies outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// Empirical endpoint exponent ≥ 1: the integral does not exist.
    #[error("non-integrable singularity at x = {endpoint}: empirical exponent {exponent_estimate:.3} ≥ 1")]
    NonIntegrable { endpoint: f64, exponent_estimate: f64 },

    /// Refinement budget exhausted before the tolerance was met; the best
    /// value and its error estimate are carried along.
    #[error("accuracy target not reached: best value {} ± {} after {} evaluations", best.value, best.error_estimate, best.evaluations)]
    AccuracyNotReached { best: QuadResult },

    /// Malformed or inconsistent input data (sampled profiles, CSV fields).
    #[error("data error: {0}")]
    Data(String),

    /// Two fields that must share a grid do not.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// Validation of an operation precondition failed.
    #[error("validation error: {0}")]
    Validation(String),

    /// The time stepper blew up; `time` is the last time with a finite frame.
    #[error("solver instability detected at t = {time}: field norm exceeded {norm_bound:.1e}")]
    Instability { time: f64, norm_bound: f64 },

    /// Soliton lattice cannot be built at this ε (fewer than two wavenumbers).
    #[error("lattice too coarse: epsilon = {epsilon} admits {count} wavenumber(s) in the branch")]
    LatticeTooCoarse { epsilon: f64, count: usize },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}
