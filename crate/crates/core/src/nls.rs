//! Semiclassical defocusing-NLS diagnostics: the branch density φ(λ), the
//! quantity g(λ) = λ·φ(λ)·√(1−λ²) whose monotonicity decides the effective
//! viscosity sign, λ-tables, the asymptotic weak limit ρ̄, and the
//! multisoliton lattice whose local average must reproduce it.
//!
//! φ(λ) = ∫ over (x₋(λ), x₊(λ)) of (λ − ½(r₊+r₋))·((λ−r₊)(λ−r₋))^(−1/2) dx;
//! for the symmetric zero-momentum family r₋ = −r₊ this reduces to
//! λ·(λ² − r₊²)^(−1/2). The weak limit satisfies
//! ρ̄(x,t) ≈ 1 − (4/(πt))·φ(x/t)·(1−(x/t)²)^(1/2) in the Whitham branches
//! and ρ̄ ≈ 1 elsewhere; large-time diffusivity is equivalent to g′(λ) ≥ 0.

use rayon::prelude::*;

use crate::error::{CoreError, Result};
use crate::field::{Grid1D, MaskedField1, RealField1};
use crate::kdv::{sign_flip_pairs, PhiKind, PhiTable, Reliability, TableMatrix};
use crate::profiles::{NlsBetaWell, NlsWell, DEFAULT_ROOT_TOL};
use crate::quadrature::{
    integrate_integrand, integrate_split_at, OffsetAware, QuadResult, Scheme, SingularitySpec,
    DEFAULT_ABS_FLOOR,
};
use crate::report::SignReport;

pub use crate::kdv::AsymptoticValue;

/// φ(λ) for an NLS single-well profile. λ must lie in a Whitham branch
/// ([λ_min, 1) or (−1, λ_max]); the branch-edge value is 0 (empty interval).
pub fn phi(profile: &NlsWell, lambda: f64, rel_tol: f64, scheme: Scheme) -> Result<QuadResult> {
    let (x_minus, x_plus) = profile.turning_points(lambda, DEFAULT_ROOT_TOL)?;
    if x_minus == x_plus {
        return Ok(QuadResult { value: 0.0, error_estimate: 0.0, evaluations: 1 });
    }
    match profile {
        NlsWell::Beta(w) => {
            // Mirror branch of the symmetric family: numerator λ flips sign,
            // the denominator is even in λ.
            let sign = lambda.signum();
            let half = phi_beta_half(w, lambda.abs(), rel_tol, scheme)?;
            Ok(QuadResult {
                value: sign * 2.0 * half.value,
                error_estimate: 2.0 * half.error_estimate,
                evaluations: half.evaluations,
            })
        }
        NlsWell::Sampled(_) => {
            let f = move |x: f64| {
                let rp = profile.r_plus(x);
                let rm = profile.r_minus(x);
                (lambda - 0.5 * (rp + rm)) / ((lambda - rp) * (lambda - rm)).sqrt()
            };
            integrate_split_at(
                scheme,
                &f,
                x_minus,
                profile.min_point(),
                x_plus,
                rel_tol,
                DEFAULT_ABS_FLOOR,
            )
        }
    }
}

/// Positive-branch half integral for the β-family on [0, X]:
/// λ·(λ² − r₊(x)²)^(−1/2) with λ − r₊(x) = (1−λ)·expm1(X^β − x^β) exact in
/// the endpoint offset (r₊(X) = λ, ½e^(−X^β) = 1−λ).
fn phi_beta_half(w: &NlsBetaWell, lambda: f64, rel_tol: f64, scheme: Scheme) -> Result<QuadResult> {
    let beta = w.beta;
    let upper = w.turning_point(lambda);
    let g = OffsetAware(move |x: f64, _oa: f64, ob: f64| {
        let delta = -upper.powf(beta) * (beta * (-ob / upper).ln_1p()).exp_m1();
        let lam_minus_rp = (1.0 - lambda) * delta.exp_m1();
        let lam_plus_rp = lambda + 1.0 - 0.5 * (-x.abs().powf(beta)).exp();
        lambda / (lam_minus_rp * lam_plus_rp).sqrt()
    });
    integrate_integrand(
        scheme,
        &g,
        0.0,
        upper,
        &SingularitySpec::inverse_sqrt_right(),
        rel_tol,
        DEFAULT_ABS_FLOOR,
    )
}

/// g(λ) = λ·φ(λ)·√(1−λ²) for the β-family, computed from its own integrand
/// 2∫₀^X λ²√(1−λ²)·(λ² − r₊(x)²)^(−1/2) dx — with the square root on the
/// denominator; without it the integrand has a non-integrable simple pole at
/// the upper limit and the divergence probe rejects it.
pub fn g77(profile: &NlsBetaWell, lambda: f64, rel_tol: f64, scheme: Scheme) -> Result<QuadResult> {
    if lambda < 0.5 {
        return Err(CoreError::Domain(format!("lambda = {lambda} below lambda_min = 0.5")));
    }
    if lambda >= 1.0 {
        return Err(CoreError::Domain(format!("lambda = {lambda} outside [0.5, 1)")));
    }
    if lambda == 0.5 {
        return Ok(QuadResult { value: 0.0, error_estimate: 0.0, evaluations: 1 });
    }
    let beta = profile.beta;
    let upper = profile.turning_point(lambda);
    let scale = lambda * lambda * (1.0 - lambda * lambda).sqrt();
    let g = OffsetAware(move |x: f64, _oa: f64, ob: f64| {
        let delta = -upper.powf(beta) * (beta * (-ob / upper).ln_1p()).exp_m1();
        let lam_minus_rp = (1.0 - lambda) * delta.exp_m1();
        let lam_plus_rp = lambda + 1.0 - 0.5 * (-x.abs().powf(beta)).exp();
        scale / (lam_minus_rp * lam_plus_rp).sqrt()
    });
    let half = integrate_integrand(
        scheme,
        &g,
        0.0,
        upper,
        &SingularitySpec::inverse_sqrt_right(),
        rel_tol,
        DEFAULT_ABS_FLOOR,
    )?;
    Ok(QuadResult {
        value: 2.0 * half.value,
        error_estimate: 2.0 * half.error_estimate,
        evaluations: half.evaluations,
    })
}

/// Asymptotic weak limit of the density: 1 − (4/(πt))·φ(|x/t|)·√(1−(x/t)²)
/// in the Whitham branches (mirrored for symmetric data), 1 elsewhere.
pub fn rhobar_asymptotic(
    profile: &NlsWell,
    x: f64,
    t: f64,
    delta: f64,
    rel_tol: f64,
    scheme: Scheme,
) -> Result<AsymptoticValue> {
    if !(t > 0.0) {
        return Err(CoreError::Domain(format!("t = {t} must be positive")));
    }
    if !(delta > 0.0) {
        return Err(CoreError::Domain(format!("delta = {delta} must be positive")));
    }
    let ratio = x / t;
    let (lmin, lmax) = (profile.lambda_min(), profile.lambda_max());
    let in_positive = ratio > lmin && ratio < 1.0;
    let in_negative = ratio > -1.0 && ratio < lmax;
    if !in_positive && !in_negative {
        return Ok(AsymptoticValue { value: 1.0, reliability: Reliability::OuterDecay });
    }
    // |φ| keeps ρ̄ ≤ 1 (dips below background) on the mirror branch.
    let density = phi(profile, ratio, rel_tol, scheme)?.value.abs();
    let value = 1.0 - 4.0 / (std::f64::consts::PI * t) * density * (1.0 - ratio * ratio).sqrt();
    let interior = if in_positive {
        ratio > lmin + delta && ratio < 1.0 - delta
    } else {
        ratio > -1.0 + delta && ratio < lmax - delta
    };
    let reliability =
        if interior { Reliability::WhithamInterior } else { Reliability::TransitionBand };
    Ok(AsymptoticValue { value, reliability })
}

/// Large-time diffusivity condition: g′(λ) ≥ 0 over the grid. Central
/// differences where the stencil stays inside [λ_min, 1), forward at the
/// branch edge (g(λ_min) = 0).
pub fn check_condition73(
    profile: &NlsBetaWell,
    lambda_grid: &[f64],
    h: f64,
    rel_tol: f64,
    scheme: Scheme,
) -> Result<SignReport> {
    if !(h > 0.0) {
        return Err(CoreError::Domain(format!("step h = {h} must be positive")));
    }
    if lambda_grid.iter().any(|&l| !(0.5..1.0).contains(&l)) {
        return Err(CoreError::Domain("lambda grid must lie inside [0.5, 1)".into()));
    }
    let derivative = |lam: f64| -> Result<f64> {
        let g_at = |l: f64| g77(profile, l, rel_tol, scheme).map(|r| r.value);
        if lam - h >= 0.5 && lam + h < 1.0 {
            Ok((g_at(lam + h)? - g_at(lam - h)?) / (2.0 * h))
        } else if lam + h < 1.0 {
            // Branch edge: forward difference (g(λ_min) = 0).
            Ok((g_at(lam + h)? - g_at(lam)?) / h)
        } else if lam - h >= 0.5 {
            Ok((g_at(lam)? - g_at(lam - h)?) / h)
        } else {
            Err(CoreError::Domain(format!("step h = {h} too large for the branch at {lam}")))
        }
    };
    let witnesses: Vec<(f64, f64)> = lambda_grid
        .par_iter()
        .map(|&lam| derivative(lam).map(|d| (lam, d)))
        .collect::<Result<_>>()?;
    let values: Vec<f64> = lambda_grid
        .par_iter()
        .map(|&lam| g77(profile, lam, rel_tol, scheme).map(|r| r.value))
        .collect::<Result<_>>()?;
    let mut report = SignReport::from_witnesses(witnesses, crate::kdv::SIGN_TOL, true);
    // Adjacent grid pairs where the sampled values themselves decrease.
    let mut violations: Vec<(f64, f64)> = values
        .windows(2)
        .zip(lambda_grid.windows(2))
        .filter(|(v, _)| v[1] < v[0] - crate::kdv::SIGN_TOL)
        .map(|(_, l)| (l[0], l[1]))
        .collect();
    for pair in sign_flip_pairs(&report.witness_points, crate::kdv::SIGN_TOL) {
        if !violations.contains(&pair) {
            violations.push(pair);
        }
    }
    report.violations = violations;
    Ok(report)
}

/// g(λ) matrix over β columns and λ rows (the λ-table of the β-family).
pub fn emit_table2(
    betas: &[f64],
    lambdas: &[f64],
    rel_tol: f64,
    scheme: Scheme,
) -> Result<TableMatrix> {
    let cells: Vec<Vec<QuadResult>> = lambdas
        .par_iter()
        .map(|&lam| {
            betas
                .iter()
                .map(|&beta| g77(&NlsBetaWell::new(beta)?, lam, rel_tol, scheme))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(TableMatrix {
        col_label: "beta",
        row_label: "lambda",
        cols: betas.to_vec(),
        rows: lambdas.to_vec(),
        values: cells.iter().map(|r| r.iter().map(|c| c.value).collect()).collect(),
        errors: cells.iter().map(|r| r.iter().map(|c| c.error_estimate).collect()).collect(),
    })
}

/// φ(λ) over a λ grid as a [`PhiTable`].
pub fn phi_table(
    profile: &NlsWell,
    lambdas: &[f64],
    rel_tol: f64,
    scheme: Scheme,
) -> Result<PhiTable> {
    let results: Vec<QuadResult> = lambdas
        .par_iter()
        .map(|&lam| phi(profile, lam, rel_tol, scheme))
        .collect::<Result<_>>()?;
    PhiTable::new(
        PhiKind::NlsLambda,
        lambdas.to_vec(),
        results.iter().map(|r| r.value).collect(),
        results.iter().map(|r| r.error_estimate).collect(),
    )
}

/// Multisoliton lattice sampling the Whitham branch: wavenumbers from the
/// counting-density recursion, dark-soliton dips of depth 1 − η² and width
/// 2ε/√(1−η²) centered at η·t.
#[derive(Debug, Clone)]
pub struct SolitonLattice {
    pub epsilon: f64,
    pub time: f64,
    pub wavenumbers: Vec<f64>,
    pub phases: Vec<f64>,
    /// |u|² samples on the requested segment (uniform grid, not periodic).
    pub field: RealField1,
}

/// Smallest dip depth 1 − η² still generated; shallower solitons are
/// numerically invisible.
const LATTICE_AMP_FLOOR: f64 = 1e-8;
const LATTICE_MAX_COUNT: usize = 200_000;
/// φ jumps at the branch edge; its one-sided limit is evaluated this far in.
const EDGE_EPS: f64 = 1e-9;

/// Wavenumbers η₁ < η₂ < … generated by η_{n+1} = η_n + πε/φ(η_n) from the
/// branch edge. Exposed over a density closure so the recursion is testable
/// against a constant density (spacing exactly πε/φ).
pub fn wavenumbers_from_density(
    mut density: impl FnMut(f64) -> Result<f64>,
    lambda_min: f64,
    epsilon: f64,
    amp_floor: f64,
) -> Result<Vec<f64>> {
    let mut etas = Vec::new();
    let mut eta = lambda_min;
    loop {
        let ph = density(eta.max(lambda_min + EDGE_EPS))?;
        if !(ph > 0.0) {
            return Err(CoreError::Domain(format!("density must be positive, got {ph} at {eta}")));
        }
        let next = eta + std::f64::consts::PI * epsilon / ph;
        if next >= 1.0 || 1.0 - next * next < amp_floor {
            break;
        }
        etas.push(next);
        eta = next;
        if etas.len() >= LATTICE_MAX_COUNT {
            break;
        }
    }
    Ok(etas)
}

/// Dark-soliton dip profile s(x, η) = (1−η²)/cosh²(√(1−η²)·x/(2ε)).
#[inline]
pub fn soliton_dip(x: f64, eta: f64, epsilon: f64) -> f64 {
    let amp = 1.0 - eta * eta;
    let arg = amp.sqrt() * x / (2.0 * epsilon);
    amp / arg.cosh().powi(2)
}

pub fn soliton_lattice(
    profile: &NlsBetaWell,
    epsilon: f64,
    t: f64,
    x_range: (f64, f64),
    n_samples: usize,
    rel_tol: f64,
) -> Result<SolitonLattice> {
    if !(epsilon > 0.0) || !(t > 0.0) {
        return Err(CoreError::Domain("epsilon and t must be positive".into()));
    }
    let well = NlsWell::Beta(*profile);
    let etas = wavenumbers_from_density(
        |lam| phi(&well, lam, rel_tol, Scheme::DoubleExponential).map(|r| r.value),
        0.5,
        epsilon,
        LATTICE_AMP_FLOOR,
    )?;
    if etas.len() < 2 {
        return Err(CoreError::LatticeTooCoarse { epsilon, count: etas.len() });
    }
    let (x_lo, x_hi) = x_range;
    let grid = Grid1D::new(x_hi - x_lo, n_samples, x_lo)?;
    let mut values = vec![1.0; grid.n];
    for &eta in &etas {
        let center = eta * t;
        // cosh⁻² decays on the scale 2ε/√(1−η²); beyond ~40 widths the dip
        // is below f64 resolution.
        let width = 2.0 * epsilon / (1.0 - eta * eta).sqrt();
        let reach = 40.0 * width;
        let i_lo = ((center - reach - x_lo) / grid.dx()).floor().max(0.0) as usize;
        let i_hi = ((((center + reach - x_lo) / grid.dx()).ceil()).max(0.0) as usize).min(grid.n);
        for i in i_lo..i_hi {
            values[i] -= soliton_dip(grid.x(i) - center, eta, epsilon);
        }
    }
    Ok(SolitonLattice {
        epsilon,
        time: t,
        wavenumbers: etas.clone(),
        phases: vec![0.0; etas.len()],
        field: RealField1 { grid, values },
    })
}

impl SolitonLattice {
    /// (η, dip depth 1 − |u|²) at the soliton centers inside the segment.
    pub fn peak_depths(&self) -> Vec<(f64, f64)> {
        let g = &self.field.grid;
        self.wavenumbers
            .iter()
            .filter_map(|&eta| {
                let center = eta * self.time;
                if center < g.origin || center >= g.origin + g.length {
                    return None;
                }
                let i = g.nearest_index(center);
                Some((eta, 1.0 - self.field.values[i]))
            })
            .collect()
    }
}

/// Moving average with edge-truncated windows (lattice segments are not
/// periodic). A window below the grid spacing is a domain error.
pub fn local_average(field: &RealField1, window: f64) -> Result<RealField1> {
    field.moving_average_truncated(window)
}

/// Pointwise ν_turb = (Q̄ − Q(ρ̄, μ̄))/∂ₓμ̄ with Q(ρ, μ) = μ²/ρ + ρ²/2,
/// masked where |∂ₓμ̄| ≤ eps_grad. ρ̄ must be strictly positive and the
/// convexity defect Q̄ − Q(ρ̄, μ̄) nonnegative within tolerance.
pub fn nu_turb_nls_field(
    mubar: &RealField1,
    qbar: &RealField1,
    rhobar: &RealField1,
    eps_grad: f64,
) -> Result<MaskedField1> {
    if !mubar.grid.same_as(&qbar.grid) || !mubar.grid.same_as(&rhobar.grid) {
        return Err(CoreError::GridMismatch("mubar/qbar/rhobar grids differ".into()));
    }
    if rhobar.values.iter().any(|&r| !(r > 0.0)) {
        return Err(CoreError::Domain("rhobar must be strictly positive".into()));
    }
    let scale = qbar.max_abs().max(1.0);
    let mut defect = Vec::with_capacity(mubar.grid.n);
    for i in 0..mubar.grid.n {
        let q = mubar.values[i] * mubar.values[i] / rhobar.values[i]
            + rhobar.values[i] * rhobar.values[i] / 2.0;
        let d = qbar.values[i] - q;
        if d < -crate::kdv::CONVEXITY_TOL * scale {
            return Err(CoreError::Validation(format!(
                "convexity violated: Qbar - Q(rhobar, mubar) = {d:.3e} at index {i}"
            )));
        }
        defect.push(d.max(0.0));
    }
    let grad = mubar.derivative_central();
    let mut values = vec![0.0; mubar.grid.n];
    let mut defined = vec![false; mubar.grid.n];
    for i in 0..mubar.grid.n {
        if grad.values[i].abs() > eps_grad {
            values[i] = defect[i] / grad.values[i];
            defined[i] = true;
        }
    }
    Ok(MaskedField1 { grid: mubar.grid, values, defined })
}
