//! KdV zero-dispersion diagnostics: the level-width density φ(η), the
//! long-time weak limit it controls, η-tables, and the sign of the effective
//! viscosity ν_turb = (ū² − (ū)²)/∂ₓū.
//!
//! φ(η) = ∫ over (x₋(η), x₊(η)) of η·(−u₀(x) − η²)^(−1/2) dx, with
//! inverse-square-root singularities at both turning points. The weak limit
//! behaves like ū(x,t) ≈ −φ(√(x/4t))/(4πt) inside the wedge 0 < x/t < 4 for
//! large t, so ∂ₓū has the opposite sign of φ′: a decreasing φ is the
//! diffusive (well-posed effective equation) case.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CoreError, Result};
use crate::field::{MaskedField1, RealField1};
use crate::profiles::{KdvBetaWell, KdvWell, DEFAULT_ROOT_TOL};
use crate::quadrature::{
    integrate_integrand, integrate_split_at, OffsetAware, QuadResult, Scheme, SingularitySpec,
    DEFAULT_ABS_FLOOR,
};
use crate::report::{SignReport, SCHEMA_VERSION};

/// Which density a [`PhiTable`] samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PhiKind {
    KdvEta,
    NlsLambda,
}

/// Sampled density on a strictly increasing grid, with per-point error
/// estimates from the quadrature.
#[derive(Debug, Clone, Serialize)]
pub struct PhiTable {
    pub kind: PhiKind,
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub error_estimates: Vec<f64>,
}

impl PhiTable {
    pub fn new(kind: PhiKind, grid: Vec<f64>, values: Vec<f64>, error_estimates: Vec<f64>) -> Result<Self> {
        if grid.len() != values.len() || grid.len() != error_estimates.len() {
            return Err(CoreError::Data("phi table arrays must have equal length".into()));
        }
        if grid.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(CoreError::Data("phi table grid must be strictly increasing".into()));
        }
        // The integrand is positive, so interior values must be too; a zero
        // is allowed only at a branch edge (empty interval).
        if values.iter().any(|&v| v < 0.0 || !v.is_finite()) {
            return Err(CoreError::Data("phi table values must be finite and nonnegative".into()));
        }
        Ok(Self { kind, grid, values, error_estimates })
    }
}

/// β×η (or β×λ) matrix of density values, row-major over the second grid.
#[derive(Debug, Clone, Serialize)]
pub struct TableMatrix {
    pub col_label: &'static str,
    pub row_label: &'static str,
    pub cols: Vec<f64>,
    pub rows: Vec<f64>,
    /// values[row][col]
    pub values: Vec<Vec<f64>>,
    pub errors: Vec<Vec<f64>>,
}

/// φ(η) for a single-well profile, to relative tolerance `rel_tol`.
pub fn phi(profile: &KdvWell, eta: f64, rel_tol: f64, scheme: Scheme) -> Result<QuadResult> {
    let (x_minus, x_plus) = profile.turning_points(eta, DEFAULT_ROOT_TOL)?;
    match profile {
        KdvWell::Beta(w) => {
            let half = phi_beta_half(w, eta, rel_tol, scheme)?;
            Ok(QuadResult {
                value: 2.0 * half.value,
                error_estimate: 2.0 * half.error_estimate,
                evaluations: half.evaluations,
            })
        }
        KdvWell::Sampled(w) => {
            let target = eta * eta;
            let f = move |x: f64| {
                let arg = -w.eval(x) - target;
                eta / arg.sqrt() // NaN outside the level set; the rule drops it
            };
            integrate_split_at(scheme, &f, x_minus, profile.min_point(), x_plus, rel_tol, DEFAULT_ABS_FLOOR)
        }
    }
}

/// β-well specialization on [0, X]: with η² = e^(−X^β) the integrand is
/// η·(e^(−x^β) − η²)^(−1/2) = expm1(X^β − x^β)^(−1/2), and
/// X^β − x^β = −X^β·expm1(β·ln1p(−off/X)) is exact in the endpoint offset,
/// so the rule reaches full precision.
fn phi_beta_half(w: &KdvBetaWell, eta: f64, rel_tol: f64, scheme: Scheme) -> Result<QuadResult> {
    let beta = w.beta;
    let upper = w.turning_point(eta);
    let g = OffsetAware(move |_x: f64, _oa: f64, ob: f64| {
        let delta = -upper.powf(beta) * (beta * (-ob / upper).ln_1p()).exp_m1();
        1.0 / delta.exp_m1().sqrt()
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

/// Central-difference derivative with one Richardson refinement; the
/// consistency flag trips when the h and h/2 estimates differ by more than
/// 1e−4 relative.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DerivativeEstimate {
    pub value: f64,
    pub coarse: f64,
    pub fine: f64,
    pub consistent: bool,
}

const CONSISTENCY_REL: f64 = 1e-4;

pub fn dphi_deta(
    profile: &KdvWell,
    eta: f64,
    h: f64,
    rel_tol: f64,
    scheme: Scheme,
) -> Result<DerivativeEstimate> {
    if !(h > 0.0) {
        return Err(CoreError::Domain(format!("step h = {h} must be positive")));
    }
    if !(eta - h > 0.0 && eta + h < 1.0) {
        return Err(CoreError::Domain(format!("stencil eta ± {h} leaves (0, 1) at eta = {eta}")));
    }
    let d = |step: f64| -> Result<f64> {
        let hi = phi(profile, eta + step, rel_tol, scheme)?.value;
        let lo = phi(profile, eta - step, rel_tol, scheme)?.value;
        Ok((hi - lo) / (2.0 * step))
    };
    let coarse = d(h)?;
    let fine = d(0.5 * h)?;
    let value = (4.0 * fine - coarse) / 3.0;
    let consistent = (coarse - fine).abs() <= CONSISTENCY_REL * fine.abs().max(1e-300);
    Ok(DerivativeEstimate { value, coarse, fine, consistent })
}

/// Where an asymptotic formula value stands relative to its wedge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reliability {
    /// δ < x/t < 4 − δ: the formula applies.
    WhithamInterior,
    /// Inside the wedge but within δ of an edge: value returned, unreliable.
    TransitionBand,
    /// Outside the wedge: the limit decays like t^(−2); 0 is returned.
    OuterDecay,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct AsymptoticValue {
    pub value: f64,
    pub reliability: Reliability,
}

/// Long-time weak limit ū(x,t) ≈ −φ(√(x/4t))/(4πt) in the wedge
/// 0 < x/t < 4, and O(t^(−2)) (returned as 0) outside.
pub fn ubar_asymptotic(
    profile: &KdvWell,
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
    if ratio <= 0.0 || ratio >= 4.0 {
        return Ok(AsymptoticValue { value: 0.0, reliability: Reliability::OuterDecay });
    }
    let eta = (x / (4.0 * t)).sqrt();
    let value = -phi(profile, eta, rel_tol, scheme)?.value / (4.0 * std::f64::consts::PI * t);
    let reliability = if ratio > delta && ratio < 4.0 - delta {
        Reliability::WhithamInterior
    } else {
        Reliability::TransitionBand
    };
    Ok(AsymptoticValue { value, reliability })
}

pub const DEFAULT_FD_STEP: f64 = 1e-4;
/// Derivatives smaller than this count as neither sign in classifications.
pub const SIGN_TOL: f64 = 1e-9;

/// Classify the viscosity sign over an η grid: the effective equation is
/// diffusive iff φ′ < 0 at every grid point (then ∂ₓū > 0 in the wedge).
pub fn classify_sign(
    profile: &KdvWell,
    eta_grid: &[f64],
    h: f64,
    rel_tol: f64,
    scheme: Scheme,
) -> Result<SignReport> {
    if eta_grid.iter().any(|&e| !(0.0 < e && e < 1.0)) {
        return Err(CoreError::Domain("eta grid must lie inside (0, 1)".into()));
    }
    let witnesses: Vec<(f64, f64)> = eta_grid
        .par_iter()
        .map(|&eta| dphi_deta(profile, eta, h, rel_tol, scheme).map(|d| (eta, d.value)))
        .collect::<Result<_>>()?;
    let mut report = SignReport::from_witnesses(witnesses, SIGN_TOL, false);
    report.violations = sign_flip_pairs(&report.witness_points, SIGN_TOL);
    Ok(report)
}

/// Adjacent grid pairs bracketing a derivative sign change.
pub(crate) fn sign_flip_pairs(witnesses: &[(f64, f64)], tol: f64) -> Vec<(f64, f64)> {
    witnesses
        .windows(2)
        .filter(|w| {
            let (a, b) = (w[0].1, w[1].1);
            (a > tol && b < -tol) || (a < -tol && b > tol)
        })
        .map(|w| (w[0].0, w[1].0))
        .collect()
}

/// φ over an η grid as a [`PhiTable`].
pub fn phi_table(
    profile: &KdvWell,
    etas: &[f64],
    rel_tol: f64,
    scheme: Scheme,
) -> Result<PhiTable> {
    let results: Vec<QuadResult> = etas
        .par_iter()
        .map(|&eta| phi(profile, eta, rel_tol, scheme))
        .collect::<Result<_>>()?;
    PhiTable::new(
        PhiKind::KdvEta,
        etas.to_vec(),
        results.iter().map(|r| r.value).collect(),
        results.iter().map(|r| r.error_estimate).collect(),
    )
}

/// φ(η) matrix over β columns and η rows (the η-table of the β-family).
pub fn emit_table1(betas: &[f64], etas: &[f64], rel_tol: f64, scheme: Scheme) -> Result<TableMatrix> {
    if etas.iter().any(|&e| !(0.0 < e && e < 1.0)) {
        return Err(CoreError::Domain("eta grid must lie inside (0, 1)".into()));
    }
    let cells: Vec<Vec<QuadResult>> = etas
        .par_iter()
        .map(|&eta| {
            betas
                .iter()
                .map(|&beta| phi(&KdvWell::beta(beta)?, eta, rel_tol, scheme))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(TableMatrix {
        col_label: "beta",
        row_label: "eta",
        cols: betas.to_vec(),
        rows: etas.to_vec(),
        values: cells.iter().map(|r| r.iter().map(|c| c.value).collect()).collect(),
        errors: cells.iter().map(|r| r.iter().map(|c| c.error_estimate).collect()).collect(),
    })
}

/// Tolerance (relative to the field scale) beyond which a convexity-defect
/// violation ū² < (ū)² is rejected rather than clipped.
pub const CONVEXITY_TOL: f64 = 1e-8;

/// Pointwise ν_turb = (ū² − (ū)²)/∂ₓū, masked where |∂ₓū| ≤ eps_grad.
/// The convexity defect ū² − (ū)² must be ≥ −tolerance everywhere.
pub fn nu_turb_field(ubar: &RealField1, u2bar: &RealField1, eps_grad: f64) -> Result<MaskedField1> {
    if !ubar.grid.same_as(&u2bar.grid) {
        return Err(CoreError::GridMismatch("ubar and u2bar grids differ".into()));
    }
    let scale = u2bar.max_abs().max(ubar.max_abs().powi(2)).max(1.0);
    let mut defect = Vec::with_capacity(ubar.grid.n);
    for (u, u2) in ubar.values.iter().zip(&u2bar.values) {
        let d = u2 - u * u;
        if d < -CONVEXITY_TOL * scale {
            return Err(CoreError::Validation(format!(
                "convexity violated: u2bar - ubar^2 = {d:.3e} below -{:.1e}",
                CONVEXITY_TOL * scale
            )));
        }
        defect.push(d.max(0.0));
    }
    let grad = ubar.derivative_central();
    let mut values = vec![0.0; ubar.grid.n];
    let mut defined = vec![false; ubar.grid.n];
    for i in 0..ubar.grid.n {
        if grad.values[i].abs() > eps_grad {
            values[i] = defect[i] / grad.values[i];
            defined[i] = true;
        }
    }
    Ok(MaskedField1 { grid: ubar.grid, values, defined })
}

/// JSON envelope for a sign classification artifact.
#[derive(Debug, Clone, Serialize)]
pub struct SignArtifact {
    pub schema_version: u32,
    pub flow: &'static str,
    pub beta: f64,
    pub grid: Vec<f64>,
    #[serde(flatten)]
    pub report: SignReport,
}

impl SignArtifact {
    pub fn new(flow: &'static str, beta: f64, grid: Vec<f64>, report: SignReport) -> Self {
        Self { schema_version: SCHEMA_VERSION, flow, beta, grid, report }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profiles::SampledWell;
    use crate::report::SignClass;
    use approx::assert_relative_eq;

    fn beta_well(beta: f64) -> KdvWell {
        KdvWell::beta(beta).unwrap()
    }

    /// For the β=1 well the density has the closed form 4·arccos(η): an
    /// independent oracle for the quadrature path.
    #[test]
    fn beta_one_matches_arccos_closed_form() {
        let w = beta_well(1.0);
        for eta in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let got = phi(&w, eta, 1e-12, Scheme::DoubleExponential).unwrap();
            assert_relative_eq!(got.value, 4.0 * eta.acos(), max_relative = 1e-10);
        }
    }

    #[test]
    fn table_corner_values() {
        // Printed-table corners, 5-decimal precision.
        let v = phi(&beta_well(1.0), 0.1, 1e-11, Scheme::DoubleExponential).unwrap();
        assert_relative_eq!(v.value, 5.88251, max_relative = 1e-2);
        let v = phi(&beta_well(4.0), 0.9, 1e-11, Scheme::DoubleExponential).unwrap();
        assert_relative_eq!(v.value, 3.73515, max_relative = 1e-2);
        let v = phi(&beta_well(2.0), 0.9, 1e-11, Scheme::DoubleExponential).unwrap();
        assert_relative_eq!(v.value, 3.05934, max_relative = 1e-2);
    }

    #[test]
    fn harmonic_well_limit_near_eta_one() {
        // Near the quadratic minimum −u₀ ≈ 1 − x², so φ(η) → η·π.
        let v = phi(&beta_well(2.0), 0.999, 1e-11, Scheme::DoubleExponential).unwrap();
        assert_relative_eq!(v.value, std::f64::consts::PI, max_relative = 2e-2);
    }

    #[test]
    fn schemes_agree_on_beta_family() {
        for beta in [1.0, 1.5, 2.0, 4.0] {
            let w = beta_well(beta);
            for eta in [0.1, 0.5, 0.9] {
                let de = phi(&w, eta, 1e-11, Scheme::DoubleExponential).unwrap();
                let gs = phi(&w, eta, 1e-11, Scheme::SqrtSubstitution).unwrap();
                assert_relative_eq!(de.value, gs.value, max_relative = 1e-8);
            }
        }
    }

    #[test]
    fn eta_endpoints_are_domain_errors() {
        let w = beta_well(2.0);
        assert!(phi(&w, 0.0, 1e-10, Scheme::DoubleExponential).is_err());
        assert!(phi(&w, 1.0, 1e-10, Scheme::DoubleExponential).is_err());
    }

    fn sampled_from_beta(beta: f64, shift: f64) -> KdvWell {
        let w = KdvBetaWell::new(beta).unwrap();
        let n = 6000;
        let (lo, hi) = (-12.0, 12.0);
        let xs: Vec<f64> = (0..=n).map(|i| lo + (hi - lo) * i as f64 / n as f64 + shift).collect();
        let vals: Vec<f64> = xs.iter().map(|&x| w.u0(x - shift)).collect();
        KdvWell::Sampled(SampledWell::new(xs, vals).unwrap())
    }

    #[test]
    fn phi_translation_invariant() {
        let base = sampled_from_beta(2.0, 0.0);
        let shifted = sampled_from_beta(2.0, 1.37);
        // The substitution scheme keeps full precision through the sampled
        // interpolant (the transformed integrand is smooth in t).
        let a = phi(&base, 0.5, 1e-10, Scheme::SqrtSubstitution).unwrap();
        let b = phi(&shifted, 0.5, 1e-10, Scheme::SqrtSubstitution).unwrap();
        assert_relative_eq!(a.value, b.value, max_relative = 1e-8);
        // And against the analytic well within interpolation accuracy.
        let exact = phi(&beta_well(2.0), 0.5, 1e-10, Scheme::DoubleExponential).unwrap();
        assert_relative_eq!(a.value, exact.value, max_relative = 1e-5);
    }

    #[test]
    fn widening_the_well_increases_phi() {
        // u₀(x/c) has the same levels with c-times-wider level sets.
        let base = sampled_from_beta(2.0, 0.0);
        let w = KdvBetaWell::new(2.0).unwrap();
        let n = 6000;
        let xs: Vec<f64> = (0..=n).map(|i| -24.0 + 48.0 * i as f64 / n as f64).collect();
        let vals: Vec<f64> = xs.iter().map(|&x| w.u0(x / 2.0)).collect();
        let wide = KdvWell::Sampled(SampledWell::new(xs, vals).unwrap());
        for eta in [0.2, 0.5, 0.8] {
            let narrow = phi(&base, eta, 1e-7, Scheme::DoubleExponential).unwrap();
            let wide_v = phi(&wide, eta, 1e-7, Scheme::DoubleExponential).unwrap();
            assert!(wide_v.value > narrow.value);
            assert_relative_eq!(wide_v.value, 2.0 * narrow.value, max_relative = 1e-4);
        }
    }

    #[test]
    fn derivative_signs_follow_the_columns() {
        let d = dphi_deta(&beta_well(1.0), 0.5, DEFAULT_FD_STEP, 1e-11, Scheme::DoubleExponential).unwrap();
        assert!(d.value < 0.0 && d.consistent);
        let d = dphi_deta(&beta_well(4.0), 0.5, DEFAULT_FD_STEP, 1e-11, Scheme::DoubleExponential).unwrap();
        assert!(d.value > 0.0 && d.consistent);
        // β=1: φ = 4 arccos(η), φ' = −4/√(1−η²).
        let d = dphi_deta(&beta_well(1.0), 0.6, DEFAULT_FD_STEP, 1e-12, Scheme::DoubleExponential).unwrap();
        assert_relative_eq!(d.value, -4.0 / (1.0f64 - 0.36).sqrt(), max_relative = 1e-6);
    }

    #[test]
    fn derivative_stencil_domain_checked() {
        assert!(dphi_deta(&beta_well(2.0), 0.99999, 1e-4, 1e-10, Scheme::DoubleExponential).is_err());
    }

    #[test]
    fn sign_classification_matches_the_three_regimes() {
        let grid: Vec<f64> = (1..=9).map(|k| k as f64 / 10.0).collect();
        let r = classify_sign(&beta_well(1.0), &grid, DEFAULT_FD_STEP, 1e-10, Scheme::DoubleExponential).unwrap();
        assert_eq!(r.classification, SignClass::Diffusive);
        let r = classify_sign(&beta_well(1.5), &grid, DEFAULT_FD_STEP, 1e-10, Scheme::DoubleExponential).unwrap();
        assert_eq!(r.classification, SignClass::Mixed);
        assert!(!r.violations.is_empty());
        let r = classify_sign(&beta_well(2.0), &grid, DEFAULT_FD_STEP, 1e-10, Scheme::DoubleExponential).unwrap();
        assert_eq!(r.classification, SignClass::Antidiffusive);
    }

    #[test]
    fn ubar_examples() {
        // η = √(x/4t) = 0.1, value −φ(0.1)/(4π).
        let v = ubar_asymptotic(&beta_well(1.0), 0.04, 1.0, 1e-3, 1e-11, Scheme::DoubleExponential).unwrap();
        assert_eq!(v.reliability, Reliability::WhithamInterior);
        assert_relative_eq!(v.value, -4.0 * (0.1f64).acos() / (4.0 * std::f64::consts::PI), max_relative = 1e-9);

        let v = ubar_asymptotic(&beta_well(1.0), -1.0, 1.0, 1e-3, 1e-10, Scheme::DoubleExponential).unwrap();
        assert_eq!(v.value, 0.0);
        assert_eq!(v.reliability, Reliability::OuterDecay);

        // η = 0.9 at t = 10: −φ₂(0.9)/(40π) ≈ −0.0243448.
        let v = ubar_asymptotic(&beta_well(2.0), 32.4, 10.0, 1e-3, 1e-11, Scheme::DoubleExponential).unwrap();
        assert_relative_eq!(v.value, -0.0243448, max_relative = 1e-3);

        // Transition band tagging.
        let v = ubar_asymptotic(&beta_well(2.0), 4e-4, 1.0, 1e-3, 1e-10, Scheme::DoubleExponential).unwrap();
        assert_eq!(v.reliability, Reliability::TransitionBand);
        assert!(ubar_asymptotic(&beta_well(2.0), 1.0, 0.0, 1e-3, 1e-10, Scheme::DoubleExponential).is_err());
    }

    #[test]
    fn table1_shape_and_cells() {
        let t = emit_table1(&[], &[0.5], 1e-10, Scheme::DoubleExponential).unwrap();
        assert!(t.cols.is_empty() && t.values.iter().all(|r| r.is_empty()));
        let t = emit_table1(&[2.0], &[0.9], 1e-10, Scheme::DoubleExponential).unwrap();
        assert_relative_eq!(t.values[0][0], 3.05934, max_relative = 1e-2);
    }

    #[test]
    fn phi_table_invariants_enforced() {
        assert!(PhiTable::new(PhiKind::KdvEta, vec![0.2, 0.1], vec![1.0, 1.0], vec![0.0, 0.0]).is_err());
        assert!(PhiTable::new(PhiKind::KdvEta, vec![0.1, 0.2], vec![1.0, -1.0], vec![0.0, 0.0]).is_err());
        assert!(phi_table(&beta_well(2.0), &[0.1, 0.5, 0.9], 1e-10, Scheme::DoubleExponential).is_ok());
    }

    mod nu_turb {
        use super::*;
        use crate::field::Grid1D;

        #[test]
        fn zero_defect_gives_zero_viscosity() {
            let g = Grid1D::centered(4.0, 64).unwrap();
            let ubar = RealField1::from_fn(g, |x| (x * std::f64::consts::PI / 2.0).sin());
            let u2bar = ubar.map(|v| v * v);
            let nu = nu_turb_field(&ubar, &u2bar, 1e-6).unwrap();
            assert!(nu.defined_count() > 0);
            assert!(nu.iter_defined().all(|(_, v)| v.abs() < 1e-12));
        }

        #[test]
        fn constant_defect_linear_ramp() {
            let g = Grid1D::centered(4.0, 64).unwrap();
            let c = 0.7;
            let ubar = RealField1::from_fn(g, |x| x);
            let u2bar = RealField1::from_fn(g, |x| x * x + c);
            let nu = nu_turb_field(&ubar, &u2bar, 1e-6).unwrap();
            // Interior points (the periodic wrap pollutes the two edges).
            for (i, v) in nu.iter_defined() {
                if i > 1 && i < g.n - 2 {
                    assert_relative_eq!(v, c, max_relative = 1e-10);
                }
            }
        }

        #[test]
        fn flat_mean_is_fully_masked() {
            let g = Grid1D::centered(4.0, 64).unwrap();
            let ubar = RealField1::constant(g, 0.3);
            let u2bar = RealField1::constant(g, 0.3 * 0.3 + 1.0);
            let nu = nu_turb_field(&ubar, &u2bar, 1e-12).unwrap();
            assert_eq!(nu.defined_count(), 0);
        }

        #[test]
        fn convexity_violation_rejected() {
            let g = Grid1D::centered(4.0, 64).unwrap();
            let ubar = RealField1::from_fn(g, |x| x);
            let u2bar = RealField1::from_fn(g, |x| x * x - 0.5);
            assert!(matches!(nu_turb_field(&ubar, &u2bar, 1e-6), Err(CoreError::Validation(_))));
        }
    }
}
