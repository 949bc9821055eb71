//! Single-well initial-data families and their turning-point solvers.
//!
//! The KdV side works with a strictly negative well u₀ normalized to
//! u₀(x₀) = −1 at its unique minimum; turning points x±(η) solve
//! u₀(x) = −η². The NLS side works with the Riemann-invariant pair
//! r±(x) = ½S′(x) ± A(x); turning points x±(λ) solve r₊ = λ on the positive
//! branch and r₋ = λ on the negative one.

use crate::error::{CoreError, Result};
use crate::report::{Check, DiagnosticsReport};

pub const DEFAULT_ROOT_TOL: f64 = 1e-13;

/// u₀(x) = −e^(−|x|^β), minimum −1 at x = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KdvBetaWell {
    pub beta: f64,
}

impl KdvBetaWell {
    pub fn new(beta: f64) -> Result<Self> {
        if !(beta > 0.0) {
            return Err(CoreError::Domain(format!("beta must be positive, got {beta}")));
        }
        Ok(Self { beta })
    }

    #[inline]
    pub fn u0(&self, x: f64) -> f64 {
        -(-x.abs().powf(self.beta)).exp()
    }

    /// Closed-form turning point |x| = (2 ln(1/η))^(1/β).
    pub fn turning_point(&self, eta: f64) -> f64 {
        (2.0 * (1.0 / eta).ln()).powf(1.0 / self.beta)
    }
}

/// Zero-momentum symmetric NLS well: r₊(x) = 1 − ½e^(−|x|^β), r₋ = −r₊,
/// S ≡ 0, amplitude A = r₊. λ_min = ½, λ_max = −½.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NlsBetaWell {
    pub beta: f64,
}

impl NlsBetaWell {
    pub fn new(beta: f64) -> Result<Self> {
        if !(beta > 0.0) {
            return Err(CoreError::Domain(format!("beta must be positive, got {beta}")));
        }
        Ok(Self { beta })
    }

    #[inline]
    pub fn r_plus(&self, x: f64) -> f64 {
        1.0 - 0.5 * (-x.abs().powf(self.beta)).exp()
    }

    #[inline]
    pub fn r_minus(&self, x: f64) -> f64 {
        -self.r_plus(x)
    }

    /// WKB amplitude of the associated initial datum u = A·exp(iS/ε), S ≡ 0.
    #[inline]
    pub fn amplitude(&self, x: f64) -> f64 {
        self.r_plus(x)
    }

    /// Closed-form turning point of the positive branch,
    /// |x| = (−ln 2(1−λ))^(1/β) for λ ∈ (½, 1).
    pub fn turning_point(&self, lambda: f64) -> f64 {
        (-(2.0 * (1.0 - lambda)).ln()).powf(1.0 / self.beta)
    }
}

/// Sampled single-well profile with monotone piecewise-cubic interpolation
/// on each side of the minimum.
#[derive(Debug, Clone)]
pub struct SampledWell {
    xs: Vec<f64>,
    values: Vec<f64>,
    min_index: usize,
    slopes: Vec<f64>,
}

impl SampledWell {
    /// Build and validate: strictly increasing abscissae, exactly one local
    /// minimum, strictly monotone on each side.
    pub fn new(xs: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        let well = Self::new_unvalidated(xs, values)?;
        let minima = well.local_minima();
        if minima.len() != 1 {
            let loc = minima
                .get(1)
                .map(|&i| format!(" (second minimum at x = {})", well.xs[i]))
                .unwrap_or_default();
            return Err(CoreError::Data(format!(
                "sampled profile must have exactly one local minimum, found {}{loc}",
                minima.len()
            )));
        }
        if !well.strictly_monotone_sides() {
            return Err(CoreError::Data(
                "sampled profile is not strictly monotone on both sides of its minimum".into(),
            ));
        }
        Ok(well)
    }

    /// Build without the single-well validation (for diagnostics that must
    /// report, rather than refuse, ill-formed data).
    pub fn new_unvalidated(xs: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if xs.len() != values.len() || xs.len() < 3 {
            return Err(CoreError::Data(format!(
                "need ≥ 3 matching samples, got {} abscissae / {} values",
                xs.len(),
                values.len()
            )));
        }
        if xs.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(CoreError::Data("abscissae must be strictly increasing".into()));
        }
        if values.iter().chain(xs.iter()).any(|v| !v.is_finite()) {
            return Err(CoreError::Data("non-finite sample".into()));
        }
        let min_index = values
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .map(|(i, _)| i)
            .expect("nonempty");
        let slopes = fritsch_carlson_slopes(&xs, &values);
        Ok(Self { xs, values, min_index, slopes })
    }

    pub fn min_point(&self) -> f64 {
        self.xs[self.min_index]
    }

    pub fn min_value(&self) -> f64 {
        self.values[self.min_index]
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Shift the profile: xs ↦ xs + s.
    pub fn translated(&self, s: f64) -> Self {
        let mut out = self.clone();
        for x in &mut out.xs {
            *x += s;
        }
        out
    }

    fn local_minima(&self) -> Vec<usize> {
        let v = &self.values;
        let n = v.len();
        let mut out = Vec::new();
        for i in 0..n {
            let left_up = i == 0 || v[i - 1] > v[i];
            let right_up = i == n - 1 || v[i + 1] > v[i];
            // Interior minima only: edge samples falling toward the boundary
            // mean the well is truncated, not doubled.
            if i > 0 && i < n - 1 && left_up && right_up {
                out.push(i);
            }
        }
        out
    }

    fn strictly_monotone_sides(&self) -> bool {
        let v = &self.values;
        let m = self.min_index;
        v[..=m].windows(2).all(|w| w[0] > w[1]) && v[m..].windows(2).all(|w| w[0] < w[1])
    }

    /// Interpolated value (clamped to the end samples outside the range).
    pub fn eval(&self, x: f64) -> f64 {
        let n = self.xs.len();
        if x <= self.xs[0] {
            return self.values[0];
        }
        if x >= self.xs[n - 1] {
            return self.values[n - 1];
        }
        let i = match self.xs.binary_search_by(|p| p.total_cmp(&x)) {
            Ok(i) => return self.values[i],
            Err(i) => i - 1,
        };
        let h = self.xs[i + 1] - self.xs[i];
        let t = (x - self.xs[i]) / h;
        hermite(self.values[i], self.values[i + 1], self.slopes[i] * h, self.slopes[i + 1] * h, t)
    }

    /// Roots of eval(x) = target on each side of the minimum, by bracketing
    /// scan over the samples and bisection on the interpolant.
    pub fn turning_points(&self, target: f64, tol: f64) -> Result<(f64, f64)> {
        let m = self.min_index;
        if target <= self.values[m] {
            return Err(CoreError::Data(format!(
                "level {target} does not intersect the well (minimum {})",
                self.values[m]
            )));
        }
        let left = self.bracket_and_bisect(target, (0..m).rev(), tol)?;
        let right = self.bracket_and_bisect(target, m..self.xs.len() - 1, tol)?;
        Ok((left, right))
    }

    fn bracket_and_bisect(
        &self,
        target: f64,
        scan: impl Iterator<Item = usize>,
        tol: f64,
    ) -> Result<f64> {
        for i in scan {
            let (lo, hi) = (self.xs[i], self.xs[i + 1]);
            let (flo, fhi) = (self.values[i] - target, self.values[i + 1] - target);
            if flo == 0.0 {
                return Ok(lo);
            }
            if fhi == 0.0 {
                return Ok(hi);
            }
            if flo.signum() != fhi.signum() {
                return Ok(bisect_monotone(|x| self.eval(x) - target, lo, hi, tol));
            }
        }
        Err(CoreError::Data(format!("no bracket for level {target} on one side of the minimum")))
    }
}

/// Sampled NLS profile: r₊ with a unique minimum, r₋ with a unique maximum.
#[derive(Debug, Clone)]
pub struct SampledNlsWell {
    pub r_plus: SampledWell,
    /// Stored negated so the same single-minimum machinery applies.
    neg_r_minus: SampledWell,
}

impl SampledNlsWell {
    pub fn new(xs: Vec<f64>, r_plus: Vec<f64>, r_minus: Vec<f64>) -> Result<Self> {
        let neg: Vec<f64> = r_minus.iter().map(|v| -v).collect();
        Ok(Self {
            r_plus: SampledWell::new(xs.clone(), r_plus)?,
            neg_r_minus: SampledWell::new(xs, neg)?,
        })
    }

    pub fn r_minus_at(&self, x: f64) -> f64 {
        -self.neg_r_minus.eval(x)
    }

    pub fn lambda_min(&self) -> f64 {
        self.r_plus.min_value()
    }

    pub fn lambda_max(&self) -> f64 {
        -self.neg_r_minus.min_value()
    }
}

/// KdV initial-data description.
#[derive(Debug, Clone)]
pub enum KdvWell {
    Beta(KdvBetaWell),
    Sampled(SampledWell),
}

impl KdvWell {
    pub fn beta(beta: f64) -> Result<Self> {
        Ok(Self::Beta(KdvBetaWell::new(beta)?))
    }

    pub fn u0(&self, x: f64) -> f64 {
        match self {
            Self::Beta(w) => w.u0(x),
            Self::Sampled(w) => w.eval(x),
        }
    }

    pub fn min_point(&self) -> f64 {
        match self {
            Self::Beta(_) => 0.0,
            Self::Sampled(w) => w.min_point(),
        }
    }

    /// x±(η) with u₀(x±) = −η², x₋ < x₀ < x₊, for η ∈ (0, 1).
    pub fn turning_points(&self, eta: f64, tol: f64) -> Result<(f64, f64)> {
        if !(0.0 < eta && eta < 1.0) {
            return Err(CoreError::Domain(format!("eta = {eta} outside (0, 1)")));
        }
        match self {
            Self::Beta(w) => {
                let x = w.turning_point(eta);
                Ok((-x, x))
            }
            Self::Sampled(w) => w.turning_points(-eta * eta, tol),
        }
    }
}

/// NLS initial-data description.
#[derive(Debug, Clone)]
pub enum NlsWell {
    Beta(NlsBetaWell),
    Sampled(SampledNlsWell),
}

impl NlsWell {
    pub fn beta(beta: f64) -> Result<Self> {
        Ok(Self::Beta(NlsBetaWell::new(beta)?))
    }

    pub fn r_plus(&self, x: f64) -> f64 {
        match self {
            Self::Beta(w) => w.r_plus(x),
            Self::Sampled(w) => w.r_plus.eval(x),
        }
    }

    pub fn r_minus(&self, x: f64) -> f64 {
        match self {
            Self::Beta(w) => w.r_minus(x),
            Self::Sampled(w) => w.r_minus_at(x),
        }
    }

    pub fn lambda_min(&self) -> f64 {
        match self {
            Self::Beta(_) => 0.5,
            Self::Sampled(w) => w.lambda_min(),
        }
    }

    pub fn lambda_max(&self) -> f64 {
        match self {
            Self::Beta(_) => -0.5,
            Self::Sampled(w) => w.lambda_max(),
        }
    }

    pub fn min_point(&self) -> f64 {
        match self {
            Self::Beta(_) => 0.0,
            Self::Sampled(w) => w.r_plus.min_point(),
        }
    }

    /// x±(λ): roots of r₊ = λ for λ ∈ [λ_min, 1) or of r₋ = λ for
    /// λ ∈ (−1, λ_max]. λ inside the solitonless gap is a domain error.
    pub fn turning_points(&self, lambda: f64, tol: f64) -> Result<(f64, f64)> {
        let (lmin, lmax) = (self.lambda_min(), self.lambda_max());
        if lambda >= lmin && lambda < 1.0 {
            if lambda == lmin {
                let x0 = self.min_point();
                return Ok((x0, x0));
            }
            match self {
                Self::Beta(w) => {
                    let x = w.turning_point(lambda);
                    Ok((-x, x))
                }
                Self::Sampled(w) => w.r_plus.turning_points(lambda, tol),
            }
        } else if lambda > -1.0 && lambda <= lmax {
            if lambda == lmax {
                let x0 = match self {
                    Self::Beta(_) => 0.0,
                    Self::Sampled(w) => w.neg_r_minus.min_point(),
                };
                return Ok((x0, x0));
            }
            match self {
                Self::Beta(w) => {
                    let x = w.turning_point(-lambda);
                    Ok((-x, x))
                }
                Self::Sampled(w) => w.neg_r_minus.turning_points(-lambda, tol),
            }
        } else {
            Err(CoreError::Domain(format!(
                "lambda = {lambda} lies in the solitonless gap ({lmax}, {lmin}) or outside (−1, 1)"
            )))
        }
    }
}

/// Bisection on a bracketing interval, to absolute tolerance `tol` in x.
/// Monotone sides make this unconditionally safe.
pub fn bisect_monotone(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut flo = f(lo);
    if flo == 0.0 {
        return lo;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid <= lo || mid >= hi {
            return mid;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn hermite(y0: f64, y1: f64, m0: f64, m1: f64, t: f64) -> f64 {
    let t2 = t * t;
    let t3 = t2 * t;
    y0 * (2.0 * t3 - 3.0 * t2 + 1.0)
        + m0 * (t3 - 2.0 * t2 + t)
        + y1 * (-2.0 * t3 + 3.0 * t2)
        + m1 * (t3 - t2)
}

/// Fritsch–Carlson monotone cubic slopes (preserves the well shape).
fn fritsch_carlson_slopes(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    let n = xs.len();
    let d: Vec<f64> = (0..n - 1).map(|i| (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])).collect();
    let mut m = vec![0.0; n];
    m[0] = d[0];
    m[n - 1] = d[n - 2];
    for i in 1..n - 1 {
        if d[i - 1] * d[i] <= 0.0 {
            m[i] = 0.0;
        } else {
            // Weighted harmonic mean keeps the interpolant monotone.
            let (h0, h1) = (xs[i] - xs[i - 1], xs[i + 1] - xs[i]);
            let w1 = 2.0 * h1 + h0;
            let w2 = h1 + 2.0 * h0;
            m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    m
}

/// Check the single-well hypotheses of a KdV profile; failures are reported,
/// not thrown.
pub fn validate_single_well_kdv(profile: &KdvWell) -> DiagnosticsReport {
    let mut report = DiagnosticsReport::new("kdv single-well validation");
    match profile {
        KdvWell::Beta(w) => {
            report.push(Check::measured("minimum value is -1", w.u0(0.0), 1e-15, (w.u0(0.0) + 1.0).abs() < 1e-15));
            let scan = beta_scan_range(w.beta);
            let xs: Vec<f64> = (0..=2048).map(|i| -scan + 2.0 * scan * i as f64 / 2048.0).collect();
            let vals: Vec<f64> = xs.iter().map(|&x| w.u0(x)).collect();
            push_single_minimum_checks(&mut report, &xs, &vals);
            if w.beta <= 1.0 {
                report.warn(format!(
                    "beta = {} is not smooth at the minimum (profile is not Schwartz class); accepted",
                    w.beta
                ));
            }
        }
        KdvWell::Sampled(w) => {
            push_single_minimum_checks(&mut report, &w.xs, &w.values);
            let mv = w.min_value();
            if (mv + 1.0).abs() > 1e-6 {
                report.warn(format!(
                    "sampled minimum value {mv} differs from the normalization -1; η-levels assume u₀(x₀) = -1"
                ));
            }
        }
    }
    report
}

/// Check the single-well hypotheses and the branch-ordering relation of an
/// NLS profile: −1 ≤ r₋ ≤ λ_max < λ_min ≤ r₊ ≤ 1.
pub fn validate_single_well_nls(profile: &NlsWell) -> DiagnosticsReport {
    let mut report = DiagnosticsReport::new("nls single-well validation");
    let (lmin, lmax) = (profile.lambda_min(), profile.lambda_max());
    report.push(
        Check::measured("lambda_min", lmin, f64::NAN, lmin.is_finite()).with_detail("minimum of r+"),
    );
    report.push(
        Check::measured("lambda_max", lmax, f64::NAN, lmax.is_finite()).with_detail("maximum of r-"),
    );
    report.push(Check::measured("gap ordering lambda_max < lambda_min", lmin - lmax, 0.0, lmax < lmin));

    let (xs, rp, rm): (Vec<f64>, Vec<f64>, Vec<f64>) = match profile {
        NlsWell::Beta(w) => {
            let scan = beta_scan_range(w.beta);
            let xs: Vec<f64> = (0..=2048).map(|i| -scan + 2.0 * scan * i as f64 / 2048.0).collect();
            let rp = xs.iter().map(|&x| w.r_plus(x)).collect();
            let rm = xs.iter().map(|&x| w.r_minus(x)).collect();
            (xs, rp, rm)
        }
        NlsWell::Sampled(w) => {
            let xs = w.r_plus.xs().to_vec();
            let rp = w.r_plus.values().to_vec();
            let rm = xs.iter().map(|&x| w.r_minus_at(x)).collect();
            (xs, rp, rm)
        }
    };
    let bounds_ok = rp.iter().all(|&v| v >= lmin - 1e-12 && v <= 1.0 + 1e-12)
        && rm.iter().all(|&v| v >= -1.0 - 1e-12 && v <= lmax + 1e-12);
    report.push(Check::measured(
        "relation -1 <= r- <= lambda_max < lambda_min <= r+ <= 1",
        0.0,
        0.0,
        bounds_ok,
    ));
    push_single_minimum_checks(&mut report, &xs, &rp);
    if let NlsWell::Beta(w) = profile {
        if w.beta <= 1.0 {
            report.warn(format!(
                "beta = {} is not smooth at the minimum (profile is not Schwartz class); accepted",
                w.beta
            ));
        }
    }
    report
}

fn beta_scan_range(beta: f64) -> f64 {
    // Keep the scan where the exponential tail is still resolvable in f64,
    // including after the 1 − ½e^(−|x|^β) subtraction of the NLS branches.
    (1e12f64).ln().powf(1.0 / beta)
}

fn push_single_minimum_checks(report: &mut DiagnosticsReport, xs: &[f64], vals: &[f64]) {
    let min_index = vals
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut extra_minima = Vec::new();
    for i in 1..vals.len() - 1 {
        if vals[i] < vals[i - 1] && vals[i] < vals[i + 1] && i != min_index {
            extra_minima.push(xs[i]);
        }
    }
    let detail = if extra_minima.is_empty() {
        String::new()
    } else {
        format!("additional local minima at x = {extra_minima:?}")
    };
    report.push(
        Check::measured("unique local minimum", extra_minima.len() as f64 + 1.0, 1.0, extra_minima.is_empty())
            .with_detail(detail),
    );
    let monotone = vals[..=min_index].windows(2).all(|w| w[0] > w[1])
        && vals[min_index..].windows(2).all(|w| w[0] < w[1]);
    report.push(Check::measured("strictly monotone on each side", 0.0, 0.0, monotone));
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn kdv_turning_points_closed_form() {
        let w = KdvWell::beta(2.0).unwrap();
        let (xm, xp) = w.turning_points(0.5, DEFAULT_ROOT_TOL).unwrap();
        // |x| = (2 ln 2)^(1/2)
        assert_relative_eq!(xp, 1.1774100226, max_relative = 1e-9);
        assert_relative_eq!(xm, -xp, max_relative = 1e-12);

        let w = KdvWell::beta(1.0).unwrap();
        let (_, xp) = w.turning_points(0.1, DEFAULT_ROOT_TOL).unwrap();
        assert_relative_eq!(xp, 2.0 * 10f64.ln(), max_relative = 1e-12); // 4.60517
    }

    #[test]
    fn kdv_turning_points_shrink_to_minimum() {
        let w = KdvWell::beta(2.0).unwrap();
        let (xm, xp) = w.turning_points(1.0 - 1e-12, DEFAULT_ROOT_TOL).unwrap();
        assert!(xp < 1e-5 && xm > -1e-5);
        assert!(w.turning_points(0.0, DEFAULT_ROOT_TOL).is_err());
        assert!(w.turning_points(1.0, DEFAULT_ROOT_TOL).is_err());
    }

    #[test]
    fn closed_form_agrees_with_bisection() {
        for beta in [1.0, 1.5, 2.0, 4.0] {
            let w = KdvBetaWell::new(beta).unwrap();
            for eta in [0.1, 0.5, 0.9] {
                let closed = w.turning_point(eta);
                let target = -eta * eta;
                let root =
                    bisect_monotone(|x| w.u0(x) - target, 1e-8, closed + 10.0, 1e-14);
                assert_relative_eq!(closed, root, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn nls_turning_points() {
        let w = NlsWell::beta(2.0).unwrap();
        let (xm, xp) = w.turning_points(0.9, DEFAULT_ROOT_TOL).unwrap();
        assert_relative_eq!(xp, 1.2686362412, max_relative = 1e-9);
        assert_relative_eq!(xm, -xp, max_relative = 1e-12);

        // λ = λ_min collapses to the minimum point.
        let (xm, xp) = w.turning_points(0.5, DEFAULT_ROOT_TOL).unwrap();
        assert_eq!((xm, xp), (0.0, 0.0));

        let w3 = NlsWell::beta(3.0).unwrap();
        let (_, xp) = w3.turning_points(0.7, DEFAULT_ROOT_TOL).unwrap();
        assert_relative_eq!(xp, (-(0.6f64).ln()).powf(1.0 / 3.0), max_relative = 1e-12); // 0.79930

        // Solitonless gap rejected.
        assert!(w.turning_points(0.0, DEFAULT_ROOT_TOL).is_err());
        assert!(w.turning_points(-0.3, DEFAULT_ROOT_TOL).is_err());
        // Mirror branch.
        let (xm, xp) = w.turning_points(-0.9, DEFAULT_ROOT_TOL).unwrap();
        assert_relative_eq!(xp, 1.2686362412, max_relative = 1e-9);
        assert!(xm < xp);
    }

    #[test]
    fn sampled_well_turning_points_match_analytic() {
        let w = KdvBetaWell::new(2.0).unwrap();
        let xs: Vec<f64> = (0..=4000).map(|i| -10.0 + 20.0 * i as f64 / 4000.0).collect();
        let vals: Vec<f64> = xs.iter().map(|&x| w.u0(x)).collect();
        let sampled = KdvWell::Sampled(SampledWell::new(xs, vals).unwrap());
        let (xm, xp) = sampled.turning_points(0.5, 1e-13).unwrap();
        assert_relative_eq!(xp, 1.1774100226, max_relative = 1e-5);
        assert_relative_eq!(xm, -1.1774100226, max_relative = 1e-5);
    }

    #[test]
    fn sampled_well_translation_equivariance() {
        let w = KdvBetaWell::new(1.5).unwrap();
        let xs: Vec<f64> = (0..=4000).map(|i| -9.0 + 18.0 * i as f64 / 4000.0).collect();
        let vals: Vec<f64> = xs.iter().map(|&x| w.u0(x)).collect();
        let base = SampledWell::new(xs, vals).unwrap();
        let shifted = base.translated(0.731);
        let (am, ap) = base.turning_points(-0.25, 1e-13).unwrap();
        let (bm, bp) = shifted.turning_points(-0.25, 1e-13).unwrap();
        assert!((bm - am - 0.731).abs() < 1e-10);
        assert!((bp - ap - 0.731).abs() < 1e-10);
    }

    #[test]
    fn two_minima_rejected_and_reported() {
        let xs: Vec<f64> = (0..=100).map(|i| i as f64 / 10.0).collect();
        // W-shape: minima near x = 2.5 and x = 7.5.
        let vals: Vec<f64> =
            xs.iter().map(|&x| ((x - 2.5) * (x - 7.5)).powi(2) / 100.0 - 1.0).collect();
        assert!(matches!(SampledWell::new(xs.clone(), vals.clone()), Err(CoreError::Data(_))));
        let raw = SampledWell::new_unvalidated(xs, vals).unwrap();
        let report = validate_single_well_kdv(&KdvWell::Sampled(raw));
        assert!(!report.passed);
        let c = report.check("unique local minimum").unwrap();
        assert!(!c.passed && c.detail.contains("additional local minima"));
    }

    #[test]
    fn beta_wells_validate() {
        let r = validate_single_well_kdv(&KdvWell::beta(1.5).unwrap());
        assert!(r.passed);
        let r = validate_single_well_nls(&NlsWell::beta(2.0).unwrap());
        assert!(r.passed);
        assert_eq!(r.check("lambda_min").unwrap().observed, Some(0.5));
        assert_eq!(r.check("lambda_max").unwrap().observed, Some(-0.5));
        // β ≤ 1 accepted with a warning.
        let r = validate_single_well_kdv(&KdvWell::beta(1.0).unwrap());
        assert!(r.passed && !r.warnings.is_empty());
    }
}
