//! Structured diagnostic reports (JSON-serializable, schema_version 1).

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

/// One named check inside a [`DiagnosticsReport`].
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observed: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<f64>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    pub fn pass(name: &str) -> Self {
        Self { name: name.into(), passed: true, observed: None, threshold: None, detail: String::new() }
    }

    pub fn fail(name: &str, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed: false, observed: None, threshold: None, detail: detail.into() }
    }

    pub fn measured(name: &str, observed: f64, threshold: f64, passed: bool) -> Self {
        Self { name: name.into(), passed, observed: Some(observed), threshold: Some(threshold), detail: String::new() }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }
}

/// Result of a validation or consistency diagnostic. Failures are reported,
/// not thrown: `passed` is the conjunction of all checks.
#[derive(Debug, Clone, Serialize)]
pub struct DiagnosticsReport {
    pub schema_version: u32,
    pub title: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl DiagnosticsReport {
    pub fn new(title: &str) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            title: title.into(),
            passed: true,
            checks: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.passed &= check.passed;
        self.checks.push(check);
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Verdict of a viscosity-sign scan over a parameter grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SignClass {
    Diffusive,
    Antidiffusive,
    Mixed,
}

/// Sign classification of a density derivative over a grid: the witness list
/// holds (grid value, derivative) pairs actually sampled.
#[derive(Debug, Clone, Serialize)]
pub struct SignReport {
    pub schema_version: u32,
    pub classification: SignClass,
    pub witness_points: Vec<(f64, f64)>,
    pub tolerance: f64,
    /// Adjacent grid pairs whose sampled values already violate the
    /// monotonicity the classification would need (empty unless mixed).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<(f64, f64)>,
}

impl SignReport {
    /// Classify from signed derivative witnesses: `positive_is_good`
    /// selects which uniform sign counts as `Diffusive`.
    pub fn from_witnesses(
        witness_points: Vec<(f64, f64)>,
        tolerance: f64,
        positive_is_diffusive: bool,
    ) -> Self {
        let mut pos = 0usize;
        let mut neg = 0usize;
        for &(_, d) in &witness_points {
            if d > tolerance {
                pos += 1;
            } else if d < -tolerance {
                neg += 1;
            }
            // |d| ≤ tolerance counts as neither; a flat point never breaks
            // a uniform trend by itself.
        }
        let all_pos = neg == 0;
        let all_neg = pos == 0;
        let classification = match (all_pos, all_neg, positive_is_diffusive) {
            (true, false, true) | (false, true, false) => SignClass::Diffusive,
            (true, false, false) | (false, true, true) => SignClass::Antidiffusive,
            _ => SignClass::Mixed,
        };
        Self {
            schema_version: SCHEMA_VERSION,
            classification,
            witness_points,
            tolerance,
            violations: Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_passed_tracks_checks() {
        let mut r = DiagnosticsReport::new("t");
        r.push(Check::pass("a"));
        assert!(r.passed);
        r.push(Check::fail("b", "boom"));
        assert!(!r.passed);
    }

    #[test]
    fn sign_report_classifies() {
        let r = SignReport::from_witnesses(vec![(0.1, -1.0), (0.2, -2.0)], 1e-12, false);
        assert_eq!(r.classification, SignClass::Diffusive);
        let r = SignReport::from_witnesses(vec![(0.1, 1.0), (0.2, -2.0)], 1e-12, false);
        assert_eq!(r.classification, SignClass::Mixed);
        let r = SignReport::from_witnesses(vec![(0.1, 1.0), (0.2, 2.0)], 1e-12, true);
        assert_eq!(r.classification, SignClass::Diffusive);
    }
}
