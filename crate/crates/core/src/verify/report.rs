use rug::Float;
use serde::{Deserialize, Serialize};

use super::{Case, CheckSpec, Residual};

/// One evaluated case of a check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseOutcome {
    pub case: String,
    /// Absolute residual in decimal, or `"mismatch"` for a failed exact comparison.
    pub residual: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<String>,
}

/// Structured outcome of a check run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub params: CheckSpec,
    pub n_cases: usize,
    pub max_abs_residual: String,
    pub tolerance: f64,
    pub pass: bool,
    pub elapsed_ms: u64,
    pub failures: Vec<CaseOutcome>,
    pub cases: Vec<CaseOutcome>,
}

pub(crate) fn format_residual(r: &Float) -> String {
    if r.is_zero() {
        "0".to_string()
    } else {
        r.to_string_radix(10, Some(6))
    }
}

impl Report {
    pub(crate) fn assemble(spec: CheckSpec, cases: Vec<Case>, elapsed_ms: u64, prec: u32) -> Report {
        let mut worst = Float::new(prec);
        let mut any_mismatch = false;
        let mut outcomes = Vec::with_capacity(cases.len());
        for (case, r) in cases {
            let outcome = match r {
                Residual::Numeric(v) => {
                    let pass = v < spec.tolerance;
                    if v > worst {
                        worst = v.clone();
                    }
                    CaseOutcome { case, residual: format_residual(&v), pass, mismatch: None }
                }
                Residual::Exact(None) => CaseOutcome { case, residual: "0".into(), pass: true, mismatch: None },
                Residual::Exact(Some(detail)) => {
                    any_mismatch = true;
                    CaseOutcome { case, residual: "mismatch".into(), pass: false, mismatch: Some(detail) }
                }
            };
            outcomes.push(outcome);
        }
        let failures: Vec<CaseOutcome> = outcomes.iter().filter(|c| !c.pass).cloned().collect();
        Report {
            check: spec.name.clone(),
            tolerance: spec.tolerance,
            params: spec,
            n_cases: outcomes.len(),
            max_abs_residual: if any_mismatch { "mismatch".into() } else { format_residual(&worst) },
            pass: failures.is_empty(),
            elapsed_ms,
            failures,
            cases: outcomes,
        }
    }

    /// Largest numeric residual as an `f64`; infinite after an exact mismatch.
    pub fn max_residual_f64(&self) -> f64 {
        self.max_abs_residual.parse().unwrap_or(f64::INFINITY)
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        format!(
            "{} {}: {} cases, max residual {}, tolerance {:e}, {} ms",
            if self.pass { "PASS" } else { "FAIL" },
            self.check,
            self.n_cases,
            self.max_abs_residual,
            self.tolerance,
            self.elapsed_ms
        )
    }
}
