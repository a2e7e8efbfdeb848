//! Named checks of the identities satisfied by the evaluators, each
//! producing a structured report.

mod checks;
mod report;
mod symbolic;

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use rug::Float;
use serde::{Deserialize, Serialize};

pub use report::{CaseOutcome, Report};
pub use checks::takeyama_from_main;
pub use symbolic::{
    bernoulli_numbers, lemma32_rhs, prop31_rhs, signed_y_over_one_plus_yt, sin_identity_residual, Sign, SymbolicCase,
};

use crate::numerics::{NumContext, NumericsError, ZetaCache, DEFAULT_GUARD};
use crate::word_algebra::{AlgebraError, Index};

/// Every named check, in the order `run_all` executes them.
pub const CHECK_NAMES: [&str; 17] = [
    "duality_sh",
    "ohno",
    "takeyama",
    "hms2023",
    "main",
    "phi_rs",
    "duality_rs",
    "harmonic_rs",
    "harmonic_ext",
    "lemma_shift",
    "reg_theorem",
    "sum_spq",
    "symbolic_prop31",
    "symbolic_lemma32",
    "lemma33",
    "gamma_formula",
    "lemma_computation",
];

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("invalid check parameters: {0}")]
    Parameter(String),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Scope and accuracy of one check run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckSpec {
    pub name: String,
    pub max_weight: u32,
    pub max_m: u32,
    pub maxdeg: u32,
    pub precision: u32,
    pub tolerance: f64,
}

impl CheckSpec {
    /// Default scope of a named check.
    pub fn default_for(name: &str) -> Result<CheckSpec, VerifyError> {
        let (w, m, d, tol) = match name {
            "duality_sh" => (7, 0, 0, 1e-40),
            "ohno" => (6, 3, 0, 1e-40),
            "takeyama" => (5, 4, 0, 1e-35),
            "hms2023" => (4, 0, 4, 1e-30),
            "main" => (4, 0, 3, 1e-30),
            "phi_rs" => (5, 0, 3, 1e-35),
            "duality_rs" => (5, 0, 0, 1e-35),
            "harmonic_rs" => (5, 0, 0, 1e-35),
            "harmonic_ext" => (5, 0, 3, 1e-35),
            "lemma_shift" => (3, 2, 0, 1e-30),
            "reg_theorem" => (5, 0, 0, 1e-40),
            "sum_spq" => (0, 0, 8, 1e-40),
            "symbolic_prop31" | "symbolic_lemma32" => (6, 0, 4, 0.0),
            "lemma33" => (4, 0, 3, 1e-30),
            "gamma_formula" => (0, 0, 6, 1e-35),
            "lemma_computation" => (0, 0, 4, 1e-35),
            _ => return Err(VerifyError::UnknownCheck(name.to_string())),
        };
        Ok(CheckSpec {
            name: name.to_string(),
            max_weight: w,
            max_m: m,
            maxdeg: d,
            precision: crate::numerics::DEFAULT_DIGITS,
            tolerance: tol,
        })
    }

    fn validate(&self) -> Result<(), VerifyError> {
        if !(self.tolerance >= 0.0) || !self.tolerance.is_finite() {
            return Err(VerifyError::Parameter(format!("tolerance {} is not a finite nonnegative number", self.tolerance)));
        }
        if self.maxdeg > 16 || self.max_weight > 12 || self.max_m > 12 {
            return Err(VerifyError::Parameter(format!(
                "scope too large: max_weight {}, max_m {}, maxdeg {}",
                self.max_weight, self.max_m, self.maxdeg
            )));
        }
        Ok(())
    }
}

/// Optional replacements for the default parameters of every check.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Overrides {
    pub max_weight: Option<u32>,
    pub max_m: Option<u32>,
    pub maxdeg: Option<u32>,
    pub precision: Option<u32>,
    pub tolerance: Option<f64>,
}

impl Overrides {
    pub fn apply(&self, mut spec: CheckSpec) -> CheckSpec {
        if let Some(v) = self.max_weight {
            spec.max_weight = v;
        }
        if let Some(v) = self.max_m {
            spec.max_m = v;
        }
        if let Some(v) = self.maxdeg {
            spec.maxdeg = v;
        }
        if let Some(v) = self.precision {
            spec.precision = v;
        }
        if let Some(v) = self.tolerance {
            spec.tolerance = v;
        }
        spec
    }
}

/// All indices of exact weight `weight`, in lexicographic order.
pub fn enumerate_indices(weight: u32, admissible_only: bool) -> Vec<Index> {
    fn go(rest: u32, prefix: &mut Vec<u32>, out: &mut Vec<Index>) {
        if rest == 0 {
            out.push(Index::new(prefix.clone()).expect("parts are positive"));
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            go(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(weight, &mut Vec::new(), &mut out);
    out.retain(|k| !admissible_only || k.is_admissible());
    out.sort();
    out
}

/// All indices of weight at most `max_weight`, by weight and then lexicographically.
pub fn indices_up_to(max_weight: u32, admissible_only: bool) -> Vec<Index> {
    (0..=max_weight).flat_map(|w| enumerate_indices(w, admissible_only)).collect()
}

/// Outcome of one case before it is rendered into a report.
pub(crate) enum Residual {
    Numeric(Float),
    Exact(Option<String>),
}

pub(crate) type Case = (String, Residual);

/// Evaluate independent cases in parallel and keep them in input order.
pub(crate) fn par_cases<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> Result<Case, VerifyError> + Sync + Send,
) -> Result<Vec<Case>, VerifyError> {
    items.par_iter().map(f).collect()
}

/// Run a check with a private in-memory value cache.
pub fn run_check(spec: &CheckSpec) -> Result<Report, VerifyError> {
    run_check_with_cache(spec, Arc::new(ZetaCache::in_memory()))
}

/// Run a check backed by a shared value cache.
pub fn run_check_with_cache(spec: &CheckSpec, cache: Arc<ZetaCache>) -> Result<Report, VerifyError> {
    let ctx = NumContext::with_cache(spec.precision, DEFAULT_GUARD, cache)?;
    run_check_in(spec, &ctx)
}

/// Run a check in an existing numeric context, whose precision must match the spec.
pub fn run_check_in(spec: &CheckSpec, ctx: &NumContext) -> Result<Report, VerifyError> {
    run_check_signed(spec, ctx, Sign::Corrected)
}

/// Run a check with an explicit sign convention for the factorization
/// identities (`main`, `symbolic_prop31`, `symbolic_lemma32`, `lemma33`,
/// `lemma_computation`); other checks ignore `sign`.
pub fn run_check_signed(spec: &CheckSpec, ctx: &NumContext, sign: Sign) -> Result<Report, VerifyError> {
    if ctx.digits() != spec.precision {
        return Err(VerifyError::Parameter(format!(
            "context precision {} differs from spec precision {}",
            ctx.digits(),
            spec.precision
        )));
    }
    spec.validate()?;
    let start = Instant::now();
    let cases = match spec.name.as_str() {
        "duality_sh" => checks::duality_sh(spec, ctx)?,
        "ohno" => checks::ohno(spec, ctx)?,
        "takeyama" => checks::takeyama(spec, ctx)?,
        "hms2023" => checks::hms2023(spec, ctx)?,
        "main" => checks::main_theorem(spec, ctx, sign)?,
        "phi_rs" => checks::phi_rs(spec, ctx)?,
        "duality_rs" => checks::duality_rs(spec, ctx)?,
        "harmonic_rs" => checks::harmonic_rs(spec, ctx)?,
        "harmonic_ext" => checks::harmonic_ext(spec, ctx)?,
        "lemma_shift" => checks::lemma_shift(spec, ctx)?,
        "reg_theorem" => checks::reg_theorem(spec, ctx)?,
        "sum_spq" => checks::sum_spq(spec, ctx)?,
        "symbolic_prop31" => symbolic::prop31_cases(spec, sign)?,
        "symbolic_lemma32" => symbolic::lemma32_cases(spec, sign)?,
        "lemma33" => checks::lemma33(spec, ctx, sign)?,
        "gamma_formula" => checks::gamma_formula(spec, ctx)?,
        "lemma_computation" => checks::lemma_computation(spec, ctx, sign)?,
        other => return Err(VerifyError::UnknownCheck(other.to_string())),
    };
    let elapsed = start.elapsed().as_millis() as u64;
    Ok(Report::assemble(spec.clone(), cases, elapsed, ctx.prec()))
}

/// Run every check at its default scope with `overrides` applied.
pub fn run_all(overrides: &Overrides) -> Result<Vec<Report>, VerifyError> {
    run_all_with_cache(overrides, Arc::new(ZetaCache::in_memory()))
}

pub fn run_all_with_cache(overrides: &Overrides, cache: Arc<ZetaCache>) -> Result<Vec<Report>, VerifyError> {
    let mut contexts: Vec<NumContext> = Vec::new();
    let mut reports = Vec::with_capacity(CHECK_NAMES.len());
    for name in CHECK_NAMES {
        let spec = overrides.apply(CheckSpec::default_for(name)?);
        let ctx = match contexts.iter().find(|c| c.digits() == spec.precision) {
            Some(c) => c.clone(),
            None => {
                let c = NumContext::with_cache(spec.precision, DEFAULT_GUARD, cache.clone())?;
                contexts.push(c.clone());
                c
            }
        };
        reports.push(run_check_in(&spec, &ctx)?);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_examples() {
        let w4: Vec<String> = enumerate_indices(4, true).iter().map(|k| k.to_string()).collect();
        assert_eq!(w4, ["(1,1,2)", "(1,3)", "(2,2)", "(4)"]);
        assert_eq!(enumerate_indices(0, false), vec![Index::empty()]);
        for w in 2..=10u32 {
            assert_eq!(enumerate_indices(w, true).len(), 1 << (w - 2));
            assert_eq!(enumerate_indices(w, false).len(), 1 << (w - 1));
        }
    }

    #[test]
    fn unknown_check() {
        let mut spec = CheckSpec::default_for("ohno").unwrap();
        spec.name = "nonsense".into();
        assert!(matches!(run_check(&spec), Err(VerifyError::UnknownCheck(_))));
        assert!(matches!(CheckSpec::default_for("nonsense"), Err(VerifyError::UnknownCheck(_))));
    }

    #[test]
    fn printed_conventions_fail() {
        for (name, weight) in [("main", 2), ("lemma33", 2), ("lemma_computation", 0), ("symbolic_lemma32", 3)] {
            let mut spec = CheckSpec::default_for(name).unwrap();
            spec.precision = 30;
            spec.tolerance = 1e-20;
            spec.max_weight = weight;
            spec.maxdeg = 2;
            let ctx = NumContext::new(30).unwrap();
            assert!(run_check_signed(&spec, &ctx, Sign::Corrected).unwrap().pass, "{name}");
            assert!(!run_check_signed(&spec, &ctx, Sign::Printed).unwrap().pass, "{name}");
        }
    }
}
