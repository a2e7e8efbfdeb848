//! Acceptance criteria, one test per criterion at its pinned scope and tolerance.

use std::time::{Duration, Instant};

use mzvkit::numerics::{eval_admissible, exp_factor_series, BigComplex, ExpFactor, NumContext};
use mzvkit::regularization::double_shuffle_decompose;
use mzvkit::rsmzv::{zrs_index, zrs_word};
use mzvkit::verify::{run_all, run_check, CheckSpec, Overrides, Report};
use mzvkit::word_algebra::{shuffle, words_up_to, Index, Monomial, RatPoly, Var, VarSet, Word};
use rug::Float;

const ZETA3: &str = "1.2020569031595942853997381615114499907649862923404988817922715553";

fn line(n: impl std::fmt::Display, what: &str, pass: bool, detail: impl std::fmt::Display) {
    println!("criterion {n:>2} {}: {what}: {detail}", if pass { "PASS" } else { "FAIL" });
}

/// Run `name` at its pinned scope, which must also be the default scope.
fn pinned(n: u32, name: &str, max_weight: u32, max_m: u32, maxdeg: u32, tolerance: f64, limit: Duration) -> Report {
    let spec = CheckSpec { name: name.into(), max_weight, max_m, maxdeg, precision: 60, tolerance };
    assert_eq!(CheckSpec::default_for(name).unwrap(), spec, "default scope of {name}");
    let start = Instant::now();
    let report = run_check(&spec).unwrap();
    let elapsed = start.elapsed();
    line(n, name, report.pass && elapsed < limit, report.summary());
    for f in report.failures.iter().take(5) {
        println!("    {}: {} {}", f.case, f.residual, f.mismatch.as_deref().unwrap_or(""));
    }
    assert!(report.pass, "{}", report.summary());
    assert!(report.n_cases > 0, "{name} ran no cases");
    assert!(elapsed < limit, "{name} took {elapsed:?}, limit {limit:?}");
    report
}

#[test]
fn criterion_01_exact_reassembly() {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut n = 0;
    for w in words_up_to(7) {
        n += 1;
        if double_shuffle_decompose(&w).reassemble() != RatPoly::rational(w) {
            bad.push(w);
        }
    }
    let elapsed = start.elapsed();
    line(1, "reassembly", bad.is_empty(), format!("{n} words, {} mismatches, {elapsed:?}", bad.len()));
    assert!(bad.is_empty(), "{bad:?}");
    assert_eq!(n, 255);
    assert!(elapsed < Duration::from_secs(10));
}

#[test]
fn criterion_02_shuffle_antipode() {
    let start = Instant::now();
    let mut bad = Vec::new();
    for w in words_up_to(6).filter(|w| !w.is_empty()) {
        let k = w.len();
        let mut acc = RatPoly::zero(mzvkit::word_algebra::Rationals);
        for p in 0..=k {
            let left = RatPoly::rational(w.prefix(p));
            let right = RatPoly::rational(w.suffix_from(p).reversed());
            let term = shuffle(&left, &right).unwrap();
            acc = if (k - p) % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        if !acc.is_zero() {
            bad.push(w);
        }
    }
    let elapsed = start.elapsed();
    line(2, "antipode", bad.is_empty(), format!("{} mismatches, {elapsed:?}", bad.len()));
    assert!(bad.is_empty(), "{bad:?}");
    assert!(elapsed < Duration::from_secs(5));
}

#[test]
fn criterion_03_euler_duality() {
    let ctx = NumContext::new(60).unwrap();
    let z12 = eval_admissible(&"yyx".parse().unwrap(), &ctx).unwrap();
    let z3 = eval_admissible(&"yxx".parse().unwrap(), &ctx).unwrap();
    let diff = Float::with_val(ctx.prec(), &z12 - &z3).abs();
    let frozen = Float::with_val(ctx.prec(), Float::parse(ZETA3).unwrap());
    let drift = Float::with_val(ctx.prec(), &z3 - &frozen).abs();
    let pass = diff < 1e-50 && drift < 1e-60;
    line(3, "zeta(1,2) = zeta(3)", pass, format!("difference {}", diff.to_string_radix(10, Some(6))));
    assert!(diff < 1e-50);
    assert!(drift < 1e-60, "ζ(3) = {z3}");
}

#[test]
fn criterion_04_duality_sh() {
    pinned(4, "duality_sh", 7, 0, 0, 1e-40, Duration::from_secs(60));
}

#[test]
fn criterion_05_ohno() {
    pinned(5, "ohno", 6, 3, 0, 1e-40, Duration::from_secs(120));
}

#[test]
fn criterion_06_gamma_formula() {
    pinned(6, "gamma_formula", 0, 0, 6, 1e-35, Duration::from_secs(60));
}

#[test]
fn criterion_07_hms2023() {
    pinned(7, "hms2023", 4, 0, 4, 1e-30, Duration::from_secs(300));
}

#[test]
fn criterion_08_takeyama() {
    let r = pinned(8, "takeyama", 5, 4, 0, 1e-35, Duration::from_secs(180));
    assert!(r.cases.iter().all(|c| !c.case.starts_with("k=() ")));
    let ctx = NumContext::new(60).unwrap();
    let s = exp_factor_series(ExpFactor::EulerMinus, &ctx.series_ring(VarSet::T, 4), &ctx).unwrap();
    let c1 = s.coeff(&Monomial::var(Var::T, 1));
    let exact = c1.re.is_zero() && c1.im == -ctx.pi();
    line(8, "takeyama factor T^1 coefficient is exactly -pi*i", exact, &c1);
    assert!(exact);
}

#[test]
fn criterion_09_main() {
    let r = pinned(9, "main", 4, 0, 3, 1e-30, Duration::from_secs(600));
    assert_eq!(r.n_cases, 16, "indices of weight at most 4, including the empty one");
}

#[test]
fn criterion_10_phi_rs() {
    pinned(10, "phi_rs", 5, 0, 3, 1e-35, Duration::from_secs(180));
}

#[test]
fn criterion_11_duality_and_harmonic_rs() {
    pinned(11, "duality_rs", 5, 0, 0, 1e-35, Duration::from_secs(180));
    pinned(11, "harmonic_rs", 5, 0, 0, 1e-35, Duration::from_secs(180));
    pinned(11, "harmonic_ext", 5, 0, 3, 1e-35, Duration::from_secs(180));
}

#[test]
fn criterion_12_reg_theorem() {
    pinned(12, "reg_theorem", 5, 0, 0, 1e-40, Duration::from_secs(60));
}

#[test]
fn criterion_13_lemma_shift() {
    pinned(13, "lemma_shift", 3, 2, 0, 1e-30, Duration::from_secs(180));
}

#[test]
fn criterion_14_symbolic_factorizations() {
    for name in ["symbolic_prop31", "symbolic_lemma32"] {
        let r = pinned(14, name, 6, 0, 4, 0.0, Duration::from_secs(30));
        assert!(r.cases.iter().all(|c| c.residual == "0"));
    }
}

#[test]
fn criterion_15_spot_values() {
    let start = Instant::now();
    let ctx = NumContext::new(60).unwrap();
    let bits = ctx.prec();
    let pi = ctx.pi();
    let zeta2 = Float::with_val(bits, &pi * &pi) / 6u32;
    let idx = |s: &str| s.parse::<Index>().unwrap();
    let word = |s: &str| s.parse::<Word>().unwrap();
    let cases = [
        ("zeta_RS(1) = -pi*i", zrs_index(&idx("(1)"), &ctx).unwrap(), BigComplex::new(Float::new(bits), -pi.clone())),
        ("zeta_RS(2) = 2 zeta(2)", zrs_index(&idx("(2)"), &ctx).unwrap(), BigComplex::from_real(zeta2 * 2u32)),
        ("Z_RS(y) = 1", zrs_word(&word("y"), &ctx).unwrap(), BigComplex::one(bits)),
        ("Z_RS(x) = 0", zrs_word(&word("x"), &ctx).unwrap(), BigComplex::zero(bits)),
    ];
    let mut all = true;
    for (what, got, want) in &cases {
        let d = got.dist(want);
        let pass = d < 1e-40;
        all &= pass;
        line(15, what, pass, format!("residual {}", d.to_string_radix(10, Some(6))));
    }
    assert!(all);
    assert!(start.elapsed() < Duration::from_secs(5));
}

#[test]
fn full_run_all_under_thirty_minutes() {
    let start = Instant::now();
    let reports = run_all(&Overrides::default()).unwrap();
    let elapsed = start.elapsed();
    let failed: Vec<&str> = reports.iter().filter(|r| !r.pass).map(|r| r.check.as_str()).collect();
    line("all", "check all", failed.is_empty(), format!("{} checks, {elapsed:?}, failed {failed:?}", reports.len()));
    assert_eq!(reports.len(), 17);
    assert!(failed.is_empty());
    assert!(elapsed < Duration::from_secs(1800));
}
