use mzvkit::numerics::NumContext;
use mzvkit::verify::{run_check, run_check_in, takeyama_from_main, CheckSpec, Overrides, Report, CHECK_NAMES};

fn spec(name: &str, max_weight: u32, max_m: u32, maxdeg: u32, precision: u32, tolerance: f64) -> CheckSpec {
    CheckSpec { name: name.into(), max_weight, max_m, maxdeg, precision, tolerance }
}

fn strip_timing(mut r: Report) -> Report {
    r.elapsed_ms = 0;
    r
}

#[test]
fn reports_are_deterministic() {
    for s in [spec("ohno", 4, 2, 0, 40, 1e-25), spec("phi_rs", 3, 0, 2, 40, 1e-25), spec("symbolic_lemma32", 4, 0, 2, 40, 0.0)] {
        let a = strip_timing(run_check(&s).unwrap());
        let b = strip_timing(run_check(&s).unwrap());
        assert_eq!(a, b, "{}", s.name);
    }
}

#[test]
fn takeyama_is_the_main_identity_at_zero() {
    let ctx = NumContext::new(40).unwrap();
    let direct = run_check_in(&spec("takeyama", 4, 3, 0, 40, 1e-25), &ctx).unwrap();
    assert!(direct.pass);
    let via_main = takeyama_from_main(4, 3, &ctx).unwrap();
    let names: Vec<&str> = via_main.iter().map(|(n, _)| n.as_str()).collect();
    let direct_names: Vec<&str> = direct.cases.iter().map(|c| c.case.as_str()).collect();
    assert_eq!(names, direct_names);
    for (name, r) in &via_main {
        assert!(*r < 1e-25, "{name}: {r}");
    }
}

#[test]
fn exact_checks_are_truncation_monotone() {
    for name in ["symbolic_prop31", "symbolic_lemma32"] {
        for d in 1..=3 {
            let r = run_check(&spec(name, 4, 0, d, 40, 0.0)).unwrap();
            assert!(r.pass, "{name} at maxdeg {d}: {}", r.summary());
            assert!(r.cases.iter().all(|c| c.residual == "0"));
        }
    }
}

#[test]
fn residuals_shrink_with_precision() {
    for name in ["ohno", "takeyama", "duality_rs", "harmonic_rs", "reg_theorem", "gamma_formula", "lemma_computation"] {
        let base = CheckSpec::default_for(name).unwrap();
        let small = |p: u32| CheckSpec {
            max_weight: base.max_weight.min(4),
            max_m: base.max_m.min(2),
            maxdeg: base.maxdeg.min(3),
            precision: p,
            tolerance: 1e-25,
            ..base.clone()
        };
        let lo = run_check(&small(40)).unwrap();
        let hi = run_check(&small(60)).unwrap();
        assert!(lo.pass && hi.pass, "{name}");
        let (rl, rh) = (lo.max_residual_f64(), hi.max_residual_f64());
        assert!(rh <= rl || rh < 1e-45, "{name}: {rl} at 40 digits, {rh} at 60");
    }
}

#[test]
fn impossible_tolerance_fails_cleanly() {
    let r = run_check(&spec("ohno", 5, 2, 0, 60, 1e-200)).unwrap();
    assert!(!r.pass);
    assert!(!r.failures.is_empty());
    assert_eq!(r.failures.len(), r.cases.iter().filter(|c| !c.pass).count());
}

#[test]
fn empty_overrides_keep_defaults() {
    for name in CHECK_NAMES {
        let d = CheckSpec::default_for(name).unwrap();
        assert_eq!(Overrides::default().apply(d.clone()), d);
    }
    let o = Overrides { precision: Some(40), ..Overrides::default() };
    assert_eq!(o.apply(CheckSpec::default_for("main").unwrap()).precision, 40);
}

#[test]
fn unknown_check_is_an_error() {
    assert!(CheckSpec::default_for("nonsense").is_err());
    assert!(run_check(&spec("nonsense", 1, 0, 0, 40, 1e-10)).is_err());
    assert!(run_check(&spec("ohno", 3, 1, 0, 40, f64::NAN)).is_err());
}
