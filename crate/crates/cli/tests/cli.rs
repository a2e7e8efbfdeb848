use std::path::Path;
use std::process::{Command, Output};

use mzvkit::verify::{run_check, CheckSpec, Report};

fn mzvkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mzvkit")).args(args).env_remove("MZVKIT_CACHE").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn eval_zeta_two() {
    let o = mzvkit(&["eval", "zeta(2)", "--prec", "30"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "1.64493406684822643647241516665");
}

#[test]
fn eval_json() {
    let o = mzvkit(&["--json", "eval", "zeta(1,2)", "--prec", "25"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["expr"], "zeta(1,2)");
    assert_eq!(v["kind"], "number");
    // ζ(1,2) = ζ(3)
    assert!(v["value"].as_str().unwrap().starts_with("1.20205690315959428539973"));
}

#[test]
fn duals() {
    let o = mzvkit(&["dual", "(1,1,2,3,1,2)"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "(3,1,2,4)");
    assert_eq!(stdout(&mzvkit(&["eval", "dual(1,1,2)"])).trim(), "(4)");
    assert_eq!(stdout(&mzvkit(&["hdual", "(1,2)"])).trim(), "(2,1)");
    assert_eq!(code(&mzvkit(&["dual", "(2,1)"])), 2);
}

#[test]
fn zrs_spot_values() {
    let o = mzvkit(&["zrs", "(1)", "--prec", "20"]);
    assert_eq!(stdout(&o).trim(), "0 - 3.1415926535897932385*i");
    let o = mzvkit(&["zrs", "()", "--prec", "20"]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn parse_and_type_errors_exit_two() {
    let o = mzvkit(&["eval", "zeta("]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("column 6"));
    assert_eq!(code(&mzvkit(&["eval", "dual(\"yx\")"])), 2);
    assert_eq!(code(&mzvkit(&["eval", "zeta(1)"])), 2);
    assert_eq!(code(&mzvkit(&["frobnicate"])), 2);
    assert_eq!(code(&mzvkit(&["check", "nonsense"])), 2);
    assert_eq!(code(&mzvkit(&["eval", "zeta(2)", "--prec", "3"])), 2);
}

#[test]
fn table_lists_every_index() {
    let o = mzvkit(&["--json", "table", "--max-weight", "4", "--kind", "zeta", "--prec", "20"]);
    assert_eq!(code(&o), 0);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    // ∅ plus 2^{w-2} admissible indices of each weight w = 2, 3, 4
    assert_eq!(rows.len(), 1 + 1 + 2 + 4);
    let o = mzvkit(&["table", "--max-weight", "3", "--kind", "zrs", "--prec", "20"]);
    assert_eq!(stdout(&o).lines().count(), 8);
}

fn read_report(path: &Path) -> Report {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn check_writes_report_matching_library() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = mzvkit(&[
        "check", "takeyama", "--max-weight", "4", "--max-m", "3", "--prec", "50", "--tol", "1e-35", "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let report = read_report(&path);
    assert!(report.pass);
    let spec = CheckSpec { max_weight: 4, max_m: 3, precision: 50, tolerance: 1e-35, ..CheckSpec::default_for("takeyama").unwrap() };
    let direct = run_check(&spec).unwrap();
    assert_eq!(report.params, direct.params);
    assert_eq!(report.cases, direct.cases);
    assert_eq!(report.max_abs_residual, direct.max_abs_residual);
}

#[test]
fn failing_check_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = mzvkit(&["check", "ohno", "--max-weight", "5", "--max-m", "2", "--tol", "1e-200", "--report", path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let report = read_report(&path);
    assert!(!report.pass);
    assert!(!report.failures.is_empty());
}

#[test]
fn cache_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("values.json");
    let c = cache.to_str().unwrap();
    let cold = stdout(&mzvkit(&["--cache", c, "table", "--max-weight", "5", "--prec", "25"]));
    assert!(cache.exists());
    let warm = stdout(&mzvkit(&["--cache", c, "table", "--max-weight", "5", "--prec", "25"]));
    assert_eq!(cold, warm);

    let o = Command::new(env!("CARGO_BIN_EXE_mzvkit")).args(["--json", "cache", "info"]).env("MZVKIT_CACHE", c).output().unwrap();
    assert_eq!(code(&o), 0);
    let info: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(info["zeta"], 15);
    assert_eq!(code(&mzvkit(&["cache", "verify", "--cache", c])), 0);

    // A tampered value parses but no longer matches a recomputation.
    let text = std::fs::read_to_string(&cache).unwrap();
    let tampered = text.replacen("\"value\": \"1.", "\"value\": \"2.", 1);
    assert_ne!(tampered, text);
    std::fs::write(&cache, tampered).unwrap();
    assert_eq!(code(&mzvkit(&["cache", "verify", "--cache", c])), 3);

    std::fs::write(&cache, "{ not json").unwrap();
    assert_eq!(code(&mzvkit(&["cache", "info", "--cache", c])), 3);
    assert_eq!(code(&mzvkit(&["--cache", c, "eval", "zeta(2)"])), 3);
}

#[test]
fn cache_requires_path() {
    assert_eq!(code(&mzvkit(&["cache", "info"])), 2);
}

#[test]
fn series_expressions() {
    let o = mzvkit(&["eval", "zrs(rho_tilde(\"y\", 2))", "--prec", "20"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("*T"), "{text}");
    let o = mzvkit(&["eval", "trunc(sigma(\"yy\", 3), 1)"]);
    assert_eq!(stdout(&o).trim(), "(1)*yy + (T)*yxy + (T)*yyx");
}
