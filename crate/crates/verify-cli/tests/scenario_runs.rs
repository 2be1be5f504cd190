//! Scenario execution semantics: report content, exit codes, error
//! positions, and the JSON schema.

use std::process::Command;

use homalg::error::EngineError;
use verify_cli::report::{FieldChoice, RunConfig};
use verify_cli::run_scenario_source;

fn cfg() -> RunConfig {
    RunConfig::default()
}

#[test]
fn empty_scenario_passes() {
    let report = run_scenario_source("empty", "", &cfg()).unwrap();
    assert!(report.passed());
    assert!(report.checks.is_empty());
}

#[test]
fn failing_assertion_reports_computed_value() {
    let src = r#"
        ring R = quotient(x, y ; grevlex ; ideal())
        ideal z = () in R
        module F = cyclic(z)
        assert pd(F) == finite(1)
    "#;
    let report = run_scenario_source("pd-free", src, &cfg()).unwrap();
    assert!(!report.passed());
    assert_eq!(report.checks.len(), 1);
    assert_eq!(report.checks[0].status, "fail");
    assert_eq!(report.checks[0].computed, "finite(0)");
    assert_eq!(report.checks[0].expected, "finite(1)");
}

#[test]
fn parse_error_carries_position() {
    let err = run_scenario_source("bad", "ring R = quotient(x,, y ; grevlex ; ideal())", &cfg())
        .unwrap_err();
    assert!(matches!(err, EngineError::Parse { line: 1, .. }));
}

#[test]
fn evaluation_error_surfaces_structured() {
    let src = "assert dim(NOPE) == 1";
    let err = run_scenario_source("oops", src, &cfg()).unwrap_err();
    assert_eq!(err, EngineError::Undefined("NOPE".into()));
}

#[test]
fn field_statement_overrides_config() {
    let src = "field qq\nring R = quotient(x ; grevlex ; ideal())\nassert dim(R) == 1";
    let report = run_scenario_source("field-override", src, &cfg()).unwrap();
    assert_eq!(report.config.field, "qq");
    assert!(report.passed());
}

#[test]
fn json_schema_field_names() {
    let src = "ring R = quotient(x, y ; grevlex ; ideal(x*y))\nassert dim(R) == 1";
    let report = run_scenario_source("schema", src, &cfg()).unwrap();
    let raw = report.to_json();
    // the emitted object carries exactly the specified field names, in order
    let mut last = 0usize;
    for key in [
        "\"scenario\"",
        "\"config\"",
        "\"field\"",
        "\"maxDegree\"",
        "\"maxRes\"",
        "\"seed\"",
        "\"checks\"",
        "\"name\"",
        "\"kind\"",
        "\"expected\"",
        "\"computed\"",
        "\"status\"",
        "\"millis\"",
        "\"verdict\"",
    ] {
        let at = raw.find(key).unwrap_or_else(|| panic!("missing {}", key));
        assert!(at >= last, "{} out of order", key);
        last = at;
    }
    let json: serde_json::Value = serde_json::from_str(&raw).unwrap();
    assert_eq!(json["verdict"], "pass");
    assert_eq!(json["config"]["field"], "gf32003");
    assert_eq!(json["config"]["maxRes"], 8);
}

#[test]
fn cokernel_twist_inference() {
    // connected degree graph: twists inferred with row 0 anchored at zero
    let src = r#"
        ring R = quotient(x, y ; grevlex ; ideal())
        module M = cokernel(R ; [[x, y^2], [1, y]])
        assert mu(M) == 1
    "#;
    let report = run_scenario_source("infer", src, &cfg()).unwrap();
    assert!(report.passed(), "{}", report.render_text());
    // ambiguous: two disconnected blocks
    let src_ambiguous = r#"
        ring R = quotient(x, y, z, w ; grevlex ; ideal())
        module M = cokernel(R ; [[x, 0], [0, y^2]])
        assert mu(M) == 2
    "#;
    let err = run_scenario_source("ambiguous", src_ambiguous, &cfg()).unwrap_err();
    assert!(matches!(err, EngineError::AmbiguousTwists(_)));
    // the same matrix accepted with explicit twists
    let src_explicit = r#"
        ring R = quotient(x, y, z, w ; grevlex ; ideal())
        module M = cokernel(R ; [[x, 0], [0, y^2]] ; twists [0, 0])
        assert mu(M) == 2
        assert hf(M, 0) == 2
    "#;
    let report = run_scenario_source("explicit", src_explicit, &cfg()).unwrap();
    assert!(report.passed(), "{}", report.render_text());
}

#[test]
fn restrict_and_nested_module_expressions() {
    let src = r#"
        ring R = quotient(x, y, z ; grevlex ; ideal(x*y))
        ideal q = (x, z) in R
        module Q = cyclic(q)
        module N = transpose(Q)
        assert is_zero(tor(Q, N, 1)) == false
        assert ext(N, R, 0) != 0
        assert mu(N) == 2
    "#;
    let report = run_scenario_source("nested", src, &cfg()).unwrap();
    assert!(report.passed(), "{}", report.render_text());
}

#[test]
fn cli_exit_codes_and_formats() {
    let bin = env!("CARGO_BIN_EXE_verify");
    let dir = tempdir();
    // passing scenario -> exit 0
    let pass_file = dir.join("pass.scn");
    std::fs::write(
        &pass_file,
        "ring R = quotient(x, y ; grevlex ; ideal(x*y))\nassert dim(R) == 1\n",
    )
    .unwrap();
    let out = Command::new(bin).arg("run").arg(&pass_file).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{:?}", out);
    // failing check -> exit 1
    let fail_file = dir.join("fail.scn");
    std::fs::write(
        &fail_file,
        "ring R = quotient(x, y ; grevlex ; ideal(x*y))\nassert dim(R) == 2\n",
    )
    .unwrap();
    let out = Command::new(bin).arg("run").arg(&fail_file).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    // parse error -> exit 2
    let broken_file = dir.join("broken.scn");
    std::fs::write(&broken_file, "ring = nonsense\n").unwrap();
    let out = Command::new(bin).arg("run").arg(&broken_file).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // JSON report to a file
    let json_path = dir.join("report.json");
    let out = Command::new(bin)
        .args(["run"])
        .arg(&pass_file)
        .args(["--report", "json", "--out"])
        .arg(&json_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(json["verdict"], "pass");
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("verify-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn report_determinism_modulo_timing() {
    let cfgv = cfg();
    let a = run_scenario_source("det", verify_cli::builtin::VASCONCELOS_SRC, &cfgv).unwrap();
    let b = run_scenario_source("det", verify_cli::builtin::VASCONCELOS_SRC, &cfgv).unwrap();
    assert_eq!(a.to_json_without_timing(), b.to_json_without_timing());
}

#[test]
fn uncertifiable_tor_vanishing_is_advisory() {
    // neither R/(x) nor R/(y) has finite projective dimension within the
    // bound, so Tor-independence cannot be certified either way: the check
    // lands as advisory and does not decide the verdict
    let src = r#"
        ring R = quotient(x, y, z, w ; grevlex ; ideal(x*y))
        ideal a = (x) in R
        ideal b = (y) in R
        module M = cyclic(a)
        module N = cyclic(b)
        assert tor_independent(M, N) == true
        assert dim(R) == 3
    "#;
    let report = run_scenario_source("advisory", src, &cfg()).unwrap();
    assert!(report.passed(), "advisory checks never fail a run");
    let adv = &report.checks[0];
    assert_eq!(adv.status, "advisory");
    assert!(adv.computed.contains("up to the bound"));
    assert_eq!(report.checks[1].status, "pass");
    // the advisory line is rendered in its own section
    let text = report.render_text();
    assert!(text.contains("[ADVISORY]"));
}

#[test]
fn gorenstein_gate_violation_is_an_error() {
    let src = r#"
        ring R = quotient(x, y, z ; grevlex ; ideal(x^2, x*y, y^2))
        ideal xi = (x) in R
        module M = cyclic(xi)
        assert serre(M, 1) == true
    "#;
    let err = run_scenario_source("gate", src, &cfg()).unwrap_err();
    assert!(matches!(err, EngineError::UnsupportedRing(_)));
}

#[test]
fn qq_field_runs() {
    let src = r#"
        ring R = quotient(x, y, z, w ; grevlex ; ideal(x*y))
        ideal p = (y, z, w) in R
        module P = cyclic(p)
        module N = transpose(P)
        assert rank(N) == 2
    "#;
    let mut c = cfg();
    c.field = FieldChoice::Qq;
    let report = run_scenario_source("qq", src, &c).unwrap();
    assert!(report.passed());
    assert_eq!(report.config.field, "qq");
}
