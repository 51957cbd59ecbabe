use std::path::PathBuf;
use std::process::Command;

use ncmotives::cli::run_with;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).to_string_lossy().into_owned()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", self.stdout))
    }
}

fn run(args: &[&str]) -> Run {
    let argv = std::iter::once("ncmotives".to_string()).chain(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(argv, &mut out, &mut err);
    Run { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

#[test]
fn euler_matrix_reports_integers() {
    let r = run(&["euler-matrix", &data("a2.json")]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = r.json();
    assert_eq!(v["format"], 1);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["data"]["matrix"], serde_json::json!([[1, -1], [0, 1]]));
    assert!(r.stderr.contains("checks passed"));
}

#[test]
fn euler_matrix_of_a_tensor_product() {
    let r = run(&["euler-matrix", &data("a2_tensor_kronecker.json")]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["data"]["matrix"], serde_json::json!([[1, -2, -1, 2], [0, 1, 0, -1], [0, 0, 1, -2], [0, 0, 0, 1]]));
}

#[test]
fn built_in_algebras_by_name_match_their_files() {
    for (name, file) in [("A3", "a3.json"), ("Kronecker", "kronecker.json")] {
        let by_file = run(&["euler-matrix", &data(file)]).json();
        let spec = tempfile::NamedTempFile::new().unwrap();
        std::fs::write(spec.path(), format!("{{\"format\": 1, \"corpus\": \"{name}\"}}")).unwrap();
        let by_name = run(&["euler-matrix", spec.path().to_str().unwrap()]).json();
        assert_eq!(by_file["data"]["matrix"], by_name["data"]["matrix"], "{name}");
    }
}

#[test]
fn cyclic_quiver_exits_3() {
    let r = run(&["euler-matrix", &data("loop.json")]);
    assert_eq!(r.code, 3);
    assert_eq!(r.json()["data"]["exit_code"], 3);
}

#[test]
fn exceeded_cap_exits_4() {
    assert_eq!(run(&["--cap", "0", "smooth-check", &data("a2.json")]).code, 4);
    assert_eq!(run(&["smooth-check", &data("d4.json")]).code, 0);
}

#[test]
fn malformed_input_exits_2() {
    let bad = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(bad.path(), "{").unwrap();
    assert_eq!(run(&["euler-matrix", bad.path().to_str().unwrap()]).code, 2);
    assert_eq!(run(&["euler-matrix", "/nonexistent/quiver.json"]).code, 2);
    std::fs::write(bad.path(), r#"{"format": 99, "vertices": 1, "arrows": []}"#).unwrap();
    assert_eq!(run(&["euler-matrix", bad.path().to_str().unwrap()]).code, 2);
    assert_eq!(run(&["no-such-command"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn hochschild_with_dual_coefficients() {
    let r = run(&["hochschild", &data("a2.json"), "--coefficients", &data("a2_dual.json"), "--bar-check", "3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = r.json();
    assert_eq!(v["data"]["profile"]["dims"], serde_json::json!([1, 0]));
    assert_eq!(v["data"]["euler"], 1);
}

#[test]
fn serre_check_passes_on_the_star() {
    let r = run(&["--samples", "4", "serre-check", &data("d4.json")]);
    assert_eq!(r.code, 0, "{}", r.stdout);
}

#[test]
fn verify_exit_codes_follow_the_verdict() {
    assert_eq!(run(&["verify", &data("q_identity.json")]).code, 0);
    let iso = run(&["verify", &data("kronecker_iso.json")]);
    assert_eq!(iso.code, 1);
    assert_eq!(iso.json()["verdict"], false);
}

#[test]
fn intersect_and_trace_on_a_scenario() {
    for cmd in ["intersect", "trace"] {
        let r = run(&[cmd, &data("a2_to_kronecker.json")]);
        assert_eq!(r.code, 0, "{cmd}: {}", r.stdout);
    }
}

#[test]
fn reports_are_deterministic() {
    let args = ["--seed", "7", "trace", &data("a2_to_kronecker.json")];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    let other = run(&["--seed", "8", "trace", &data("a2_to_kronecker.json")]);
    assert_eq!(other.code, first.code);
}

#[test]
fn out_flag_writes_the_report_and_prints_the_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let r = run(&["--out", out.to_str().unwrap(), "euler-matrix", &data("kronecker.json")]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("PASS"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["command"], "euler-matrix");
    assert_eq!(v["data"]["determinant"], "1");
}

#[test]
fn binary_exit_status_matches() {
    let bin = env!("CARGO_BIN_EXE_ncmotives");
    let status = |args: &[String]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["euler-matrix".into(), data("a3.json")]), Some(0));
    assert_eq!(status(&["euler-matrix".into(), data("loop.json")]), Some(3));
}
