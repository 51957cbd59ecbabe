//! Acceptance criteria, one PASS/FAIL line each. Exact arithmetic throughout.
//! Runs without the libtest harness so the lines always print.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ncmotives::report::Check;
use ncmotives::suite::{self, Config};

struct Outcome {
    pass: bool,
    detail: String,
}

fn tally(checks: &[Check]) -> (usize, usize) {
    (checks.iter().filter(|c| c.pass).count(), checks.len())
}

fn failures(checks: &[Check], limit: usize) -> String {
    let failed: Vec<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    if failed.is_empty() {
        return String::new();
    }
    let shown = failed.iter().take(limit).copied().collect::<Vec<_>>().join("; ");
    let more = if failed.len() > limit { format!("; and {} more", failed.len() - limit) } else { String::new() };
    format!(" | failing: {shown}{more}")
}

fn secs(d: Duration) -> String {
    format!("{:.2} s", d.as_secs_f64())
}

fn all_pass(checks: &[Check], minimum: usize) -> bool {
    checks.len() >= minimum && checks.iter().all(|c| c.pass)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let x = f();
    (x, t.elapsed())
}

fn euler_oracle(cfg: &Config) -> Outcome {
    let (checks, took) = timed(|| suite::euler_oracle(cfg.cap).expect("euler matrices"));
    let names = ["A2", "A3", "Kronecker"];
    let covered = names.iter().all(|n| checks.iter().any(|c| c.name.contains(&format!("of {n} equals"))));
    let (ok, n) = tally(&checks);
    Outcome {
        pass: covered && all_pass(&checks, 6) && took < Duration::from_secs(5),
        detail: format!("{ok}/{n} checks (matrix and determinant per quiver), {} (limit 5 s){}", secs(took), failures(&checks, 4)),
    }
}

fn serre_degreewise(cfg: &Config, pairs: &[suite::ObjectPair]) -> Outcome {
    let (checks, took) = timed(|| suite::serre_degreewise(pairs, cfg.cap).expect("serre"));
    let (ok, n) = tally(&checks);
    Outcome {
        pass: all_pass(&checks, 50) && took < Duration::from_secs(60),
        detail: format!("{ok}/{n} random pairs, every degree, {} (limit 60 s){}", secs(took), failures(&checks, 4)),
    }
}

fn serre_euler(cfg: &Config, pairs: &[suite::ObjectPair]) -> Outcome {
    let checks = suite::serre_euler(pairs, cfg.cap).expect("serre");
    let (ok, n) = tally(&checks);
    Outcome { pass: all_pass(&checks, 100), detail: format!("{ok}/{n} checks, two identities per pair{}", failures(&checks, 4)) }
}

fn kernels(cfg: &Config) -> Outcome {
    let (checks, restricted) = suite::kernel_sweep(cfg.cap).expect("kernels");
    let (ok, n) = tally(&checks);
    Outcome {
        pass: restricted >= 20 && all_pass(&checks, 20),
        detail: format!("{ok}/{n} matrices ({} corpus Euler matrices, {restricted} restricted Hom-set forms){}", n - restricted, failures(&checks, 4)),
    }
}

fn hochschild(cfg: &Config) -> Outcome {
    let (checks, took) = timed(|| suite::hochschild_sweep(cfg.bar_depth, cfg.cap).expect("hochschild"));
    let (ok, n) = tally(&checks);
    let a2 = checks.iter().any(|c| c.name == "HH(A2, A2)" && c.pass);
    Outcome {
        pass: a2 && all_pass(&checks, 1) && took < Duration::from_secs(120),
        detail: format!("{ok}/{n} (algebra, bimodule) comparisons for n <= {}, HH(A2,A2) = (2,0,0,0,0): {a2}, {} (limit 120 s){}", cfg.bar_depth, secs(took), failures(&checks, 4)),
    }
}

fn correspondences(checks: Vec<Check>, what: &str) -> Outcome {
    let (ok, n) = tally(&checks);
    Outcome { pass: all_pass(&checks, 50), detail: format!("{ok}/{n} random {what} pairs{}", failures(&checks, 4)) }
}

fn corpus_verdict() -> (Outcome, serde_json::Value) {
    let dir = tempfile::tempdir().expect("temp dir");
    let out = dir.path().join("corpus.json");
    let t = Instant::now();
    let status = Command::new(env!("CARGO_BIN_EXE_ncmotives"))
        .args(["corpus", "--out"])
        .arg(&out)
        .output()
        .expect("run the corpus command");
    let took = t.elapsed();
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).expect("corpus report")).expect("report is JSON");
    let checks: Vec<&serde_json::Value> = report["checks"].as_array().expect("checks").iter().filter(|c| c["anchor"] == "Ker(chi) = N").collect();
    let models = report["data"]["models"].as_array().expect("models").len();
    let failed: Vec<String> = checks.iter().filter(|c| c["pass"] != true).map(|c| c["name"].as_str().unwrap_or("").to_string()).collect();
    let stated = checks.iter().filter(|c| c["name"].as_str().is_some_and(|n| n.starts_with("unimodular"))).count();
    let pass = !checks.is_empty() && failed.is_empty() && took < Duration::from_secs(120);
    let detail = format!(
        "{}/{} verdict checks over {models} Hom-sets ({stated} unimodular cases stated explicitly), `corpus` exit {} in {} (limit 120 s){}",
        checks.len() - failed.len(),
        checks.len(),
        status.status.code().unwrap_or(-1),
        secs(took),
        if failed.is_empty() { String::new() } else { format!(" | failing: {}", failed.join("; ")) }
    );
    (Outcome { pass, detail }, report)
}

fn ideal(cfg: &Config) -> Outcome {
    let results = suite::model_results(cfg.cap).expect("models");
    let (checks, vectors) = suite::ideal_stability(&results, cfg.samples, cfg.seed, cfg.cap).expect("ideal");
    let (ok, n) = tally(&checks);
    Outcome {
        pass: checks.len() >= vectors * cfg.samples && checks.iter().all(|c| c.pass),
        detail: format!("{ok}/{n} compositions over {vectors} kernel vectors, {} each{}", cfg.samples, failures(&checks, 3)),
    }
}

fn main() -> ExitCode {
    let cfg = Config::default();
    let mut lines: Vec<(usize, &str, Outcome)> = Vec::new();
    let mut record = |k: usize, title: &'static str, o: Outcome| {
        println!("{} {k:>2}. {title}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        lines.push((k, title, o));
    };

    record(1, "Euler form of A2, A3, Kronecker equals the combinatorial form", euler_oracle(&cfg));
    let pairs = suite::object_pairs(cfg.seed, 60);
    record(2, "degreewise Serre duality dim H^i(M,N) = dim H^-i(N,SM)", serre_degreewise(&cfg, &pairs));
    record(3, "chi(M,N) = chi(N,SM) and chi(M,SN) = chi(N,M)", serre_euler(&cfg, &pairs));
    record(4, "left and right kernels of the Euler form agree", kernels(&cfg));
    record(5, "Hochschild homology by resolution equals the bar complex", hochschild(&cfg));
    let composable = suite::correspondence_pairs(cfg.seed, 60, true, cfg.cap).expect("pairs");
    record(6, "intersection pairing is symmetric", correspondences(suite::symmetry(&composable, cfg.cap).expect("symmetry"), "composable"));
    let parallel = suite::correspondence_pairs(cfg.seed, 60, false, cfg.cap).expect("pairs");
    record(7, "chi(X,Y) = trace[Y ⊗ D(X)] (Ext against Hochschild)", correspondences(suite::trace_formula(&parallel, cfg.cap).expect("trace"), "parallel"));
    record(8, "chi(X,Y) = <D(X)·Y>", correspondences(suite::dual_intersection(&parallel, cfg.cap).expect("dual"), "parallel"));
    let (verdict, _) = corpus_verdict();
    record(9, "Ker(chi) = numerical kernel on every corpus Hom-set", verdict);
    record(10, "kernels are stable under composition", ideal(&cfg));

    let passed = lines.iter().filter(|(_, _, o)| o.pass).count();
    println!("acceptance: {passed}/{} criteria pass", lines.len());
    if passed == lines.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
