//! The `ncmotives` command line.
//!
//! Exit codes: 0 all checks pass, 1 some check fails, 2 malformed input,
//! 3 unsupported input (an oriented cycle), 4 resolution cap exceeded.

use std::io::Write;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::bimodule_algebra;
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::hochschild::{bar_oracle, hochschild, BarKind};
use crate::invariants::{check_smooth, euler_matrix, kernel_left, kernel_right};
use crate::json::{read_algebra, read_document, AlgebraSpec, CoefficientSpec, Scenario};
use crate::linalg::{canonical_basis, vector_to_strings, Matrix, Vector};
use crate::motives::{build_hom_model, chi_hom, compose, dualize, intersection_number, trace, verify_equivalence, Correspondence, NCMotive};
use crate::random::{random_correspondence, rng, Shape};
use crate::report::{Check, Report};
use crate::resolution::{simple_resolutions, DEFAULT_CAP};
use crate::suite;

#[derive(Parser, Debug)]
#[command(name = "ncmotives", version, about = "Euler forms, Hochschild homology and numerical equivalence of noncommutative motives")]
#[command(after_help = "Paths compose left to right: for an arrow a: i -> j, e_i * a * e_j = a. Vertices are numbered from 0.")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Maximum resolution length.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Highest Hochschild degree compared against the bar complex.
    #[arg(long, global = true)]
    bar_depth: Option<usize>,
    /// Random samples (pairs, or compositions per kernel vector).
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Record wall-clock time in the report (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Euler form on the simple modules, with kernels.
    EulerMatrix { algebra: String },
    /// Serre duality on simple modules and random complexes.
    SerreCheck { algebra: String },
    /// Resolve the diagonal bimodule within the cap.
    SmoothCheck { algebra: String },
    /// Hochschild homology with coefficients (the diagonal by default).
    Hochschild {
        algebra: String,
        #[arg(long)]
        coefficients: Option<String>,
        /// Compare degrees 0..=N with the bar complex.
        #[arg(long)]
        bar_check: Option<usize>,
        #[arg(long, value_enum, default_value_t = Bar::Reduced)]
        bar_kind: Bar,
    },
    /// Intersection numbers of x: a -> b and y: b -> a, both ways round.
    Intersect { scenario: String },
    /// Euler form of parallel x, y: a -> b against traces and intersections.
    Trace { scenario: String },
    /// Ker(chi) against the numerical kernel on Hom(a, b).
    Verify { scenario: String },
    /// Run every built-in check.
    Corpus,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Bar {
    Reduced,
    Full,
}

impl From<Bar> for BarKind {
    fn from(b: Bar) -> Self {
        match b {
            Bar::Reduced => BarKind::Reduced,
            Bar::Full => BarKind::Full,
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CyclicQuiver => 3,
        Error::CapExceeded { .. } => 4,
        _ => 2,
    }
}

struct Ctx {
    cap: usize,
    seed: u64,
    bar_depth: usize,
    samples: Option<usize>,
}

/// Parses `argv` (program name first), runs the command and writes the report.
pub fn run_with(argv: impl IntoIterator<Item = String>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let ctx = Ctx { cap: cli.cap.unwrap_or(DEFAULT_CAP), seed: cli.seed, bar_depth: cli.bar_depth.unwrap_or(4), samples: cli.samples };
    let name = command_name(&cli.command);
    let start = Instant::now();
    let (mut report, code) = match dispatch(&cli.command, &ctx) {
        Ok((report, forced)) => {
            let code = forced.unwrap_or(if report.verdict { 0 } else { 1 });
            (report, code)
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            let mut r = Report::new(name);
            r.verdict = false;
            r.insert("error", e.to_string());
            r.insert("exit_code", exit_code(&e));
            let code = exit_code(&e);
            (r, code)
        }
    };
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                let _ = writeln!(stderr, "error: cannot write {path}: {e}");
                return 2;
            }
            let _ = write!(stdout, "{}", summary(&report));
        }
        None => {
            let _ = write!(stdout, "{text}");
            let _ = write!(stderr, "{}", summary(&report));
        }
    }
    code
}

/// [`run_with`] on the process streams.
pub fn run(argv: impl IntoIterator<Item = String>) -> i32 {
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

/// Per-check lines, or for the corpus a table of sections and the failures.
fn summary(r: &Report) -> String {
    let Some(serde_json::Value::Array(sections)) = r.data.get("sections") else {
        return r.summary();
    };
    let mut out = String::new();
    for s in sections {
        let (checks, passed) = (s["checks"].as_u64().unwrap_or(0), s["passed"].as_u64().unwrap_or(0));
        let mark = if checks == passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("{mark} {:<24} {passed}/{checks}\n", s["name"].as_str().unwrap_or("")));
    }
    for c in r.failed() {
        out.push_str(&format!("  failed: {} [{}]\n", c.name, c.anchor));
    }
    out.push_str(&format!("{}: {}\n", r.command, if r.verdict { "PASS" } else { "FAIL" }));
    out
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::EulerMatrix { .. } => "euler-matrix",
        Command::SerreCheck { .. } => "serre-check",
        Command::SmoothCheck { .. } => "smooth-check",
        Command::Hochschild { .. } => "hochschild",
        Command::Intersect { .. } => "intersect",
        Command::Trace { .. } => "trace",
        Command::Verify { .. } => "verify",
        Command::Corpus => "corpus",
    }
}

/// The report, and an exit code overriding the verdict when set.
fn dispatch(c: &Command, ctx: &Ctx) -> Result<(Report, Option<i32>)> {
    let mut r = Report::new(command_name(c));
    let mut forced = None;
    match c {
        Command::EulerMatrix { algebra } => euler_command(&mut r, algebra, ctx)?,
        Command::SerreCheck { algebra } => serre_command(&mut r, algebra, ctx)?,
        Command::SmoothCheck { algebra } => forced = smooth_command(&mut r, algebra, ctx)?,
        Command::Hochschild { algebra, coefficients, bar_check, bar_kind } => {
            hochschild_command(&mut r, algebra, coefficients.as_deref(), *bar_check, (*bar_kind).into(), ctx)?
        }
        Command::Intersect { scenario } => intersect_command(&mut r, scenario, ctx)?,
        Command::Trace { scenario } => trace_command(&mut r, scenario, ctx)?,
        Command::Verify { scenario } => verify_command(&mut r, scenario, ctx)?,
        Command::Corpus => corpus_command(&mut r, ctx)?,
    }
    Ok((r, forced))
}

fn int_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.to_string_rows()
}

fn span(vs: &[Vector], ambient: usize) -> Vec<Vec<String>> {
    canonical_basis(vs, ambient).iter().map(|v| vector_to_strings(v)).collect()
}

fn quiver_of(spec: &AlgebraSpec) -> Option<crate::algebra::Quiver> {
    match spec {
        AlgebraSpec::Quiver(q) | AlgebraSpec::Wrapped { quiver: q } => Some(q.clone()),
        AlgebraSpec::Name(n) | AlgebraSpec::Corpus { corpus: n } => crate::corpus::algebra(n).and_then(|c| c.quiver.clone()),
        _ => None,
    }
}

fn euler_command(r: &mut Report, path: &str, ctx: &Ctx) -> Result<()> {
    let (spec, a) = read_algebra(path)?;
    let name = spec.display_name()?;
    let g = euler_matrix(&a, ctx.cap)?;
    let m = &g.matrix;
    let n = m.rows();
    let det = m.determinant()?;
    let (left, right) = (kernel_left(m), kernel_right(m));
    r.insert("algebra", &name);
    r.insert("basis", &g.basis);
    r.insert("matrix", crate::json::matrix_to_json(m));
    r.insert("determinant", det.to_string());
    r.insert("kernels", serde_json::json!({ "left": span(&left, n), "right": span(&right, n) }));
    let mut anchors = Vec::new();
    if let Some(q) = quiver_of(&spec) {
        r.push(Check::new(
            format!("Euler matrix of {name} equals the combinatorial form"),
            "chi(S_i,S_j) = <e_i,e_j>_Q",
            &serde_json::to_string(&q)?,
            format!("{:?}", int_rows(&q.euler_form())),
            format!("{:?}", int_rows(m)),
        ));
        anchors.push("chi(S_i,S_j) = <e_i,e_j>_Q");
    }
    r.push(Check::verdict(
        format!("Euler matrix of {name} is unimodular"),
        "det chi = ±1",
        &name,
        "±1",
        det.to_string(),
        crate::linalg::abs(&det) == crate::linalg::one(),
    ));
    r.push(Check::new(
        format!("left and right kernels of the Euler matrix of {name}"),
        "Ker_L(chi) = Ker_R(chi)",
        &name,
        format!("{:?}", span(&left, n)),
        format!("{:?}", span(&right, n)),
    ));
    anchors.extend(["det chi = ±1", "Ker_L(chi) = Ker_R(chi)"]);
    r.insert("identities_checked", anchors);
    Ok(())
}

fn serre_command(r: &mut Report, path: &str, ctx: &Ctx) -> Result<()> {
    let (spec, a) = read_algebra(path)?;
    let name = spec.display_name()?;
    let simples = simple_resolutions(&a, ctx.cap)?;
    let mut pairs = Vec::new();
    for m in simples.iter() {
        for n in simples.iter() {
            pairs.push(suite::ObjectPair { algebra: name.clone(), m: m.clone(), n: n.clone() });
        }
    }
    let random = ctx.samples.unwrap_or(10);
    pairs.extend(suite::object_pairs_over(&name, &a, ctx.seed, random));
    r.insert("algebra", &name);
    r.insert("simple_pairs", simples.len() * simples.len());
    r.insert("random_pairs", random);
    r.extend(suite::serre_degreewise(&pairs, ctx.cap)?);
    r.extend(suite::serre_euler(&pairs, ctx.cap)?);
    r.insert("identities_checked", ["Hom(M,N[i]) = Hom(N,S(M)[-i])*", "chi(M,N) = chi(N,S(M))", "chi(M,S(N)) = chi(N,M)"]);
    Ok(())
}

fn smooth_command(r: &mut Report, path: &str, ctx: &Ctx) -> Result<Option<i32>> {
    let (spec, a) = read_algebra(path)?;
    let name = spec.display_name()?;
    let s = check_smooth(&a, ctx.cap)?;
    r.insert("algebra", &name);
    r.insert("cap", ctx.cap);
    r.insert("smooth", s.smooth);
    r.insert("proper", crate::invariants::check_proper(&a));
    r.insert("resolution_length", s.length);
    if let Some(p) = &s.resolution {
        let ranks: Vec<(i64, usize)> = p.degrees().map(|n| (n, p.summands(n).len())).collect();
        r.insert("resolution_ranks", ranks);
    }
    r.push(Check::new(
        format!("diagonal bimodule of {name} has a projective resolution within {} steps", ctx.cap),
        "A is smooth",
        &name,
        true,
        s.smooth,
    ));
    r.insert("identities_checked", ["A is smooth"]);
    Ok((!s.smooth).then_some(4))
}

fn hochschild_command(r: &mut Report, path: &str, coefficients: Option<&str>, bar_check: Option<usize>, kind: BarKind, ctx: &Ctx) -> Result<()> {
    let (spec, a) = read_algebra(path)?;
    let name = spec.display_name()?;
    let w = match coefficients {
        Some(p) => read_document::<CoefficientSpec>(p)?.load(&a)?,
        None => crate::module::diagonal_bimodule(&bimodule_algebra(&a, &a))?,
    };
    let profile = hochschild(&a, &Complex::concentrated(w.clone(), 0), ctx.cap)?;
    r.insert("algebra", &name);
    r.insert("coefficients", coefficients.unwrap_or("diagonal"));
    r.insert("profile", &profile);
    r.insert("euler", profile.euler());
    if let Some(depth) = bar_check {
        let bar = bar_oracle(&a, &w, depth, kind)?;
        r.insert("bar", serde_json::json!({ "kind": kind, "dims": bar.dims }));
        r.push(Check::new(
            format!("HH({name}) in degrees 0..={depth} against the bar complex"),
            "HH_n(A,W) = Tor^{A^e}_n(A,W)",
            &format!("{name}|{}", coefficients.unwrap_or("diagonal")),
            format!("{:?}", bar.dims),
            format!("{:?}", profile.up_to(depth)),
        ));
    }
    Ok(())
}

fn load_scenario(path: &str, ctx: &Ctx) -> Result<(Scenario, usize, Arc<NCMotive>, Arc<NCMotive>)> {
    let sc: Scenario = read_document(path)?;
    let cap = sc.options.cap.unwrap_or(ctx.cap);
    let (s, t) = sc.motives(cap)?;
    Ok((sc, cap, s, t))
}

fn seed_of(sc: &Scenario, ctx: &Ctx) -> u64 {
    sc.options.seed.unwrap_or(ctx.seed)
}

fn correspondence(
    spec: Option<&crate::json::CorrespondenceSpec>,
    s: &Arc<NCMotive>,
    t: &Arc<NCMotive>,
    cap: usize,
    r: &mut rand_chacha::ChaCha8Rng,
) -> Result<Correspondence> {
    let given = match spec {
        Some(x) => x.load(s, t, cap)?,
        None => None,
    };
    Ok(given.unwrap_or_else(|| random_correspondence(s, t, Shape::default(), r)))
}

#[derive(Serialize)]
struct CorrespondenceInfo {
    source: String,
    target: String,
    class: Vec<String>,
    terms: usize,
}

fn info(x: &Correspondence) -> CorrespondenceInfo {
    CorrespondenceInfo { source: x.source().name().into(), target: x.target().name().into(), class: vector_to_strings(&x.class()), terms: x.terms().len() }
}

fn scenario_name(sc: &Scenario, s: &NCMotive, t: &NCMotive) -> String {
    sc.name.clone().unwrap_or_else(|| format!("{} -> {}", s.name(), t.name()))
}

fn intersect_command(r: &mut Report, path: &str, ctx: &Ctx) -> Result<()> {
    let (sc, cap, s, t) = load_scenario(path, ctx)?;
    let mut g = rng(seed_of(&sc, ctx));
    let x = correspondence(sc.x.as_ref(), &s, &t, cap, &mut g)?;
    let y = correspondence(sc.y.as_ref(), &t, &s, cap, &mut g)?;
    let name = scenario_name(&sc, &s, &t);
    let xy = intersection_number(&x, &y, cap)?;
    let yx = intersection_number(&y, &x, cap)?;
    r.insert("scenario", &name);
    r.insert("x", info(&x));
    r.insert("y", info(&y));
    r.insert("x_dot_y", xy.to_string());
    r.insert("y_dot_x", yx.to_string());
    r.push(Check::new(format!("intersection symmetry on {name}"), "<X·Y> = <Y·X>", &name, &xy, &yx));
    r.insert("identities_checked", ["<X·Y> = <Y·X>"]);
    Ok(())
}

fn trace_command(r: &mut Report, path: &str, ctx: &Ctx) -> Result<()> {
    let (sc, cap, s, t) = load_scenario(path, ctx)?;
    let mut g = rng(seed_of(&sc, ctx));
    let x = correspondence(sc.x.as_ref(), &s, &t, cap, &mut g)?;
    let y = correspondence(sc.y.as_ref(), &s, &t, cap, &mut g)?;
    let name = scenario_name(&sc, &s, &t);
    let dx = dualize(&x)?;
    let chi = chi_hom(&x, &y)?;
    let tr = trace(&compose(&dx, &y)?, cap)?;
    let int = intersection_number(&dx, &y, cap)?;
    r.insert("scenario", &name);
    r.insert("x", info(&x));
    r.insert("y", info(&y));
    r.insert("chi", chi.to_string());
    r.insert("trace_of_y_then_dual_x", tr.to_string());
    r.insert("dual_x_dot_y", int.to_string());
    if crate::motives::same_motive(&s, &t) {
        r.insert("trace_x", trace(&x, cap)?.to_string());
    }
    r.push(Check::new(format!("Euler form as a trace on {name}"), "chi(X,Y) = trace[Y ⊗_B D(X)]", &name, &chi, &tr));
    r.push(Check::new(format!("Euler form as intersection with the dual on {name}"), "chi(X,Y) = <D(X)·Y>", &name, &chi, &int));
    r.insert("identities_checked", ["chi(X,Y) = trace[Y ⊗_B D(X)]", "chi(X,Y) = <D(X)·Y>"]);
    Ok(())
}

fn verify_command(r: &mut Report, path: &str, ctx: &Ctx) -> Result<()> {
    let (sc, cap, s, t) = load_scenario(path, ctx)?;
    let name = scenario_name(&sc, &s, &t);
    let model = build_hom_model(&s, &t, cap)?;
    let report = verify_equivalence(&model);
    r.insert("scenario", &name);
    r.insert("chi_kernel_dimension", report.chi_kernel.len());
    r.insert("numerical_kernel_dimension", report.numerical_kernel.len());
    r.insert("verdict", &report.statement);
    r.extend(report.checks.iter().cloned());
    let results = [suite::ModelResult { model, report }];
    let samples = sc.options.samples.or(ctx.samples).unwrap_or(10);
    let (ideal, vectors) = suite::ideal_stability(&results, samples, seed_of(&sc, ctx), cap)?;
    r.insert("kernel_vectors_sampled", vectors);
    r.extend(ideal);
    r.insert("equivalence", &results[0].report);
    Ok(())
}

#[derive(Serialize)]
struct Section {
    name: &'static str,
    checks: usize,
    passed: usize,
}

fn corpus_command(r: &mut Report, ctx: &Ctx) -> Result<()> {
    let cfg = suite::Config { cap: ctx.cap, seed: ctx.seed, bar_depth: ctx.bar_depth, pairs: 50, samples: ctx.samples.unwrap_or(10) };
    let mut sections = Vec::new();
    let mut add = |r: &mut Report, name: &'static str, checks: Vec<Check>| {
        sections.push(Section { name, checks: checks.len(), passed: checks.iter().filter(|c| c.pass).count() });
        r.extend(checks);
    };
    add(r, "euler-oracle", suite::euler_oracle(cfg.cap)?);
    let objects = suite::object_pairs(cfg.seed, cfg.pairs);
    add(r, "serre-degreewise", suite::serre_degreewise(&objects, cfg.cap)?);
    add(r, "serre-euler", suite::serre_euler(&objects, cfg.cap)?);
    let (kernels, restricted) = suite::kernel_sweep(cfg.cap)?;
    add(r, "kernels", kernels);
    add(r, "hochschild-bar", suite::hochschild_sweep(cfg.bar_depth, cfg.cap)?);
    let composable = suite::correspondence_pairs(cfg.seed, cfg.pairs, true, cfg.cap)?;
    add(r, "intersection-symmetry", suite::symmetry(&composable, cfg.cap)?);
    let parallel = suite::correspondence_pairs(cfg.seed, cfg.pairs, false, cfg.cap)?;
    add(r, "trace-formula", suite::trace_formula(&parallel, cfg.cap)?);
    add(r, "dual-intersection", suite::dual_intersection(&parallel, cfg.cap)?);
    let mut results = suite::model_results(cfg.cap)?;
    results.sort_by(|a, b| (&a.report.source, &a.report.target).cmp(&(&b.report.source, &b.report.target)));
    add(r, "model-verdicts", suite::verdict_checks(&results));
    add(r, "model-identities", results.iter().flat_map(|m| m.report.checks.clone()).collect());
    let (ideal, vectors) = suite::ideal_stability(&results, cfg.samples, cfg.seed, cfg.cap)?;
    add(r, "ideal-stability", ideal);
    let models: Vec<serde_json::Value> = results
        .iter()
        .map(|m| {
            serde_json::json!({
                "source": m.report.source,
                "target": m.report.target,
                "dimension": m.report.dimension,
                "statement": m.report.statement,
                "pass": m.report.pass(),
            })
        })
        .collect();
    r.insert("config", &cfg);
    r.insert("restricted_models", restricted);
    r.insert("kernel_vectors_sampled", vectors);
    r.insert("models", models);
    r.insert("sections", &sections);
    Ok(())
}
