//! Verification sweeps over the built-in corpus, shared by the `corpus`
//! command and the acceptance tests.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::complex::{CochainComplex, Complex};
use crate::corpus::{self, CorpusMotive};
use crate::error::Result;
use crate::hochschild::{bar_oracle, hochschild, BarKind};
use crate::hom::{euler_pairing, hom_perfect};
use crate::invariants::{euler_matrix, kernel_left, kernel_right, serre};
use crate::linalg::{canonical_basis, Matrix, Vector};
use crate::motives::{
    build_hom_model, chi_hom, compose, dualize, intersection_number, stable_after, stable_before, trace,
    verify_equivalence, Correspondence, EquivalenceReport, HomSpaceModel, KernelKind, NCMotive,
};
use crate::perfect::PerfectComplex;
use crate::random::{random_coords, random_correspondence, random_perfect, rng, Shape};
use crate::report::Check;
use crate::resolution::DEFAULT_CAP;

/// Sizes and seeds for the sweeps.
#[derive(Clone, Debug, Serialize)]
pub struct Config {
    pub cap: usize,
    pub seed: u64,
    pub bar_depth: usize,
    /// Random pairs for the Serre and correspondence identities.
    pub pairs: usize,
    /// Compositions per kernel vector in the ideal test.
    pub samples: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { cap: DEFAULT_CAP, seed: 0, bar_depth: 4, pairs: 50, samples: 10 }
    }
}

fn text<T: std::fmt::Debug>(x: T) -> String {
    format!("{x:?}")
}

fn matrix_text(m: &Matrix) -> String {
    text(m.to_string_rows())
}

fn span_text(vs: &[Vector], ambient: usize) -> String {
    text(canonical_basis(vs, ambient).iter().map(|v| crate::linalg::vector_to_strings(v)).collect::<Vec<_>>())
}

/// Euler matrices of the corpus quivers against `<d,e> = sum d_i e_i - sum_{i->j} d_i e_j`,
/// and their determinants.
pub fn euler_oracle(cap: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for ca in corpus::algebras() {
        let Some(q) = &ca.quiver else { continue };
        let g = euler_matrix(&ca.algebra, cap)?.matrix;
        let inputs = serde_json::to_string(q)?;
        out.push(Check::new(
            format!("Euler matrix of {} equals the combinatorial form", ca.name),
            "chi(S_i,S_j) = <e_i,e_j>_Q",
            &inputs,
            matrix_text(&q.euler_form()),
            matrix_text(&g),
        ));
        let det = g.determinant()?;
        out.push(Check::verdict(
            format!("Euler matrix of {} is unimodular", ca.name),
            "det chi = ±1",
            &inputs,
            "±1",
            det.to_string(),
            crate::linalg::abs(&det) == crate::linalg::one(),
        ));
    }
    Ok(out)
}

/// Two random perfect complexes over one corpus algebra.
#[derive(Clone, Debug)]
pub struct ObjectPair {
    pub algebra: String,
    pub m: PerfectComplex,
    pub n: PerfectComplex,
}

impl ObjectPair {
    fn label(&self, k: usize) -> String {
        format!("pair {k} over {}", self.algebra)
    }

    fn inputs(&self) -> String {
        format!("{}|{:?}|{:?}|{:?}|{:?}", self.algebra, self.m.all_summands(), self.m.lo(), self.n.all_summands(), self.n.lo())
    }
}

const OBJECT_ALGEBRAS: &[&str] = &["Q", "QxQ", "A2", "A3", "Kronecker", "A2xA2"];

/// `count` seeded pairs, cycling through the corpus algebras.
pub fn object_pairs(seed: u64, count: usize) -> Vec<ObjectPair> {
    let mut r = rng(seed);
    (0..count)
        .map(|k| {
            let name = OBJECT_ALGEBRAS[k % OBJECT_ALGEBRAS.len()];
            let a = &corpus::algebra(name).expect("corpus algebra").algebra;
            random_pair(name, a, &mut r)
        })
        .collect()
}

/// `count` seeded pairs over one algebra.
pub fn object_pairs_over(name: &str, a: &Arc<Algebra>, seed: u64, count: usize) -> Vec<ObjectPair> {
    let mut r = rng(seed);
    (0..count).map(|_| random_pair(name, a, &mut r)).collect()
}

fn random_pair(name: &str, a: &Arc<Algebra>, r: &mut rand_chacha::ChaCha8Rng) -> ObjectPair {
    let m = random_perfect(a, Shape::default(), r);
    let n = random_perfect(a, Shape::default(), r);
    ObjectPair { algebra: name.to_string(), m, n }
}

fn nonzero_dims(c: &CochainComplex, flip: bool) -> BTreeMap<i64, usize> {
    c.homology_dims().into_iter().filter(|(_, d)| *d > 0).map(|(n, d)| (if flip { -n } else { n }, d)).collect()
}

/// `dim H^i Hom(M,N) = dim H^{-i} Hom(N,S(M))` for every `i`.
pub fn serre_degreewise(pairs: &[ObjectPair], cap: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (k, p) in pairs.iter().enumerate() {
        let sm = serre(&p.m, cap)?;
        let lhs = nonzero_dims(&hom_perfect(&p.m, &p.n)?, false);
        let rhs = nonzero_dims(&hom_perfect(&p.n, &sm)?, true);
        out.push(Check::new(
            format!("degreewise Serre duality, {}", p.label(k)),
            "Hom(M,N[i]) = Hom(N,S(M)[-i])*",
            &p.inputs(),
            text(lhs),
            text(rhs),
        ));
    }
    Ok(out)
}

/// `chi(M,N) = chi(N,S(M))` and the substituted form `chi(M,S(N)) = chi(N,M)`.
pub fn serre_euler(pairs: &[ObjectPair], cap: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (k, p) in pairs.iter().enumerate() {
        let (sm, sn) = (serre(&p.m, cap)?, serre(&p.n, cap)?);
        out.push(Check::new(
            format!("Euler form through the Serre functor, {}", p.label(k)),
            "chi(M,N) = chi(N,S(M))",
            &p.inputs(),
            euler_pairing(&p.m, &p.n)?,
            euler_pairing(&p.n, &sm)?,
        ));
        out.push(Check::new(
            format!("Euler form through the Serre functor, third form, {}", p.label(k)),
            "chi(M,S(N)) = chi(N,M)",
            &p.inputs(),
            euler_pairing(&p.n, &p.m)?,
            euler_pairing(&p.m, &sn)?,
        ));
    }
    Ok(out)
}

fn kernel_check(name: String, inputs: &str, g: &Matrix) -> Check {
    let n = g.rows();
    Check::new(name, "Ker_L(chi) = Ker_R(chi)", inputs, span_text(&kernel_left(g), n), span_text(&kernel_right(g), n))
}

/// Algebras whose motives enter the all-pairs sweep.
const SMALL: &[&str] = &["Q", "QxQ", "A2", "A3", "Kronecker"];

/// Motives over the small corpus algebras.
pub fn small_motives(cap: usize) -> Result<Vec<CorpusMotive>> {
    Ok(corpus::motives(cap)?.into_iter().filter(|m| SMALL.contains(&m.algebra)).collect())
}

fn is_identity(m: &NCMotive) -> bool {
    m.name().ends_with(", id)")
}

/// Left and right kernels on every corpus Euler matrix and on the restricted
/// Euler form of every Hom-set between small motives with a non-identity end.
/// Returns the checks and the number of restricted models.
pub fn kernel_sweep(cap: usize) -> Result<(Vec<Check>, usize)> {
    let mut out = Vec::new();
    for ca in corpus::algebras() {
        let g = euler_matrix(&ca.algebra, cap)?.matrix;
        out.push(kernel_check(format!("kernels of the Euler matrix of {}", ca.name), ca.name, &g));
    }
    let ms = small_motives(cap)?;
    let mut restricted = 0;
    for s in &ms {
        for t in &ms {
            if is_identity(&s.motive) && is_identity(&t.motive) {
                continue;
            }
            let m = build_hom_model(&s.motive, &t.motive, cap)?;
            let label = format!("{} -> {}", s.motive.name(), t.motive.name());
            out.push(kernel_check(format!("kernels of the restricted Euler form on {label}"), &label, &m.gram_chi));
            restricted += 1;
        }
    }
    Ok((out, restricted))
}

/// Resolution-based Hochschild dimensions against the bar complex for every
/// corpus algebra and coefficient bimodule. The unnormalized bar complex is
/// also run where it is small enough.
pub fn hochschild_sweep(depth: usize, cap: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let a2 = &corpus::algebra("A2").expect("corpus algebra").algebra;
    let diag = crate::module::diagonal_bimodule(&crate::algebra::bimodule_algebra(a2, a2))?;
    out.push(Check::new(
        "HH(A2, A2)",
        "HH_*(A2) = (2,0,0,0,0)",
        "A2",
        text(vec![2, 0, 0, 0, 0]),
        text(hochschild(a2, &Complex::concentrated(diag, 0), cap)?.up_to(4)),
    ));
    for ca in corpus::algebras() {
        let full = ["Q", "QxQ", "A2"].contains(&ca.name);
        for (name, w) in corpus::bimodules(&ca.algebra)? {
            let hh = hochschild(&ca.algebra, &Complex::concentrated(w.clone(), 0), cap)?.up_to(depth);
            let inputs = format!("{}|{name}", ca.name);
            let bar = bar_oracle(&ca.algebra, &w, depth, BarKind::Reduced)?;
            out.push(Check::new(
                format!("HH({}, {name}) against the normalized bar complex", ca.name),
                "HH_n(A,W) = Tor^{A^e}_n(A,W)",
                &inputs,
                text(&bar.dims),
                text(&hh),
            ));
            if full {
                let bar = bar_oracle(&ca.algebra, &w, depth, BarKind::Full)?;
                out.push(Check::new(
                    format!("HH({}, {name}) against the bar complex W⊗A^⊗n", ca.name),
                    "HH_n(A,W) = Tor^{A^e}_n(A,W)",
                    &inputs,
                    text(&bar.dims),
                    text(&hh),
                ));
            }
        }
    }
    Ok(out)
}

/// Endpoints for random correspondences.
const CORRESPONDENCE_ENDS: &[(&str, &str)] = &[
    ("(A2, id)", "(A2, id)"),
    ("(A2, id)", "(Kronecker, id)"),
    ("(Q, id)", "(A2, id)"),
    ("(A3, id)", "(A2, id)"),
    ("(Kronecker, id)", "(Kronecker, id)"),
    ("(QxQ, id)", "(A3, id)"),
    ("(A2, e0)", "(Kronecker, e_iso)"),
    ("(A2, 1-e0)", "(QxQ, id)"),
    ("(Kronecker, id)", "(Q, id)"),
    ("(A3, e1)", "(Kronecker, id)"),
];

fn motive(cap: usize, name: &str) -> Result<Arc<NCMotive>> {
    Ok(corpus::find_motive(cap, name)?.expect("corpus motive"))
}

/// `count` seeded pairs. Composable pairs run `x: a -> b`, `y: b -> a`;
/// parallel pairs both run `a -> b`.
pub fn correspondence_pairs(seed: u64, count: usize, composable: bool, cap: usize) -> Result<Vec<(Correspondence, Correspondence)>> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    for k in 0..count {
        let (s, t) = CORRESPONDENCE_ENDS[k % CORRESPONDENCE_ENDS.len()];
        let (s, t) = (motive(cap, s)?, motive(cap, t)?);
        let x = random_correspondence(&s, &t, Shape::default(), &mut r);
        let y = if composable {
            random_correspondence(&t, &s, Shape::default(), &mut r)
        } else {
            random_correspondence(&s, &t, Shape::default(), &mut r)
        };
        out.push((x, y));
    }
    Ok(out)
}

fn pair_label(k: usize, x: &Correspondence) -> String {
    format!("pair {k}, {} -> {}", x.source().name(), x.target().name())
}

fn pair_inputs(x: &Correspondence, y: &Correspondence) -> String {
    let shape = |c: &Correspondence| {
        c.terms().iter().map(|t| format!("{}*{:?}@{}", t.coef, t.complex.all_summands(), t.complex.lo())).collect::<Vec<_>>().join("+")
    };
    format!("{}|{}|{}|{}", x.source().name(), x.target().name(), shape(x), shape(y))
}

/// `<x·y> = <y·x>` on composable pairs.
pub fn symmetry(pairs: &[(Correspondence, Correspondence)], cap: usize) -> Result<Vec<Check>> {
    pairs
        .iter()
        .enumerate()
        .map(|(k, (x, y))| {
            Ok(Check::new(
                format!("intersection symmetry, {}", pair_label(k, x)),
                "<X·Y> = <Y·X>",
                &pair_inputs(x, y),
                intersection_number(x, y, cap)?,
                intersection_number(y, x, cap)?,
            ))
        })
        .collect()
}

/// `chi(x,y)` from Ext against the Hochschild trace of `y ⊗ D(x)`.
pub fn trace_formula(pairs: &[(Correspondence, Correspondence)], cap: usize) -> Result<Vec<Check>> {
    pairs
        .iter()
        .enumerate()
        .map(|(k, (x, y))| {
            let composed = compose(&dualize(x)?, y)?;
            Ok(Check::new(
                format!("Euler form as a trace, {}", pair_label(k, x)),
                "chi(X,Y) = trace[Y ⊗_B D(X)]",
                &pair_inputs(x, y),
                chi_hom(x, y)?,
                trace(&composed, cap)?,
            ))
        })
        .collect()
}

/// `chi(x,y) = <D(x)·y>`.
pub fn dual_intersection(pairs: &[(Correspondence, Correspondence)], cap: usize) -> Result<Vec<Check>> {
    pairs
        .iter()
        .enumerate()
        .map(|(k, (x, y))| {
            Ok(Check::new(
                format!("Euler form as intersection with the dual, {}", pair_label(k, x)),
                "chi(X,Y) = <D(X)·Y>",
                &pair_inputs(x, y),
                chi_hom(x, y)?,
                intersection_number(&dualize(x)?, y, cap)?,
            ))
        })
        .collect()
}

/// A verified Hom-set.
#[derive(Clone, Debug)]
pub struct ModelResult {
    pub model: Arc<HomSpaceModel>,
    pub report: EquivalenceReport,
}

/// `verify_equivalence` on every listed corpus Hom-set.
pub fn model_results(cap: usize) -> Result<Vec<ModelResult>> {
    corpus::model_pairs(cap)?
        .into_iter()
        .map(|(s, t)| {
            let model = build_hom_model(&s, &t, cap)?;
            let report = verify_equivalence(&model);
            Ok(ModelResult { model, report })
        })
        .collect()
}

/// The verdict per Hom-set: kernels agree, and a nondegenerate Euler form is
/// reported as such rather than passing silently.
pub fn verdict_checks(results: &[ModelResult]) -> Vec<Check> {
    let mut out = Vec::new();
    for r in results {
        let rep = &r.report;
        let label = format!("{} -> {}", rep.source, rep.target);
        out.push(Check::new(
            format!("Ker(chi) equals the numerical kernel on {label}"),
            "Ker(chi) = N",
            &label,
            text(&rep.chi_kernel),
            text(&rep.numerical_kernel),
        ));
        let unimodular = rep.dimension > 0 && rep.gram_chi_determinant.as_deref().is_some_and(|d| d == "1" || d == "-1");
        if unimodular {
            out.push(Check::verdict(
                format!("unimodular Euler form stated on {label}"),
                "Ker(chi) = N",
                &label,
                "both kernels reported zero",
                &rep.statement,
                rep.statement.contains("unimodular") && rep.statement.contains("both zero") && rep.chi_kernel.is_empty() && rep.numerical_kernel.is_empty(),
            ));
        }
    }
    out
}

/// Samples compositions `w ∘ v` and `v ∘ z` for each kernel vector `v` found on
/// the models, with `w` and `z` drawn from Hom-sets to and from the ends of
/// `v` and the unit motive. Returns checks and the number of kernel vectors.
pub fn ideal_stability(results: &[ModelResult], samples: usize, seed: u64, cap: usize) -> Result<(Vec<Check>, usize)> {
    let mut r = rng(seed);
    let unit = motive(cap, "(Q, id)")?;
    let mut out = Vec::new();
    let mut vectors = 0;
    for res in results {
        let m = &res.model;
        let label = format!("{} -> {}", m.source.name(), m.target.name());
        let partners = [m.source.clone(), m.target.clone(), unit.clone()];
        for (kind, kernel) in [(KernelKind::Chi, &res.report.chi_kernel_classes), (KernelKind::Numerical, &res.report.numerical_kernel_classes)] {
            for v in kernel {
                vectors += 1;
                let mut drawn = 0;
                let mut attempts = 0;
                while drawn < samples && attempts < samples * 20 {
                    attempts += 1;
                    let u = &partners[r.gen_range(0..partners.len())];
                    let after = r.gen_bool(0.5);
                    let (wm, out_model) = if after {
                        (build_hom_model(&m.target, u, cap)?, build_hom_model(&m.source, u, cap)?)
                    } else {
                        (build_hom_model(u, &m.source, cap)?, build_hom_model(u, &m.target, cap)?)
                    };
                    if wm.dim() == 0 {
                        continue;
                    }
                    let w = wm.class_of(&random_coords(wm.dim(), &mut r));
                    if w.iter().all(Zero::is_zero) {
                        continue;
                    }
                    drawn += 1;
                    let stays = if after {
                        stable_after(kind, m, v, &wm, &w, &out_model)
                    } else {
                        stable_before(kind, m, v, &wm, &w, &out_model)
                    };
                    let how = if after { format!("w∘v with w: {} -> {}", m.target.name(), u.name()) } else { format!("v∘z with z: {} -> {}", u.name(), m.source.name()) };
                    out.push(Check::verdict(
                        format!("{kind:?} kernel vector on {label} stays in the kernel under {how}"),
                        if kind == KernelKind::Chi { "Ker(chi) is an ideal" } else { "N is an ideal" },
                        &format!("{label}|{}|{}", text(crate::linalg::vector_to_strings(v)), text(crate::linalg::vector_to_strings(&w))),
                        "in kernel",
                        if stays { "in kernel" } else { "not in kernel" },
                        stays,
                    ));
                }
            }
        }
    }
    Ok((out, vectors))
}
