//! Built-in algebras and motives.

use std::sync::{Arc, OnceLock};

use crate::algebra::{bimodule_algebra, ground_field, path_algebra, tensor, Algebra, Quiver};
use crate::error::Result;
use crate::linalg::{one, Matrix};
use crate::module::Module;
use crate::motives::{NCMotive, Term};
use crate::perfect::{AlgMatrix, PerfectComplex};
use crate::resolution::projective_resolution;

/// A named algebra of the corpus.
#[derive(Clone, Debug)]
pub struct CorpusAlgebra {
    pub name: &'static str,
    pub algebra: Arc<Algebra>,
    pub quiver: Option<Quiver>,
}

fn quiver_algebra(name: &'static str, q: Quiver) -> CorpusAlgebra {
    CorpusAlgebra { name, algebra: path_algebra(&q).expect("corpus quivers are acyclic"), quiver: Some(q) }
}

pub fn two_points() -> Quiver {
    Quiver { vertices: 2, arrows: Vec::new() }
}

pub fn a2_quiver() -> Quiver {
    Quiver::from_edges(2, &[(0, 1, "a")]).expect("valid")
}

pub fn a3_quiver() -> Quiver {
    Quiver::from_edges(3, &[(0, 1, "a"), (1, 2, "b")]).expect("valid")
}

pub fn kronecker_quiver() -> Quiver {
    Quiver::from_edges(2, &[(0, 1, "a"), (0, 1, "b")]).expect("valid")
}

/// The algebras, from the field up to tensor products, memoized so that
/// repeated calls share caches.
pub fn algebras() -> &'static [CorpusAlgebra] {
    static ALL: OnceLock<Vec<CorpusAlgebra>> = OnceLock::new();
    ALL.get_or_init(|| {
        let q = CorpusAlgebra { name: "Q", algebra: ground_field(), quiver: None };
        let qq = quiver_algebra("QxQ", two_points());
        let a2 = quiver_algebra("A2", a2_quiver());
        let a3 = quiver_algebra("A3", a3_quiver());
        let kr = quiver_algebra("Kronecker", kronecker_quiver());
        let a2a2 = CorpusAlgebra { name: "A2xA2", algebra: tensor(&a2.algebra, &a2.algebra), quiver: None };
        let a2kr = CorpusAlgebra { name: "A2xKronecker", algebra: tensor(&a2.algebra, &kr.algebra), quiver: None };
        vec![q, qq, a2, a3, kr, a2a2, a2kr]
    })
}

pub fn algebra(name: &str) -> Option<&'static CorpusAlgebra> {
    algebras().iter().find(|a| a.name == name)
}

/// `(A e_i ⊗ e_i A)` in degree zero: the projective idempotent at vertex `i`.
pub fn vertex_idempotent(a: &Arc<Algebra>, i: usize) -> PerfectComplex {
    let env = bimodule_algebra(a, a);
    PerfectComplex::projective(env.env.clone(), env.idempotent_index(i, i), 0)
}

/// `A e_v ⊗ P` for a perfect complex `P` of right modules.
pub fn outer_with_projective(a: &Arc<Algebra>, v: usize, p: &PerfectComplex) -> Result<PerfectComplex> {
    let env = bimodule_algebra(a, a);
    let ev = a.idempotent(v).clone();
    let summands: Vec<Vec<usize>> = p.all_summands().iter().map(|s| s.iter().map(|&j| env.idempotent_index(v, j)).collect()).collect();
    let diffs: Vec<AlgMatrix> = (p.lo()..p.hi())
        .map(|n| {
            let d = p.differential(n);
            let rows = d.row_summands().iter().map(|&j| env.idempotent_index(v, j)).collect();
            let cols = d.col_summands().iter().map(|&j| env.idempotent_index(v, j)).collect();
            d.map_entries(env.env.dim(), rows, cols, |x| crate::linalg::kron_vec(&ev, x))
        })
        .collect();
    PerfectComplex::new(env.env.clone(), p.lo(), summands, diffs)
}

/// The Kronecker module with dimension vector `(1, 1)` where both arrows act by one.
pub fn kronecker_regular_module(a: &Arc<Algebra>) -> Result<Module> {
    let mut action = Vec::new();
    for label in a.labels() {
        let m = match label.as_str() {
            "e0" => Matrix::from_i64(&[vec![1, 0], vec![0, 0]]),
            "e1" => Matrix::from_i64(&[vec![0, 0], vec![0, 1]]),
            _ => Matrix::from_i64(&[vec![0, 0], vec![1, 0]]),
        };
        action.push(m);
    }
    Module::new(a.clone(), 2, action)
}

/// `[A e_0 ⊗ M]` for the regular Kronecker module `M`; its class has zero Euler form with itself.
pub fn isotropic_idempotent(a: &Arc<Algebra>, cap: usize) -> Result<PerfectComplex> {
    let m = kronecker_regular_module(a)?;
    outer_with_projective(a, 0, &projective_resolution(&m, cap)?)
}

/// `DA = Hom(A, k)` with `(a f b)(x) = f(b x a)`, in the dual basis.
pub fn dual_bimodule(a: &Arc<Algebra>) -> Result<Module> {
    let env = bimodule_algebra(a, a);
    let n = a.dim();
    let right: Vec<Matrix> = (0..n).map(|p| a.right_mult_matrix(&crate::linalg::unit_vector(n, p)).transpose()).collect();
    let left: Vec<Matrix> = (0..n).map(|q| a.left_mult_matrix(&crate::linalg::unit_vector(n, q)).transpose()).collect();
    let action = right.iter().flat_map(|r| left.iter().map(move |l| r * l)).collect();
    Module::new(env.env.clone(), n, action)
}

/// Named coefficient bimodules for Hochschild checks: the diagonal, its dual,
/// the free bimodule and every simple bimodule.
pub fn bimodules(a: &Arc<Algebra>) -> Result<Vec<(String, Module)>> {
    let env = bimodule_algebra(a, a);
    let mut out = vec![
        ("A".to_string(), crate::module::diagonal_bimodule(&env)?),
        ("DA".to_string(), dual_bimodule(a)?),
        ("A(x)A".to_string(), crate::hochschild::free_bimodule(&env)),
    ];
    for (k, s) in crate::module::simple_modules(&env.env).into_iter().enumerate() {
        let (i, j) = env.split_idempotent(k);
        out.push((format!("S(e{i},e{j})"), s));
    }
    Ok(out)
}

/// A named motive of the corpus.
#[derive(Clone, Debug)]
pub struct CorpusMotive {
    pub algebra: &'static str,
    pub motive: Arc<NCMotive>,
}

fn motive(algebra: &'static str, name: String, a: &Arc<Algebra>, terms: Vec<Term>) -> Result<CorpusMotive> {
    Ok(CorpusMotive { algebra, motive: NCMotive::new(name, a, terms)? })
}

fn build_motives(cap: usize) -> Result<Vec<CorpusMotive>> {
    let mut out = Vec::new();
    for ca in algebras() {
        let a = &ca.algebra;
        let diag = crate::hochschild::diagonal_resolution(a, cap)?;
        out.push(motive(ca.name, format!("({}, id)", ca.name), a, vec![Term::new(one(), (*diag).clone())])?);
    }
    for (name, vertices) in [("QxQ", vec![0]), ("A2", vec![0, 1]), ("A3", vec![1]), ("Kronecker", vec![0, 1]), ("A2xKronecker", vec![0])] {
        let a = &algebra(name).expect("corpus algebra").algebra;
        for v in vertices {
            let p = vertex_idempotent(a, v);
            out.push(motive(name, format!("({name}, e{v})"), a, vec![Term::new(one(), p.clone())])?);
            let diag = crate::hochschild::diagonal_resolution(a, cap)?;
            out.push(motive(
                name,
                format!("({name}, 1-e{v})"),
                a,
                vec![Term::new(one(), (*diag).clone()), Term::new(-one(), p)],
            )?);
        }
    }
    let kr = &algebra("Kronecker").expect("corpus algebra").algebra;
    out.push(motive("Kronecker", "(Kronecker, e_iso)".into(), kr, vec![Term::new(one(), isotropic_idempotent(kr, cap)?)])?);
    Ok(out)
}

/// All corpus motives for the given resolution cap, memoized.
pub fn motives(cap: usize) -> Result<Vec<CorpusMotive>> {
    use std::collections::HashMap;
    use std::sync::Mutex;
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<CorpusMotive>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(m) = cache.lock().unwrap().get(&cap) {
        return Ok(m.clone());
    }
    let m = build_motives(cap)?;
    cache.lock().unwrap().insert(cap, m.clone());
    Ok(m)
}

pub fn find_motive(cap: usize, name: &str) -> Result<Option<Arc<NCMotive>>> {
    Ok(motives(cap)?.into_iter().find(|m| m.motive.name() == name).map(|m| m.motive))
}

/// Source and target names of the Hom-set models the `corpus` command verifies.
/// The self-model of `A2xKronecker` is left out: it alone costs more than the rest combined.
pub const MODEL_PAIRS: &[(&str, &str)] = &[
    ("(Q, id)", "(Q, id)"),
    ("(QxQ, id)", "(QxQ, id)"),
    ("(QxQ, e0)", "(QxQ, 1-e0)"),
    ("(A2, id)", "(A2, id)"),
    ("(A2, e0)", "(A2, e1)"),
    ("(A2, 1-e0)", "(A2, id)"),
    ("(A3, id)", "(A3, id)"),
    ("(A3, e1)", "(A2, id)"),
    ("(Kronecker, id)", "(Kronecker, id)"),
    ("(Kronecker, e0)", "(Kronecker, 1-e0)"),
    ("(A2, id)", "(Kronecker, id)"),
    ("(A2, e0)", "(Kronecker, e1)"),
    ("(A2xA2, id)", "(Q, id)"),
    ("(A2xA2, id)", "(A2xA2, id)"),
    ("(A2xKronecker, id)", "(Q, id)"),
    ("(A2xKronecker, e0)", "(A2, id)"),
    ("(Q, id)", "(Kronecker, e_iso)"),
    ("(A2, id)", "(Kronecker, e_iso)"),
    ("(Kronecker, e_iso)", "(Kronecker, e_iso)"),
];

/// Resolve [`MODEL_PAIRS`] to motives.
pub fn model_pairs(cap: usize) -> Result<Vec<(Arc<NCMotive>, Arc<NCMotive>)>> {
    let all = motives(cap)?;
    let get = |n: &str| all.iter().find(|m| m.motive.name() == n).map(|m| m.motive.clone()).expect("listed motive exists");
    Ok(MODEL_PAIRS.iter().map(|(s, t)| (get(s), get(t))).collect())
}
