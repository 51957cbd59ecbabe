//! Motives `(A, e)`, correspondences between them, and the two pairings on
//! Hom-sets.
//!
//! A correspondence from `(A, e)` to `(B, f)` is a rational combination of
//! perfect complexes of A-B-bimodules, i.e. right modules over `A^op ⊗ B`.
//! `compose(y, x)` is `X ⊗_B Y`. Classes are coordinate vectors in
//! `K_0(A^op ⊗ B) ⊗ Q` in the basis of simple modules, and correspondences
//! are compared through their classes.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::{bimodule_algebra, require_same, same_algebra, Algebra, BimoduleAlgebra};
use crate::error::{Error, Result};
use crate::hochschild::{diagonal_resolution, hochschild_euler};
use crate::hom::euler_pairing;
use crate::invariants::{cartan_matrix, dual, duality_on_k0, euler_matrix, kernel_left, kernel_right, serre};
use crate::linalg::{
    canonical_basis, dot, int, inverse, same_span, unit_vector, vector_to_strings, zero_vector, EchelonSpan, Matrix,
    Rational, Vector,
};
use crate::perfect::PerfectComplex;
use crate::report::Check;
use crate::resolution::simple_resolutions;
use crate::tensor::compose_perfect;

/// A weighted bimodule complex.
#[derive(Clone, Debug)]
pub struct Term {
    pub coef: Rational,
    pub complex: PerfectComplex,
}

impl Term {
    pub fn new(coef: Rational, complex: PerfectComplex) -> Term {
        Term { coef, complex }
    }
}

fn terms_class(env: &BimoduleAlgebra, terms: &[Term]) -> Vector {
    let mut v = zero_vector(env.env.idempotent_count());
    for t in terms {
        for (x, c) in v.iter_mut().zip(t.complex.k0_coords()) {
            *x += &t.coef * int(c);
        }
    }
    v
}

/// An algebra with an idempotent correspondence on it.
#[derive(Debug)]
pub struct NCMotive {
    name: String,
    env: BimoduleAlgebra,
    idempotent: Vec<Term>,
    class: Vector,
}

impl NCMotive {
    /// `(A, id)`, with the diagonal bimodule as idempotent.
    pub fn identity(a: &Arc<Algebra>, cap: usize) -> Result<Arc<NCMotive>> {
        let p = diagonal_resolution(a, cap)?;
        Self::new(format!("({}, id)", a.name()), a, vec![Term::new(Rational::one(), (*p).clone())])
    }

    /// Checks `e ∘ e = e` on classes.
    pub fn new(name: impl Into<String>, a: &Arc<Algebra>, idempotent: Vec<Term>) -> Result<Arc<NCMotive>> {
        let name = name.into();
        let env = bimodule_algebra(a, a);
        for t in &idempotent {
            require_same(&env.env, t.complex.algebra(), "idempotent of a motive")?;
        }
        let class = terms_class(&env, &idempotent);
        if compose_class(&env, &class, &env, &class) != class {
            return Err(Error::NotIdempotent(name));
        }
        Ok(Arc::new(NCMotive { name, env, idempotent, class }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.env.left
    }

    pub fn env(&self) -> &BimoduleAlgebra {
        &self.env
    }

    pub fn idempotent_terms(&self) -> &[Term] {
        &self.idempotent
    }

    pub fn class(&self) -> &Vector {
        &self.class
    }
}

/// Same algebra and same idempotent class.
pub fn same_motive(a: &NCMotive, b: &NCMotive) -> bool {
    std::ptr::eq(a, b) || (same_algebra(a.algebra(), b.algebra()) && a.class == b.class)
}

fn require_motive(a: &NCMotive, b: &NCMotive, what: &str) -> Result<()> {
    if same_motive(a, b) {
        Ok(())
    } else {
        Err(Error::EndpointMismatch(format!("{what}: {} vs {}", a.name, b.name)))
    }
}

struct CartanData {
    /// Projective coordinates to simple coordinates.
    to_simple: Matrix,
    to_projective: Matrix,
}

fn cartan_data(a: &Arc<Algebra>) -> Arc<CartanData> {
    type Cache = Mutex<HashMap<usize, (Arc<Algebra>, Arc<CartanData>)>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = Arc::as_ptr(a) as usize;
    if let Some((_, d)) = cache.lock().unwrap().get(&key) {
        return d.clone();
    }
    let to_simple = cartan_matrix(a).transpose();
    let to_projective = inverse(&to_simple).expect("Cartan matrix of a basic acyclic algebra is unitriangular");
    let d = Arc::new(CartanData { to_simple, to_projective });
    cache.lock().unwrap().insert(key, (a.clone(), d.clone()));
    d
}

pub fn simple_to_projective(a: &Arc<Algebra>, s: &[Rational]) -> Vector {
    cartan_data(a).to_projective.mul_vec(s)
}

pub fn projective_to_simple(a: &Arc<Algebra>, p: &[Rational]) -> Vector {
    cartan_data(a).to_simple.mul_vec(p)
}

/// Class of `X ⊗_B Y` from the classes of `X` over `A^op ⊗ B` and `Y` over `B^op ⊗ C`,
/// using `(A e_i ⊗ f_j B) ⊗_B (B f_k ⊗ g_l C) = (A e_i ⊗ g_l C)^{dim f_j B f_k}`.
pub fn compose_class(xenv: &BimoduleAlgebra, x: &[Rational], yenv: &BimoduleAlgebra, y: &[Rational]) -> Vector {
    let px = simple_to_projective(&xenv.env, x);
    let py = simple_to_projective(&yenv.env, y);
    let out = bimodule_algebra(&xenv.left, &yenv.right);
    let b = &xenv.right;
    let mut p = zero_vector(out.env.idempotent_count());
    for (kx, cx) in px.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let (i, j) = xenv.split_idempotent(kx);
        for (ky, cy) in py.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (k, l) = yenv.split_idempotent(ky);
            let m = b.corner(j, k).dim();
            if m > 0 {
                p[out.idempotent_index(i, l)] += cx * cy * int(m as i64);
            }
        }
    }
    projective_to_simple(&out.env, &p)
}

/// A morphism of motives.
#[derive(Clone, Debug)]
pub struct Correspondence {
    source: Arc<NCMotive>,
    target: Arc<NCMotive>,
    env: BimoduleAlgebra,
    terms: Vec<Term>,
}

impl Correspondence {
    pub fn new(source: &Arc<NCMotive>, target: &Arc<NCMotive>, terms: Vec<Term>) -> Result<Correspondence> {
        let env = bimodule_algebra(source.algebra(), target.algebra());
        for t in &terms {
            require_same(&env.env, t.complex.algebra(), "correspondence term")?;
        }
        Ok(Correspondence { source: source.clone(), target: target.clone(), env, terms })
    }

    /// The idempotent of `m`, which is its identity morphism.
    pub fn identity(m: &Arc<NCMotive>) -> Correspondence {
        Correspondence { source: m.clone(), target: m.clone(), env: m.env.clone(), terms: m.idempotent.clone() }
    }

    /// `sum_k v_k [S_k]` over the simple modules of `A^op ⊗ B`.
    pub fn from_class(source: &Arc<NCMotive>, target: &Arc<NCMotive>, class: &[Rational], cap: usize) -> Result<Correspondence> {
        let env = bimodule_algebra(source.algebra(), target.algebra());
        let res = simple_resolutions(&env.env, cap)?;
        if class.len() != res.len() {
            return Err(Error::Dimension(format!("class of length {} for {} simple modules", class.len(), res.len())));
        }
        let terms = class
            .iter()
            .zip(res.iter())
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, r)| Term::new(c.clone(), r.clone()))
            .collect();
        Ok(Correspondence { source: source.clone(), target: target.clone(), env, terms })
    }

    pub fn source(&self) -> &Arc<NCMotive> {
        &self.source
    }

    pub fn target(&self) -> &Arc<NCMotive> {
        &self.target
    }

    pub fn env(&self) -> &BimoduleAlgebra {
        &self.env
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn class(&self) -> Vector {
        terms_class(&self.env, &self.terms)
    }

    pub fn scale(&self, c: &Rational) -> Correspondence {
        let terms = self.terms.iter().map(|t| Term::new(&t.coef * c, t.complex.clone())).collect();
        Correspondence { terms, ..self.clone() }
    }

    pub fn add(&self, other: &Correspondence) -> Result<Correspondence> {
        require_parallel(self, other)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(Correspondence { terms, ..self.clone() })
    }

    /// Class of `f ∘ x ∘ e` for `x: (A, e) -> (B, f)`.
    pub fn restricted_class(&self) -> Vector {
        let inner = compose_class(&self.source.env, &self.source.class, &self.env, &self.class());
        compose_class(&self.env, &inner, &self.target.env, &self.target.class)
    }

    /// Whether the class lies in `e ∘ K_0(A^op ⊗ B) ∘ f`.
    pub fn in_hom_set(&self) -> bool {
        self.restricted_class() == self.class()
    }
}

fn require_parallel(x: &Correspondence, y: &Correspondence) -> Result<()> {
    require_motive(&x.source, &y.source, "sources")?;
    require_motive(&x.target, &y.target, "targets")
}

/// `y ∘ x`, termwise `X ⊗_B Y`.
pub fn compose(y: &Correspondence, x: &Correspondence) -> Result<Correspondence> {
    require_motive(&x.target, &y.source, "composition")?;
    let out = bimodule_algebra(x.source.algebra(), y.target.algebra());
    let mut terms = Vec::new();
    for tx in &x.terms {
        for ty in &y.terms {
            let (_, c) = compose_perfect(&x.env, &tx.complex, &y.env, &ty.complex)?;
            terms.push(Term::new(&tx.coef * &ty.coef, c.with_algebra(out.env.clone())?));
        }
    }
    Ok(Correspondence { source: x.source.clone(), target: y.target.clone(), env: out, terms })
}

/// The Euler pairing over `A^op ⊗ B`, extended bilinearly.
pub fn chi_hom(x: &Correspondence, y: &Correspondence) -> Result<Rational> {
    require_parallel(x, y)?;
    let mut total = Rational::zero();
    for tx in &x.terms {
        for ty in &y.terms {
            total += &tx.coef * &ty.coef * int(euler_pairing(&tx.complex, &ty.complex)?);
        }
    }
    Ok(total)
}

/// `sum_n (-1)^n dim HH_n(A, Z)` summed over the terms of an endomorphism.
pub fn trace(z: &Correspondence, cap: usize) -> Result<Rational> {
    require_motive(&z.source, &z.target, "trace of a non-endomorphism")?;
    let a = z.source.algebra();
    let mut total = Rational::zero();
    for t in &z.terms {
        total += &t.coef * int(hochschild_euler(a, &t.complex, cap)?);
    }
    Ok(total)
}

/// Termwise `D(X) = RHom(X, A^op ⊗ B)`, from `(B, f)` to `(A, e)`.
pub fn dualize(x: &Correspondence) -> Result<Correspondence> {
    let mut terms = Vec::new();
    let mut out = x.env.swapped();
    for t in &x.terms {
        let (env, d) = dual(&x.env, &t.complex)?;
        out = env;
        terms.push(Term::new(t.coef.clone(), d));
    }
    Ok(Correspondence { source: x.target.clone(), target: x.source.clone(), env: out, terms })
}

/// `<X · Y> = sum a_i b_j sum_n (-1)^n dim HH_n(A, X_i ⊗_B Y_j)`.
pub fn intersection_number(x: &Correspondence, y: &Correspondence, cap: usize) -> Result<Rational> {
    require_motive(&x.target, &y.source, "intersection (middle)")?;
    require_motive(&y.target, &x.source, "intersection (ends)")?;
    trace(&compose(y, x)?, cap)
}

/// Bilinear forms on the Grothendieck groups of `A^op ⊗ B` and `B^op ⊗ A`,
/// all in simple coordinates.
#[derive(Debug)]
pub struct PairForms {
    pub env: BimoduleAlgebra,
    pub rev: BimoduleAlgebra,
    /// `chi(S_k, S_l)` over `A^op ⊗ B`, from Ext groups.
    pub euler: Matrix,
    /// `chi(S_l, S(S_k))` at `(k, l)`.
    pub serre_pairing: Matrix,
    /// `<x · y>` for `x` over `A^op ⊗ B`, `y` over `B^op ⊗ A`: Hochschild homology of `A`.
    pub intersection: Matrix,
    /// `<y · x>`: Hochschild homology of `B`.
    pub intersection_rev: Matrix,
    /// The duality `K_0(A^op ⊗ B) -> K_0(B^op ⊗ A)`.
    pub duality: Matrix,
}

/// Intersection form on projective generators, converted to simple coordinates.
fn intersection_form(xenv: &BimoduleAlgebra, yenv: &BimoduleAlgebra, cap: usize) -> Result<Matrix> {
    let (nx, ny) = (xenv.env.idempotent_count(), yenv.env.idempotent_count());
    let a = &xenv.left;
    let mut ip = Matrix::zeros(nx, ny);
    for k in 0..nx {
        let pk = PerfectComplex::projective(xenv.env.clone(), k, 0);
        for l in 0..ny {
            let pl = PerfectComplex::projective(yenv.env.clone(), l, 0);
            let (_, z) = compose_perfect(xenv, &pk, yenv, &pl)?;
            ip[(k, l)] = int(hochschild_euler(a, &z, cap)?);
        }
    }
    let cx = &cartan_data(&xenv.env).to_projective;
    let cy = &cartan_data(&yenv.env).to_projective;
    Ok(&(&cx.transpose() * &ip) * cy)
}

fn compute_forms(a: &Arc<Algebra>, b: &Arc<Algebra>, cap: usize) -> Result<PairForms> {
    let env = bimodule_algebra(a, b);
    let rev = env.swapped();
    let euler = euler_matrix(&env.env, cap)?.matrix;
    let res = simple_resolutions(&env.env, cap)?;
    let n = res.len();
    let serred = res.iter().map(|r| serre(r, cap)).collect::<Result<Vec<_>>>()?;
    let mut serre_pairing = Matrix::zeros(n, n);
    for k in 0..n {
        for l in 0..n {
            serre_pairing[(k, l)] = int(euler_pairing(&res[l], &serred[k])?);
        }
    }
    let intersection = intersection_form(&env, &rev, cap)?;
    let intersection_rev = intersection_form(&rev, &env, cap)?;
    let columns = (0..n).map(|k| duality_on_k0(&env, &unit_vector(n, k))).collect::<Result<Vec<_>>>()?;
    let duality = Matrix::from_columns(rev.env.idempotent_count(), &columns);
    Ok(PairForms { env, rev, euler, serre_pairing, intersection, intersection_rev, duality })
}

/// Forms for an ordered pair of algebras, cached.
pub fn pair_forms(a: &Arc<Algebra>, b: &Arc<Algebra>, cap: usize) -> Result<Arc<PairForms>> {
    type Cache = Mutex<HashMap<(usize, usize, usize), (Arc<Algebra>, Arc<Algebra>, Arc<PairForms>)>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (Arc::as_ptr(a) as usize, Arc::as_ptr(b) as usize, cap);
    if let Some((_, _, f)) = cache.lock().unwrap().get(&key) {
        return Ok(f.clone());
    }
    let f = Arc::new(compute_forms(a, b, cap)?);
    cache.lock().unwrap().insert(key, (a.clone(), b.clone(), f.clone()));
    Ok(f)
}

/// `x -> f ∘ x ∘ e` on `K_0(A^op ⊗ B)`, in simple coordinates.
pub fn projector(source: &NCMotive, target: &NCMotive) -> Matrix {
    let env = bimodule_algebra(source.algebra(), target.algebra());
    let n = env.env.idempotent_count();
    let columns: Vec<Vector> = (0..n)
        .map(|k| {
            let inner = compose_class(&source.env, &source.class, &env, &unit_vector(n, k));
            compose_class(&env, &inner, &target.env, &target.class)
        })
        .collect();
    Matrix::from_columns(n, &columns)
}

fn bilinear(u: &[Rational], m: &Matrix, v: &[Rational]) -> Rational {
    dot(u, &m.mul_vec(v))
}

fn gram(left: &[Vector], m: &Matrix, right: &[Vector]) -> Matrix {
    Matrix::from_fn(left.len(), right.len(), |i, j| bilinear(&left[i], m, &right[j]))
}

/// The Hom-set `Hom((A, e), (B, f))` with both pairings.
#[derive(Debug)]
pub struct HomSpaceModel {
    pub source: Arc<NCMotive>,
    pub target: Arc<NCMotive>,
    pub forms: Arc<PairForms>,
    /// Classes spanning the Hom-set: rows of a reduced echelon form.
    pub basis: Vec<Vector>,
    /// The same for `Hom((B, f), (A, e))`.
    pub reverse_basis: Vec<Vector>,
    /// `chi(b_i, b_j)`.
    pub gram_chi: Matrix,
    /// `<D(b_i) · b_j>`.
    pub gram_int: Matrix,
    /// `<b_i · c_j>` against the reverse basis.
    pub pairing: Matrix,
}

impl HomSpaceModel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.forms.env.env.idempotent_count()
    }

    /// Class of a coordinate vector in the model basis.
    pub fn class_of(&self, coords: &[Rational]) -> Vector {
        let mut v = zero_vector(self.ambient());
        for (c, b) in coords.iter().zip(&self.basis) {
            crate::linalg::axpy(c, b, &mut v);
        }
        v
    }

    /// Coordinates of a class in the model basis, if it lies in the Hom-set.
    pub fn coords_of(&self, class: &[Rational]) -> Option<Vector> {
        let m = Matrix::from_columns(self.ambient(), &self.basis);
        crate::linalg::solve(&m, class).ok().flatten()
    }

    /// `u` in the Hom-set with `chi(u, -) = 0` on it.
    pub fn in_chi_kernel(&self, u: &[Rational]) -> bool {
        self.coords_of(u).is_some() && self.basis.iter().all(|b| bilinear(u, &self.forms.euler, b).is_zero())
    }

    /// `u` in the Hom-set with `<u · w> = 0` for all `w` in the reverse Hom-set.
    pub fn in_numerical_kernel(&self, u: &[Rational]) -> bool {
        self.coords_of(u).is_some() && self.reverse_basis.iter().all(|w| bilinear(u, &self.forms.intersection, w).is_zero())
    }

    pub fn correspondence(&self, coords: &[Rational], cap: usize) -> Result<Correspondence> {
        Correspondence::from_class(&self.source, &self.target, &self.class_of(coords), cap)
    }
}

fn image_basis(p: &Matrix) -> Vec<Vector> {
    canonical_basis(&p.columns(), p.rows())
}

fn compute_model(source: &Arc<NCMotive>, target: &Arc<NCMotive>, cap: usize) -> Result<HomSpaceModel> {
    let forms = pair_forms(source.algebra(), target.algebra(), cap)?;
    let basis = image_basis(&projector(source, target));
    let reverse_basis = image_basis(&projector(target, source));
    let gram_chi = gram(&basis, &forms.euler, &basis);
    let duals: Vec<Vector> = basis.iter().map(|b| forms.duality.mul_vec(b)).collect();
    let gram_int = gram(&duals, &forms.intersection_rev, &basis);
    let pairing = gram(&basis, &forms.intersection, &reverse_basis);
    Ok(HomSpaceModel { source: source.clone(), target: target.clone(), forms, basis, reverse_basis, gram_chi, gram_int, pairing })
}

/// Hom-set model, cached per motive pair.
pub fn build_hom_model(source: &Arc<NCMotive>, target: &Arc<NCMotive>, cap: usize) -> Result<Arc<HomSpaceModel>> {
    type Entry = (Arc<NCMotive>, Arc<NCMotive>, Arc<HomSpaceModel>);
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize, usize), Entry>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (Arc::as_ptr(source) as usize, Arc::as_ptr(target) as usize, cap);
    if let Some((_, _, m)) = cache.lock().unwrap().get(&key) {
        return Ok(m.clone());
    }
    let m = Arc::new(compute_model(source, target, cap)?);
    cache.lock().unwrap().insert(key, (source.clone(), target.clone(), m.clone()));
    Ok(m)
}

/// Model coordinates `v` with `<v · w> = 0` for every `w` in the reverse Hom-set.
pub fn numerical_kernel(m: &HomSpaceModel) -> Vec<Vector> {
    kernel_left(&m.pairing)
}

/// Left kernel of `gram_chi`, in model coordinates.
pub fn chi_kernel(m: &HomSpaceModel) -> Vec<Vector> {
    kernel_left(&m.gram_chi)
}

fn matrix_text(m: &Matrix) -> String {
    let rows: Vec<String> = m.to_string_rows().iter().map(|r| format!("[{}]", r.join(","))).collect();
    format!("[{}]", rows.join(","))
}

fn span_text(vs: &[Vector]) -> String {
    let rows: Vec<String> = vs.iter().map(|v| format!("[{}]", vector_to_strings(v).join(","))).collect();
    format!("span[{}]", rows.join(","))
}

/// Everything `verify_equivalence` found for one Hom-set.
#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub source: String,
    pub target: String,
    pub dimension: usize,
    pub reverse_dimension: usize,
    pub gram_chi: Vec<Vec<String>>,
    pub gram_int: Vec<Vec<String>>,
    pub gram_chi_determinant: Option<String>,
    /// Left kernel of `gram_chi`, as classes.
    pub chi_kernel: Vec<Vec<String>>,
    /// Numerically trivial classes.
    pub numerical_kernel: Vec<Vec<String>>,
    pub kernels_equal: bool,
    pub statement: String,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub chi_kernel_classes: Vec<Vector>,
    #[serde(skip)]
    pub numerical_kernel_classes: Vec<Vector>,
}

impl EquivalenceReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Compares `Ker(chi)` with the numerical kernel on a Hom-set and records the
/// identities that connect them.
pub fn verify_equivalence(m: &HomSpaceModel) -> EquivalenceReport {
    let f = &m.forms;
    let label = format!("{} -> {}", m.source.name, m.target.name);
    let mut checks = Vec::new();
    let mut push = |name: &str, anchor: &str, expected: String, actual: String| {
        checks.push(Check::new(format!("{label}: {name}"), anchor, &label, expected, actual));
    };

    for motive in [&m.source, &m.target] {
        let square = compose_class(&motive.env, &motive.class, &motive.env, &motive.class);
        push(
            &format!("idempotent law for {}", motive.name),
            "idempotent correspondences",
            format!("{:?}", vector_to_strings(&motive.class)),
            format!("{:?}", vector_to_strings(&square)),
        );
    }
    push(
        "Euler form via Serre functor on simple generators",
        "chi(M,N) = chi(N,S(M))",
        matrix_text(&f.euler),
        matrix_text(&f.serre_pairing),
    );

    let left = kernel_left(&m.gram_chi);
    let right = kernel_right(&m.gram_chi);
    push(
        "left and right kernels of the restricted Euler form",
        "Ker_L(chi) = Ker_R(chi)",
        span_text(&canonical_basis(&left, m.dim())),
        span_text(&canonical_basis(&right, m.dim())),
    );

    let duals: Vec<Vector> = m.basis.iter().map(|b| f.duality.mul_vec(b)).collect();
    let traces = Matrix::from_fn(m.dim(), m.dim(), |i, j| bilinear(&m.basis[j], &f.intersection, &duals[i]));
    push("Euler form equals trace of Y ⊗ D(X)", "chi(X,Y) = trace[Y ⊗_B D(X)]", matrix_text(&m.gram_chi), matrix_text(&traces));
    push("intersection pairing symmetric on the basis", "<X·Y> = <Y·X>", matrix_text(&traces), matrix_text(&m.gram_int));
    push("Euler form equals intersection with the dual", "chi(X,Y) = <D(X)·Y>", matrix_text(&m.gram_chi), matrix_text(&m.gram_int));

    push(
        "duality maps the Hom-set onto the reverse Hom-set",
        "D: Hom(a,b) -> Hom(b,a) isomorphism",
        span_text(&m.reverse_basis),
        span_text(&canonical_basis(&duals, f.rev.env.idempotent_count())),
    );

    let numerical = numerical_kernel(m);
    let int_kernel = kernel_right(&m.gram_int);
    push(
        "numerical kernel equals kernel of the intersection Gram matrix",
        "numerical equivalence",
        span_text(&canonical_basis(&numerical, m.dim())),
        span_text(&canonical_basis(&int_kernel, m.dim())),
    );

    let kernels_equal = same_span(&left, &numerical, m.dim());
    let chi_classes: Vec<Vector> = canonical_basis(&left.iter().map(|v| m.class_of(v)).collect::<Vec<_>>(), m.ambient());
    let num_classes: Vec<Vector> = canonical_basis(&numerical.iter().map(|v| m.class_of(v)).collect::<Vec<_>>(), m.ambient());
    push(
        "Ker(chi) equals the numerical kernel",
        "Ker(chi) = N",
        span_text(&chi_classes),
        span_text(&num_classes),
    );

    let det = if m.dim() > 0 { m.gram_chi.determinant().ok() } else { Some(Rational::one()) };
    let statement = match &det {
        _ if m.dim() == 0 => "Hom-set is zero; both kernels are zero".to_string(),
        Some(d) if !d.is_zero() => {
            let kind = if d.abs().is_one() { "unimodular" } else { "nondegenerate" };
            format!("gram_chi is {kind} (det {d}); Ker(chi) and the numerical kernel are both zero")
        }
        _ => format!(
            "gram_chi is degenerate: Ker(chi) has dimension {}, the numerical kernel has dimension {}",
            left.len(),
            numerical.len()
        ),
    };
    EquivalenceReport {
        source: m.source.name.clone(),
        target: m.target.name.clone(),
        dimension: m.dim(),
        reverse_dimension: m.reverse_basis.len(),
        gram_chi: m.gram_chi.to_string_rows(),
        gram_int: m.gram_int.to_string_rows(),
        gram_chi_determinant: det.map(|d| d.to_string()),
        chi_kernel: chi_classes.iter().map(|v| vector_to_strings(v)).collect(),
        numerical_kernel: num_classes.iter().map(|v| vector_to_strings(v)).collect(),
        kernels_equal,
        statement,
        checks,
        chi_kernel_classes: chi_classes,
        numerical_kernel_classes: num_classes,
    }
}

/// Which kernel an ideal-stability sample tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KernelKind {
    Chi,
    Numerical,
}

/// Checks that `w ∘ v` (for `w` out of the target of `v`) stays in the kernel
/// of the composite Hom-set.
pub fn stable_after(kind: KernelKind, v_model: &HomSpaceModel, v: &[Rational], w_model: &HomSpaceModel, w: &[Rational], out: &HomSpaceModel) -> bool {
    let u = compose_class(&v_model.forms.env, v, &w_model.forms.env, w);
    in_kernel(kind, out, &u)
}

/// Checks that `v ∘ z` (for `z` into the source of `v`) stays in the kernel.
pub fn stable_before(kind: KernelKind, v_model: &HomSpaceModel, v: &[Rational], z_model: &HomSpaceModel, z: &[Rational], out: &HomSpaceModel) -> bool {
    let u = compose_class(&z_model.forms.env, z, &v_model.forms.env, v);
    in_kernel(kind, out, &u)
}

fn in_kernel(kind: KernelKind, m: &HomSpaceModel, u: &[Rational]) -> bool {
    match kind {
        KernelKind::Chi => m.in_chi_kernel(u),
        KernelKind::Numerical => m.in_numerical_kernel(u),
    }
}

/// Rank of the dualized basis of a Hom-set.
pub fn dual_rank(m: &HomSpaceModel) -> usize {
    let mut span = EchelonSpan::new(m.forms.rev.env.idempotent_count());
    m.basis.iter().filter(|b| span.insert(m.forms.duality.mul_vec(b))).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ground_field, path_algebra, Quiver};
    use crate::linalg::one;
    use crate::resolution::DEFAULT_CAP;

    fn a2() -> Arc<Algebra> {
        path_algebra(&Quiver::from_edges(2, &[(0, 1, "a")]).unwrap()).unwrap()
    }

    #[test]
    fn unit_motive() {
        let k = ground_field();
        let m = NCMotive::identity(&k, DEFAULT_CAP).unwrap();
        let id = Correspondence::identity(&m);
        assert_eq!(trace(&id, DEFAULT_CAP).unwrap(), one());
        assert_eq!(chi_hom(&id, &id).unwrap(), one());
        assert_eq!(intersection_number(&id, &id, DEFAULT_CAP).unwrap(), one());
        let model = build_hom_model(&m, &m, DEFAULT_CAP).unwrap();
        assert_eq!(model.dim(), 1);
        assert_eq!(model.gram_chi, Matrix::identity(1));
        let r = verify_equivalence(&model);
        assert!(r.pass(), "{:#?}", r.checks);
        assert!(r.chi_kernel.is_empty() && r.numerical_kernel.is_empty());
    }

    #[test]
    fn a2_identity() {
        let a = a2();
        let m = NCMotive::identity(&a, DEFAULT_CAP).unwrap();
        let id = Correspondence::identity(&m);
        assert_eq!(trace(&id, DEFAULT_CAP).unwrap(), int(2));
        assert_eq!(intersection_number(&id, &id, DEFAULT_CAP).unwrap(), int(2));
        assert_eq!(trace(&id.scale(&int(3)), DEFAULT_CAP).unwrap(), int(6));
        let twice = compose(&id, &id).unwrap();
        assert_eq!(twice.class(), id.class());
        let model = build_hom_model(&m, &m, DEFAULT_CAP).unwrap();
        assert_eq!(model.dim(), 4);
        assert!(model.gram_chi.determinant().unwrap().abs().is_one());
        let r = verify_equivalence(&model);
        assert!(r.pass(), "{:#?}", r.checks);
        assert!(r.statement.contains("unimodular"));
    }

    #[test]
    fn complex_and_class_composition_agree() {
        let a = a2();
        let m = NCMotive::identity(&a, DEFAULT_CAP).unwrap();
        let n = m.env().env.idempotent_count();
        for k in 0..n {
            let x = Correspondence::from_class(&m, &m, &unit_vector(n, k), DEFAULT_CAP).unwrap();
            for l in 0..n {
                let y = Correspondence::from_class(&m, &m, &unit_vector(n, l), DEFAULT_CAP).unwrap();
                let c = compose(&y, &x).unwrap();
                assert_eq!(c.class(), compose_class(m.env(), &x.class(), m.env(), &y.class()));
            }
        }
    }

    #[test]
    fn endpoints_are_checked() {
        let k = NCMotive::identity(&ground_field(), DEFAULT_CAP).unwrap();
        let m = NCMotive::identity(&a2(), DEFAULT_CAP).unwrap();
        let x = Correspondence::identity(&m);
        let y = Correspondence::identity(&k);
        assert!(matches!(compose(&y, &x), Err(Error::EndpointMismatch(_))));
        assert!(matches!(chi_hom(&x, &y), Err(Error::EndpointMismatch(_))));
    }
}
