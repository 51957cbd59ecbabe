//! JSON interchange formats. Every top-level document may carry `"format": 1`.
//! See docs/formats.md for the schemas.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{bimodule_algebra, opposite, path_algebra, tensor, Algebra, AlgebraData, BimoduleAlgebra, Quiver};
use crate::complex::Complex;
use crate::corpus;
use crate::error::{Error, Result};
use crate::linalg::{one, Matrix, Rational};
use crate::module::Module;
use crate::motives::{Correspondence, NCMotive, Term};
use crate::perfect::PerfectComplex;
use crate::resolution::{resolve_complex, DEFAULT_CAP};

pub const FORMAT: u64 = 1;

/// Rejects documents whose `format` field is present and not 1.
pub fn check_format(v: &Value) -> Result<()> {
    match v.get("format") {
        None => Ok(()),
        Some(f) if f.as_u64() == Some(FORMAT) => Ok(()),
        Some(f) => Err(Error::Input(format!("unsupported format {f}, expected {FORMAT}"))),
    }
}

pub fn parse_document<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    let v: Value = serde_json::from_str(text)?;
    check_format(&v)?;
    Ok(serde_json::from_value(v)?)
}

pub fn read_document<T: serde::de::DeserializeOwned>(path: &str) -> Result<T> {
    parse_document(&std::fs::read_to_string(path)?)
}

/// A rational written as an integer or a string such as `"-3/2"`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    pub fn value(&self) -> Result<Rational> {
        match self {
            Number::Int(n) => Ok(Rational::from_integer((*n).into())),
            Number::Text(s) => s.trim().parse().map_err(|_| Error::Input(format!("bad rational {s:?}"))),
        }
    }
}

impl From<&Rational> for Number {
    fn from(q: &Rational) -> Self {
        match crate::linalg::to_i64(q) {
            Some(n) => Number::Int(n),
            None => Number::Text(q.to_string()),
        }
    }
}

fn default_one() -> Number {
    Number::Int(1)
}

fn matrix_from(rows: &[Vec<Number>], nrows: usize, ncols: usize, what: &str) -> Result<Matrix> {
    if nrows == 0 || ncols == 0 {
        return Ok(Matrix::zeros(nrows, ncols));
    }
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Input(format!("{what}: expected a {nrows}x{ncols} matrix")));
    }
    let mut m = Matrix::zeros(nrows, ncols);
    for (i, r) in rows.iter().enumerate() {
        for (j, x) in r.iter().enumerate() {
            m[(i, j)] = x.value()?;
        }
    }
    Ok(m)
}

pub fn matrix_to_json(m: &Matrix) -> Vec<Vec<Number>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(Number::from).collect()).collect()
}

/// How an algebra is given.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSpec {
    /// A corpus name such as `"A2"`.
    Name(String),
    Corpus { corpus: String },
    Wrapped { quiver: Quiver },
    Structure { structure: AlgebraData },
    Tensor { tensor: Box<(AlgebraSpec, AlgebraSpec)> },
    Opposite { opposite: Box<AlgebraSpec> },
    /// `A^op ⊗ B`, whose right modules are A-B-bimodules.
    Bimodule { bimodule: Box<(AlgebraSpec, AlgebraSpec)> },
    Quiver(Quiver),
}

type Interned = Mutex<HashMap<String, Arc<Algebra>>>;

fn interned(key: String, build: impl FnOnce() -> Result<Arc<Algebra>>) -> Result<Arc<Algebra>> {
    static TABLE: OnceLock<Interned> = OnceLock::new();
    let table = TABLE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(a) = table.lock().unwrap().get(&key) {
        return Ok(a.clone());
    }
    let a = build()?;
    Ok(table.lock().unwrap().entry(key).or_insert(a).clone())
}

impl AlgebraSpec {
    /// Builds the algebra. Equal specs give the same `Arc`, and quivers equal
    /// to a corpus quiver give the corpus algebra, so caches are shared.
    pub fn load(&self) -> Result<Arc<Algebra>> {
        match self {
            AlgebraSpec::Name(n) | AlgebraSpec::Corpus { corpus: n } => corpus::algebra(n)
                .map(|c| c.algebra.clone())
                .ok_or_else(|| Error::Input(format!("unknown corpus algebra {n:?}"))),
            AlgebraSpec::Quiver(q) | AlgebraSpec::Wrapped { quiver: q } => {
                if let Some(c) = corpus::algebras().iter().find(|c| c.quiver.as_ref() == Some(q)) {
                    return Ok(c.algebra.clone());
                }
                if q.vertices == 1 && q.arrows.is_empty() {
                    return Ok(corpus::algebras()[0].algebra.clone());
                }
                interned(serde_json::to_string(q)?, || path_algebra(q))
            }
            AlgebraSpec::Structure { structure } => {
                interned(serde_json::to_string(structure)?, || Ok(Arc::new(Algebra::from_data(structure)?)))
            }
            AlgebraSpec::Tensor { tensor: pair } => Ok(tensor(&pair.0.load()?, &pair.1.load()?)),
            AlgebraSpec::Opposite { opposite: a } => Ok(opposite(&a.load()?)),
            AlgebraSpec::Bimodule { bimodule: pair } => Ok(bimodule_algebra(&pair.0.load()?, &pair.1.load()?).env),
        }
    }

    /// Corpus name when there is one, else the algebra's own name.
    pub fn display_name(&self) -> Result<String> {
        let a = self.load()?;
        Ok(corpus::algebras()
            .iter()
            .find(|c| Arc::ptr_eq(&c.algebra, &a))
            .map(|c| c.name.to_string())
            .unwrap_or_else(|| a.name().to_string()))
    }
}

/// An algebra document: the spec itself, optionally with `format`.
pub fn read_algebra(path: &str) -> Result<(AlgebraSpec, Arc<Algebra>)> {
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    check_format(&v)?;
    let v = match v {
        Value::Object(mut m) => {
            m.remove("format");
            Value::Object(m)
        }
        other => other,
    };
    let spec: AlgebraSpec = serde_json::from_value(v)?;
    let a = spec.load()?;
    Ok((spec, a))
}

/// Fills in actions of basis elements that are products of given ones.
/// `left` selects `L(xy) = L(x)L(y)`; otherwise `R(xy) = R(y)R(x)`.
fn complete_actions(a: &Algebra, dim: usize, given: &HashMap<String, Vec<Vec<Number>>>, left: bool) -> Result<Vec<Matrix>> {
    let n = a.dim();
    let mut known: Vec<Option<Matrix>> = vec![None; n];
    for (label, rows) in given {
        let k = a.label_index(label).ok_or_else(|| Error::Input(format!("unknown basis label {label:?}")))?;
        known[k] = Some(matrix_from(rows, dim, dim, label)?);
    }
    loop {
        let mut progress = false;
        for i in 0..n {
            for j in 0..n {
                let prod = a.basis_product(i, j);
                let [(k, c)] = prod.as_slice() else { continue };
                if known[*k].is_some() {
                    continue;
                }
                if let (Some(x), Some(y)) = (&known[i], &known[j]) {
                    let m = if left { x * y } else { y * x };
                    known[*k] = Some(m.scale(&(one() / c)));
                    progress = true;
                }
            }
        }
        if !progress {
            break;
        }
    }
    known
        .into_iter()
        .enumerate()
        .map(|(k, m)| m.ok_or_else(|| Error::Input(format!("no action given for {}", a.labels()[k]))))
        .collect()
}

/// Right module: `{"algebra": <spec>, "dim": d, "action": {"<label>": [[..]]}}`.
/// Actions of products may be omitted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSpec>,
    pub dim: usize,
    pub action: HashMap<String, Vec<Vec<Number>>>,
}

impl ModuleSpec {
    pub fn load(&self, implied: Option<&Arc<Algebra>>) -> Result<Module> {
        let a = match (&self.algebra, implied) {
            (Some(s), _) => s.load()?,
            (None, Some(a)) => a.clone(),
            (None, None) => return Err(Error::Input("module without an algebra".into())),
        };
        let action = complete_actions(&a, self.dim, &self.action, false)?;
        Module::new(a, self.dim, action)
    }

    pub fn from_module(m: &Module, algebra: Option<AlgebraSpec>) -> Self {
        let action = m.algebra().labels().iter().cloned().zip(m.actions().iter().map(matrix_to_json)).collect();
        ModuleSpec { algebra, dim: m.dim(), action }
    }
}

/// A-B-bimodule through its two actions: `left` for `x -> a x`, `right` for `x -> x b`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BimoduleSpec {
    pub dim: usize,
    pub left: HashMap<String, Vec<Vec<Number>>>,
    pub right: HashMap<String, Vec<Vec<Number>>>,
}

impl BimoduleSpec {
    /// The module over `A^op ⊗ B` with `x * (a^op ⊗ b) = a x b`.
    pub fn load(&self, env: &BimoduleAlgebra) -> Result<Module> {
        let l = complete_actions(&env.left, self.dim, &self.left, true)?;
        let r = complete_actions(&env.right, self.dim, &self.right, false)?;
        for (i, x) in l.iter().enumerate() {
            for (j, y) in r.iter().enumerate() {
                if &(x * y) != &(y * x) {
                    return Err(Error::InvalidModule(format!(
                        "left action of {} and right action of {} do not commute",
                        env.left.labels()[i],
                        env.right.labels()[j]
                    )));
                }
            }
        }
        let action = l.iter().flat_map(|x| r.iter().map(move |y| x * y)).collect();
        Module::new(env.env.clone(), self.dim, action)
    }
}

/// Hochschild coefficients: an A-A-bimodule given by its two actions, or a
/// right module over the enveloping algebra.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoefficientSpec {
    Bimodule(BimoduleSpec),
    Module(ModuleSpec),
}

impl CoefficientSpec {
    pub fn load(&self, a: &Arc<Algebra>) -> Result<Module> {
        let env = bimodule_algebra(a, a);
        match self {
            CoefficientSpec::Bimodule(b) => b.load(&env),
            CoefficientSpec::Module(m) => {
                let m = m.load(Some(&env.env))?;
                crate::algebra::require_same(m.algebra(), &env.env, "coefficients")?;
                Ok(m)
            }
        }
    }
}

/// A bounded complex of modules: `modules[k]` sits in degree `lo + k` and
/// `differentials[k]` maps it to the next one.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSpec>,
    #[serde(default)]
    pub lo: i64,
    pub modules: Vec<ModuleSpec>,
    #[serde(default)]
    pub differentials: Vec<Vec<Vec<Number>>>,
}

impl ComplexSpec {
    pub fn load(&self, implied: Option<&Arc<Algebra>>) -> Result<Complex> {
        let a = match (&self.algebra, implied) {
            (Some(s), _) => s.load()?,
            (None, Some(a)) => a.clone(),
            (None, None) => return Err(Error::Input("complex without an algebra".into())),
        };
        let modules = self.modules.iter().map(|m| m.load(Some(&a))).collect::<Result<Vec<_>>>()?;
        if self.differentials.len() + 1 != modules.len().max(1) {
            return Err(Error::Input("need one differential between consecutive modules".into()));
        }
        let diffs = self
            .differentials
            .iter()
            .enumerate()
            .map(|(k, d)| matrix_from(d, modules[k + 1].dim(), modules[k].dim(), "differential"))
            .collect::<Result<Vec<_>>>()?;
        Complex::new(a, self.lo, modules, diffs)
    }

    /// Replaces the complex by a perfect complex quasi-isomorphic to it.
    pub fn resolve(&self, implied: Option<&Arc<Algebra>>, cap: usize) -> Result<PerfectComplex> {
        Ok(resolve_complex(&self.load(implied)?, cap)?.perfect)
    }
}

/// One term `coef * [X]` of an idempotent or correspondence.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermSpec {
    #[serde(default = "default_one")]
    pub coef: Number,
    #[serde(flatten)]
    pub object: ObjectSpec,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ObjectSpec {
    /// The indecomposable projective with this idempotent index, in degree 0.
    Projective { projective: usize },
    Module { module: ModuleSpec },
    Complex { complex: ComplexSpec },
}

impl TermSpec {
    pub fn load(&self, env: &Arc<Algebra>, cap: usize) -> Result<Term> {
        let complex = match &self.object {
            ObjectSpec::Projective { projective } => {
                if *projective >= env.idempotent_count() {
                    return Err(Error::Input(format!("no projective with index {projective}")));
                }
                PerfectComplex::projective(env.clone(), *projective, 0)
            }
            ObjectSpec::Module { module } => crate::resolution::projective_resolution(&module.load(Some(env))?, cap)?,
            ObjectSpec::Complex { complex } => complex.resolve(Some(env), cap)?,
        };
        Ok(Term::new(self.coef.value()?, complex))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdempotentSpec {
    /// `"id"`.
    Keyword(String),
    /// `e_v` as the bimodule `A e_v ⊗ e_v A`.
    Vertex { vertex: usize },
    /// `id - e_v`.
    Complement { complement: usize },
    Terms { terms: Vec<TermSpec> },
}

impl Default for IdempotentSpec {
    fn default() -> Self {
        IdempotentSpec::Keyword("id".into())
    }
}

/// `{"algebra": <spec>, "idempotent": ..., "name": optional}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MotiveSpec {
    pub algebra: AlgebraSpec,
    #[serde(default)]
    pub idempotent: IdempotentSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl MotiveSpec {
    pub fn load(&self, cap: usize) -> Result<Arc<NCMotive>> {
        let a = self.algebra.load()?;
        let alg = self.algebra.display_name()?;
        let check_vertex = |v: usize| {
            if v < a.idempotent_count() {
                Ok(())
            } else {
                Err(Error::Input(format!("{alg} has no vertex {v}")))
            }
        };
        let diagonal = || -> Result<Term> { Ok(Term::new(one(), (*crate::hochschild::diagonal_resolution(&a, cap)?).clone())) };
        let (label, terms) = match &self.idempotent {
            IdempotentSpec::Keyword(k) if k == "id" => ("id".to_string(), vec![diagonal()?]),
            IdempotentSpec::Keyword(k) => return Err(Error::Input(format!("unknown idempotent {k:?}"))),
            IdempotentSpec::Vertex { vertex } => {
                check_vertex(*vertex)?;
                (format!("e{vertex}"), vec![Term::new(one(), corpus::vertex_idempotent(&a, *vertex))])
            }
            IdempotentSpec::Complement { complement } => {
                check_vertex(*complement)?;
                let p = corpus::vertex_idempotent(&a, *complement);
                (format!("1-e{complement}"), vec![diagonal()?, Term::new(-one(), p)])
            }
            IdempotentSpec::Terms { terms } => {
                let env = bimodule_algebra(&a, &a).env;
                ("e".to_string(), terms.iter().map(|t| t.load(&env, cap)).collect::<Result<Vec<_>>>()?)
            }
        };
        let name = self.name.clone().unwrap_or_else(|| format!("({alg}, {label})"));
        NCMotive::new(name, &a, terms)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CorrespondenceSpec {
    /// `"identity"` or `"random"`.
    Keyword(String),
    /// Simple coordinates in `K_0(A^op ⊗ B)`.
    Class { class: Vec<Number> },
    Terms { terms: Vec<TermSpec> },
}

impl CorrespondenceSpec {
    /// `None` means "draw at random".
    pub fn load(&self, source: &Arc<NCMotive>, target: &Arc<NCMotive>, cap: usize) -> Result<Option<Correspondence>> {
        match self {
            CorrespondenceSpec::Keyword(k) if k == "random" => Ok(None),
            CorrespondenceSpec::Keyword(k) if k == "identity" => {
                crate::motives::same_motive(source, target)
                    .then(|| Correspondence::identity(source))
                    .map(Some)
                    .ok_or_else(|| Error::Input("identity needs equal source and target".into()))
            }
            CorrespondenceSpec::Keyword(k) => Err(Error::Input(format!("unknown correspondence {k:?}"))),
            CorrespondenceSpec::Class { class } => {
                let v = class.iter().map(Number::value).collect::<Result<Vec<_>>>()?;
                let n = bimodule_algebra(source.algebra(), target.algebra()).env.idempotent_count();
                if v.len() != n {
                    return Err(Error::Input(format!("class has {} coordinates, expected {n}", v.len())));
                }
                Correspondence::from_class(source, target, &v, cap).map(Some)
            }
            CorrespondenceSpec::Terms { terms } => {
                let env = bimodule_algebra(source.algebra(), target.algebra()).env;
                let terms = terms.iter().map(|t| t.load(&env, cap)).collect::<Result<Vec<_>>>()?;
                Correspondence::new(source, target, terms).map(Some)
            }
        }
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bar_depth: Option<usize>,
}

/// Two motives, optional correspondences between them, and options.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Scenario {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub source: MotiveSpec,
    /// Defaults to the source.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<MotiveSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<CorrespondenceSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<CorrespondenceSpec>,
    #[serde(default)]
    pub options: Options,
}

impl Scenario {
    pub fn cap(&self) -> usize {
        self.options.cap.unwrap_or(DEFAULT_CAP)
    }

    pub fn motives(&self, cap: usize) -> Result<(Arc<NCMotive>, Arc<NCMotive>)> {
        let s = self.source.load(cap)?;
        let t = match &self.target {
            Some(t) => t.load(cap)?,
            None => s.clone(),
        };
        Ok((s, t))
    }
}

/// `true` when every coefficient of the term list is one; handy for reports.
pub fn unit_coefficients(terms: &[Term]) -> bool {
    terms.iter().all(|t| t.coef.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quiver_documents_resolve_to_corpus_algebras() {
        let spec: AlgebraSpec =
            parse_document(r#"{"format": 1, "vertices": 2, "arrows": [{"from": 0, "to": 1, "label": "a"}]}"#).unwrap();
        let a = spec.load().unwrap();
        assert!(Arc::ptr_eq(&a, &corpus::algebra("A2").unwrap().algebra));
        assert_eq!(spec.display_name().unwrap(), "A2");
    }

    #[test]
    fn wrong_format_is_rejected() {
        let r: Result<AlgebraSpec> = parse_document(r#"{"format": 2, "corpus": "A2"}"#);
        assert!(matches!(r, Err(Error::Input(_))));
    }

    #[test]
    fn module_actions_extend_to_paths() {
        let spec: ModuleSpec = serde_json::from_str(
            r#"{"algebra": "A3", "dim": 3, "action": {
                "e0": [[1,0,0],[0,0,0],[0,0,0]], "e1": [[0,0,0],[0,1,0],[0,0,0]], "e2": [[0,0,0],[0,0,0],[0,0,1]],
                "a": [[0,0,0],[1,0,0],[0,0,0]], "b": [[0,0,0],[0,0,0],[0,1,0]]}}"#,
        )
        .unwrap();
        let m = spec.load(None).unwrap();
        assert_eq!(m.dimension_vector(), vec![1, 1, 1]);
        assert!(m.is_projective());
    }

    #[test]
    fn rationals_parse() {
        let x: Number = serde_json::from_str(r#""-3/2""#).unwrap();
        assert_eq!(x.value().unwrap(), crate::linalg::frac(-3, 2));
    }
}
