//! Finite-dimensional algebras given by structure constants.
//!
//! Paths compose left to right: for an arrow `a: i -> j`, `e_i * a * e_j = a`.
//! Vertices are numbered from 0.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{int, is_zero_vector, unit_vector, zero_vector, Matrix, Rational, Subspace, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<Arrow>) -> Result<Self> {
        let q = Quiver { vertices, arrows };
        q.validate()?;
        Ok(q)
    }

    /// Builds a quiver from `(from, to, label)` triples.
    pub fn from_edges(vertices: usize, edges: &[(usize, usize, &str)]) -> Result<Self> {
        let arrows = edges
            .iter()
            .map(|&(from, to, label)| Arrow { from, to, label: label.to_string() })
            .collect();
        Self::new(vertices, arrows)
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for a in &self.arrows {
            if a.from >= self.vertices || a.to >= self.vertices {
                return Err(Error::InvalidQuiver(format!(
                    "arrow {} joins {} -> {} but there are {} vertices",
                    a.label, a.from, a.to, self.vertices
                )));
            }
            if a.label.is_empty() || a.label.contains('.') {
                return Err(Error::InvalidQuiver(format!("bad arrow label {:?}", a.label)));
            }
            if !seen.insert(a.label.as_str()) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow label {}", a.label)));
            }
        }
        Ok(())
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indegree = vec![0usize; self.vertices];
        for a in &self.arrows {
            indegree[a.to] += 1;
        }
        let mut ready: Vec<usize> = (0..self.vertices).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::new();
        while let Some(v) = ready.pop() {
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.from == v) {
                indegree[a.to] -= 1;
                if indegree[a.to] == 0 {
                    ready.push(a.to);
                }
            }
        }
        (order.len() == self.vertices).then_some(order)
    }

    /// Number of directed paths, trivial ones included, counted by depth-first search.
    pub fn count_paths(&self) -> Result<usize> {
        if !self.is_acyclic() {
            return Err(Error::CyclicQuiver);
        }
        fn from(q: &Quiver, v: usize, memo: &mut [Option<usize>]) -> usize {
            if let Some(n) = memo[v] {
                return n;
            }
            let n = 1 + q.arrows.iter().filter(|a| a.from == v).map(|a| from(q, a.to, memo)).sum::<usize>();
            memo[v] = Some(n);
            n
        }
        let mut memo = vec![None; self.vertices];
        Ok((0..self.vertices).map(|v| from(self, v, &mut memo)).sum())
    }

    /// The bilinear form `<d, e> = sum_i d_i e_i - sum_{a: i -> j} d_i e_j` as a matrix.
    pub fn euler_form(&self) -> Matrix {
        let mut m = Matrix::identity(self.vertices);
        for a in &self.arrows {
            m[(a.from, a.to)] -= Rational::one();
        }
        m
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { from: a.to, to: a.from, label: a.label.clone() })
                .collect(),
        }
    }
}

/// Sparse expansion of a product of two basis elements.
pub type SparseVec = Vec<(usize, Rational)>;

/// The projective right module `e_i A` with its action matrices.
#[derive(Debug)]
pub struct Projective {
    pub space: Subspace,
    /// `action[k]` is the matrix of `v -> v * b_k` on `e_i A`.
    pub action: Vec<Matrix>,
}

/// A finite-dimensional associative unital algebra over the rationals with a
/// complete set of orthogonal primitive idempotents and a radical basis.
pub struct Algebra {
    name: String,
    labels: Vec<String>,
    products: Vec<Vec<SparseVec>>,
    unit: Vector,
    idempotents: Vec<Vector>,
    vertex_labels: Vec<String>,
    radical: Vec<Vector>,
    factors: Option<(Arc<Algebra>, Arc<Algebra>)>,
    projectives: OnceLock<Vec<Projective>>,
    corners: OnceLock<Vec<Vec<Subspace>>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("name", &self.name)
            .field("dim", &self.dim())
            .field("idempotents", &self.vertex_labels)
            .finish()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.products == other.products
                && self.idempotents == other.idempotents
                && self.unit == other.unit)
    }
}

/// Raw description of an algebra, used for inline structure constants.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraData {
    pub name: String,
    pub labels: Vec<String>,
    /// `products[i][j]` lists `(k, c)` with `b_i * b_j = sum c * b_k`.
    pub products: Vec<Vec<Vec<(usize, String)>>>,
    pub unit: Vec<String>,
    pub idempotents: Vec<Vec<String>>,
    pub radical: Vec<Vec<String>>,
}

impl Algebra {
    #[allow(clippy::too_many_arguments)]
    fn from_parts(
        name: String,
        labels: Vec<String>,
        products: Vec<Vec<SparseVec>>,
        unit: Vector,
        idempotents: Vec<Vector>,
        vertex_labels: Vec<String>,
        radical: Vec<Vector>,
        factors: Option<(Arc<Algebra>, Arc<Algebra>)>,
    ) -> Algebra {
        Algebra {
            name,
            labels,
            products,
            unit,
            idempotents,
            vertex_labels,
            radical,
            factors,
            projectives: OnceLock::new(),
            corners: OnceLock::new(),
        }
    }

    /// Builds an algebra from explicit data and checks every axiom.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        products: Vec<Vec<SparseVec>>,
        unit: Vector,
        idempotents: Vec<Vector>,
        radical: Vec<Vector>,
    ) -> Result<Algebra> {
        let n = labels.len();
        if products.len() != n || products.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidAlgebra("structure constants must be dim x dim".into()));
        }
        if products.iter().flatten().flatten().any(|(k, _)| *k >= n) {
            return Err(Error::InvalidAlgebra("structure constant index out of range".into()));
        }
        if unit.len() != n || idempotents.iter().chain(&radical).any(|v| v.len() != n) {
            return Err(Error::InvalidAlgebra("vector length differs from dimension".into()));
        }
        let vertex_labels = (0..idempotents.len()).map(|i| format!("e{i}")).collect();
        let products = products
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|entries| {
                        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                        for (k, c) in entries {
                            *acc.entry(k).or_insert_with(Rational::zero) += c;
                        }
                        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
                    })
                    .collect()
            })
            .collect();
        let a = Algebra::from_parts(name.into(), labels, products, unit, idempotents, vertex_labels, radical, None);
        a.check_axioms()?;
        Ok(a)
    }

    pub fn from_data(data: &AlgebraData) -> Result<Algebra> {
        let parse = |s: &str| -> Result<Rational> {
            s.parse::<Rational>().map_err(|_| Error::InvalidAlgebra(format!("bad rational {s:?}")))
        };
        let parse_vec = |v: &[String]| -> Result<Vector> { v.iter().map(|s| parse(s)).collect() };
        let products = data
            .products
            .iter()
            .map(|row| {
                row.iter()
                    .map(|entries| entries.iter().map(|(k, c)| Ok((*k, parse(c)?))).collect::<Result<SparseVec>>())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Algebra::new(
            data.name.clone(),
            data.labels.clone(),
            products,
            parse_vec(&data.unit)?,
            data.idempotents.iter().map(|v| parse_vec(v)).collect::<Result<_>>()?,
            data.radical.iter().map(|v| parse_vec(v)).collect::<Result<_>>()?,
        )
    }

    pub fn to_data(&self) -> AlgebraData {
        let strs = |v: &Vector| v.iter().map(|q| q.to_string()).collect::<Vec<_>>();
        AlgebraData {
            name: self.name.clone(),
            labels: self.labels.clone(),
            products: self
                .products
                .iter()
                .map(|row| row.iter().map(|e| e.iter().map(|(k, c)| (*k, c.to_string())).collect()).collect())
                .collect(),
            unit: strs(&self.unit),
            idempotents: self.idempotents.iter().map(strs).collect(),
            radical: self.radical.iter().map(strs).collect(),
        }
    }

    /// Checks associativity on all basis triples, the unit laws, the idempotent
    /// relations, and that the radical basis spans a two-sided ideal of
    /// codimension equal to the number of idempotents.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.product_vector(i, j);
                for k in 0..n {
                    let left = self.right_mul_basis(&ij, k);
                    let jk = self.product_vector(j, k);
                    let right = self.left_mul_basis(i, &jk);
                    if left != right {
                        return Err(Error::InvalidAlgebra(format!(
                            "not associative on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            let b = unit_vector(n, i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::InvalidAlgebra(format!("unit fails on {}", self.labels[i])));
            }
        }
        let mut sum = zero_vector(n);
        for (i, e) in self.idempotents.iter().enumerate() {
            for (j, f) in self.idempotents.iter().enumerate() {
                let ef = self.mul(e, f);
                let expected = if i == j { e.clone() } else { zero_vector(n) };
                if ef != expected {
                    return Err(Error::InvalidAlgebra("idempotents are not orthogonal idempotents".into()));
                }
            }
            crate::linalg::axpy(&Rational::one(), e, &mut sum);
        }
        if sum != self.unit {
            return Err(Error::InvalidAlgebra("idempotents do not sum to the unit".into()));
        }
        let rad = Subspace::from_spanning(n, self.radical.iter().cloned());
        if rad.dim() != self.radical.len() {
            return Err(Error::InvalidAlgebra("radical basis is not independent".into()));
        }
        if rad.dim() + self.idempotents.len() != n {
            return Err(Error::InvalidAlgebra("algebra is not basic over the given idempotents".into()));
        }
        for r in &self.radical {
            for k in 0..n {
                let b = unit_vector(n, k);
                if !rad.contains(&self.mul(r, &b)) || !rad.contains(&self.mul(&b, r)) {
                    return Err(Error::InvalidAlgebra("radical is not a two-sided ideal".into()));
                }
            }
        }
        // A nilpotent ideal: some power of the radical vanishes.
        let mut power: Vec<Vector> = self.radical.clone();
        for _ in 0..=n {
            if power.iter().all(|v| is_zero_vector(v)) {
                return Ok(());
            }
            let next: Vec<Vector> = power
                .iter()
                .flat_map(|p| self.radical.iter().map(move |r| (p, r)))
                .map(|(p, r)| self.mul(p, r))
                .filter(|v| !is_zero_vector(v))
                .collect();
            power = Subspace::from_spanning(n, next).basis().columns();
        }
        Err(Error::InvalidAlgebra("radical is not nilpotent".into()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn idempotent_count(&self) -> usize {
        self.idempotents.len()
    }

    pub fn idempotent(&self, i: usize) -> &Vector {
        &self.idempotents[i]
    }

    pub fn idempotents(&self) -> &[Vector] {
        &self.idempotents
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn radical(&self) -> &[Vector] {
        &self.radical
    }

    pub fn factors(&self) -> Option<&(Arc<Algebra>, Arc<Algebra>)> {
        self.factors.as_ref()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i][j]
    }

    fn product_vector(&self, i: usize, j: usize) -> Vector {
        let mut v = zero_vector(self.dim());
        for (k, c) in &self.products[i][j] {
            v[*k] += c;
        }
        v
    }

    fn right_mul_basis(&self, u: &[Rational], k: usize) -> Vector {
        let mut out = zero_vector(self.dim());
        for (i, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (m, d) in &self.products[i][k] {
                out[*m] += c * d;
            }
        }
        out
    }

    fn left_mul_basis(&self, k: usize, u: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim());
        for (j, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (m, d) in &self.products[k][j] {
                out[*m] += c * d;
            }
        }
        out
    }

    /// Product of two elements in coordinates.
    pub fn mul(&self, u: &[Rational], v: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim());
        let vs: Vec<(usize, &Rational)> = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &vs {
                let row = &self.products[i][j];
                if row.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in row {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    pub fn is_unit_idempotent(&self) -> bool {
        self.idempotents.len() == 1
    }

    /// Cached `e_i A` for each idempotent with its right action matrices.
    pub fn projectives(&self) -> &[Projective] {
        self.projectives.get_or_init(|| {
            let n = self.dim();
            (0..self.idempotent_count())
                .map(|i| {
                    let e = &self.idempotents[i];
                    let space = Subspace::from_spanning(n, (0..n).map(|k| self.mul(e, &unit_vector(n, k))));
                    let basis = space.basis().columns();
                    let action = (0..n)
                        .map(|k| {
                            let images: Vec<Vector> = basis
                                .iter()
                                .map(|v| space.coordinates(&self.right_mul_basis(v, k)))
                                .collect();
                            Matrix::from_columns(space.dim(), &images)
                        })
                        .collect();
                    Projective { space, action }
                })
                .collect()
        })
    }

    pub fn projective(&self, i: usize) -> &Projective {
        &self.projectives()[i]
    }

    /// Cached corner spaces `e_i A e_j`.
    pub fn corners(&self) -> &[Vec<Subspace>] {
        self.corners.get_or_init(|| {
            let n = self.dim();
            let k = self.idempotent_count();
            (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| {
                            let ei = &self.idempotents[i];
                            let ej = &self.idempotents[j];
                            Subspace::from_spanning(
                                n,
                                (0..n).map(|b| self.mul(&self.mul(ei, &unit_vector(n, b)), ej)),
                            )
                        })
                        .collect()
                })
                .collect()
        })
    }

    pub fn corner(&self, i: usize, j: usize) -> &Subspace {
        &self.corners()[i][j]
    }

    /// Dimension vector of `e_i A`: entry `j` is `dim e_i A e_j`.
    pub fn cartan_row(&self, i: usize) -> Vec<usize> {
        (0..self.idempotent_count()).map(|j| self.corner(i, j).dim()).collect()
    }

    /// Matrix of left multiplication `v -> x * v` on the whole algebra.
    pub fn left_mult_matrix(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|k| self.mul(x, &unit_vector(n, k))).collect();
        Matrix::from_columns(n, &cols)
    }

    /// Matrix of right multiplication `v -> v * x` on the whole algebra.
    pub fn right_mult_matrix(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|k| self.mul(&unit_vector(n, k), x)).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn element_label(&self, v: &[Rational]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.labels[i].clone()
                } else {
                    format!("{}*{}", c, self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Path algebra of an acyclic quiver. Basis: trivial paths, then longer paths
/// by length and then lexicographically by their arrow labels.
pub fn path_algebra(q: &Quiver) -> Result<Arc<Algebra>> {
    q.validate()?;
    if !q.is_acyclic() {
        return Err(Error::CyclicQuiver);
    }
    // Each path: (source, target, arrow indices).
    let mut paths: Vec<(usize, usize, Vec<usize>)> = (0..q.vertices).map(|v| (v, v, Vec::new())).collect();
    let mut frontier: Vec<(usize, usize, Vec<usize>)> =
        q.arrows.iter().enumerate().map(|(k, a)| (a.from, a.to, vec![k])).collect();
    while !frontier.is_empty() {
        let mut layer = frontier.clone();
        layer.sort_by(|x, y| {
            let lx: Vec<&str> = x.2.iter().map(|&k| q.arrows[k].label.as_str()).collect();
            let ly: Vec<&str> = y.2.iter().map(|&k| q.arrows[k].label.as_str()).collect();
            lx.cmp(&ly)
        });
        paths.extend(layer);
        let mut next = Vec::new();
        for (s, t, arrows) in &frontier {
            for (k, a) in q.arrows.iter().enumerate() {
                if a.from == *t {
                    let mut p = arrows.clone();
                    p.push(k);
                    next.push((*s, a.to, p));
                }
            }
        }
        frontier = next;
    }
    let n = paths.len();
    let index: HashMap<(usize, Vec<usize>), usize> =
        paths.iter().enumerate().map(|(i, (s, _, p))| ((*s, p.clone()), i)).collect();
    let labels: Vec<String> = paths
        .iter()
        .map(|(s, _, p)| {
            if p.is_empty() {
                format!("e{s}")
            } else {
                p.iter().map(|&k| q.arrows[k].label.as_str()).collect::<Vec<_>>().join(".")
            }
        })
        .collect();
    let mut products = vec![vec![SparseVec::new(); n]; n];
    for (i, (si, ti, pi)) in paths.iter().enumerate() {
        for (j, (sj, _, pj)) in paths.iter().enumerate() {
            if ti != sj {
                continue;
            }
            let mut p = pi.clone();
            p.extend(pj);
            let k = index[&(*si, p)];
            products[i][j].push((k, Rational::one()));
        }
    }
    let idempotents: Vec<Vector> = (0..q.vertices).map(|v| unit_vector(n, v)).collect();
    let mut unit = zero_vector(n);
    for v in 0..q.vertices {
        unit[v] = int(1);
    }
    let radical = (q.vertices..n).map(|i| unit_vector(n, i)).collect();
    let vertex_labels = (0..q.vertices).map(|v| format!("e{v}")).collect();
    let name = quiver_name(q);
    Ok(Arc::new(Algebra::from_parts(name, labels, products, unit, idempotents, vertex_labels, radical, None)))
}

fn quiver_name(q: &Quiver) -> String {
    let arrows: Vec<String> = q.arrows.iter().map(|a| format!("{}:{}->{}", a.label, a.from, a.to)).collect();
    format!("kQ[{}; {}]", q.vertices, arrows.join(","))
}

/// The base field as a one-dimensional algebra.
pub fn ground_field() -> Arc<Algebra> {
    path_algebra(&Quiver { vertices: 1, arrows: Vec::new() }).expect("point quiver")
}

type Memo = Mutex<HashMap<Vec<usize>, (Vec<Arc<Algebra>>, Arc<Algebra>)>>;

fn memo_lookup(memo: &'static OnceLock<Memo>, args: &[&Arc<Algebra>], build: impl FnOnce() -> Algebra) -> Arc<Algebra> {
    let memo = memo.get_or_init(|| Mutex::new(HashMap::new()));
    let key: Vec<usize> = args.iter().map(|a| Arc::as_ptr(a) as usize).collect();
    if let Some((_, hit)) = memo.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let built = Arc::new(build());
    let mut guard = memo.lock().unwrap();
    let entry = guard
        .entry(key)
        .or_insert_with(|| (args.iter().map(|a| (*a).clone()).collect(), built));
    entry.1.clone()
}

/// Same vector space, reversed multiplication. Memoized per input so that
/// repeated calls share caches.
pub fn opposite(a: &Arc<Algebra>) -> Arc<Algebra> {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    memo_lookup(&MEMO, &[a], || opposite_uncached(a))
}

fn opposite_uncached(a: &Algebra) -> Algebra {
    let n = a.dim();
    let products = (0..n).map(|i| (0..n).map(|j| a.products[j][i].clone()).collect()).collect();
    let name = match a.name.strip_suffix("^op") {
        Some(base) => base.to_string(),
        None => format!("{}^op", a.name),
    };
    let factors = a.factors.as_ref().map(|(x, y)| (opposite(x), opposite(y)));
    Algebra::from_parts(
        name,
        a.labels.clone(),
        products,
        a.unit.clone(),
        a.idempotents.clone(),
        a.vertex_labels.clone(),
        a.radical.clone(),
        factors,
    )
}

/// Tensor product over the rationals; basis element `(i, j)` has index `i * dim(b) + j`.
pub fn tensor(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Arc<Algebra> {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    memo_lookup(&MEMO, &[a, b], || tensor_uncached(a, b))
}

fn tensor_uncached(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Algebra {
    let (da, db) = (a.dim(), b.dim());
    let n = da * db;
    let mut products = vec![vec![SparseVec::new(); n]; n];
    for i1 in 0..da {
        for j1 in 0..da {
            let pa = &a.products[i1][j1];
            if pa.is_empty() {
                continue;
            }
            for i2 in 0..db {
                for j2 in 0..db {
                    let pb = &b.products[i2][j2];
                    if pb.is_empty() {
                        continue;
                    }
                    let entry = &mut products[i1 * db + i2][j1 * db + j2];
                    for (k1, c1) in pa {
                        for (k2, c2) in pb {
                            entry.push((k1 * db + k2, c1 * c2));
                        }
                    }
                }
            }
        }
    }
    let labels = a
        .labels
        .iter()
        .flat_map(|x| b.labels.iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    let kron = crate::linalg::kron_vec;
    let idempotents = a
        .idempotents
        .iter()
        .flat_map(|e| b.idempotents.iter().map(move |f| kron(e, f)))
        .collect();
    let vertex_labels = a
        .vertex_labels
        .iter()
        .flat_map(|x| b.vertex_labels.iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    // rad(A ⊗ B) = rad A ⊗ B + A ⊗ rad B, with a basis built from A = E_A ⊕ rad A.
    let mut radical = Vec::new();
    for r in &a.radical {
        for j in 0..db {
            radical.push(kron(r, &unit_vector(db, j)));
        }
    }
    for e in &a.idempotents {
        for s in &b.radical {
            radical.push(kron(e, s));
        }
    }
    let radical = Subspace::from_spanning(n, radical).basis().columns();
    Algebra::from_parts(
        format!("({})⊗({})", a.name, b.name),
        labels,
        products,
        kron(&a.unit, &b.unit),
        idempotents,
        vertex_labels,
        radical,
        Some((a.clone(), b.clone())),
    )
}

/// The enveloping algebra `A^op ⊗ B` whose right modules are A-B-bimodules.
#[derive(Clone, Debug)]
pub struct BimoduleAlgebra {
    pub left: Arc<Algebra>,
    pub right: Arc<Algebra>,
    pub env: Arc<Algebra>,
}

impl BimoduleAlgebra {
    /// Index of the idempotent `e_i^op ⊗ f_j`.
    pub fn idempotent_index(&self, i: usize, j: usize) -> usize {
        i * self.right.idempotent_count() + j
    }

    pub fn split_idempotent(&self, k: usize) -> (usize, usize) {
        let nr = self.right.idempotent_count();
        (k / nr, k % nr)
    }

    /// Coordinates of `a^op ⊗ b`.
    pub fn pure(&self, a: &[Rational], b: &[Rational]) -> Vector {
        crate::linalg::kron_vec(a, b)
    }

    /// `a^op ⊗ 1`: acts on a bimodule by multiplying with `a` on the left.
    pub fn left_element(&self, a: &[Rational]) -> Vector {
        self.pure(a, self.right.unit())
    }

    /// `1 ⊗ b`: acts on a bimodule by multiplying with `b` on the right.
    pub fn right_element(&self, b: &[Rational]) -> Vector {
        self.pure(self.left.unit(), b)
    }

    pub fn swapped(&self) -> BimoduleAlgebra {
        bimodule_algebra(&self.right, &self.left)
    }
}

pub fn bimodule_algebra(left: &Arc<Algebra>, right: &Arc<Algebra>) -> BimoduleAlgebra {
    BimoduleAlgebra { left: left.clone(), right: right.clone(), env: tensor(&opposite(left), right) }
}

pub fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub fn require_same(a: &Arc<Algebra>, b: &Arc<Algebra>, what: &str) -> Result<()> {
    if same_algebra(a, b) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch(format!("{what}: {} vs {}", a.name(), b.name())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn a2() -> Arc<Algebra> {
        path_algebra(&Quiver::from_edges(2, &[(0, 1, "a")]).unwrap()).unwrap()
    }

    fn kronecker() -> Arc<Algebra> {
        path_algebra(&Quiver::from_edges(2, &[(0, 1, "a"), (0, 1, "b")]).unwrap()).unwrap()
    }

    #[test]
    fn point_is_one_dimensional() {
        let k = ground_field();
        assert_eq!(k.dim(), 1);
        assert!(k.check_axioms().is_ok());
    }

    #[test]
    fn a2_basis_and_products() {
        let a = a2();
        assert_eq!(a.labels(), ["e0", "e1", "a"]);
        assert_eq!(a.basis_product(0, 2), &vec![(2, int(1))]);
        assert_eq!(a.basis_product(2, 1), &vec![(2, int(1))]);
        assert!(a.basis_product(2, 0).is_empty());
        assert!(a.check_axioms().is_ok());
    }

    #[test]
    fn opposite_reverses_products() {
        let a = a2();
        let op = opposite(&a);
        assert_eq!(op.basis_product(2, 0), &vec![(2, int(1))]);
        assert!(op.basis_product(0, 2).is_empty());
        assert!(op.check_axioms().is_ok());
        let back = opposite(&op);
        assert!(same_algebra(&back, &a));
    }

    #[test]
    fn kronecker_dimension_matches_path_count() {
        let q = Quiver::from_edges(2, &[(0, 1, "a"), (0, 1, "b")]).unwrap();
        assert_eq!(kronecker().dim(), 4);
        assert_eq!(q.count_paths().unwrap(), 4);
    }

    #[test]
    fn cyclic_quiver_rejected() {
        let q = Quiver::from_edges(2, &[(0, 1, "a"), (1, 0, "b")]).unwrap();
        assert!(matches!(path_algebra(&q), Err(Error::CyclicQuiver)));
        let loop_q = Quiver::from_edges(1, &[(0, 0, "x")]).unwrap();
        assert!(matches!(path_algebra(&loop_q), Err(Error::CyclicQuiver)));
    }

    #[test]
    fn tensor_dimensions_and_axioms() {
        let a = a2();
        let t = tensor(&a, &opposite(&a));
        assert_eq!(t.dim(), 9);
        assert_eq!(t.idempotent_count(), 4);
        assert!(t.check_axioms().is_ok());
        let k = ground_field();
        let ka = tensor(&k, &a);
        assert_eq!(ka.dim(), a.dim());
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                assert_eq!(ka.basis_product(i, j), a.basis_product(i, j));
            }
        }
    }

    #[test]
    fn projectives_of_a2() {
        let a = a2();
        assert_eq!(a.projective(0).space.dim(), 2);
        assert_eq!(a.projective(1).space.dim(), 1);
        assert_eq!(a.cartan_row(0), vec![1, 1]);
        assert_eq!(a.cartan_row(1), vec![0, 1]);
    }

    #[test]
    fn inline_data_round_trip() {
        let a = kronecker();
        let b = Algebra::from_data(&a.to_data()).unwrap();
        assert!(*a == b);
    }

    #[test]
    fn inline_data_rejects_nonassociative() {
        let mut d = ground_field().to_data();
        d.products[0][0] = vec![(0, "2".into())];
        d.unit = vec!["1".into()];
        assert!(Algebra::from_data(&d).is_err());
    }
}
