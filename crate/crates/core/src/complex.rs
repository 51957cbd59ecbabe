//! Bounded cochain complexes: differentials raise the degree by one.

use std::sync::Arc;

use crate::algebra::{require_same, Algebra};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, rank, sign, EchelonSpan, Matrix, Vector};
use crate::module::Module;

/// A complex of finite-dimensional vector spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainComplex {
    lo: i64,
    dims: Vec<usize>,
    /// `diffs[k]` maps degree `lo + k` to `lo + k + 1`.
    diffs: Vec<Matrix>,
}

#[derive(Clone, Debug)]
pub struct Homology {
    pub degree: i64,
    pub dim: usize,
    /// Cycles whose classes form a basis of the homology.
    pub representatives: Vec<Vector>,
}

impl CochainComplex {
    pub fn new(lo: i64, dims: Vec<usize>, diffs: Vec<Matrix>) -> Result<Self> {
        if diffs.len() + 1 != dims.len().max(1) {
            return Err(Error::InvalidComplex("need one differential between consecutive degrees".into()));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.cols() != dims[k] || d.rows() != dims[k + 1] {
                return Err(Error::InvalidComplex(format!("differential in degree {} has the wrong shape", lo + k as i64)));
            }
        }
        for k in 1..diffs.len() {
            if !(&diffs[k] * &diffs[k - 1]).is_zero() {
                return Err(Error::InvalidComplex(format!("d^2 != 0 at degree {}", lo + k as i64 - 1)));
            }
        }
        Ok(CochainComplex { lo, dims, diffs })
    }

    pub fn zero() -> Self {
        CochainComplex { lo: 0, dims: Vec::new(), diffs: Vec::new() }
    }

    /// A single space in one degree.
    pub fn concentrated(degree: i64, dim: usize) -> Self {
        CochainComplex { lo: degree, dims: vec![dim], diffs: Vec::new() }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi()
    }

    pub fn dim(&self, n: i64) -> usize {
        self.index(n).map_or(0, |k| self.dims[k])
    }

    fn index(&self, n: i64) -> Option<usize> {
        (n >= self.lo && n <= self.hi()).then(|| (n - self.lo) as usize)
    }

    /// Differential `C^n -> C^{n+1}`, zero outside the stored range.
    pub fn differential(&self, n: i64) -> Matrix {
        match self.index(n) {
            Some(k) if k < self.diffs.len() => self.diffs[k].clone(),
            _ => Matrix::zeros(self.dim(n + 1), self.dim(n)),
        }
    }

    fn differential_rank(&self, n: i64) -> usize {
        match self.index(n) {
            Some(k) if k < self.diffs.len() => rank(&self.diffs[k]),
            _ => 0,
        }
    }

    pub fn homology_dim(&self, n: i64) -> usize {
        self.dim(n) - self.differential_rank(n) - self.differential_rank(n - 1)
    }

    /// `(degree, dim H^degree)` for every stored degree.
    pub fn homology_dims(&self) -> Vec<(i64, usize)> {
        let ranks: Vec<usize> = self.diffs.iter().map(rank).collect();
        self.degrees()
            .enumerate()
            .map(|(k, n)| {
                let out = ranks.get(k).copied().unwrap_or(0);
                let inc = if k > 0 { ranks[k - 1] } else { 0 };
                (n, self.dims[k] - out - inc)
            })
            .collect()
    }

    pub fn homology(&self, n: i64) -> Homology {
        let d = self.differential(n);
        let cycles = kernel_basis(&d);
        let prev = self.differential(n - 1);
        let mut span = EchelonSpan::new(self.dim(n));
        for c in prev.columns() {
            span.insert(c);
        }
        let representatives: Vec<Vector> = cycles.into_iter().filter(|z| span.insert(z.clone())).collect();
        Homology { degree: n, dim: representatives.len(), representatives }
    }

    /// `sum (-1)^n dim C^n`, which equals `sum (-1)^n dim H^n`.
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees().map(|n| sign_i64(n) * self.dim(n) as i64).sum()
    }

    pub fn homology_euler_characteristic(&self) -> i64 {
        self.homology_dims().into_iter().map(|(n, d)| sign_i64(n) * d as i64).sum()
    }

    pub fn is_acyclic(&self) -> bool {
        self.homology_dims().iter().all(|(_, d)| *d == 0)
    }
}

pub fn sign_i64(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// A bounded complex of right modules over one algebra.
#[derive(Clone, Debug)]
pub struct Complex {
    algebra: Arc<Algebra>,
    lo: i64,
    modules: Vec<Module>,
    diffs: Vec<Matrix>,
}

impl Complex {
    /// Builds a complex; checks shapes, `d^2 = 0` and that each differential is a homomorphism.
    pub fn new(algebra: Arc<Algebra>, lo: i64, modules: Vec<Module>, diffs: Vec<Matrix>) -> Result<Self> {
        let c = Complex::new_unchecked(algebra, lo, modules, diffs)?;
        c.check()?;
        Ok(c)
    }

    pub fn new_unchecked(algebra: Arc<Algebra>, lo: i64, modules: Vec<Module>, diffs: Vec<Matrix>) -> Result<Self> {
        if diffs.len() + 1 != modules.len().max(1) {
            return Err(Error::InvalidComplex("need one differential between consecutive degrees".into()));
        }
        for m in &modules {
            require_same(&algebra, m.algebra(), "complex component")?;
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.cols() != modules[k].dim() || d.rows() != modules[k + 1].dim() {
                return Err(Error::InvalidComplex(format!("differential in degree {} has the wrong shape", lo + k as i64)));
            }
        }
        Ok(Complex { algebra, lo, modules, diffs })
    }

    pub fn check(&self) -> Result<()> {
        for k in 1..self.diffs.len() {
            if !(&self.diffs[k] * &self.diffs[k - 1]).is_zero() {
                return Err(Error::InvalidComplex(format!("d^2 != 0 at degree {}", self.lo + k as i64 - 1)));
            }
        }
        for (k, d) in self.diffs.iter().enumerate() {
            if !self.modules[k].is_homomorphism(d, &self.modules[k + 1]) {
                return Err(Error::InvalidComplex(format!(
                    "differential in degree {} is not a module map",
                    self.lo + k as i64
                )));
            }
        }
        Ok(())
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        Complex { algebra, lo: 0, modules: Vec::new(), diffs: Vec::new() }
    }

    pub fn concentrated(m: Module, degree: i64) -> Self {
        Complex { algebra: m.algebra().clone(), lo: degree, modules: vec![m], diffs: Vec::new() }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.modules.len() as i64 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi()
    }

    fn index(&self, n: i64) -> Option<usize> {
        (n >= self.lo && n <= self.hi()).then(|| (n - self.lo) as usize)
    }

    pub fn module(&self, n: i64) -> Module {
        match self.index(n) {
            Some(k) => self.modules[k].clone(),
            None => Module::zero(self.algebra.clone()),
        }
    }

    pub fn module_ref(&self, n: i64) -> Option<&Module> {
        self.index(n).map(|k| &self.modules[k])
    }

    pub fn dim(&self, n: i64) -> usize {
        self.index(n).map_or(0, |k| self.modules[k].dim())
    }

    pub fn differential(&self, n: i64) -> Matrix {
        match self.index(n) {
            Some(k) if k < self.diffs.len() => self.diffs[k].clone(),
            _ => Matrix::zeros(self.dim(n + 1), self.dim(n)),
        }
    }

    pub fn underlying(&self) -> CochainComplex {
        CochainComplex {
            lo: self.lo,
            dims: self.modules.iter().map(Module::dim).collect(),
            diffs: self.diffs.clone(),
        }
    }

    pub fn homology_dims(&self) -> Vec<(i64, usize)> {
        self.underlying().homology_dims()
    }

    pub fn homology_dim(&self, n: i64) -> usize {
        self.underlying().homology_dim(n)
    }

    /// `C[k]^n = C^{n+k}` with differential multiplied by `(-1)^k`.
    pub fn shift(&self, k: i64) -> Complex {
        let s = sign(k);
        Complex {
            algebra: self.algebra.clone(),
            lo: self.lo - k,
            modules: self.modules.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&s)).collect(),
        }
    }

    /// Direct sum over the union of degree ranges.
    pub fn direct_sum(&self, other: &Complex) -> Result<Complex> {
        require_same(&self.algebra, &other.algebra, "direct sum of complexes")?;
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let modules = (lo..=hi)
            .map(|n| Module::direct_sum(&[&self.module(n), &other.module(n)]))
            .collect::<Result<Vec<_>>>()?;
        let diffs = (lo..hi)
            .map(|n| Matrix::block_diagonal(&[self.differential(n), other.differential(n)]))
            .collect();
        Ok(Complex { algebra: self.algebra.clone(), lo, modules, diffs })
    }

    /// Drops zero modules at either end.
    pub fn trimmed(&self) -> Complex {
        let nonzero: Vec<i64> = self.degrees().filter(|&n| self.dim(n) > 0).collect();
        let (Some(&lo), Some(&hi)) = (nonzero.first(), nonzero.last()) else {
            return Complex::zero(self.algebra.clone());
        };
        Complex {
            algebra: self.algebra.clone(),
            lo,
            modules: (lo..=hi).map(|n| self.module(n)).collect(),
            diffs: (lo..hi).map(|n| self.differential(n)).collect(),
        }
    }

    /// Dimension vectors summed with signs `(-1)^n`.
    pub fn euler_dimension_vector(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.algebra.idempotent_count()];
        for n in self.degrees() {
            let s = sign_i64(n);
            for (o, d) in out.iter_mut().zip(self.module(n).dimension_vector()) {
                *o += s * d as i64;
            }
        }
        out
    }
}

/// A degree-preserving map of complexes, one matrix per degree.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub source: Complex,
    pub target: Complex,
    /// Degree `n` matrix is at index `n - lo`, covering `lo..=hi`.
    pub lo: i64,
    pub maps: Vec<Matrix>,
}

impl ChainMap {
    pub fn new(source: Complex, target: Complex, lo: i64, maps: Vec<Matrix>) -> Result<Self> {
        let f = ChainMap { source, target, lo, maps };
        f.check()?;
        Ok(f)
    }

    pub fn identity(c: &Complex) -> ChainMap {
        ChainMap {
            source: c.clone(),
            target: c.clone(),
            lo: c.lo(),
            maps: c.degrees().map(|n| Matrix::identity(c.dim(n))).collect(),
        }
    }

    pub fn at(&self, n: i64) -> Matrix {
        let k = n - self.lo;
        if k >= 0 && (k as usize) < self.maps.len() {
            self.maps[k as usize].clone()
        } else {
            Matrix::zeros(self.target.dim(n), self.source.dim(n))
        }
    }

    fn range(&self) -> (i64, i64) {
        let lo = self.source.lo().min(self.target.lo()).min(self.lo);
        let hi = self.source.hi().max(self.target.hi()).max(self.lo + self.maps.len() as i64 - 1);
        (lo, hi)
    }

    pub fn check(&self) -> Result<()> {
        let (lo, hi) = self.range();
        for n in lo..=hi {
            let f = self.at(n);
            if f.rows() != self.target.dim(n) || f.cols() != self.source.dim(n) {
                return Err(Error::InvalidComplex(format!("chain map has the wrong shape in degree {n}")));
            }
            if let (Some(s), Some(t)) = (self.source.module_ref(n), self.target.module_ref(n)) {
                if !s.is_homomorphism(&f, t) {
                    return Err(Error::InvalidComplex(format!("chain map is not a module map in degree {n}")));
                }
            }
            let lhs = &self.target.differential(n) * &f;
            let rhs = &self.at(n + 1) * &self.source.differential(n);
            if lhs != rhs {
                return Err(Error::InvalidComplex(format!("chain map does not commute with d in degree {n}")));
            }
        }
        Ok(())
    }

    /// `cone(f)^n = C^{n+1} ⊕ D^n` with `d = [[-d_C, 0], [f, d_D]]`.
    pub fn cone(&self) -> Result<Complex> {
        let (c, d) = (&self.source, &self.target);
        let algebra = c.algebra().clone();
        let (lo, hi) = self.range();
        let (lo, hi) = (lo - 1, hi);
        let mut modules = Vec::new();
        for n in lo..=hi {
            modules.push(Module::direct_sum(&[&c.module(n + 1), &d.module(n)])?);
        }
        let mut diffs = Vec::new();
        for n in lo..hi {
            let (c1, d0) = (c.dim(n + 1), d.dim(n));
            let (c2, d1) = (c.dim(n + 2), d.dim(n + 1));
            let mut m = Matrix::zeros(c2 + d1, c1 + d0);
            m.set_block(0, 0, &-&c.differential(n + 1));
            m.set_block(c2, 0, &self.at(n + 1));
            m.set_block(c2, c1, &d.differential(n));
            diffs.push(m);
        }
        Ok(Complex::new_unchecked(algebra, lo, modules, diffs)?.trimmed())
    }
}
