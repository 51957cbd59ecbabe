//! Bounded complexes of finitely generated projectives `⊕ e_i A`.
//!
//! A map `⊕_s e_{i_s} A -> ⊕_t e_{j_t} A` is a matrix over the algebra with
//! entry `(t, s)` in `e_{j_t} A e_{i_s}`; it sends the generator `e_{i_s}` to
//! `sum_t x_{ts}` and composes like an ordinary matrix product.

use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{require_same, Algebra};
use crate::complex::{sign_i64, Complex};
use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vector, sign, zero_vector, Matrix, Rational, Vector};
use crate::module::Module;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgMatrix {
    rows: Vec<usize>,
    cols: Vec<usize>,
    /// Row-major entries, each an algebra element in coordinates.
    entries: Vec<Vector>,
    dim: usize,
}

impl AlgMatrix {
    pub fn zeros(dim: usize, rows: Vec<usize>, cols: Vec<usize>) -> Self {
        let entries = vec![zero_vector(dim); rows.len() * cols.len()];
        AlgMatrix { rows, cols, entries, dim }
    }

    pub fn identity(a: &Algebra, summands: &[usize]) -> Self {
        let mut m = Self::zeros(a.dim(), summands.to_vec(), summands.to_vec());
        for (s, &i) in summands.iter().enumerate() {
            m.set(s, s, a.idempotent(i).clone());
        }
        m
    }

    /// Idempotent labels of the target summands.
    pub fn row_summands(&self) -> &[usize] {
        &self.rows
    }

    pub fn col_summands(&self) -> &[usize] {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, t: usize, s: usize) -> &Vector {
        &self.entries[t * self.cols.len() + s]
    }

    pub fn set(&mut self, t: usize, s: usize, x: Vector) {
        let n = self.cols.len();
        self.entries[t * n + s] = x;
    }

    pub fn add_to(&mut self, t: usize, s: usize, coef: &Rational, x: &[Rational]) {
        let n = self.cols.len();
        axpy(coef, x, &mut self.entries[t * n + s]);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| is_zero_vector(e))
    }

    pub fn scale(&self, c: &Rational) -> AlgMatrix {
        let mut m = self.clone();
        for e in m.entries.iter_mut() {
            for x in e.iter_mut() {
                if !x.is_zero() {
                    *x *= c;
                }
            }
        }
        m
    }

    /// `self * other` (apply `other` first).
    pub fn compose(&self, a: &Algebra, other: &AlgMatrix) -> AlgMatrix {
        assert_eq!(self.cols, other.rows, "summand mismatch in composition");
        let mut out = AlgMatrix::zeros(self.dim, self.rows.clone(), other.cols.clone());
        for t in 0..self.rows.len() {
            for m in 0..self.cols.len() {
                let x = self.get(t, m);
                if is_zero_vector(x) {
                    continue;
                }
                for s in 0..other.cols.len() {
                    let y = other.get(m, s);
                    if is_zero_vector(y) {
                        continue;
                    }
                    let p = a.mul(x, y);
                    out.add_to(t, s, &Rational::from_integer(1.into()), &p);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> AlgMatrix {
        let mut out = AlgMatrix::zeros(self.dim, self.cols.clone(), self.rows.clone());
        for t in 0..self.rows.len() {
            for s in 0..self.cols.len() {
                out.set(s, t, self.get(t, s).clone());
            }
        }
        out
    }

    pub fn block_diagonal(dim: usize, blocks: &[&AlgMatrix]) -> AlgMatrix {
        let rows: Vec<usize> = blocks.iter().flat_map(|b| b.rows.iter().copied()).collect();
        let cols: Vec<usize> = blocks.iter().flat_map(|b| b.cols.iter().copied()).collect();
        let mut out = AlgMatrix::zeros(dim, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.nrows();
            c0 += b.ncols();
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &AlgMatrix) {
        for t in 0..b.nrows() {
            for s in 0..b.ncols() {
                self.set(r0 + t, c0 + s, b.get(t, s).clone());
            }
        }
    }

    /// Applies a coordinate map to every entry (used to move between isomorphic algebras).
    pub fn map_entries(&self, dim: usize, rows: Vec<usize>, cols: Vec<usize>, f: impl Fn(&Vector) -> Vector) -> AlgMatrix {
        AlgMatrix { rows, cols, entries: self.entries.iter().map(f).collect(), dim }
    }

    /// Checks that entry `(t, s)` lies in `e_{rows[t]} A e_{cols[s]}`.
    pub fn check_corners(&self, a: &Algebra) -> Result<()> {
        for t in 0..self.nrows() {
            for s in 0..self.ncols() {
                let x = self.get(t, s);
                if x.len() != a.dim() {
                    return Err(Error::InvalidComplex("entry has the wrong length".into()));
                }
                if !is_zero_vector(x) && !a.corner(self.rows[t], self.cols[s]).contains(x) {
                    return Err(Error::InvalidComplex(format!(
                        "entry ({t}, {s}) is not in e{} A e{}",
                        self.rows[t], self.cols[s]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Matrix of the map on the realized modules.
    pub fn realize(&self, a: &Algebra) -> Matrix {
        let row_dims: Vec<usize> = self.rows.iter().map(|&i| a.projective(i).space.dim()).collect();
        let col_dims: Vec<usize> = self.cols.iter().map(|&i| a.projective(i).space.dim()).collect();
        let mut m = Matrix::zeros(row_dims.iter().sum(), col_dims.iter().sum());
        let mut r0 = 0;
        for t in 0..self.nrows() {
            let target = &a.projective(self.rows[t]).space;
            let mut c0 = 0;
            for s in 0..self.ncols() {
                let x = self.get(t, s);
                if !is_zero_vector(x) {
                    let source = &a.projective(self.cols[s]).space;
                    for j in 0..source.dim() {
                        let image = a.mul(x, &source.basis_vector(j));
                        let coords = target.coordinates(&image);
                        for (i, c) in coords.into_iter().enumerate() {
                            if !c.is_zero() {
                                m[(r0 + i, c0 + j)] = c;
                            }
                        }
                    }
                }
                c0 += col_dims[s];
            }
            r0 += row_dims[t];
        }
        m
    }
}

/// A bounded complex of projectives, `P^n = ⊕_s e_{i_s} A`.
#[derive(Clone, Debug)]
pub struct PerfectComplex {
    algebra: Arc<Algebra>,
    lo: i64,
    summands: Vec<Vec<usize>>,
    /// `diffs[k]` maps degree `lo + k` to `lo + k + 1`.
    diffs: Vec<AlgMatrix>,
}

impl PerfectComplex {
    pub fn new(algebra: Arc<Algebra>, lo: i64, summands: Vec<Vec<usize>>, diffs: Vec<AlgMatrix>) -> Result<Self> {
        let p = PerfectComplex::new_unchecked(algebra, lo, summands, diffs)?;
        p.check()?;
        Ok(p)
    }

    pub fn new_unchecked(algebra: Arc<Algebra>, lo: i64, summands: Vec<Vec<usize>>, diffs: Vec<AlgMatrix>) -> Result<Self> {
        if diffs.len() + 1 != summands.len().max(1) {
            return Err(Error::InvalidComplex("need one differential between consecutive degrees".into()));
        }
        let n = algebra.idempotent_count();
        if summands.iter().flatten().any(|&i| i >= n) {
            return Err(Error::InvalidComplex("summand idempotent out of range".into()));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.cols != summands[k] || d.rows != summands[k + 1] {
                return Err(Error::InvalidComplex(format!("differential in degree {} has the wrong shape", lo + k as i64)));
            }
        }
        Ok(PerfectComplex { algebra, lo, summands, diffs })
    }

    pub fn check(&self) -> Result<()> {
        for d in &self.diffs {
            d.check_corners(&self.algebra)?;
        }
        for k in 1..self.diffs.len() {
            if !self.diffs[k].compose(&self.algebra, &self.diffs[k - 1]).is_zero() {
                return Err(Error::InvalidComplex(format!("d^2 != 0 at degree {}", self.lo + k as i64 - 1)));
            }
        }
        Ok(())
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        PerfectComplex { algebra, lo: 0, summands: Vec::new(), diffs: Vec::new() }
    }

    /// `e_i A` placed in one degree.
    pub fn projective(algebra: Arc<Algebra>, i: usize, degree: i64) -> Self {
        PerfectComplex { algebra, lo: degree, summands: vec![vec![i]], diffs: Vec::new() }
    }

    /// The free module of rank one in degree 0.
    pub fn free(algebra: Arc<Algebra>) -> Self {
        let n = algebra.idempotent_count();
        let summands = (0..n).collect();
        PerfectComplex { algebra, lo: 0, summands: vec![summands], diffs: Vec::new() }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.summands.len() as i64 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.summands.iter().all(Vec::is_empty)
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi()
    }

    fn index(&self, n: i64) -> Option<usize> {
        (n >= self.lo && n <= self.hi()).then(|| (n - self.lo) as usize)
    }

    pub fn summands(&self, n: i64) -> &[usize] {
        self.index(n).map_or(&[], |k| &self.summands[k])
    }

    pub fn all_summands(&self) -> &[Vec<usize>] {
        &self.summands
    }

    /// Multiplicity of each `e_i A` in degree `n`.
    pub fn multiplicities(&self, n: i64) -> Vec<usize> {
        let mut m = vec![0; self.algebra.idempotent_count()];
        for &i in self.summands(n) {
            m[i] += 1;
        }
        m
    }

    pub fn differential(&self, n: i64) -> AlgMatrix {
        match self.index(n) {
            Some(k) if k < self.diffs.len() => self.diffs[k].clone(),
            _ => AlgMatrix::zeros(self.algebra.dim(), self.summands(n + 1).to_vec(), self.summands(n).to_vec()),
        }
    }

    pub fn differential_ref(&self, n: i64) -> Option<&AlgMatrix> {
        match self.index(n) {
            Some(k) if k < self.diffs.len() => Some(&self.diffs[k]),
            _ => None,
        }
    }

    /// Total number of indecomposable summands.
    pub fn size(&self) -> usize {
        self.summands.iter().map(Vec::len).sum()
    }

    /// `P[k]^n = P^{n+k}`, differential multiplied by `(-1)^k`.
    pub fn shift(&self, k: i64) -> PerfectComplex {
        let s = sign(k);
        PerfectComplex {
            algebra: self.algebra.clone(),
            lo: self.lo - k,
            summands: self.summands.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&s)).collect(),
        }
    }

    pub fn direct_sum(&self, other: &PerfectComplex) -> Result<PerfectComplex> {
        require_same(&self.algebra, &other.algebra, "direct sum of perfect complexes")?;
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let summands = (lo..=hi)
            .map(|n| [self.summands(n), other.summands(n)].concat())
            .collect();
        let diffs = (lo..hi)
            .map(|n| AlgMatrix::block_diagonal(self.algebra.dim(), &[&self.differential(n), &other.differential(n)]))
            .collect();
        Ok(PerfectComplex { algebra: self.algebra.clone(), lo, summands, diffs })
    }

    pub fn trimmed(&self) -> PerfectComplex {
        let nonzero: Vec<i64> = self.degrees().filter(|&n| !self.summands(n).is_empty()).collect();
        let (Some(&lo), Some(&hi)) = (nonzero.first(), nonzero.last()) else {
            return PerfectComplex::zero(self.algebra.clone());
        };
        PerfectComplex {
            algebra: self.algebra.clone(),
            lo,
            summands: (lo..=hi).map(|n| self.summands(n).to_vec()).collect(),
            diffs: (lo..hi).map(|n| self.differential(n)).collect(),
        }
    }

    /// The same complex as a complex of modules.
    pub fn realize(&self) -> Complex {
        if self.is_empty() {
            return Complex::zero(self.algebra.clone());
        }
        let a = &self.algebra;
        let modules: Vec<Module> = self
            .summands
            .iter()
            .map(|ss| realize_summands(a, ss))
            .collect();
        let diffs = self.diffs.iter().map(|d| d.realize(a)).collect();
        Complex::new_unchecked(a.clone(), self.lo, modules, diffs).expect("shapes agree by construction")
    }

    /// Class in the Grothendieck group, in the basis of simple modules.
    pub fn k0_coords(&self) -> Vec<i64> {
        let n = self.algebra.idempotent_count();
        let mut out = vec![0i64; n];
        for deg in self.degrees() {
            let s = sign_i64(deg);
            for &i in self.summands(deg) {
                for (j, d) in self.algebra.cartan_row(i).into_iter().enumerate() {
                    out[j] += s * d as i64;
                }
            }
        }
        out
    }

    /// Class in the basis of indecomposable projectives.
    pub fn projective_class(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.algebra.idempotent_count()];
        for deg in self.degrees() {
            for &i in self.summands(deg) {
                out[i] += sign_i64(deg);
            }
        }
        out
    }

    /// Replaces the algebra by an identical copy, e.g. a memoized instance.
    pub fn with_algebra(&self, algebra: Arc<Algebra>) -> Result<PerfectComplex> {
        require_same(&self.algebra, &algebra, "algebra replacement")?;
        Ok(PerfectComplex { algebra, ..self.clone() })
    }
}

/// `⊕_s e_{i_s} A` as a module.
pub fn realize_summands(a: &Arc<Algebra>, summands: &[usize]) -> Module {
    let parts: Vec<Module> = summands.iter().map(|&i| crate::module::indecomposable_projective(a, i)).collect();
    if parts.is_empty() {
        return Module::zero(a.clone());
    }
    let refs: Vec<&Module> = parts.iter().collect();
    Module::direct_sum(&refs).expect("same algebra")
}

/// A map of perfect complexes given by algebra matrices per degree.
#[derive(Clone, Debug)]
pub struct PerfectMap {
    pub source: PerfectComplex,
    pub target: PerfectComplex,
    pub lo: i64,
    pub maps: Vec<AlgMatrix>,
}

impl PerfectMap {
    pub fn at(&self, n: i64) -> AlgMatrix {
        let k = n - self.lo;
        if k >= 0 && (k as usize) < self.maps.len() {
            self.maps[k as usize].clone()
        } else {
            AlgMatrix::zeros(
                self.source.algebra.dim(),
                self.target.summands(n).to_vec(),
                self.source.summands(n).to_vec(),
            )
        }
    }

    fn range(&self) -> (i64, i64) {
        let lo = self.source.lo().min(self.target.lo());
        let hi = self.source.hi().max(self.target.hi());
        (lo, hi)
    }

    pub fn check(&self) -> Result<()> {
        let a = &self.source.algebra;
        let (lo, hi) = self.range();
        for n in lo..=hi {
            let f = self.at(n);
            if f.rows != self.target.summands(n) || f.cols != self.source.summands(n) {
                return Err(Error::InvalidComplex(format!("map has the wrong shape in degree {n}")));
            }
            f.check_corners(a)?;
            let lhs = self.target.differential(n).compose(a, &f);
            let rhs = self.at(n + 1).compose(a, &self.source.differential(n));
            if lhs != rhs {
                return Err(Error::InvalidComplex(format!("map does not commute with d in degree {n}")));
            }
        }
        Ok(())
    }

    /// `cone(f)^n = P^{n+1} ⊕ Q^n` with `d = [[-d_P, 0], [f, d_Q]]`.
    pub fn cone(&self) -> PerfectComplex {
        let a = &self.source.algebra;
        let dim = a.dim();
        let (lo, hi) = self.range();
        let (lo, hi) = (lo - 1, hi);
        let summands: Vec<Vec<usize>> = (lo..=hi)
            .map(|n| [self.source.summands(n + 1), self.target.summands(n)].concat())
            .collect();
        let minus = -Rational::from_integer(1.into());
        let diffs = (lo..hi)
            .map(|n| {
                let mut m = AlgMatrix::zeros(dim, summands[(n + 1 - lo) as usize].clone(), summands[(n - lo) as usize].clone());
                let p1 = self.source.summands(n + 1).len();
                let p2 = self.source.summands(n + 2).len();
                m.set_block(0, 0, &self.source.differential(n + 1).scale(&minus));
                m.set_block(p2, 0, &self.at(n + 1));
                m.set_block(p2, p1, &self.target.differential(n));
                m
            })
            .collect();
        PerfectComplex { algebra: a.clone(), lo, summands, diffs }.trimmed()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{path_algebra, Quiver};
    use crate::linalg::unit_vector;

    fn a2() -> Arc<Algebra> {
        path_algebra(&Quiver::from_edges(2, &[(0, 1, "a")]).unwrap()).unwrap()
    }

    /// `e1 A -> e0 A` by left multiplication with the arrow: resolves `S_0`.
    fn arrow_complex(a: &Arc<Algebra>) -> PerfectComplex {
        let mut d = AlgMatrix::zeros(3, vec![0], vec![1]);
        d.set(0, 0, unit_vector(3, 2));
        PerfectComplex::new(a.clone(), -1, vec![vec![1], vec![0]], vec![d]).unwrap()
    }

    #[test]
    fn realization_resolves_the_simple() {
        let a = a2();
        let p = arrow_complex(&a);
        let c = p.realize();
        c.check().unwrap();
        assert_eq!(c.homology_dims(), vec![(-1, 0), (0, 1)]);
        assert_eq!(p.k0_coords(), vec![1, 0]);
    }

    #[test]
    fn wrong_corner_is_rejected() {
        let a = a2();
        let mut d = AlgMatrix::zeros(3, vec![1], vec![0]);
        d.set(0, 0, unit_vector(3, 2));
        assert!(PerfectComplex::new(a, 0, vec![vec![0], vec![1]], vec![d]).is_err());
    }

    #[test]
    fn cone_classes_subtract() {
        let a = a2();
        let p = PerfectComplex::projective(a.clone(), 1, 0);
        let q = PerfectComplex::projective(a.clone(), 0, 0);
        let mut f = AlgMatrix::zeros(3, vec![0], vec![1]);
        f.set(0, 0, unit_vector(3, 2));
        let map = PerfectMap { source: p.clone(), target: q.clone(), lo: 0, maps: vec![f] };
        map.check().unwrap();
        let cone = map.cone();
        cone.check().unwrap();
        let expected: Vec<i64> = q.k0_coords().iter().zip(p.k0_coords()).map(|(x, y)| x - y).collect();
        assert_eq!(cone.k0_coords(), expected);
    }

    #[test]
    fn shift_flips_class() {
        let a = a2();
        let p = arrow_complex(&a);
        let s = p.shift(1);
        s.check().unwrap();
        assert_eq!(s.k0_coords(), vec![-1, 0]);
    }
}
