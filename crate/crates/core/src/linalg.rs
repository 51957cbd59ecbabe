//! Exact rational scalars and dense matrices.
//!
//! Everything downstream (homology, resolutions, pairings) bottoms out in the
//! elimination routines here. Matrices are dense and row-major; elimination
//! skips zero entries, which keeps the 0/±1 matrices produced by path algebras
//! cheap even at a few hundred rows.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// A column vector of rationals.
pub type Vector = Vec<Rational>;

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `(+1)` or `(-1)` as a rational, according to the parity of `k`.
pub fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Converts an integral rational to `i64`, `None` if it is not an integer or overflows.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if !q.is_integer() {
        return None;
    }
    i64::try_from(q.to_integer()).ok()
}

pub fn kron_vec(a: &[Rational], b: &[Rational]) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            if x.is_zero() || y.is_zero() {
                out.push(Rational::zero());
            } else {
                out.push(x * y);
            }
        }
    }
    out
}

pub fn axpy(alpha: &Rational, x: &[Rational], y: &mut [Rational]) {
    if alpha.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += alpha * xi;
        }
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|q| q.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vector]) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix { rows: rows.len(), cols: ncols, data: rows.concat() })
    }

    /// Builds an `rows x cols` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    m[(r, c)] = x.clone();
                }
            }
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        Self::from_fn(nrows, ncols, |r, c| int(rows[r][c]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        if s.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| if x.is_zero() { x.clone() } else { x * s }).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        let mut out = zero_vector(self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = &self.data[r * self.cols + c];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    /// `self += alpha * other`.
    pub fn add_scaled(&mut self, alpha: &Rational, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        axpy(alpha, &other.data, &mut self.data);
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r1, c1, r2, c2) = (self.rows, self.cols, other.rows, other.cols);
        let mut m = Matrix::zeros(r1 * r2, c1 * c2);
        for i in 0..r1 {
            for j in 0..c1 {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            m[(i * r2 + k, j * c2 + l)] = a * b;
                        }
                    }
                }
            }
        }
        m
    }

    pub fn set_block(&mut self, row0: usize, col0: usize, block: &Matrix) {
        assert!(row0 + block.rows <= self.rows && col0 + block.cols <= self.cols);
        for r in 0..block.rows {
            for c in 0..block.cols {
                let x = &block[(r, c)];
                if !x.is_zero() {
                    self[(row0 + r, col0 + c)] = x.clone();
                }
            }
        }
    }

    pub fn add_block(&mut self, row0: usize, col0: usize, block: &Matrix) {
        assert!(row0 + block.rows <= self.rows && col0 + block.cols <= self.cols);
        for r in 0..block.rows {
            for c in 0..block.cols {
                let x = &block[(r, c)];
                if !x.is_zero() {
                    self[(row0 + r, col0 + c)] += x;
                }
            }
        }
    }

    pub fn block(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |r, c| self[(row0 + r, col0 + c)].clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), self.cols, |r, c| self[(rows[r], c)].clone())
    }

    pub fn block_diagonal(blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(Matrix::rows).sum();
        let cols = blocks.iter().map(Matrix::cols).sum();
        let mut m = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn hstack(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(rows, cols);
        let mut c0 = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            m.set_block(0, c0, b);
            c0 += b.cols;
        }
        m
    }

    pub fn vstack(blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut m = Matrix::zeros(rows, cols);
        let mut r0 = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            m.set_block(r0, 0, b);
            r0 += b.rows;
        }
        m
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn determinant(&self) -> Result<Rational> {
        determinant(self)
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(to_i64).collect::<Option<Vec<_>>>())
            .collect()
    }

    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|r| self.row(r).iter().map(|q| q.to_string()).collect()).collect()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let brow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !b.is_zero() {
                        *o += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), rhs);
        out
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), rhs);
        out
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&-Rational::one())
    }
}

/// Reduced row echelon form: each stored row has a leading 1 at its pivot
/// column and zeros in every other pivot column.
#[derive(Clone, Debug)]
pub struct Rref {
    pub rows: Vec<Vector>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

fn nonzero_indices(v: &[Rational]) -> Vec<usize> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i).collect()
}

/// `target -= factor * source`, touching only the listed support of `source`.
fn eliminate(target: &mut [Rational], factor: &Rational, source: &[Rational], support: &[usize]) {
    for &j in support {
        let s = &source[j];
        target[j] -= factor * s;
    }
}

pub fn rref_rows(mut rows: Vec<Vector>, cols: usize) -> Rref {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(found) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = rows[rank][col].recip();
        if !inv.is_one() {
            for x in rows[rank].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = std::mem::take(&mut rows[rank]);
        let support = nonzero_indices(&pivot_row);
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank {
                continue;
            }
            if !row[col].is_zero() {
                let factor = row[col].clone();
                eliminate(row, &factor, &pivot_row, &support);
            }
        }
        rows[rank] = pivot_row;
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    Rref { rows, pivots, cols }
}

pub fn rref(m: &Matrix) -> Rref {
    rref_rows(m.row_vectors(), m.cols)
}

/// Rank over the rationals.
pub fn rank(m: &Matrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    // Eliminate along the shorter side.
    if m.rows > m.cols {
        let mut span = EchelonSpan::new(m.rows);
        for c in 0..m.cols {
            span.insert(m.column(c));
        }
        return span.dim();
    }
    let mut span = EchelonSpan::new(m.cols);
    for r in 0..m.rows {
        span.insert(m.row(r).to_vec());
    }
    span.dim()
}

/// Basis of the right null space `{v : m v = 0}`; free variables are taken in
/// ascending column order, each contributing the vector with a 1 in its slot.
pub fn kernel_basis(m: &Matrix) -> Vec<Vector> {
    let r = rref(m);
    kernel_from_rref(&r)
}

pub fn kernel_from_rref(r: &Rref) -> Vec<Vector> {
    let mut is_pivot = vec![false; r.cols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..r.cols).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vector(r.cols);
        v[free] = Rational::one();
        for (row, &p) in r.rows.iter().zip(&r.pivots) {
            if !row[free].is_zero() {
                v[p] = -row[free].clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// Some exact solution of `m x = b`, or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Rational]) -> Result<Option<Vector>> {
    if b.len() != m.rows {
        return Err(Error::Dimension(format!(
            "right-hand side has length {}, matrix has {} rows",
            b.len(),
            m.rows
        )));
    }
    let rows: Vec<Vector> = (0..m.rows)
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();
    let r = rref_rows(rows, m.cols + 1);
    if r.pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = zero_vector(m.cols);
    for (row, &p) in r.rows.iter().zip(&r.pivots) {
        x[p] = row[m.cols].clone();
    }
    Ok(Some(x))
}

pub fn determinant(m: &Matrix) -> Result<Rational> {
    if !m.is_square() {
        return Err(Error::Dimension("determinant of a non-square matrix".into()));
    }
    let n = m.rows;
    let mut rows = m.row_vectors();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(found) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
            return Ok(Rational::zero());
        };
        if found != col {
            rows.swap(found, col);
            det = -det;
        }
        let pivot = rows[col][col].clone();
        det *= &pivot;
        let pivot_row = rows[col].clone();
        let support = nonzero_indices(&pivot_row);
        for row in rows.iter_mut().skip(col + 1) {
            if !row[col].is_zero() {
                let factor = &row[col] / &pivot;
                eliminate(row, &factor, &pivot_row, &support);
            }
        }
    }
    Ok(det)
}

pub fn inverse(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::Dimension("inverse of a non-square matrix".into()));
    }
    let n = m.rows;
    let rows: Vec<Vector> = (0..n)
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.extend(unit_vector(n, r));
            row
        })
        .collect();
    let r = rref_rows(rows, 2 * n);
    if r.pivots.len() < n || r.pivots[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    Ok(Matrix::from_fn(n, n, |i, j| r.rows[i][n + j].clone()))
}

/// Incrementally maintained span of vectors in semi-reduced echelon form.
///
/// Row `k` is zero at the pivots of rows `0..k`, so reducing a vector against
/// rows in insertion order yields its normal form modulo the span.
#[derive(Clone, Debug)]
pub struct EchelonSpan {
    len: usize,
    rows: Vec<(usize, Vector, Vec<usize>)>,
}

impl EchelonSpan {
    pub fn new(len: usize) -> Self {
        EchelonSpan { len, rows: Vec::new() }
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, mut v: Vector) -> Vector {
        for (p, row, support) in &self.rows {
            if !v[*p].is_zero() {
                let factor = v[*p].clone();
                eliminate(&mut v, &factor, row, support);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        is_zero_vector(&self.reduce(v.to_vec()))
    }

    /// Adds `v` to the span; returns `true` if the dimension grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        if !inv.is_one() {
            for x in r.iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let support = nonzero_indices(&r);
        self.rows.push((p, r, support));
        true
    }
}

/// A subspace with a chosen basis and a coordinate map back from the ambient space.
#[derive(Clone, Debug)]
pub struct Subspace {
    /// Ambient dimension x subspace dimension; columns are the basis.
    basis: Matrix,
    /// Subspace dimension x ambient dimension; `coords * basis = I`.
    coords: Matrix,
}

impl Subspace {
    /// Keeps the spanning vectors that are independent of the earlier ones.
    pub fn from_spanning(ambient: usize, spanning: impl IntoIterator<Item = Vector>) -> Self {
        let mut span = EchelonSpan::new(ambient);
        let mut chosen = Vec::new();
        for v in spanning {
            if span.insert(v.clone()) {
                chosen.push(v);
            }
        }
        Self::from_independent(ambient, chosen)
    }

    /// Column space of `m`, using its independent columns as basis.
    pub fn column_space(m: &Matrix) -> Self {
        Self::from_spanning(m.rows(), m.columns())
    }

    fn from_independent(ambient: usize, basis_vectors: Vec<Vector>) -> Self {
        let basis = Matrix::from_columns(ambient, &basis_vectors);
        let dim = basis_vectors.len();
        if dim == 0 {
            return Subspace { basis, coords: Matrix::zeros(0, ambient) };
        }
        // Rows of `basis` where it is invertible: the pivot columns of its transpose.
        let pivot_rows = rref(&basis.transpose()).pivots;
        let square = basis.select_rows(&pivot_rows);
        let inv = inverse(&square).expect("independent basis has an invertible square minor");
        let mut coords = Matrix::zeros(dim, ambient);
        for (k, &row) in pivot_rows.iter().enumerate() {
            for i in 0..dim {
                coords[(i, row)] = inv[(i, k)].clone();
            }
        }
        Subspace { basis, coords }
    }

    pub fn full(n: usize) -> Self {
        Subspace { basis: Matrix::identity(n), coords: Matrix::identity(n) }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn coords(&self) -> &Matrix {
        &self.coords
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        self.basis.column(i)
    }

    /// Coordinates of a vector assumed to lie in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Vector {
        self.coords.mul_vec(v)
    }

    pub fn embed(&self, coords: &[Rational]) -> Vector {
        self.basis.mul_vec(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.embed(&self.coordinates(v)) == v
    }

    /// Matrix of `map` restricted to this subspace and corestricted to `target`,
    /// assuming `map` carries this subspace into `target`.
    pub fn restrict_map(&self, map: &Matrix, target: &Subspace) -> Matrix {
        &(&target.coords * map) * &self.basis
    }
}

/// The quotient `V / U` of a coordinate space by a subspace.
#[derive(Clone, Debug)]
pub struct Quotient {
    ambient: usize,
    /// Quotient dimension x ambient dimension.
    projection: Matrix,
    /// Ambient dimension x quotient dimension: unit vectors at the non-pivot slots.
    section: Matrix,
}

impl Quotient {
    pub fn new(ambient: usize, relations: impl IntoIterator<Item = Vector>) -> Self {
        let rows: Vec<Vector> = relations.into_iter().collect();
        let r = rref_rows(rows, ambient);
        let mut pivot_index = vec![None; ambient];
        for (k, &p) in r.pivots.iter().enumerate() {
            pivot_index[p] = Some(k);
        }
        let free: Vec<usize> = (0..ambient).filter(|&c| pivot_index[c].is_none()).collect();
        let mut projection = Matrix::zeros(free.len(), ambient);
        let mut section = Matrix::zeros(ambient, free.len());
        for (q, &f) in free.iter().enumerate() {
            section[(f, q)] = Rational::one();
        }
        for j in 0..ambient {
            match pivot_index[j] {
                None => {
                    let q = free.binary_search(&j).unwrap();
                    projection[(q, j)] = Rational::one();
                }
                Some(k) => {
                    for (q, &f) in free.iter().enumerate() {
                        let x = &r.rows[k][f];
                        if !x.is_zero() {
                            projection[(q, j)] = -x.clone();
                        }
                    }
                }
            }
        }
        Quotient { ambient, projection, section }
    }

    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn section(&self) -> &Matrix {
        &self.section
    }

    /// Matrix induced on quotients by a map carrying relations into relations.
    pub fn induced_map(&self, map: &Matrix, target: &Quotient) -> Matrix {
        &(&target.projection * map) * &self.section
    }
}

/// Mutual containment of two spans given by spanning vectors.
pub fn same_span(a: &[Vector], b: &[Vector], ambient: usize) -> bool {
    let mut sa = EchelonSpan::new(ambient);
    for v in a {
        sa.insert(v.clone());
    }
    let mut sb = EchelonSpan::new(ambient);
    for v in b {
        sb.insert(v.clone());
    }
    a.iter().all(|v| sb.contains(v)) && b.iter().all(|v| sa.contains(v))
}

/// Canonical basis of a span: the rows of its reduced echelon form.
pub fn canonical_basis(vectors: &[Vector], ambient: usize) -> Vec<Vector> {
    rref_rows(vectors.to_vec(), ambient).rows
}

pub fn vector_to_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|q| q.to_string()).collect()
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}
