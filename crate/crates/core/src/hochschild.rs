//! Hochschild homology with bimodule coefficients.
//!
//! `HH_n(A, W) = H^{-n}(P ⊗_{A^e} W)` for a projective resolution `P` of the
//! diagonal bimodule. A summand `(A^op ⊗ A)(e_i ⊗ e_j)` of `P` contributes
//! `e_j W e_i`. The bar complexes below are independent cross-checks.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{bimodule_algebra, require_same, Algebra, BimoduleAlgebra};
use crate::complex::{sign_i64, CochainComplex, Complex};
use crate::error::{Error, Result};
use crate::invariants::check_smooth;
use crate::linalg::{kron_vec, sign, unit_vector, Matrix, Rational, Subspace, Vector};
use crate::module::Module;
use crate::perfect::PerfectComplex;

/// Dimensions of `HH_n` for consecutive `n` starting at `start`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HHProfile {
    pub start: i64,
    pub dims: Vec<usize>,
}

impl HHProfile {
    pub fn dim(&self, n: i64) -> usize {
        let k = n - self.start;
        if k < 0 {
            return 0;
        }
        self.dims.get(k as usize).copied().unwrap_or(0)
    }

    /// `sum_n (-1)^n dim HH_n`.
    pub fn euler(&self) -> i64 {
        self.dims.iter().enumerate().map(|(k, d)| sign_i64(self.start + k as i64) * *d as i64).sum()
    }

    /// Dimensions of `HH_0 .. HH_top`.
    pub fn up_to(&self, top: usize) -> Vec<usize> {
        (0..=top as i64).map(|n| self.dim(n)).collect()
    }
}

/// Resolution of the diagonal bimodule, cached per algebra and cap.
pub fn diagonal_resolution(a: &Arc<Algebra>, cap: usize) -> Result<Arc<PerfectComplex>> {
    type Cache = Mutex<HashMap<(usize, usize), (Arc<Algebra>, Arc<PerfectComplex>)>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (Arc::as_ptr(a) as usize, cap);
    if let Some((_, p)) = cache.lock().unwrap().get(&key) {
        return Ok(p.clone());
    }
    let check = check_smooth(a, cap)?;
    let p = Arc::new(check.resolution.ok_or(Error::CapExceeded { cap })?);
    cache.lock().unwrap().insert(key, (a.clone(), p.clone()));
    Ok(p)
}

/// Swaps the tensor factors of an element of `A^op ⊗ A`: `a ⊗ b -> b ⊗ a`.
fn swap(n: usize, v: &[Rational]) -> Vector {
    let mut w = vec![Rational::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            let x = &v[i * n + j];
            if !x.is_zero() {
                w[j * n + i] = x.clone();
            }
        }
    }
    w
}

/// The complex `P ⊗_{A^e} W` whose cohomology in degree `-n` is `HH_n`.
pub fn hochschild_complex(a: &Arc<Algebra>, w: &Complex, cap: usize) -> Result<CochainComplex> {
    let env = bimodule_algebra(a, a);
    require_same(&env.env, w.algebra(), "Hochschild coefficients")?;
    if w.is_empty() {
        return Ok(CochainComplex::zero());
    }
    let p = diagonal_resolution(a, cap)?;
    let n = a.dim();
    // e_j W^q e_i for each env idempotent (i, j) of a summand.
    let mut pieces: HashMap<(i64, usize), Subspace> = HashMap::new();
    for q in w.degrees() {
        let m = w.module(q);
        for k in 0..env.env.idempotent_count() {
            let (i, j) = env.split_idempotent(k);
            let e = env.env.idempotent(env.idempotent_index(j, i));
            pieces.insert((q, k), Subspace::column_space(&m.act(e)));
        }
    }
    let piece_dim = |q: i64, k: usize| pieces.get(&(q, k)).map_or(0, Subspace::dim);
    let (lo, hi) = (p.lo() + w.lo(), p.hi() + w.hi());
    // Layout of total degree t: blocks (p-degree, summand, offset).
    let layout = |t: i64| {
        let mut blocks = Vec::new();
        let mut off = 0;
        for pd in p.degrees() {
            for (s, &k) in p.summands(pd).iter().enumerate() {
                blocks.push((pd, s, off));
                off += piece_dim(t - pd, k);
            }
        }
        (blocks, off)
    };
    let layouts: Vec<_> = (lo..=hi).map(layout).collect();
    let find = |t: i64, pd: i64, s: usize| -> usize {
        layouts[(t - lo) as usize].0.iter().find(|b| b.0 == pd && b.1 == s).expect("block").2
    };
    let mut diffs = Vec::new();
    for t in lo..hi {
        let (src, src_dim) = &layouts[(t - lo) as usize];
        let dst_dim = layouts[(t + 1 - lo) as usize].1;
        let mut d = Matrix::zeros(dst_dim, *src_dim);
        for &(pd, s, off) in src {
            let q = t - pd;
            let k = p.summands(pd)[s];
            let Some(from) = pieces.get(&(q, k)) else { continue };
            if from.dim() == 0 {
                continue;
            }
            // d_P ⊗ 1: x = sum c (α ⊗ β) acts by w -> β w α.
            if let Some(dp) = p.differential_ref(pd) {
                let m = w.module(q);
                for (t2, &k2) in p.summands(pd + 1).iter().enumerate() {
                    let x = dp.get(t2, s);
                    if x.iter().all(Zero::is_zero) {
                        continue;
                    }
                    let to = &pieces[&(q, k2)];
                    let block = from.restrict_map(&m.act(&swap(n, x)), to);
                    d.add_block(find(t + 1, pd + 1, t2), off, &block);
                }
            }
            // (-1)^p 1 ⊗ d_W.
            if let Some(to) = pieces.get(&(q + 1, k)) {
                if to.dim() > 0 {
                    let block = from.restrict_map(&w.differential(q), to).scale(&sign(pd));
                    d.add_block(find(t + 1, pd, s), off, &block);
                }
            }
        }
        diffs.push(d);
    }
    CochainComplex::new(lo, layouts.iter().map(|l| l.1).collect(), diffs)
}

fn profile_from(c: &CochainComplex) -> HHProfile {
    let dims = c.homology_dims();
    if dims.is_empty() {
        return HHProfile { start: 0, dims: Vec::new() };
    }
    // HH_n = H^{-n}: reverse the cohomological order.
    let start = -c.hi();
    HHProfile { start, dims: dims.iter().rev().map(|&(_, d)| d).collect() }
}

/// Hochschild homology with coefficients in a complex of A-A-bimodules.
pub fn hochschild(a: &Arc<Algebra>, w: &Complex, cap: usize) -> Result<HHProfile> {
    Ok(profile_from(&hochschild_complex(a, w, cap)?))
}

/// `P ⊗_{A^e} Z` for a perfect bimodule complex `Z`, built from corners of `A^e`.
///
/// A summand `ε_u A^e` of `Z` paired with a summand `(i, j)` of `P` gives
/// `ε_u A^e ε_{(j, i)}`; `d_P` acts by right multiplication with the swapped
/// entry and `d_Z` by left multiplication.
pub fn hochschild_perfect_complex(a: &Arc<Algebra>, z: &PerfectComplex, cap: usize) -> Result<CochainComplex> {
    let env = bimodule_algebra(a, a);
    require_same(&env.env, z.algebra(), "Hochschild coefficients")?;
    if z.is_empty() {
        return Ok(CochainComplex::zero());
    }
    let p = diagonal_resolution(a, cap)?;
    let e = &env.env;
    let n = a.dim();
    let flip = |k: usize| {
        let (i, j) = env.split_idempotent(k);
        env.idempotent_index(j, i)
    };
    // Blocks of total degree t: (p-degree, P summand, Z summand, offset).
    let layout = |t: i64| {
        let mut blocks = Vec::new();
        let mut off = 0;
        for pd in p.degrees() {
            let q = t - pd;
            for (s, &k) in p.summands(pd).iter().enumerate() {
                for (u, &zu) in z.summands(q).iter().enumerate() {
                    blocks.push((pd, s, u, off));
                    off += e.corner(zu, flip(k)).dim();
                }
            }
        }
        (blocks, off)
    };
    let (lo, hi) = (p.lo() + z.lo(), p.hi() + z.hi());
    let layouts: Vec<_> = (lo..=hi).map(layout).collect();
    let find = |t: i64, pd: i64, s: usize, u: usize| -> usize {
        layouts[(t - lo) as usize].0.iter().find(|b| b.0 == pd && b.1 == s && b.2 == u).expect("block").3
    };
    let mut diffs = Vec::new();
    for t in lo..hi {
        let (src, src_dim) = &layouts[(t - lo) as usize];
        let dst_dim = layouts[(t + 1 - lo) as usize].1;
        let mut d = Matrix::zeros(dst_dim, *src_dim);
        for &(pd, s, u, off) in src {
            let q = t - pd;
            let k = p.summands(pd)[s];
            let zu = z.summands(q)[u];
            let from = e.corner(zu, flip(k));
            for b in 0..from.dim() {
                let w = from.basis_vector(b);
                let col = off + b;
                if let Some(dp) = p.differential_ref(pd) {
                    for (s2, &k2) in p.summands(pd + 1).iter().enumerate() {
                        let x = dp.get(s2, s);
                        if x.iter().all(Zero::is_zero) {
                            continue;
                        }
                        let image = e.corner(zu, flip(k2)).coordinates(&e.mul(&w, &swap(n, x)));
                        let row = find(t + 1, pd + 1, s2, u);
                        for (r, c) in image.into_iter().enumerate() {
                            if !c.is_zero() {
                                d[(row + r, col)] += c;
                            }
                        }
                    }
                }
                if let Some(dz) = z.differential_ref(q) {
                    let sg = sign(pd);
                    for (u2, &zu2) in z.summands(q + 1).iter().enumerate() {
                        let x = dz.get(u2, u);
                        if x.iter().all(Zero::is_zero) {
                            continue;
                        }
                        let image = e.corner(zu2, flip(k)).coordinates(&e.mul(x, &w));
                        let row = find(t + 1, pd, s, u2);
                        for (r, c) in image.into_iter().enumerate() {
                            if !c.is_zero() {
                                d[(row + r, col)] += &sg * &c;
                            }
                        }
                    }
                }
            }
        }
        diffs.push(d);
    }
    CochainComplex::new(lo, layouts.iter().map(|l| l.1).collect(), diffs)
}

/// Hochschild homology with coefficients in a perfect bimodule complex.
pub fn hochschild_perfect(a: &Arc<Algebra>, z: &PerfectComplex, cap: usize) -> Result<HHProfile> {
    Ok(profile_from(&hochschild_perfect_complex(a, z, cap)?))
}

/// `sum_n (-1)^n dim HH_n(A, Z)` for a perfect bimodule complex.
pub fn hochschild_euler(a: &Arc<Algebra>, z: &PerfectComplex, cap: usize) -> Result<i64> {
    Ok(hochschild_perfect(a, z, cap)?.euler())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BarKind {
    /// Normalized bar complex relative to the semisimple part spanned by the idempotents.
    Reduced,
    /// Unnormalized bar complex `W ⊗ A^{⊗n}` over the rationals.
    Full,
}

/// Bar-complex computation of `HH_0 .. HH_top` with coefficients in a bimodule.
pub fn bar_oracle(a: &Arc<Algebra>, w: &Module, top: usize, kind: BarKind) -> Result<HHProfile> {
    let env = bimodule_algebra(a, a);
    require_same(&env.env, w.algebra(), "bar complex coefficients")?;
    let complex = match kind {
        BarKind::Reduced => reduced_bar(&env, w, top + 1),
        BarKind::Full => full_bar(&env, w, top + 1),
    };
    // Chain degree n sits in cochain degree -n.
    let dims = (0..=top as i64).map(|n| complex.homology_dim(-n)).collect();
    Ok(HHProfile { start: 0, dims })
}

/// Left and right actions of algebra elements on a bimodule.
struct Actions<'a> {
    env: &'a BimoduleAlgebra,
    w: &'a Module,
}

impl Actions<'_> {
    fn right(&self, r: &[Rational]) -> Matrix {
        self.w.act(&self.env.right_element(r))
    }

    fn left(&self, r: &[Rational]) -> Matrix {
        self.w.act(&self.env.left_element(r))
    }
}

/// Basis of `e_i rad e_j` for every pair, as algebra elements.
fn radical_corners(a: &Algebra) -> Vec<Vec<Subspace>> {
    let k = a.idempotent_count();
    let n = a.dim();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let spanning = a
                        .radical()
                        .iter()
                        .map(|r| a.mul(&a.mul(a.idempotent(i), r), a.idempotent(j)));
                    Subspace::from_spanning(n, spanning)
                })
                .collect()
        })
        .collect()
}

/// Chains `r_1 ⊗ ... ⊗ r_n` of radical basis elements, each `r_k` in
/// `e_{v_{k-1}} rad e_{v_k}`; stored as `(vertices, basis indices)`.
fn radical_chains(corners: &[Vec<Subspace>], len: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let k = corners.len();
    let mut chains: Vec<(Vec<usize>, Vec<usize>)> = (0..k).map(|v| (vec![v], Vec::new())).collect();
    for _ in 0..len {
        let mut next = Vec::new();
        for (verts, idx) in &chains {
            let last = *verts.last().unwrap();
            for v in 0..k {
                for b in 0..corners[last][v].dim() {
                    let mut vs = verts.clone();
                    vs.push(v);
                    let mut ix = idx.clone();
                    ix.push(b);
                    next.push((vs, ix));
                }
            }
        }
        chains = next;
    }
    chains
}

fn reduced_bar(env: &BimoduleAlgebra, w: &Module, max: usize) -> CochainComplex {
    let a = &env.left;
    let corners = radical_corners(a);
    let acts = Actions { env, w };
    // Coefficient piece for a chain from v_0 to v_n: e_{v_n} W e_{v_0}.
    let nk = a.idempotent_count();
    let piece = |first: usize, last: usize| -> Subspace {
        let e = env.pure(a.idempotent(last), a.idempotent(first));
        Subspace::column_space(&w.act(&e))
    };
    let pieces: Vec<Vec<Subspace>> = (0..nk).map(|f| (0..nk).map(|l| piece(f, l)).collect()).collect();
    let chains: Vec<Vec<(Vec<usize>, Vec<usize>)>> = (0..=max).map(|n| radical_chains(&corners, n)).collect();
    let offsets: Vec<Vec<usize>> = chains
        .iter()
        .map(|cs| {
            let mut off = 0;
            cs.iter()
                .map(|(vs, _)| {
                    let o = off;
                    off += pieces[vs[0]][*vs.last().unwrap()].dim();
                    o
                })
                .chain(std::iter::once(0))
                .collect()
        })
        .collect();
    let dims: Vec<usize> = chains
        .iter()
        .map(|cs| cs.iter().map(|(vs, _)| pieces[vs[0]][*vs.last().unwrap()].dim()).sum())
        .collect();
    let index_of = |n: usize, vs: &[usize], ix: &[usize]| -> usize {
        chains[n].iter().position(|(v, i)| v == vs && i == ix).expect("chain exists")
    };
    // b_n : C_n -> C_{n-1}, stored as cochain maps degree -n -> -n+1.
    let mut diffs_by_n: Vec<Matrix> = Vec::new();
    for n in 1..=max {
        let mut d = Matrix::zeros(dims[n - 1], dims[n]);
        for (c, (vs, ix)) in chains[n].iter().enumerate() {
            let from = &pieces[vs[0]][vs[n]];
            if from.dim() == 0 {
                continue;
            }
            let col0 = offsets[n][c];
            let r: Vec<Vector> = (0..n).map(|k| corners[vs[k]][vs[k + 1]].basis_vector(ix[k])).collect();
            // w r_1 ⊗ r_2 ... r_n
            {
                let (tv, ti) = (vs[1..].to_vec(), ix[1..].to_vec());
                let t = index_of(n - 1, &tv, &ti);
                let to = &pieces[tv[0]][*tv.last().unwrap()];
                let block = from.restrict_map(&acts.right(&r[0]), to);
                d.add_block(offsets[n - 1][t], col0, &block);
            }
            // (-1)^k w ⊗ ... r_k r_{k+1} ...
            for k in 1..n {
                let prod = a.mul(&r[k - 1], &r[k]);
                if prod.iter().all(Zero::is_zero) {
                    continue;
                }
                let mut tv = vs.clone();
                tv.remove(k);
                let corner = &corners[vs[k - 1]][vs[k + 1]];
                let coords = corner.coordinates(&prod);
                for (b, c2) in coords.iter().enumerate() {
                    if c2.is_zero() {
                        continue;
                    }
                    let mut ti = ix.clone();
                    ti.remove(k);
                    ti[k - 1] = b;
                    let t = index_of(n - 1, &tv, &ti);
                    let to = &pieces[tv[0]][*tv.last().unwrap()];
                    let block = from.restrict_map(&Matrix::identity(w.dim()), to).scale(&(sign(k as i64) * c2));
                    d.add_block(offsets[n - 1][t], col0, &block);
                }
            }
            // (-1)^n r_n w ⊗ r_1 ... r_{n-1}
            {
                let (tv, ti) = (vs[..n].to_vec(), ix[..n - 1].to_vec());
                let t = index_of(n - 1, &tv, &ti);
                let to = &pieces[tv[0]][*tv.last().unwrap()];
                let block = from.restrict_map(&acts.left(&r[n - 1]), to).scale(&sign(n as i64));
                d.add_block(offsets[n - 1][t], col0, &block);
            }
        }
        diffs_by_n.push(d);
    }
    // Cochain degrees -max .. 0.
    let dims_co: Vec<usize> = (0..=max).rev().map(|n| dims[n]).collect();
    let diffs_co: Vec<Matrix> = (1..=max).rev().map(|n| diffs_by_n[n - 1].clone()).collect();
    CochainComplex::new(-(max as i64), dims_co, diffs_co).expect("bar differential squares to zero")
}

fn full_bar(env: &BimoduleAlgebra, w: &Module, max: usize) -> CochainComplex {
    let a = &env.left;
    let da = a.dim();
    let dw = w.dim();
    let acts = Actions { env, w };
    let basis: Vec<Vector> = (0..da).map(|k| unit_vector(da, k)).collect();
    let right: Vec<Matrix> = basis.iter().map(|b| acts.right(b)).collect();
    let left: Vec<Matrix> = basis.iter().map(|b| acts.left(b)).collect();
    let pow = |n: usize| da.pow(n as u32);
    // Index of w_i ⊗ a_{j_1} ⊗ ... ⊗ a_{j_n}: i * da^n + (j_1 ... j_n in base da).
    let mut diffs_by_n = Vec::new();
    for n in 1..=max {
        let mut d = Matrix::zeros(dw * pow(n - 1), dw * pow(n));
        for tail in 0..pow(n) {
            let digits: Vec<usize> = (0..n).map(|k| (tail / pow(n - 1 - k)) % da).collect();
            let encode = |ds: &[usize]| ds.iter().fold(0, |acc, &x| acc * da + x);
            for wi in 0..dw {
                let col = wi * pow(n) + tail;
                let wv = unit_vector(dw, wi);
                // w a_1 ⊗ a_2 ...
                let img = right[digits[0]].mul_vec(&wv);
                let rest = encode(&digits[1..]);
                for (r, c) in img.iter().enumerate() {
                    if !c.is_zero() {
                        d[(r * pow(n - 1) + rest, col)] += c;
                    }
                }
                for k in 1..n {
                    let (x, y) = (digits[k - 1], digits[k]);
                    for (m, c) in a.basis_product(x, y) {
                        let mut ds = digits.clone();
                        ds.remove(k);
                        ds[k - 1] = *m;
                        d[(wi * pow(n - 1) + encode(&ds), col)] += &sign(k as i64) * c;
                    }
                }
                let img = left[digits[n - 1]].mul_vec(&wv);
                let rest = encode(&digits[..n - 1]);
                let s = sign(n as i64);
                for (r, c) in img.iter().enumerate() {
                    if !c.is_zero() {
                        d[(r * pow(n - 1) + rest, col)] += &s * c;
                    }
                }
            }
        }
        diffs_by_n.push(d);
    }
    let dims_co: Vec<usize> = (0..=max).rev().map(|n| dw * pow(n)).collect();
    let diffs_co: Vec<Matrix> = (1..=max).rev().map(|n| diffs_by_n[n - 1].clone()).collect();
    CochainComplex::new(-(max as i64), dims_co, diffs_co).expect("bar differential squares to zero")
}

/// The free bimodule `A ⊗ A` as a right module over `A^op ⊗ A`.
pub fn free_bimodule(env: &BimoduleAlgebra) -> Module {
    crate::module::regular_module(&env.env)
}

/// Coordinates of `a^op ⊗ b` in `A^op ⊗ A`.
pub fn env_element(a: &[Rational], b: &[Rational]) -> Vector {
    kron_vec(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ground_field, path_algebra, Quiver};
    use crate::module::diagonal_bimodule;
    use crate::resolution::DEFAULT_CAP;

    fn a2() -> Arc<Algebra> {
        path_algebra(&Quiver::from_edges(2, &[(0, 1, "a")]).unwrap()).unwrap()
    }

    #[test]
    fn field_with_field_coefficients() {
        let k = ground_field();
        let env = bimodule_algebra(&k, &k);
        let d = diagonal_bimodule(&env).unwrap();
        let hh = hochschild(&k, &Complex::concentrated(d.clone(), 0), DEFAULT_CAP).unwrap();
        assert_eq!(hh.up_to(3), vec![1, 0, 0, 0]);
        assert_eq!(bar_oracle(&k, &d, 3, BarKind::Reduced).unwrap().dims, vec![1, 0, 0, 0]);
        assert_eq!(bar_oracle(&k, &d, 3, BarKind::Full).unwrap().dims, vec![1, 0, 0, 0]);
    }

    #[test]
    fn a2_diagonal() {
        let a = a2();
        let env = bimodule_algebra(&a, &a);
        let d = diagonal_bimodule(&env).unwrap();
        let hh = hochschild(&a, &Complex::concentrated(d.clone(), 0), DEFAULT_CAP).unwrap();
        assert_eq!(hh.up_to(4), vec![2, 0, 0, 0, 0]);
        assert_eq!(bar_oracle(&a, &d, 4, BarKind::Reduced).unwrap().dims, vec![2, 0, 0, 0, 0]);
        assert_eq!(bar_oracle(&a, &d, 2, BarKind::Full).unwrap().dims, vec![2, 0, 0]);
        let p = diagonal_resolution(&a, DEFAULT_CAP).unwrap();
        assert_eq!(hochschild_perfect(&a, &p, DEFAULT_CAP).unwrap().up_to(4), vec![2, 0, 0, 0, 0]);
    }

    #[test]
    fn perfect_and_realized_routes_agree() {
        let a = a2();
        let env = bimodule_algebra(&a, &a);
        let s = crate::module::simple_modules(&env.env);
        for m in &s {
            let r = crate::resolution::projective_resolution(m, DEFAULT_CAP).unwrap();
            let direct = hochschild_perfect(&a, &r, DEFAULT_CAP).unwrap();
            let realized = hochschild(&a, &r.realize(), DEFAULT_CAP).unwrap();
            let bar = bar_oracle(&a, m, 3, BarKind::Reduced).unwrap();
            assert_eq!(direct.up_to(3), realized.up_to(3));
            assert_eq!(direct.up_to(3), bar.dims);
        }
    }

    #[test]
    fn free_coefficients() {
        let a = a2();
        let env = bimodule_algebra(&a, &a);
        let f = free_bimodule(&env);
        let hh = hochschild(&a, &Complex::concentrated(f.clone(), 0), DEFAULT_CAP).unwrap();
        assert_eq!(hh.up_to(3), vec![3, 0, 0, 0]);
        assert_eq!(bar_oracle(&a, &f, 3, BarKind::Reduced).unwrap().dims, vec![3, 0, 0, 0]);
    }

    #[test]
    fn semisimple_pair() {
        let q = Quiver { vertices: 2, arrows: Vec::new() };
        let a = path_algebra(&q).unwrap();
        let env = bimodule_algebra(&a, &a);
        let d = diagonal_bimodule(&env).unwrap();
        assert_eq!(bar_oracle(&a, &d, 3, BarKind::Reduced).unwrap().dims, vec![2, 0, 0, 0]);
        assert_eq!(bar_oracle(&a, &d, 3, BarKind::Full).unwrap().dims, vec![2, 0, 0, 0]);
    }
}
