//! Total Hom complexes out of perfect complexes.
//!
//! `Hom^k = ⊕_p Hom(M^p, N^{p+k})` with `D f = d_N f - (-1)^k f d_M`, so that
//! `H^k = Hom(M, N[k])` in the derived category. `Hom(e_i A, N) = N e_i`.

use std::collections::HashMap;

use num_traits::Zero;

use crate::algebra::require_same;
use crate::complex::{CochainComplex, Complex};
use crate::error::Result;
use crate::linalg::{sign, Matrix, Subspace};
use crate::perfect::PerfectComplex;

/// Blocks of `Hom^k`: one per summand `(p, s)` of `M`, with its offset.
fn layout(m: &PerfectComplex, k: i64, block_dim: impl Fn(i64, usize) -> usize) -> (Vec<(i64, usize, usize)>, usize) {
    let mut blocks = Vec::new();
    let mut offset = 0;
    for p in m.degrees() {
        for (s, &i) in m.summands(p).iter().enumerate() {
            blocks.push((p, s, offset));
            offset += block_dim(p + k, i);
        }
    }
    (blocks, offset)
}

fn find_offset(blocks: &[(i64, usize, usize)], p: i64, s: usize) -> usize {
    blocks.iter().find(|b| b.0 == p && b.1 == s).map(|b| b.2).expect("block exists")
}

/// Hom complex from a perfect complex into a complex of modules.
pub fn hom_complex(m: &PerfectComplex, n: &Complex) -> Result<CochainComplex> {
    require_same(m.algebra(), n.algebra(), "hom complex")?;
    if m.is_empty() || n.is_empty() {
        return Ok(CochainComplex::zero());
    }
    let a = m.algebra();
    let mut weights: HashMap<(i64, usize), Subspace> = HashMap::new();
    for q in n.degrees() {
        let module = n.module(q);
        for i in 0..a.idempotent_count() {
            weights.insert((q, i), module.weight_space(i));
        }
    }
    let wdim = |q: i64, i: usize| weights.get(&(q, i)).map_or(0, Subspace::dim);
    let (klo, khi) = (n.lo() - m.hi(), n.hi() - m.lo());
    let layouts: Vec<_> = (klo..=khi + 1).map(|k| layout(m, k, wdim)).collect();
    let dims: Vec<usize> = layouts[..layouts.len() - 1].iter().map(|l| l.1).collect();
    let mut diffs = Vec::new();
    for k in klo..khi {
        let (src, src_dim) = &layouts[(k - klo) as usize];
        let (dst, dst_dim) = &layouts[(k + 1 - klo) as usize];
        let mut d = Matrix::zeros(*dst_dim, *src_dim);
        for &(p, s, off) in src {
            let i = m.summands(p)[s];
            let q = p + k;
            // d_N after f.
            if let (Some(from), Some(to)) = (weights.get(&(q, i)), weights.get(&(q + 1, i))) {
                if from.dim() > 0 && to.dim() > 0 {
                    let block = from.restrict_map(&n.differential(q), to);
                    d.add_block(find_offset(dst, p, s), off, &block);
                }
            }
            // -(-1)^k f after d_M, landing in the block of each summand of M^{p-1}.
            if let Some(dm) = m.differential_ref(p - 1) {
                let Some(from) = weights.get(&(q, i)) else { continue };
                if from.dim() == 0 {
                    continue;
                }
                let module = n.module(q);
                for (s2, &i2) in m.summands(p - 1).iter().enumerate() {
                    let x = dm.get(s, s2);
                    if x.iter().all(Zero::is_zero) {
                        continue;
                    }
                    let to = &weights[&(q, i2)];
                    let block = from.restrict_map(&module.act(x), to).scale(&-sign(k));
                    d.add_block(find_offset(dst, p - 1, s2), off, &block);
                }
            }
        }
        diffs.push(d);
    }
    CochainComplex::new(klo, dims, diffs)
}

/// Hom complex between perfect complexes, using `Hom(e_i A, e_j A) = e_j A e_i`.
pub fn hom_perfect(m: &PerfectComplex, n: &PerfectComplex) -> Result<CochainComplex> {
    require_same(m.algebra(), n.algebra(), "hom complex")?;
    if m.is_empty() || n.is_empty() {
        return Ok(CochainComplex::zero());
    }
    let a = m.algebra();
    // Block (q, i) = ⊕_u e_{j_u} A e_i over summands u of N^q.
    let block_dim = |q: i64, i: usize| -> usize { n.summands(q).iter().map(|&j| a.corner(j, i).dim()).sum() };
    let (klo, khi) = (n.lo() - m.hi(), n.hi() - m.lo());
    let layouts: Vec<_> = (klo..=khi + 1).map(|k| layout(m, k, block_dim)).collect();
    let dims: Vec<usize> = layouts[..layouts.len() - 1].iter().map(|l| l.1).collect();
    let mut diffs = Vec::new();
    for k in klo..khi {
        let (src, src_dim) = &layouts[(k - klo) as usize];
        let (dst, dst_dim) = &layouts[(k + 1 - klo) as usize];
        let mut d = Matrix::zeros(*dst_dim, *src_dim);
        for &(p, s, off) in src {
            let i = m.summands(p)[s];
            let q = p + k;
            let nq = n.summands(q);
            // Column index inside the source block for each (u, basis element).
            let mut col = off;
            for (u, &j) in nq.iter().enumerate() {
                let corner = a.corner(j, i);
                for b in 0..corner.dim() {
                    let y = corner.basis_vector(b);
                    // d_N: y -> x_{u' u} y in e_{j_u'} A e_i.
                    if let Some(dn) = n.differential_ref(q) {
                        let base = find_offset(dst, p, s);
                        let mut row = base;
                        for (u2, &j2) in n.summands(q + 1).iter().enumerate() {
                            let target = a.corner(j2, i);
                            let x = dn.get(u2, u);
                            if x.iter().any(|c| !c.is_zero()) {
                                let image = target.coordinates(&a.mul(x, &y));
                                for (r, c) in image.into_iter().enumerate() {
                                    if !c.is_zero() {
                                        d[(row + r, col)] += c;
                                    }
                                }
                            }
                            row += target.dim();
                        }
                    }
                    // f d_M: y -> -(-1)^k y x for x in e_{i} A e_{i2}.
                    if let Some(dm) = m.differential_ref(p - 1) {
                        let coef = -sign(k);
                        for (s2, &i2) in m.summands(p - 1).iter().enumerate() {
                            let x = dm.get(s, s2);
                            if x.iter().all(Zero::is_zero) {
                                continue;
                            }
                            let base = find_offset(dst, p - 1, s2);
                            let row: usize = base + nq[..u].iter().map(|&j3| a.corner(j3, i2).dim()).sum::<usize>();
                            let target = a.corner(j, i2);
                            let image = target.coordinates(&a.mul(&y, x));
                            for (r, c) in image.into_iter().enumerate() {
                                if !c.is_zero() {
                                    d[(row + r, col)] += &coef * &c;
                                }
                            }
                        }
                    }
                    col += 1;
                }
            }
        }
        diffs.push(d);
    }
    CochainComplex::new(klo, dims, diffs)
}

/// `sum_k (-1)^k dim H^k Hom(M, N)`.
pub fn euler_pairing(m: &PerfectComplex, n: &PerfectComplex) -> Result<i64> {
    Ok(hom_perfect(m, n)?.homology_euler_characteristic())
}
