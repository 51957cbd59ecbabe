//! Projective resolutions of bounded complexes.
//!
//! The resolution `P -> C` is built from the top degree down. At degree `n`
//! the cycles of the partial mapping cone in `P^{n+1} ⊕ C^n` are computed and
//! new summands `e_i A` are added for cycle generators that are independent
//! modulo boundaries and the radical. Below the bottom of `C` this is the
//! usual minimal resolution by projective covers.

use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::Algebra;
use crate::complex::{ChainMap, Complex};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, EchelonSpan, Matrix, Vector};
use crate::module::Module;
use crate::perfect::{realize_summands, AlgMatrix, PerfectComplex};

pub const DEFAULT_CAP: usize = 16;

/// A perfect complex with a quasi-isomorphism to the resolved complex.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub perfect: PerfectComplex,
    pub target: Complex,
    /// Per degree of `perfect`, the image in the target of each summand generator.
    pub generators: Vec<(i64, Vec<Vector>)>,
}

impl Resolution {
    /// The comparison map on realized modules.
    pub fn comparison(&self) -> ChainMap {
        let a = self.perfect.algebra();
        let source = self.perfect.realize();
        let mut maps = Vec::new();
        let lo = self.perfect.lo();
        for n in self.perfect.degrees() {
            let gens = self
                .generators
                .iter()
                .find(|(d, _)| *d == n)
                .map(|(_, g)| g.clone())
                .unwrap_or_default();
            maps.push(generator_map(a, self.perfect.summands(n), &gens, &self.target.module(n)));
        }
        ChainMap { source, target: self.target.clone(), lo, maps }
    }

    /// Equal homology in every degree and an acyclic mapping cone.
    pub fn verify(&self) -> Result<bool> {
        let f = self.comparison();
        f.check()?;
        let lo = self.perfect.lo().min(self.target.lo());
        let hi = self.perfect.hi().max(self.target.hi());
        let p = self.perfect.realize();
        let same = (lo..=hi).all(|n| p.homology_dim(n) == self.target.homology_dim(n));
        Ok(same && f.cone()?.underlying().is_acyclic())
    }
}

/// Matrix of the map `⊕ e_{i_s} A -> M` sending generator `s` to `gens[s]`.
fn generator_map(a: &Algebra, summands: &[usize], gens: &[Vector], m: &Module) -> Matrix {
    let cols: usize = summands.iter().map(|&i| a.projective(i).space.dim()).sum();
    let mut out = Matrix::zeros(m.dim(), cols);
    let mut c0 = 0;
    for (s, &i) in summands.iter().enumerate() {
        let space = &a.projective(i).space;
        for j in 0..space.dim() {
            let image = m.act_on(&space.basis_vector(j), &gens[s]);
            for (r, x) in image.into_iter().enumerate() {
                if !x.is_zero() {
                    out[(r, c0 + j)] = x;
                }
            }
        }
        c0 += space.dim();
    }
    out
}

/// Resolves a bounded complex by a perfect complex, giving up after `cap`
/// degrees below the bottom of `c`.
pub fn resolve_complex(c: &Complex, cap: usize) -> Result<Resolution> {
    let a = c.algebra().clone();
    if c.is_empty() || c.degrees().all(|n| c.dim(n) == 0) {
        return Ok(Resolution { perfect: PerfectComplex::zero(a), target: c.clone(), generators: Vec::new() });
    }
    let lo = c.lo();
    // Summands, realized module and realized maps of P^{n+1}.
    let mut upper_summands: Vec<usize> = Vec::new();
    let mut upper_module = Module::zero(a.clone());
    let mut upper_d = Matrix::zeros(0, 0); // P^{n+1} -> P^{n+2}
    let mut upper_phi = Matrix::zeros(c.dim(c.hi() + 1), 0); // P^{n+1} -> C^{n+1}

    // Collected from the top down.
    let mut degrees: Vec<(i64, Vec<usize>, AlgMatrix, Vec<Vector>)> = Vec::new();
    let mut n = c.hi();
    loop {
        let cn = c.module(n);
        let dc = c.differential(n);
        let p1 = upper_module.dim();
        let (rows_p, rows_c) = (upper_d.rows(), c.dim(n + 1));
        let mut system = Matrix::zeros(rows_p + rows_c, p1 + cn.dim());
        system.set_block(0, 0, &upper_d);
        system.set_block(rows_p, 0, &upper_phi);
        system.set_block(rows_p, p1, &dc);
        let cycles = kernel_basis(&system);
        if n < lo && cycles.is_empty() {
            break;
        }
        if n < lo && (lo - n) as usize > cap {
            return Err(Error::CapExceeded { cap });
        }
        let total = p1 + cn.dim();
        let act = |x: &[crate::linalg::Rational], z: &Vector| -> Vector {
            let mut v = upper_module.act_on(x, &z[..p1]);
            v.extend(cn.act_on(x, &z[p1..]));
            v
        };
        let mut span = EchelonSpan::new(total);
        for col in c.differential(n - 1).columns() {
            let mut v = vec![crate::linalg::zero(); p1];
            v.extend(col);
            span.insert(v);
        }
        for z in &cycles {
            for r in a.radical() {
                span.insert(act(r, z));
            }
        }
        let mut summands = Vec::new();
        let mut gens: Vec<Vector> = Vec::new();
        for i in 0..a.idempotent_count() {
            for z in &cycles {
                let ze = act(a.idempotent(i), z);
                if span.insert(ze.clone()) {
                    summands.push(i);
                    gens.push(ze);
                }
            }
        }
        // d^n sends generator s to -(P-part of gens[s]).
        let mut d = AlgMatrix::zeros(a.dim(), upper_summands.clone(), summands.clone());
        for (s, g) in gens.iter().enumerate() {
            let mut offset = 0;
            for (t, &it) in upper_summands.iter().enumerate() {
                let space = &a.projective(it).space;
                let part = &g[offset..offset + space.dim()];
                let element = space.embed(part);
                d.add_to(t, s, &-crate::linalg::one(), &element);
                offset += space.dim();
            }
        }
        let phi_gens: Vec<Vector> = gens.iter().map(|g| g[p1..].to_vec()).collect();
        upper_d = d.realize(&a);
        upper_phi = generator_map(&a, &summands, &phi_gens, &cn);
        upper_module = realize_summands(&a, &summands);
        upper_summands = summands.clone();
        degrees.push((n, summands, d, phi_gens));
        n -= 1;
    }
    degrees.reverse();
    // degrees[k] holds degree n_k with the differential out of it.
    let bottom = degrees.first().map_or(0, |d| d.0);
    let summands: Vec<Vec<usize>> = degrees.iter().map(|d| d.1.clone()).collect();
    let diffs: Vec<AlgMatrix> = degrees.iter().take(degrees.len().saturating_sub(1)).map(|d| d.2.clone()).collect();
    let generators = degrees.iter().map(|d| (d.0, d.3.clone())).collect();
    let perfect = PerfectComplex::new_unchecked(a, bottom, summands, diffs)?.trimmed();
    Ok(Resolution { perfect, target: c.clone(), generators })
}

/// Minimal projective resolution of a module placed in degree 0.
pub fn projective_resolution(m: &Module, cap: usize) -> Result<PerfectComplex> {
    Ok(resolve_complex(&Complex::concentrated(m.clone(), 0), cap)?.perfect)
}

/// Resolution with its comparison data.
pub fn resolve_module(m: &Module, cap: usize) -> Result<Resolution> {
    resolve_complex(&Complex::concentrated(m.clone(), 0), cap)
}

/// Minimal resolutions of all simple modules, cached per algebra and cap.
pub fn simple_resolutions(a: &Arc<Algebra>, cap: usize) -> Result<Arc<Vec<PerfectComplex>>> {
    use std::collections::HashMap;
    use std::sync::{Mutex, OnceLock};
    type Cache = Mutex<HashMap<(usize, usize), (Arc<Algebra>, Arc<Vec<PerfectComplex>>)>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (Arc::as_ptr(a) as usize, cap);
    if let Some((_, r)) = cache.lock().unwrap().get(&key) {
        return Ok(r.clone());
    }
    let res = crate::module::simple_modules(a)
        .iter()
        .map(|s| projective_resolution(s, cap))
        .collect::<Result<Vec<_>>>()?;
    let res = Arc::new(res);
    cache.lock().unwrap().insert(key, (a.clone(), res.clone()));
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bimodule_algebra, ground_field, path_algebra, Quiver};
    use crate::module::{diagonal_bimodule, indecomposable_projective, simple_modules};

    fn a2() -> Arc<Algebra> {
        path_algebra(&Quiver::from_edges(2, &[(0, 1, "a")]).unwrap()).unwrap()
    }

    #[test]
    fn projective_resolves_to_itself() {
        let a = a2();
        let p = indecomposable_projective(&a, 0);
        let r = resolve_module(&p, DEFAULT_CAP).unwrap();
        assert_eq!(r.perfect.all_summands(), &[vec![0]]);
        assert!(r.verify().unwrap());
    }

    #[test]
    fn simples_of_a2() {
        let a = a2();
        let s = simple_modules(&a);
        let r0 = resolve_module(&s[0], DEFAULT_CAP).unwrap();
        assert_eq!(r0.perfect.lo(), -1);
        assert_eq!(r0.perfect.all_summands(), &[vec![1], vec![0]]);
        assert!(r0.verify().unwrap());
        let r1 = resolve_module(&s[1], DEFAULT_CAP).unwrap();
        assert_eq!(r1.perfect.all_summands(), &[vec![1]]);
        assert_eq!(r0.perfect.k0_coords(), vec![1, 0]);
        assert_eq!(r1.perfect.k0_coords(), vec![0, 1]);
    }

    #[test]
    fn diagonal_of_field_is_free() {
        let k = ground_field();
        let env = bimodule_algebra(&k, &k);
        let d = diagonal_bimodule(&env).unwrap();
        let r = resolve_module(&d, DEFAULT_CAP).unwrap();
        assert_eq!(r.perfect.all_summands(), &[vec![0]]);
    }

    #[test]
    fn diagonal_of_a2_has_length_one() {
        let a = a2();
        let env = bimodule_algebra(&a, &a);
        let d = diagonal_bimodule(&env).unwrap();
        let r = resolve_module(&d, DEFAULT_CAP).unwrap();
        assert_eq!(r.perfect.lo(), -1);
        assert!(r.verify().unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let a = a2();
        let s = simple_modules(&a);
        assert!(matches!(resolve_module(&s[0], 0), Err(Error::CapExceeded { cap: 0 })));
    }

    #[test]
    fn complex_with_zero_differential() {
        let a = a2();
        let s = simple_modules(&a);
        let c = Complex::concentrated(s[0].clone(), 0)
            .direct_sum(&Complex::concentrated(s[1].clone(), 1))
            .unwrap();
        let r = resolve_complex(&c, DEFAULT_CAP).unwrap();
        assert!(r.verify().unwrap());
    }
}
