//! Euler form, Serre functor, kernels of pairings, smoothness and duals.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{bimodule_algebra, Algebra, BimoduleAlgebra};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::hom::euler_pairing;
use crate::linalg::{int, inverse, kernel_basis, same_span, Matrix, Subspace, Vector};
use crate::module::{diagonal_bimodule, dual_algebra, Module};
use crate::perfect::{AlgMatrix, PerfectComplex};
use crate::resolution::{resolve_complex, resolve_module, simple_resolutions};

/// Class in the Grothendieck group, coordinates in the basis of simple modules.
#[derive(Clone, Debug, PartialEq)]
pub struct K0Class {
    pub algebra: Arc<Algebra>,
    pub coords: Vec<i64>,
}

pub fn k0_class(m: &PerfectComplex) -> K0Class {
    K0Class { algebra: m.algebra().clone(), coords: m.k0_coords() }
}

/// Class of an arbitrary bounded complex of modules.
pub fn k0_class_of_complex(c: &Complex) -> K0Class {
    K0Class { algebra: c.algebra().clone(), coords: c.euler_dimension_vector() }
}

/// Gram matrix of a bilinear form with labels for its basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingMatrix {
    #[serde(skip)]
    pub matrix: Matrix,
    pub basis: Vec<String>,
}

impl PairingMatrix {
    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    /// `u^T G v` on coordinate vectors.
    pub fn pair(&self, u: &[crate::linalg::Rational], v: &[crate::linalg::Rational]) -> crate::linalg::Rational {
        crate::linalg::dot(u, &self.matrix.mul_vec(v))
    }
}

fn cache_key(a: &Arc<Algebra>, cap: usize) -> (usize, usize) {
    (Arc::as_ptr(a) as usize, cap)
}

/// `chi(S_i, S_j)` over the simple modules, cached per algebra.
pub fn euler_matrix(a: &Arc<Algebra>, cap: usize) -> Result<PairingMatrix> {
    type Cache = Mutex<HashMap<(usize, usize), (Arc<Algebra>, PairingMatrix)>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some((_, g)) = cache.lock().unwrap().get(&cache_key(a, cap)) {
        return Ok(g.clone());
    }
    let res = simple_resolutions(a, cap)?;
    let n = res.len();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = int(euler_pairing(&res[i], &res[j])?);
        }
    }
    let g = PairingMatrix { matrix: m, basis: a.vertex_labels().iter().map(|v| format!("S[{v}]")).collect() };
    cache.lock().unwrap().insert(cache_key(a, cap), (a.clone(), g.clone()));
    Ok(g)
}

/// `chi` on two classes through the Euler matrix.
pub fn class_pairing(g: &PairingMatrix, u: &[i64], v: &[i64]) -> i64 {
    let u: Vector = u.iter().map(|&x| int(x)).collect();
    let v: Vector = v.iter().map(|&x| int(x)).collect();
    crate::linalg::to_i64(&g.pair(&u, &v)).expect("integral pairing")
}

/// `M ⊗_A DA` as a complex of modules, before resolving.
pub fn serre_complex(m: &PerfectComplex) -> Result<Complex> {
    let a = m.algebra();
    if m.is_empty() {
        return Ok(Complex::zero(a.clone()));
    }
    let da = dual_algebra(a);
    let da_module = da.right_module(a);
    let pieces: Vec<Subspace> = (0..a.idempotent_count())
        .map(|i| Subspace::column_space(&da.left_act(a.idempotent(i))))
        .collect();
    let piece_modules: Vec<Module> = pieces.iter().map(|w| da_module.submodule(w)).collect();
    let mut modules = Vec::new();
    for n in m.degrees() {
        let parts: Vec<&Module> = m.summands(n).iter().map(|&i| &piece_modules[i]).collect();
        modules.push(if parts.is_empty() { Module::zero(a.clone()) } else { Module::direct_sum(&parts)? });
    }
    let mut diffs = Vec::new();
    for n in m.lo()..m.hi() {
        let d = m.differential(n);
        let (rows, cols) = (d.row_summands(), d.col_summands());
        let rdims: Vec<usize> = rows.iter().map(|&i| pieces[i].dim()).collect();
        let cdims: Vec<usize> = cols.iter().map(|&i| pieces[i].dim()).collect();
        let mut mat = Matrix::zeros(rdims.iter().sum(), cdims.iter().sum());
        let mut r0 = 0;
        for (t, &it) in rows.iter().enumerate() {
            let mut c0 = 0;
            for (s, &is) in cols.iter().enumerate() {
                let x = d.get(t, s);
                if x.iter().any(|c| !c.is_zero()) {
                    mat.set_block(r0, c0, &pieces[is].restrict_map(&da.left_act(x), &pieces[it]));
                }
                c0 += cdims[s];
            }
            r0 += rdims[t];
        }
        diffs.push(mat);
    }
    Complex::new(a.clone(), m.lo(), modules, diffs)
}

/// The Serre functor `- ⊗_A DA`, resolved to a perfect complex.
pub fn serre(m: &PerfectComplex, cap: usize) -> Result<PerfectComplex> {
    Ok(resolve_complex(&serre_complex(m)?, cap)?.perfect)
}

/// Vectors `v` with `v^T G = 0`.
pub fn kernel_left(g: &Matrix) -> Vec<Vector> {
    kernel_basis(&g.transpose())
}

/// Vectors `v` with `G v = 0`.
pub fn kernel_right(g: &Matrix) -> Vec<Vector> {
    kernel_basis(g)
}

/// Mutual containment of the left and right kernels.
pub fn kernels_agree(g: &Matrix) -> bool {
    same_span(&kernel_left(g), &kernel_right(g), g.rows())
}

#[derive(Clone, Debug)]
pub struct SmoothCheck {
    pub smooth: bool,
    pub resolution: Option<PerfectComplex>,
    /// Number of nonzero degrees below zero.
    pub length: Option<usize>,
}

/// Tries to resolve the diagonal bimodule within `cap` steps.
pub fn check_smooth(a: &Arc<Algebra>, cap: usize) -> Result<SmoothCheck> {
    let env = bimodule_algebra(a, a);
    let diag = diagonal_bimodule(&env)?;
    match resolve_module(&diag, cap) {
        Ok(r) => {
            let length = (-r.perfect.lo()) as usize;
            Ok(SmoothCheck { smooth: true, resolution: Some(r.perfect), length: Some(length) })
        }
        Err(Error::CapExceeded { .. }) => Ok(SmoothCheck { smooth: false, resolution: None, length: None }),
        Err(e) => Err(e),
    }
}

/// Every algebra in scope is finite-dimensional, hence proper.
pub fn check_proper(_a: &Algebra) -> bool {
    true
}

/// Moves coordinates over `A^op ⊗ B` to `B^op ⊗ A` after dualizing:
/// `(A^op ⊗ B)^op` is `A ⊗ B^op`, and swapping the factors gives `B^op ⊗ A`.
fn swap_factors(env: &BimoduleAlgebra, v: &[crate::linalg::Rational]) -> Vector {
    let (da, db) = (env.left.dim(), env.right.dim());
    let mut w = vec![crate::linalg::zero(); da * db];
    for a in 0..da {
        for b in 0..db {
            let x = &v[a * db + b];
            if !x.is_zero() {
                w[b * da + a] = x.clone();
            }
        }
    }
    w
}

/// `D(X) = Hom(X, A^op ⊗ B)` as a complex of B-A-bimodules.
pub fn dual(env: &BimoduleAlgebra, x: &PerfectComplex) -> Result<(BimoduleAlgebra, PerfectComplex)> {
    crate::algebra::require_same(&env.env, x.algebra(), "dual")?;
    let out = env.swapped();
    if x.is_empty() {
        return Ok((out.clone(), PerfectComplex::zero(out.env.clone())));
    }
    let swap_idem = |k: usize| {
        let (i, j) = env.split_idempotent(k);
        out.idempotent_index(j, i)
    };
    let (lo, hi) = (x.lo(), x.hi());
    let summands: Vec<Vec<usize>> = (lo..=hi).rev().map(|n| x.summands(n).iter().map(|&k| swap_idem(k)).collect()).collect();
    let diffs: Vec<AlgMatrix> = (lo..hi)
        .rev()
        .map(|n| {
            let t = x.differential(n).transpose();
            let rows = t.row_summands().iter().map(|&k| swap_idem(k)).collect();
            let cols = t.col_summands().iter().map(|&k| swap_idem(k)).collect();
            t.map_entries(out.env.dim(), rows, cols, |v| swap_factors(env, v))
        })
        .collect();
    let d = PerfectComplex::new_unchecked(out.env.clone(), -hi, summands, diffs)?;
    Ok((out, d))
}

/// Cartan matrix: row `i` is the dimension vector of `e_i A`.
pub fn cartan_matrix(a: &Algebra) -> Matrix {
    let n = a.idempotent_count();
    Matrix::from_fn(n, n, |i, j| int(a.corner(i, j).dim() as i64))
}

/// The duality on Grothendieck groups induced by `D`, in simple coordinates.
pub fn duality_on_k0(env: &BimoduleAlgebra, coords: &[crate::linalg::Rational]) -> Result<Vector> {
    let out = env.swapped();
    // Simple coordinates = C^T * projective coordinates.
    let c_in = cartan_matrix(&env.env).transpose();
    let c_out = cartan_matrix(&out.env).transpose();
    let proj = inverse(&c_in)?.mul_vec(coords);
    let n = proj.len();
    let mut swapped = vec![crate::linalg::zero(); n];
    for (k, x) in proj.into_iter().enumerate() {
        let (i, j) = env.split_idempotent(k);
        swapped[out.idempotent_index(j, i)] = x;
    }
    Ok(c_out.mul_vec(&swapped))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ground_field, path_algebra, Quiver};
    use crate::hom::hom_perfect;
    use crate::resolution::DEFAULT_CAP;

    fn a2() -> Arc<Algebra> {
        path_algebra(&Quiver::from_edges(2, &[(0, 1, "a")]).unwrap()).unwrap()
    }

    #[test]
    fn euler_matrix_of_a2() {
        let g = euler_matrix(&a2(), DEFAULT_CAP).unwrap();
        assert_eq!(g.matrix, Matrix::from_i64(&[vec![1, -1], vec![0, 1]]));
    }

    #[test]
    fn euler_matrix_of_semisimple() {
        let q = Quiver { vertices: 2, arrows: Vec::new() };
        let g = euler_matrix(&path_algebra(&q).unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(g.matrix, Matrix::identity(2));
        let g = euler_matrix(&ground_field(), DEFAULT_CAP).unwrap();
        assert_eq!(g.matrix, Matrix::identity(1));
    }

    #[test]
    fn serre_of_field_is_identity() {
        let k = ground_field();
        let p = PerfectComplex::projective(k.clone(), 0, 0);
        let s = serre(&p, DEFAULT_CAP).unwrap();
        assert_eq!(s.k0_coords(), vec![1]);
    }

    #[test]
    fn serre_of_projectives_gives_injectives() {
        let a = a2();
        for i in 0..2 {
            let p = PerfectComplex::projective(a.clone(), i, 0);
            let sc = serre_complex(&p).unwrap();
            // Injective hull of S_i: dual of the left projective A e_i.
            let left_dim = (0..2).map(|j| a.corner(j, i).dim()).sum::<usize>();
            assert_eq!(sc.homology_dim(0), left_dim);
        }
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_left(&Matrix::identity(2)).is_empty());
        assert_eq!(kernel_right(&Matrix::zeros(2, 2)).len(), 2);
        let g = Matrix::from_i64(&[vec![0, 1], vec![0, 0]]);
        assert_eq!(kernel_left(&g), vec![vec![int(0), int(1)]]);
        assert_eq!(kernel_right(&g), vec![vec![int(1), int(0)]]);
        assert!(!kernels_agree(&g));
    }

    #[test]
    fn smoothness() {
        let k = ground_field();
        let c = check_smooth(&k, DEFAULT_CAP).unwrap();
        assert!(c.smooth);
        assert_eq!(c.length, Some(0));
        let c = check_smooth(&a2(), DEFAULT_CAP).unwrap();
        assert!(c.smooth);
        assert!(c.length.unwrap() <= 1);
        assert!(check_proper(&a2()));
    }

    #[test]
    fn dual_of_free_and_biduality() {
        let a = a2();
        let env = bimodule_algebra(&a, &a);
        let free = PerfectComplex::free(env.env.clone());
        let (_, d) = dual(&env, &free).unwrap();
        assert_eq!(d.size(), free.size());
        let diag = check_smooth(&a, DEFAULT_CAP).unwrap().resolution.unwrap();
        let (env2, d1) = dual(&env, &diag).unwrap();
        d1.check().unwrap();
        let (_, d2) = dual(&env2, &d1).unwrap();
        let h = hom_perfect(&d2, &d2).unwrap();
        let h0 = hom_perfect(&diag, &diag).unwrap();
        assert_eq!(h.homology_dims(), h0.homology_dims());
        let coords: Vec<_> = diag.k0_coords().iter().map(|&c| int(c)).collect();
        let image = duality_on_k0(&env, &coords).unwrap();
        let direct: Vec<_> = d1.k0_coords().iter().map(|&c| int(c)).collect();
        assert_eq!(image, direct);
    }
}
