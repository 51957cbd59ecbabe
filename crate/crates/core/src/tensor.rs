//! Tensor products of bimodule complexes over a middle algebra.
//!
//! Totalization uses `d(x ⊗ y) = dx ⊗ y + (-1)^{|x|} x ⊗ dy`.

use num_traits::Zero;

use crate::algebra::{bimodule_algebra, opposite, require_same, BimoduleAlgebra};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::linalg::{kron_vec, sign, unit_vector, Matrix, Quotient, Rational};
use crate::module::Module;
use crate::perfect::{AlgMatrix, PerfectComplex};

/// Restriction of an A-B-bimodule to a right B-module.
pub fn restrict_right(env: &BimoduleAlgebra, m: &Module) -> Module {
    let nb = env.right.dim();
    let action = (0..nb).map(|b| m.act(&env.right_element(&unit_vector(nb, b)))).collect();
    Module::new_unchecked(env.right.clone(), m.dim(), action).expect("shapes agree")
}

/// Restriction of an A-B-bimodule to a right `A^op`-module (its left A-structure).
pub fn restrict_left(env: &BimoduleAlgebra, m: &Module) -> Module {
    let na = env.left.dim();
    let action = (0..na).map(|a| m.act(&env.left_element(&unit_vector(na, a)))).collect();
    Module::new_unchecked(opposite(&env.left), m.dim(), action).expect("shapes agree")
}

fn componentwise_projective(c: &Complex, restrict: impl Fn(&Module) -> Module) -> bool {
    c.degrees().all(|n| restrict(&c.module(n)).is_projective())
}

/// `X ⊗_B Y` computed as a quotient of the vector-space tensor product.
///
/// `x` is a complex of A-B-bimodules and `y` of B-C-bimodules. One of them
/// must be componentwise projective over B so that the result is the derived
/// tensor product.
pub fn tensor_over(
    xenv: &BimoduleAlgebra,
    x: &Complex,
    yenv: &BimoduleAlgebra,
    y: &Complex,
) -> Result<(BimoduleAlgebra, Complex)> {
    require_same(&xenv.right, &yenv.left, "middle algebra")?;
    require_same(&xenv.env, x.algebra(), "left factor")?;
    require_same(&yenv.env, y.algebra(), "right factor")?;
    let out_env = bimodule_algebra(&xenv.left, &yenv.right);
    if x.is_empty() || y.is_empty() {
        return Ok((out_env.clone(), Complex::zero(out_env.env.clone())));
    }
    if !componentwise_projective(x, |m| restrict_right(xenv, m))
        && !componentwise_projective(y, |m| restrict_left(yenv, m))
    {
        return Err(Error::NotProjective(xenv.right.name().to_string()));
    }
    let b = &xenv.right;
    let nb = b.dim();
    let (nc, na) = (yenv.right.dim(), xenv.left.dim());
    // Quotient of X^p ⊗ Y^q for every bidegree.
    let mut quotients = std::collections::HashMap::new();
    for p in x.degrees() {
        let xm = x.module(p);
        for q in y.degrees() {
            let ym = y.module(q);
            let (dx, dy) = (xm.dim(), ym.dim());
            let mut relations = Vec::new();
            for k in 0..nb {
                let bk = unit_vector(nb, k);
                let rx = xm.act(&xenv.right_element(&bk));
                let ly = ym.act(&yenv.left_element(&bk));
                let rel = &rx.kron(&Matrix::identity(dy)) - &Matrix::identity(dx).kron(&ly);
                relations.extend(rel.columns().into_iter().filter(|v| v.iter().any(|c| !c.is_zero())));
            }
            quotients.insert((p, q), Quotient::new(dx * dy, relations));
        }
    }
    let (lo, hi) = (x.lo() + y.lo(), x.hi() + y.hi());
    let mut modules = Vec::new();
    let mut layouts = Vec::new();
    for n in lo..=hi {
        let mut parts = Vec::new();
        let mut layout = Vec::new();
        let mut offset = 0;
        for p in x.degrees() {
            let q = n - p;
            let Some(quot) = quotients.get(&(p, q)) else { continue };
            let (xm, ym) = (x.module(p), y.module(q));
            let action: Vec<Matrix> = (0..out_env.env.dim())
                .map(|k| {
                    let (ai, ci) = (k / nc, k % nc);
                    let l = xm.act(&xenv.left_element(&unit_vector(na, ai)));
                    let r = ym.act(&yenv.right_element(&unit_vector(nc, ci)));
                    quot.induced_map(&l.kron(&r), quot)
                })
                .collect();
            parts.push(Module::new_unchecked(out_env.env.clone(), quot.dim(), action)?);
            layout.push((p, q, offset));
            offset += quot.dim();
        }
        let module = if parts.is_empty() {
            Module::zero(out_env.env.clone())
        } else {
            Module::direct_sum(&parts.iter().collect::<Vec<_>>())?
        };
        modules.push(module);
        layouts.push(layout);
    }
    let mut diffs = Vec::new();
    for n in lo..hi {
        let src = &layouts[(n - lo) as usize];
        let dst = &layouts[(n + 1 - lo) as usize];
        let mut d = Matrix::zeros(modules[(n + 1 - lo) as usize].dim(), modules[(n - lo) as usize].dim());
        for &(p, q, off) in src {
            let from = &quotients[&(p, q)];
            let (dxp, dyq) = (x.dim(p), y.dim(q));
            if let Some(&(_, _, off2)) = dst.iter().find(|e| e.0 == p + 1 && e.1 == q) {
                let to = &quotients[&(p + 1, q)];
                let m = x.differential(p).kron(&Matrix::identity(dyq));
                d.add_block(off2, off, &from.induced_map(&m, to));
            }
            if let Some(&(_, _, off2)) = dst.iter().find(|e| e.0 == p && e.1 == q + 1) {
                let to = &quotients[&(p, q + 1)];
                let m = Matrix::identity(dxp).kron(&y.differential(q)).scale(&sign(p));
                d.add_block(off2, off, &from.induced_map(&m, to));
            }
        }
        diffs.push(d);
    }
    let c = Complex::new_unchecked(out_env.env.clone(), lo, modules, diffs)?;
    Ok((out_env, c))
}

/// `X ⊗_B Y` for perfect bimodule complexes, again perfect.
///
/// Uses `(A e_i ⊗ f_j B) ⊗_B (B f_k ⊗ g_l C) = ⊕_β A e_i ⊗ g_l C` over a basis β of `f_j B f_k`.
pub fn compose_perfect(
    xenv: &BimoduleAlgebra,
    x: &PerfectComplex,
    yenv: &BimoduleAlgebra,
    y: &PerfectComplex,
) -> Result<(BimoduleAlgebra, PerfectComplex)> {
    require_same(&xenv.right, &yenv.left, "middle algebra")?;
    require_same(&xenv.env, x.algebra(), "left factor")?;
    require_same(&yenv.env, y.algebra(), "right factor")?;
    let out = bimodule_algebra(&xenv.left, &yenv.right);
    if x.is_empty() || y.is_empty() {
        return Ok((out.clone(), PerfectComplex::zero(out.env.clone())));
    }
    let (a, b, c) = (&xenv.left, &xenv.right, &yenv.right);
    let (na, nb, nc) = (a.dim(), b.dim(), c.dim());
    let out_dim = out.env.dim();
    let (lo, hi) = (x.lo() + y.lo(), x.hi() + y.hi());
    // Generators of degree n: (p, s, u, β index); with their env(A, C) idempotent.
    struct Gen {
        p: i64,
        s: usize,
        u: usize,
        beta: usize,
    }
    let mut gens: Vec<Vec<Gen>> = Vec::new();
    let mut summands: Vec<Vec<usize>> = Vec::new();
    for n in lo..=hi {
        let mut g = Vec::new();
        let mut idx = Vec::new();
        for p in x.degrees() {
            let q = n - p;
            for (s, &xs) in x.summands(p).iter().enumerate() {
                let (i, j) = xenv.split_idempotent(xs);
                for (u, &yu) in y.summands(q).iter().enumerate() {
                    let (k, l) = yenv.split_idempotent(yu);
                    for beta in 0..b.corner(j, k).dim() {
                        g.push(Gen { p, s, u, beta });
                        idx.push(out.idempotent_index(i, l));
                    }
                }
            }
        }
        gens.push(g);
        summands.push(idx);
    }
    let position = |n: i64, p: i64, s: usize, u: usize, beta: usize| -> usize {
        gens[(n - lo) as usize]
            .iter()
            .position(|g| g.p == p && g.s == s && g.u == u && g.beta == beta)
            .expect("generator exists")
    };
    let mut diffs = Vec::new();
    for n in lo..hi {
        let src = &gens[(n - lo) as usize];
        let mut d = AlgMatrix::zeros(out_dim, summands[(n + 1 - lo) as usize].clone(), summands[(n - lo) as usize].clone());
        for (col, g) in src.iter().enumerate() {
            let q = n - g.p;
            let (i, j) = xenv.split_idempotent(x.summands(g.p)[g.s]);
            let (k, l) = yenv.split_idempotent(y.summands(q)[g.u]);
            let beta = b.corner(j, k).basis_vector(g.beta);
            // d_X ⊗ 1.
            if let Some(dx) = x.differential_ref(g.p) {
                for (s2, &xs2) in x.summands(g.p + 1).iter().enumerate() {
                    let entry = dx.get(s2, g.s);
                    let (_, j2) = xenv.split_idempotent(xs2);
                    let corner = b.corner(j2, k);
                    for (idx, coef) in entry.iter().enumerate() {
                        if coef.is_zero() {
                            continue;
                        }
                        let (alpha, gamma) = (idx / nb, idx % nb);
                        let gb = corner.coordinates(&b.mul(&unit_vector(nb, gamma), &beta));
                        for (m, kappa) in gb.iter().enumerate() {
                            if kappa.is_zero() {
                                continue;
                            }
                            let row = position(n + 1, g.p + 1, s2, g.u, m);
                            let element = kron_vec(&unit_vector(na, alpha), c.idempotent(l));
                            d.add_to(row, col, &(coef * kappa), &element);
                        }
                    }
                }
            }
            // (-1)^p 1 ⊗ d_Y.
            if let Some(dy) = y.differential_ref(q) {
                let sgn = sign(g.p);
                for (u2, &yu2) in y.summands(q + 1).iter().enumerate() {
                    let entry = dy.get(u2, g.u);
                    let (k2, _) = yenv.split_idempotent(yu2);
                    let corner = b.corner(j, k2);
                    for (idx, coef) in entry.iter().enumerate() {
                        if coef.is_zero() {
                            continue;
                        }
                        let (delta, gamma) = (idx / nc, idx % nc);
                        let bd = corner.coordinates(&b.mul(&beta, &unit_vector(nb, delta)));
                        for (m, kappa) in bd.iter().enumerate() {
                            if kappa.is_zero() {
                                continue;
                            }
                            let row = position(n + 1, g.p, g.s, u2, m);
                            let element = kron_vec(a.idempotent(i), &unit_vector(nc, gamma));
                            let factor: Rational = &sgn * coef * kappa;
                            d.add_to(row, col, &factor, &element);
                        }
                    }
                }
            }
        }
        diffs.push(d);
    }
    let p = PerfectComplex::new_unchecked(out.env.clone(), lo, summands, diffs)?.trimmed();
    Ok((out, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ground_field, path_algebra, Quiver};
    use crate::module::diagonal_bimodule;
    use crate::resolution::{projective_resolution, DEFAULT_CAP};

    #[test]
    fn over_the_field_dims_multiply() {
        let k = ground_field();
        let env = bimodule_algebra(&k, &k);
        let x = PerfectComplex::free(env.env.clone()).direct_sum(&PerfectComplex::free(env.env.clone())).unwrap();
        let y = PerfectComplex::free(env.env.clone()).shift(1);
        let (_, xy) = compose_perfect(&env, &x, &env, &y).unwrap();
        assert_eq!(xy.k0_coords(), vec![-2]);
        let (_, xy2) = tensor_over(&env, &x.realize(), &env, &y.realize()).unwrap();
        assert_eq!(xy2.dim(-1), 2);
    }

    #[test]
    fn diagonal_is_a_unit() {
        let a = path_algebra(&Quiver::from_edges(2, &[(0, 1, "a")]).unwrap()).unwrap();
        let env = bimodule_algebra(&a, &a);
        let diag = diagonal_bimodule(&env).unwrap();
        let p = projective_resolution(&diag, DEFAULT_CAP).unwrap();
        let (_, pp) = compose_perfect(&env, &p, &env, &p).unwrap();
        pp.check().unwrap();
        assert_eq!(pp.k0_coords(), p.k0_coords());
        let (_, t) = tensor_over(&env, &p.realize(), &env, &Complex::concentrated(diag.clone(), 0)).unwrap();
        t.check().unwrap();
        let dims = t.homology_dims();
        assert!(dims.iter().all(|&(n, d)| if n == 0 { d == 3 } else { d == 0 }));
    }

    #[test]
    fn both_routes_agree() {
        let a = path_algebra(&Quiver::from_edges(2, &[(0, 1, "a")]).unwrap()).unwrap();
        let env = bimodule_algebra(&a, &a);
        let diag = diagonal_bimodule(&env).unwrap();
        let p = projective_resolution(&diag, DEFAULT_CAP).unwrap();
        let x = p.direct_sum(&PerfectComplex::projective(env.env.clone(), 1, 1)).unwrap();
        let (_, explicit) = compose_perfect(&env, &x, &env, &p).unwrap();
        let (_, quotient) = tensor_over(&env, &x.realize(), &env, &p.realize()).unwrap();
        quotient.check().unwrap();
        let lo = explicit.lo().min(quotient.lo());
        let hi = explicit.hi().max(quotient.hi());
        let e = explicit.realize();
        for n in lo..=hi {
            assert_eq!(e.homology_dim(n), quotient.homology_dim(n), "degree {n}");
            assert_eq!(e.dim(n), quotient.dim(n), "degree {n}");
        }
    }
}
