//! Right modules given by action matrices.
//!
//! `action[k]` is the matrix of `v -> v * b_k` acting on column vectors, so
//! `act(b_j) * act(b_i) = act(b_i * b_j)`.

use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{Algebra, BimoduleAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vector, kernel_basis, EchelonSpan, Matrix, Quotient, Rational, Subspace, Vector};

#[derive(Clone, Debug)]
pub struct Module {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Vec<Matrix>,
}

impl Module {
    /// Builds a module and checks the unit and multiplication axioms.
    pub fn new(algebra: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Result<Module> {
        let m = Module::new_unchecked(algebra, dim, action)?;
        m.check_axioms()?;
        Ok(m)
    }

    /// Builds a module checking only shapes.
    pub fn new_unchecked(algebra: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Result<Module> {
        if action.len() != algebra.dim() {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::InvalidModule(format!("action matrices must be {dim}x{dim}")));
        }
        Ok(Module { algebra, dim, action })
    }

    pub fn check_axioms(&self) -> Result<()> {
        if self.act(self.algebra.unit()) != Matrix::identity(self.dim) {
            return Err(Error::InvalidModule("unit does not act as the identity".into()));
        }
        let n = self.algebra.dim();
        for i in 0..n {
            for j in 0..n {
                let mut expected = Matrix::zeros(self.dim, self.dim);
                for (k, c) in self.algebra.basis_product(i, j) {
                    expected.add_scaled(c, &self.action[*k]);
                }
                if &self.action[j] * &self.action[i] != expected {
                    return Err(Error::InvalidModule(format!(
                        "action is not multiplicative on ({}, {})",
                        self.algebra.labels()[i],
                        self.algebra.labels()[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(algebra: Arc<Algebra>) -> Module {
        let n = algebra.dim();
        Module { algebra, dim: 0, action: vec![Matrix::zeros(0, 0); n] }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, k: usize) -> &Matrix {
        &self.action[k]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Matrix of `v -> v * x` for an algebra element `x`.
    pub fn act(&self, x: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (k, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m.add_scaled(c, &self.action[k]);
            }
        }
        m
    }

    /// `v * x` without forming the action matrix.
    pub fn act_on(&self, x: &[Rational], v: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); self.dim];
        for (k, c) in x.iter().enumerate() {
            if !c.is_zero() {
                axpy(c, &self.action[k].mul_vec(v), &mut out);
            }
        }
        out
    }

    /// `M e_i`, which is isomorphic to `Hom(e_i A, M)`.
    pub fn weight_space(&self, i: usize) -> Subspace {
        Subspace::column_space(&self.act(self.algebra.idempotent(i)))
    }

    /// Dimension vector `(dim M e_i)_i`.
    pub fn dimension_vector(&self) -> Vec<usize> {
        (0..self.algebra.idempotent_count()).map(|i| self.act(self.algebra.idempotent(i)).rank()).collect()
    }

    /// `M * rad`, spanned by images of the radical basis.
    pub fn radical_submodule(&self) -> Subspace {
        let mut spanning = Vec::new();
        for r in self.algebra.radical() {
            let m = self.act(r);
            spanning.extend(m.columns().into_iter().filter(|v| !is_zero_vector(v)));
        }
        Subspace::from_spanning(self.dim, spanning)
    }

    /// Multiplicities of the simple modules in the top `M / M rad`.
    pub fn top_multiplicities(&self) -> Vec<usize> {
        let rad = self.radical_submodule();
        (0..self.algebra.idempotent_count())
            .map(|i| {
                // Columns of the action of e_i span M e_i.
                let e = self.act(self.algebra.idempotent(i));
                span_dim_mod(&e, &rad, self.dim)
            })
            .collect()
    }

    /// Projective iff it is a direct sum of the `e_i A` its top predicts.
    pub fn is_projective(&self) -> bool {
        let mult = self.top_multiplicities();
        let expected: usize = mult
            .iter()
            .enumerate()
            .map(|(i, m)| m * self.algebra.projective(i).space.dim())
            .sum();
        expected == self.dim
    }

    /// Submodule generated by the given vectors, as a subspace.
    pub fn generated_submodule(&self, gens: &[Vector]) -> Subspace {
        let n = self.algebra.dim();
        let mut spanning = Vec::new();
        for g in gens {
            for k in 0..n {
                spanning.push(self.action[k].mul_vec(g));
            }
        }
        Subspace::from_spanning(self.dim, spanning)
    }

    /// Checks whether `sub` is closed under the action.
    pub fn is_submodule(&self, sub: &Subspace) -> bool {
        sub.basis().columns().iter().all(|v| self.action.iter().all(|a| sub.contains(&a.mul_vec(v))))
    }

    pub fn submodule(&self, sub: &Subspace) -> Module {
        let action = self.action.iter().map(|a| sub.restrict_map(a, sub)).collect();
        Module { algebra: self.algebra.clone(), dim: sub.dim(), action }
    }

    pub fn quotient(&self, relations: &Subspace) -> (Module, Quotient) {
        let q = Quotient::new(self.dim, relations.basis().columns());
        let action = self.action.iter().map(|a| q.induced_map(a, &q)).collect();
        (Module { algebra: self.algebra.clone(), dim: q.dim(), action }, q)
    }

    pub fn direct_sum(parts: &[&Module]) -> Result<Module> {
        let Some(first) = parts.first() else {
            return Err(Error::InvalidModule("empty direct sum needs an algebra".into()));
        };
        let algebra = first.algebra.clone();
        for p in parts {
            crate::algebra::require_same(&algebra, &p.algebra, "direct sum")?;
        }
        let dim = parts.iter().map(|p| p.dim).sum();
        let action = (0..algebra.dim())
            .map(|k| Matrix::block_diagonal(&parts.iter().map(|p| p.action[k].clone()).collect::<Vec<_>>()))
            .collect();
        Ok(Module { algebra, dim, action })
    }

    /// Space of module homomorphisms `self -> other`, as matrices.
    pub fn hom_space(&self, other: &Module) -> Result<Vec<Matrix>> {
        crate::algebra::require_same(&self.algebra, &other.algebra, "hom space")?;
        let (m, n) = (self.dim, other.dim);
        if m == 0 || n == 0 {
            return Ok(Vec::new());
        }
        // Unknown f (n x m, row-major); constraints f * A_k - B_k * f = 0.
        let unknowns = n * m;
        let mut rows = Vec::new();
        for k in 0..self.algebra.dim() {
            let a = &self.action[k];
            let b = &other.action[k];
            for r in 0..n {
                for c in 0..m {
                    let mut row = vec![Rational::zero(); unknowns];
                    for j in 0..m {
                        if !a[(j, c)].is_zero() {
                            row[r * m + j] += &a[(j, c)];
                        }
                    }
                    for i in 0..n {
                        if !b[(r, i)].is_zero() {
                            row[i * m + c] -= &b[(r, i)];
                        }
                    }
                    if !is_zero_vector(&row) {
                        rows.push(row);
                    }
                }
            }
        }
        let system = if rows.is_empty() { Matrix::zeros(0, unknowns) } else { Matrix::from_rows(&rows)? };
        Ok(kernel_basis(&system)
            .into_iter()
            .map(|v| Matrix::from_fn(n, m, |r, c| v[r * m + c].clone()))
            .collect())
    }

    pub fn is_homomorphism(&self, f: &Matrix, target: &Module) -> bool {
        f.rows() == target.dim
            && f.cols() == self.dim
            && (0..self.algebra.dim()).all(|k| &(f * &self.action[k]) == &(&target.action[k] * f))
    }
}

/// `dim (span(cols of e) + rad) - dim rad`.
fn span_dim_mod(e: &Matrix, rad: &Subspace, n: usize) -> usize {
    let mut span = EchelonSpan::new(n);
    for v in rad.basis().columns() {
        span.insert(v);
    }
    let base = span.dim();
    for v in e.columns() {
        span.insert(v);
    }
    span.dim() - base
}

/// The projective `e_i A` as a module.
pub fn indecomposable_projective(a: &Arc<Algebra>, i: usize) -> Module {
    let p = a.projective(i);
    Module { algebra: a.clone(), dim: p.space.dim(), action: p.action.clone() }
}

/// The algebra as a right module over itself.
pub fn regular_module(a: &Arc<Algebra>) -> Module {
    let n = a.dim();
    let action = (0..n).map(|k| a.right_mult_matrix(&crate::linalg::unit_vector(n, k))).collect();
    Module { algebra: a.clone(), dim: n, action }
}

/// Simple tops `S_i = e_i A / e_i rad`, one per idempotent.
pub fn simple_modules(a: &Arc<Algebra>) -> Vec<Module> {
    (0..a.idempotent_count())
        .map(|i| {
            let p = indecomposable_projective(a, i);
            let rad = p.radical_submodule();
            p.quotient(&rad).0
        })
        .collect()
}

/// The diagonal bimodule `A` as a right module over `A^op ⊗ A`: `x * (a ⊗ b) = a x b`.
pub fn diagonal_bimodule(env: &BimoduleAlgebra) -> Result<Module> {
    crate::algebra::require_same(&env.left, &env.right, "diagonal bimodule")?;
    let a = &env.left;
    let n = a.dim();
    let action = (0..env.env.dim())
        .map(|k| {
            let (i, j) = (k / n, k % n);
            let ei = crate::linalg::unit_vector(n, i);
            let ej = crate::linalg::unit_vector(n, j);
            &a.left_mult_matrix(&ei) * &a.right_mult_matrix(&ej)
        })
        .collect();
    Ok(Module { algebra: env.env.clone(), dim: n, action })
}

/// Outer tensor `M ⊗ N` of a right `A^op`-module and a right `B`-module, as an A-B-bimodule.
pub fn outer_tensor(env: &BimoduleAlgebra, left: &Module, right: &Module) -> Result<Module> {
    crate::algebra::require_same(&crate::algebra::opposite(&env.left), &left.algebra, "outer tensor (left)")?;
    crate::algebra::require_same(&env.right, &right.algebra, "outer tensor (right)")?;
    let nb = env.right.dim();
    let action = (0..env.env.dim()).map(|k| left.action[k / nb].kron(&right.action[k % nb])).collect();
    Ok(Module { algebra: env.env.clone(), dim: left.dim * right.dim, action })
}

/// The linear dual `DA = Hom(A, Q)` as an A-A-bimodule, in the dual basis:
/// right action `L(b)^T`, left action `R(a)^T`.
pub struct DualAlgebra {
    pub right_action: Vec<Matrix>,
    pub left_action: Vec<Matrix>,
}

pub fn dual_algebra(a: &Algebra) -> DualAlgebra {
    let n = a.dim();
    let right_action = (0..n).map(|k| a.left_mult_matrix(&crate::linalg::unit_vector(n, k)).transpose()).collect();
    let left_action = (0..n).map(|k| a.right_mult_matrix(&crate::linalg::unit_vector(n, k)).transpose()).collect();
    DualAlgebra { right_action, left_action }
}

impl DualAlgebra {
    pub fn left_act(&self, x: &[Rational]) -> Matrix {
        combine(&self.left_action, x)
    }

    pub fn right_module(&self, a: &Arc<Algebra>) -> Module {
        Module { algebra: a.clone(), dim: a.dim(), action: self.right_action.clone() }
    }
}

fn combine(mats: &[Matrix], x: &[Rational]) -> Matrix {
    let n = mats.first().map_or(0, Matrix::rows);
    let mut m = Matrix::zeros(n, n);
    for (k, c) in x.iter().enumerate() {
        if !c.is_zero() {
            m.add_scaled(c, &mats[k]);
        }
    }
    m
}
