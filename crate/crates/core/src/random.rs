//! Seeded random perfect complexes and correspondences.

use std::sync::Arc;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::linalg::{int, kernel_basis, zero_vector, Matrix, Rational, Vector};
use crate::motives::{Correspondence, NCMotive, Term};
use crate::perfect::{AlgMatrix, PerfectComplex};

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape limits for random complexes.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub max_degrees: usize,
    pub max_summands: usize,
}

impl Default for Shape {
    fn default() -> Self {
        Shape { max_degrees: 3, max_summands: 2 }
    }
}

fn small_coef(rng: &mut ChaCha8Rng) -> Rational {
    int(rng.gen_range(-2..=2))
}

fn nonzero_coef(rng: &mut ChaCha8Rng) -> Rational {
    int(*[-2, -1, 1, 2].choose(rng).expect("nonempty"))
}

/// Random `d` with `d * prev = 0`, entries in the corners `e_t A e_s`.
fn random_differential(a: &Algebra, rows: &[usize], cols: &[usize], prev: Option<&AlgMatrix>, rng: &mut ChaCha8Rng) -> AlgMatrix {
    let n = a.dim();
    // Unknowns: (t, s, corner basis index).
    let mut unknowns = Vec::new();
    for (t, &it) in rows.iter().enumerate() {
        for (s, &is) in cols.iter().enumerate() {
            for b in 0..a.corner(it, is).dim() {
                unknowns.push((t, s, b));
            }
        }
    }
    let solutions: Vec<Vector> = match prev {
        Some(p) if p.ncols() > 0 => {
            let r = p.ncols();
            let mut m = Matrix::zeros(rows.len() * r * n, unknowns.len());
            for (col, &(t, s, b)) in unknowns.iter().enumerate() {
                let x = a.corner(rows[t], cols[s]).basis_vector(b);
                for q in 0..r {
                    let y = p.get(s, q);
                    if y.iter().all(Zero::is_zero) {
                        continue;
                    }
                    for (k, c) in a.mul(&x, y).into_iter().enumerate() {
                        if !c.is_zero() {
                            m[((t * r + q) * n + k, col)] = c;
                        }
                    }
                }
            }
            kernel_basis(&m)
        }
        _ => (0..unknowns.len()).map(|i| crate::linalg::unit_vector(unknowns.len(), i)).collect(),
    };
    let mut coords = zero_vector(unknowns.len());
    for v in &solutions {
        crate::linalg::axpy(&small_coef(rng), v, &mut coords);
    }
    let mut d = AlgMatrix::zeros(n, rows.to_vec(), cols.to_vec());
    for (&(t, s, b), c) in unknowns.iter().zip(coords) {
        if !c.is_zero() {
            let x = a.corner(rows[t], cols[s]).basis_vector(b);
            d.add_to(t, s, &c, &x);
        }
    }
    d
}

/// A random bounded complex of projectives with at least one summand.
pub fn random_perfect(a: &Arc<Algebra>, shape: Shape, rng: &mut ChaCha8Rng) -> PerfectComplex {
    let k = a.idempotent_count();
    let degrees = rng.gen_range(1..=shape.max_degrees.max(1));
    let lo = rng.gen_range(-1..=0);
    let mut summands: Vec<Vec<usize>> = (0..degrees)
        .map(|_| {
            let count = rng.gen_range(0..=shape.max_summands);
            (0..count).map(|_| rng.gen_range(0..k)).collect()
        })
        .collect();
    if summands.iter().all(Vec::is_empty) {
        summands[0].push(rng.gen_range(0..k));
    }
    let mut diffs: Vec<AlgMatrix> = Vec::new();
    for n in 0..degrees.saturating_sub(1) {
        let d = random_differential(a, &summands[n + 1], &summands[n], diffs.last(), rng);
        diffs.push(d);
    }
    PerfectComplex::new(a.clone(), lo, summands, diffs).expect("differentials square to zero by construction")
}

/// A combination of one or two random complexes over `A^op ⊗ B`.
pub fn random_correspondence(source: &Arc<NCMotive>, target: &Arc<NCMotive>, shape: Shape, rng: &mut ChaCha8Rng) -> Correspondence {
    let env = crate::algebra::bimodule_algebra(source.algebra(), target.algebra());
    let count = rng.gen_range(1..=2);
    let terms = (0..count).map(|_| Term::new(nonzero_coef(rng), random_perfect(&env.env, shape, rng))).collect();
    Correspondence::new(source, target, terms).expect("terms live over the bimodule algebra")
}

/// Random integer coordinates in `[-2, 2]`, not all zero when `dim > 0`.
pub fn random_coords(dim: usize, rng: &mut ChaCha8Rng) -> Vector {
    if dim == 0 {
        return Vec::new();
    }
    loop {
        let v: Vector = (0..dim).map(|_| small_coef(rng)).collect();
        if v.iter().any(|c| !c.is_zero()) {
            return v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::algebras;

    #[test]
    fn random_complexes_are_complexes() {
        let mut r = rng(7);
        for ca in algebras().iter().take(5) {
            for _ in 0..10 {
                let p = random_perfect(&ca.algebra, Shape::default(), &mut r);
                p.check().unwrap();
                p.realize().check().unwrap();
            }
        }
    }

    #[test]
    fn seeded_generation_is_deterministic() {
        let a = &algebras()[3].algebra;
        let x = random_perfect(a, Shape::default(), &mut rng(11));
        let y = random_perfect(a, Shape::default(), &mut rng(11));
        assert_eq!(x.all_summands(), y.all_summands());
        assert_eq!(x.k0_coords(), y.k0_coords());
    }
}
