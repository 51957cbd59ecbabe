use std::sync::Arc;

use ncmotives::algebra::{ground_field, opposite, path_algebra, tensor, Algebra, Quiver};
use ncmotives::corpus;
use ncmotives::error::Error;
use ncmotives::linalg::{unit_vector, zero_vector, Vector};

/// Paths by explicit enumeration, one start vertex at a time.
fn paths_by_search(q: &Quiver) -> usize {
    fn walk(q: &Quiver, v: usize) -> usize {
        1 + q.arrows.iter().filter(|a| a.from == v).map(|a| walk(q, a.to)).sum::<usize>()
    }
    (0..q.vertices).map(|v| walk(q, v)).sum()
}

fn quivers() -> Vec<Quiver> {
    vec![
        corpus::two_points(),
        corpus::a2_quiver(),
        corpus::a3_quiver(),
        corpus::kronecker_quiver(),
        Quiver::from_edges(4, &[(0, 1, "a"), (0, 2, "b"), (1, 3, "c"), (2, 3, "d")]).unwrap(),
        Quiver::from_edges(4, &[(0, 3, "a"), (1, 3, "b"), (2, 3, "c")]).unwrap(),
    ]
}

fn basis(a: &Algebra, i: usize) -> Vector {
    unit_vector(a.dim(), i)
}

fn assert_associative(a: &Algebra) {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let ij = a.mul(&basis(a, i), &basis(a, j));
            for k in 0..n {
                let left = a.mul(&ij, &basis(a, k));
                let right = a.mul(&basis(a, i), &a.mul(&basis(a, j), &basis(a, k)));
                assert_eq!(left, right, "{} at ({i}, {j}, {k})", a.name());
            }
        }
    }
}

fn assert_unital(a: &Algebra) {
    for i in 0..a.dim() {
        assert_eq!(a.mul(a.unit(), &basis(a, i)), basis(a, i));
        assert_eq!(a.mul(&basis(a, i), a.unit()), basis(a, i));
    }
}

#[test]
fn path_algebra_dimension_counts_paths() {
    for q in quivers() {
        let a = path_algebra(&q).unwrap();
        assert_eq!(a.dim(), paths_by_search(&q));
        assert_eq!(q.count_paths().unwrap(), a.dim());
        assert_eq!(a.idempotent_count(), q.vertices);
    }
}

#[test]
fn path_algebras_are_associative_and_unital() {
    for q in quivers() {
        let a = path_algebra(&q).unwrap();
        a.check_axioms().unwrap();
        assert_associative(&a);
        assert_unital(&a);
    }
}

#[test]
fn paths_compose_left_to_right() {
    let a = path_algebra(&corpus::a3_quiver()).unwrap();
    let x = a.label_index("a").unwrap();
    let y = a.label_index("b").unwrap();
    let ab = a.mul(&basis(&a, x), &basis(&a, y));
    assert_eq!(ab, basis(&a, a.label_index("a.b").unwrap()));
    assert_eq!(a.mul(&basis(&a, y), &basis(&a, x)), zero_vector(a.dim()));
    let e0 = a.idempotent(0).clone();
    assert_eq!(a.mul(&e0, &basis(&a, x)), basis(&a, x));
}

#[test]
fn cyclic_quiver_is_rejected() {
    let q = Quiver::from_edges(2, &[(0, 1, "a"), (1, 0, "b")]).unwrap();
    assert!(!q.is_acyclic());
    assert!(matches!(path_algebra(&q), Err(Error::CyclicQuiver)));
    let looped = Quiver::from_edges(1, &[(0, 0, "x")]).unwrap();
    assert!(matches!(path_algebra(&looped), Err(Error::CyclicQuiver)));
}

#[test]
fn out_of_range_arrow_is_invalid() {
    assert!(Quiver::from_edges(2, &[(0, 2, "a")]).is_err());
}

#[test]
fn opposite_is_an_involution() {
    for q in quivers() {
        let a = path_algebra(&q).unwrap();
        let op = opposite(&a);
        assert_associative(&op);
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                assert_eq!(op.mul(&basis(&a, i), &basis(&a, j)), a.mul(&basis(&a, j), &basis(&a, i)));
            }
        }
        let back = opposite(&op);
        assert_eq!(back.name(), a.name());
        assert_eq!(*back, *a);
    }
}

#[test]
fn opposite_quiver_gives_opposite_algebra_dimension() {
    for q in quivers() {
        assert_eq!(path_algebra(&q.opposite()).unwrap().dim(), path_algebra(&q).unwrap().dim());
    }
}

#[test]
fn tensor_products_multiply_dimensions() {
    let algs: Vec<Arc<Algebra>> = vec![
        ground_field(),
        path_algebra(&corpus::a2_quiver()).unwrap(),
        path_algebra(&corpus::kronecker_quiver()).unwrap(),
    ];
    for a in &algs {
        for b in &algs {
            let t = tensor(a, b);
            assert_eq!(t.dim(), a.dim() * b.dim());
            assert_eq!(t.idempotent_count(), a.idempotent_count() * b.idempotent_count());
            t.check_axioms().unwrap();
            assert_unital(&t);
        }
    }
    let a2 = &algs[1];
    assert_associative(&tensor(a2, a2));
}

#[test]
fn tensor_basis_is_row_major() {
    let a2 = path_algebra(&corpus::a2_quiver()).unwrap();
    let kr = path_algebra(&corpus::kronecker_quiver()).unwrap();
    let t = tensor(&a2, &kr);
    for i in 0..a2.dim() {
        for j in 0..kr.dim() {
            assert_eq!(t.labels()[i * kr.dim() + j], format!("{}⊗{}", a2.labels()[i], kr.labels()[j]));
        }
    }
}

#[test]
fn corpus_algebras_are_well_formed() {
    for ca in corpus::algebras() {
        ca.algebra.check_axioms().unwrap();
        if let Some(q) = &ca.quiver {
            assert_eq!(ca.algebra.dim(), paths_by_search(q));
        }
    }
}
