use std::sync::Arc;

use ncmotives::algebra::{bimodule_algebra, path_algebra, Algebra, Quiver};
use ncmotives::complex::Complex;
use ncmotives::corpus;
use ncmotives::hochschild::{bar_oracle, diagonal_resolution, free_bimodule, hochschild, hochschild_euler, BarKind};
use ncmotives::module::{diagonal_bimodule, Module};

const CAP: usize = 16;

fn alg(name: &str) -> Arc<Algebra> {
    corpus::algebra(name).unwrap().algebra.clone()
}

fn hh(a: &Arc<Algebra>, w: &Module, top: usize) -> Vec<usize> {
    hochschild(a, &Complex::concentrated(w.clone(), 0), CAP).unwrap().up_to(top)
}

fn diagonal(a: &Arc<Algebra>) -> Module {
    diagonal_bimodule(&bimodule_algebra(a, a)).unwrap()
}

#[test]
fn acyclic_path_algebras_have_homology_only_in_degree_zero() {
    for (name, vertices) in [("Q", 1), ("QxQ", 2), ("A2", 2), ("A3", 3), ("Kronecker", 2)] {
        let a = alg(name);
        assert_eq!(hh(&a, &diagonal(&a), 4), vec![vertices, 0, 0, 0, 0], "{name}");
    }
}

#[test]
fn kunneth_for_a_tensor_square() {
    let a = alg("A2xA2");
    assert_eq!(hh(&a, &diagonal(&a), 3), vec![4, 0, 0, 0]);
}

#[test]
fn free_coefficients_are_acyclic_above_zero() {
    for name in ["A2", "A3", "Kronecker"] {
        let a = alg(name);
        let w = free_bimodule(&bimodule_algebra(&a, &a));
        let mut expected = vec![0; 4];
        expected[0] = a.dim();
        assert_eq!(hh(&a, &w, 3), expected, "{name}");
    }
}

#[test]
fn dual_coefficients_give_dual_cohomology() {
    // HH_n(A, DA) is dual to HH^n(A, A): the centre, then outer derivations.
    let cases = [("A2", vec![1, 0, 0]), ("A3", vec![1, 0, 0]), ("Kronecker", vec![1, 3, 0])];
    for (name, expected) in cases {
        let a = alg(name);
        assert_eq!(hh(&a, &corpus::dual_bimodule(&a).unwrap(), 2), expected, "{name}");
    }
}

#[test]
fn resolution_agrees_with_both_bar_complexes() {
    for name in ["QxQ", "A2", "Kronecker"] {
        let a = alg(name);
        for (label, w) in corpus::bimodules(&a).unwrap() {
            let expected = hh(&a, &w, 3);
            for kind in [BarKind::Reduced, BarKind::Full] {
                assert_eq!(bar_oracle(&a, &w, 3, kind).unwrap().up_to(3), expected, "{name} with {label}, {kind:?}");
            }
        }
    }
}

#[test]
fn bar_complex_on_a_star_quiver() {
    let q = Quiver::from_edges(4, &[(0, 3, "a"), (1, 3, "b"), (2, 3, "c")]).unwrap();
    let a = path_algebra(&q).unwrap();
    for (label, w) in corpus::bimodules(&a).unwrap() {
        assert_eq!(bar_oracle(&a, &w, 2, BarKind::Reduced).unwrap().up_to(2), hh(&a, &w, 2), "{label}");
    }
}

#[test]
fn trace_of_the_diagonal_counts_vertices() {
    for ca in corpus::algebras() {
        let a = &ca.algebra;
        let p = diagonal_resolution(a, CAP).unwrap();
        assert_eq!(hochschild_euler(a, &p, CAP).unwrap(), a.idempotent_count() as i64, "{}", ca.name);
    }
}

#[test]
fn coefficients_over_the_wrong_algebra_are_rejected() {
    let a2 = alg("A2");
    let kr = alg("Kronecker");
    assert!(bar_oracle(&a2, &diagonal(&kr), 1, BarKind::Reduced).is_err());
}
