use std::sync::Arc;

use ncmotives::algebra::{path_algebra, Algebra, Quiver};
use ncmotives::complex::{CochainComplex, Complex};
use ncmotives::corpus;
use ncmotives::hom::{euler_pairing, hom_complex, hom_perfect};
use ncmotives::invariants::{cartan_matrix, check_smooth, euler_matrix, k0_class_of_complex, kernels_agree, serre};
use ncmotives::linalg::{inverse, Matrix};
use ncmotives::module::{indecomposable_projective, regular_module, simple_modules, Module};
use ncmotives::perfect::PerfectComplex;
use ncmotives::random::{random_perfect, rng, Shape};
use ncmotives::resolution::{projective_resolution, resolve_complex};

const CAP: usize = 16;

fn alg(name: &str) -> Arc<Algebra> {
    corpus::algebra(name).unwrap().algebra.clone()
}

fn projective(a: &Arc<Algebra>, i: usize) -> PerfectComplex {
    PerfectComplex::projective(a.clone(), i, 0)
}

#[test]
fn simple_and_projective_dimension_vectors() {
    let a = alg("Kronecker");
    let simples = simple_modules(&a);
    assert_eq!(simples.len(), 2);
    assert_eq!(simples[0].dimension_vector(), vec![1, 0]);
    assert_eq!(indecomposable_projective(&a, 0).dimension_vector(), vec![1, 2]);
    assert_eq!(indecomposable_projective(&a, 1).dimension_vector(), vec![0, 1]);
    assert_eq!(regular_module(&a).dim(), a.dim());
    assert!(indecomposable_projective(&a, 0).is_projective());
    assert!(!simples[0].is_projective());
}

#[test]
fn module_rejects_non_multiplicative_action() {
    let a = alg("A2");
    let id = Matrix::identity(1);
    let z = Matrix::zeros(1, 1);
    // Both idempotents acting by one contradicts e0 e1 = 0.
    let labels = a.labels().to_vec();
    let action = labels.iter().map(|l| if l.starts_with('e') { id.clone() } else { z.clone() }).collect();
    assert!(Module::new(a.clone(), 1, action).is_err());
}

#[test]
fn cochain_complex_rejects_nonzero_square() {
    let d = Matrix::identity(1);
    assert!(CochainComplex::new(0, vec![1, 1, 1], vec![d.clone(), d]).is_err());
}

#[test]
fn resolutions_have_the_class_of_the_module() {
    for name in ["QxQ", "A2", "A3", "Kronecker", "A2xA2"] {
        let a = alg(name);
        let mut modules = simple_modules(&a);
        modules.push(regular_module(&a));
        for m in modules {
            let r = projective_resolution(&m, CAP).unwrap();
            let dv: Vec<i64> = m.dimension_vector().iter().map(|&d| d as i64).collect();
            assert_eq!(r.k0_coords(), dv, "{name}");
            let homology = r.realize().homology_dims();
            let nonzero: Vec<(i64, usize)> = homology.into_iter().filter(|&(_, d)| d > 0).collect();
            assert_eq!(nonzero, vec![(0, m.dim())], "{name}: resolution is exact away from degree zero");
        }
    }
}

#[test]
fn hereditary_algebras_have_short_resolutions() {
    for name in ["A2", "A3", "Kronecker"] {
        let a = alg(name);
        for s in simple_modules(&a) {
            assert!(projective_resolution(&s, CAP).unwrap().lo() >= -1);
        }
        assert_eq!(check_smooth(&a, CAP).unwrap().length, Some(1));
    }
    assert_eq!(check_smooth(&alg("A2xA2"), CAP).unwrap().length, Some(2));
    assert_eq!(check_smooth(&alg("QxQ"), CAP).unwrap().length, Some(0));
}

#[test]
fn tight_cap_is_reported_as_not_smooth() {
    let check = check_smooth(&alg("A2xA2"), 1).unwrap();
    assert!(!check.smooth);
}

#[test]
fn hom_between_projectives_is_a_corner() {
    for name in ["A2", "A3", "Kronecker", "A2xA2"] {
        let a = alg(name);
        let c = cartan_matrix(&a).to_i64_rows().unwrap();
        for i in 0..a.idempotent_count() {
            for j in 0..a.idempotent_count() {
                let h = hom_perfect(&projective(&a, i), &projective(&a, j)).unwrap();
                let dims: usize = h.homology_dims().iter().map(|&(_, d)| d).sum();
                assert_eq!(dims as i64, c[j][i], "{name}: Hom(P{i}, P{j})");
            }
        }
    }
}

#[test]
fn euler_form_of_path_algebras_matches_the_quiver() {
    let quivers: Vec<Quiver> = vec![
        corpus::a2_quiver(),
        corpus::a3_quiver(),
        corpus::kronecker_quiver(),
        Quiver::from_edges(4, &[(0, 3, "a"), (1, 3, "b"), (2, 3, "c")]).unwrap(),
    ];
    for q in quivers {
        let a = path_algebra(&q).unwrap();
        let g = euler_matrix(&a, CAP).unwrap();
        assert_eq!(g.matrix, q.euler_form());
        // chi(P_i, S_j) = delta_ij and the rows of the Cartan matrix are the classes of the P_i.
        assert_eq!(g.matrix, inverse(&cartan_matrix(&a)).unwrap());
        assert_eq!(g.matrix.determinant().unwrap(), ncmotives::linalg::int(1));
        assert!(kernels_agree(&g.matrix));
    }
}

#[test]
fn euler_pairing_of_complexes_matches_hom_dimensions() {
    let mut r = rng(11);
    for name in ["A2", "A3", "Kronecker"] {
        let a = alg(name);
        for _ in 0..5 {
            let m = random_perfect(&a, Shape::default(), &mut r);
            let n = random_perfect(&a, Shape::default(), &mut r);
            let h = hom_perfect(&m, &n).unwrap();
            assert_eq!(euler_pairing(&m, &n).unwrap(), h.euler_characteristic());
            assert_eq!(h.euler_characteristic(), h.homology_euler_characteristic());
            let g = euler_matrix(&a, CAP).unwrap();
            assert_eq!(
                ncmotives::invariants::class_pairing(&g, &m.k0_coords(), &n.k0_coords()),
                h.euler_characteristic()
            );
        }
    }
}

#[test]
fn hom_into_a_module_complex_agrees_with_hom_into_its_resolution() {
    let a = alg("A3");
    for (i, s) in simple_modules(&a).into_iter().enumerate() {
        let target = Complex::concentrated(s.clone(), 0);
        let resolved = projective_resolution(&s, CAP).unwrap();
        for j in 0..a.idempotent_count() {
            let p = projective(&a, j);
            let direct = hom_complex(&p, &target).unwrap().homology_dims();
            let via = hom_perfect(&p, &resolved).unwrap().homology_dims();
            let nz = |v: Vec<(i64, usize)>| v.into_iter().filter(|&(_, d)| d > 0).collect::<Vec<_>>();
            assert_eq!(nz(direct), nz(via), "Hom(P{j}, S{i})");
        }
    }
}

#[test]
fn serre_functor_sends_projectives_to_injectives() {
    for name in ["A2", "A3", "Kronecker", "A2xA2"] {
        let a = alg(name);
        let c = cartan_matrix(&a).to_i64_rows().unwrap();
        for i in 0..a.idempotent_count() {
            let s = serre(&projective(&a, i), CAP).unwrap();
            let column: Vec<i64> = c.iter().map(|row| row[i]).collect();
            assert_eq!(s.k0_coords(), column, "{name}: S(P{i})");
        }
    }
}

#[test]
fn shifting_negates_the_class() {
    let mut r = rng(5);
    let a = alg("Kronecker");
    let m = random_perfect(&a, Shape::default(), &mut r);
    let negated: Vec<i64> = m.k0_coords().iter().map(|x| -x).collect();
    assert_eq!(m.shift(1).k0_coords(), negated);
    assert_eq!(m.shift(2).k0_coords(), m.k0_coords());
}

#[test]
fn resolving_a_complex_preserves_homology() {
    let a = alg("A2");
    let s = simple_modules(&a);
    let c = Complex::concentrated(s[0].clone(), 0).direct_sum(&Complex::concentrated(s[1].clone(), 1)).unwrap();
    let r = resolve_complex(&c, CAP).unwrap();
    assert_eq!(r.perfect.k0_coords(), k0_class_of_complex(&c).coords);
    let nz = |v: Vec<(i64, usize)>| v.into_iter().filter(|&(_, d)| d > 0).collect::<Vec<_>>();
    assert_eq!(nz(r.perfect.realize().homology_dims()), nz(c.homology_dims()));
}
