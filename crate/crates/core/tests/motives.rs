use std::sync::Arc;

use ncmotives::corpus::{self, find_motive};
use ncmotives::error::Error;
use ncmotives::linalg::int;
use ncmotives::motives::{
    build_hom_model, chi_hom, chi_kernel, compose, dualize, intersection_number, numerical_kernel, trace,
    verify_equivalence, Correspondence, NCMotive, Term,
};
use ncmotives::random::{random_correspondence, rng, Shape};

const CAP: usize = 16;

fn motive(name: &str) -> Arc<NCMotive> {
    find_motive(CAP, name).unwrap().unwrap_or_else(|| panic!("no motive {name}"))
}

const ENDS: &[(&str, &str)] = &[
    ("(A2, id)", "(A2, id)"),
    ("(A2, id)", "(Kronecker, id)"),
    ("(A3, e1)", "(A2, id)"),
    ("(Kronecker, e0)", "(Kronecker, 1-e0)"),
    ("(Q, id)", "(A3, id)"),
];

#[test]
fn double_dual_is_the_identity_on_classes() {
    let mut r = rng(1);
    for (s, t) in ENDS {
        let x = random_correspondence(&motive(s), &motive(t), Shape::default(), &mut r);
        let dd = dualize(&dualize(&x).unwrap()).unwrap();
        assert_eq!(dd.class(), x.class(), "{s} -> {t}");
        assert_eq!(dd.source().name(), x.source().name());
    }
}

#[test]
fn idempotents_are_identities_on_their_hom_sets() {
    let mut r = rng(2);
    for (s, t) in ENDS {
        let (src, tgt) = (motive(s), motive(t));
        let x = random_correspondence(&src, &tgt, Shape::default(), &mut r);
        let restricted = Correspondence::from_class(&src, &tgt, &x.restricted_class(), CAP).unwrap();
        assert!(restricted.in_hom_set());
        let after = compose(&Correspondence::identity(&tgt), &restricted).unwrap();
        let before = compose(&restricted, &Correspondence::identity(&src)).unwrap();
        assert_eq!(after.class(), restricted.class(), "{s} -> {t}");
        assert_eq!(before.class(), restricted.class(), "{s} -> {t}");
    }
}

#[test]
fn composition_is_associative_on_classes() {
    let mut r = rng(3);
    let (a, b, c, d) = (motive("(Q, id)"), motive("(A2, id)"), motive("(Kronecker, id)"), motive("(A2, id)"));
    let x = random_correspondence(&a, &b, Shape::default(), &mut r);
    let y = random_correspondence(&b, &c, Shape::default(), &mut r);
    let z = random_correspondence(&c, &d, Shape::default(), &mut r);
    let left = compose(&z, &compose(&y, &x).unwrap()).unwrap();
    let right = compose(&compose(&z, &y).unwrap(), &x).unwrap();
    assert_eq!(left.class(), right.class());
}

#[test]
fn non_idempotent_is_rejected() {
    let a = corpus::algebra("A2").unwrap().algebra.clone();
    let diag = ncmotives::hochschild::diagonal_resolution(&a, CAP).unwrap();
    let err = NCMotive::new("(A2, 2)", &a, vec![Term::new(int(2), (*diag).clone())]).unwrap_err();
    assert!(matches!(err, Error::NotIdempotent(_)));
}

#[test]
fn mismatched_composition_is_rejected() {
    let mut r = rng(4);
    let x = random_correspondence(&motive("(Q, id)"), &motive("(A2, id)"), Shape::default(), &mut r);
    assert!(matches!(compose(&x, &x), Err(Error::EndpointMismatch(_))));
}

#[test]
fn trace_of_an_identity_is_the_rank() {
    for (name, rank) in [("(A2, id)", 2), ("(A3, id)", 3), ("(A2, e0)", 1), ("(Kronecker, 1-e1)", 1), ("(A2xA2, id)", 4)] {
        let m = motive(name);
        assert_eq!(trace(&Correspondence::identity(&m), CAP).unwrap(), int(rank), "{name}");
    }
}

#[test]
fn pairings_relate_through_duality() {
    let mut r = rng(5);
    for (s, t) in ENDS {
        let (src, tgt) = (motive(s), motive(t));
        let x = random_correspondence(&src, &tgt, Shape::default(), &mut r);
        let y = random_correspondence(&src, &tgt, Shape::default(), &mut r);
        let dx = dualize(&x).unwrap();
        assert_eq!(chi_hom(&x, &y).unwrap(), intersection_number(&dx, &y, CAP).unwrap(), "{s} -> {t}");
        let back = random_correspondence(&tgt, &src, Shape::default(), &mut r);
        assert_eq!(intersection_number(&x, &back, CAP).unwrap(), intersection_number(&back, &x, CAP).unwrap());
    }
}

#[test]
fn scaling_and_sums_are_bilinear() {
    let mut r = rng(6);
    let (src, tgt) = (motive("(A2, id)"), motive("(Kronecker, id)"));
    let x = random_correspondence(&src, &tgt, Shape::default(), &mut r);
    let y = random_correspondence(&src, &tgt, Shape::default(), &mut r);
    let z = random_correspondence(&src, &tgt, Shape::default(), &mut r);
    let lhs = chi_hom(&x.scale(&int(3)).add(&y).unwrap(), &z).unwrap();
    let rhs = int(3) * chi_hom(&x, &z).unwrap() + chi_hom(&y, &z).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn full_models_have_trivial_unimodular_kernels() {
    for (s, t) in [("(A2, id)", "(A2, id)"), ("(A2, id)", "(Kronecker, id)"), ("(QxQ, id)", "(QxQ, id)")] {
        let m = build_hom_model(&motive(s), &motive(t), CAP).unwrap();
        assert!(chi_kernel(&m).is_empty());
        assert!(numerical_kernel(&m).is_empty());
        let report = verify_equivalence(&m);
        assert!(report.kernels_equal);
        assert!(report.pass(), "{s} -> {t}: {:?}", report.checks.iter().filter(|c| !c.pass).map(|c| &c.name).collect::<Vec<_>>());
    }
}

#[test]
fn isotropic_idempotent_separates_the_two_kernels() {
    // Every class in Hom((Q, id), (Kronecker, e_iso)) has zero Euler pairing with the
    // Hom-set, yet pairs nontrivially with the reverse Hom-set.
    let m = build_hom_model(&motive("(Q, id)"), &motive("(Kronecker, e_iso)"), CAP).unwrap();
    assert_eq!(m.basis.len(), 1);
    assert_eq!(chi_kernel(&m).len(), 1);
    assert!(numerical_kernel(&m).is_empty());
    assert!(!verify_equivalence(&m).kernels_equal);
}
