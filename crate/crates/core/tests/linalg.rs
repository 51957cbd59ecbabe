use ncmotives::linalg::{determinant, int, inverse, kernel_basis, rank, rref, solve, Matrix, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |i, j| int(v[i * cols + j])))
}

fn shaped() -> impl Strategy<Value = Matrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| matrix(r, c))
}

fn square() -> impl Strategy<Value = Matrix> {
    (1usize..5).prop_flat_map(|n| matrix(n, n))
}

proptest! {
    #[test]
    fn kernel_vectors_are_killed_and_independent(m in shaped()) {
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.len(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
        if !k.is_empty() {
            prop_assert_eq!(rank(&Matrix::from_columns(m.cols(), &k)), k.len());
        }
    }

    #[test]
    fn rank_is_transpose_invariant(m in shaped()) {
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn rref_has_unit_pivots(m in shaped()) {
        let r = rref(&m);
        prop_assert_eq!(r.pivots.len(), rank(&m));
        for (row, &col) in r.pivots.iter().enumerate() {
            prop_assert_eq!(r.rows[row][col].clone(), int(1));
            for (other, v) in r.rows.iter().enumerate() {
                if other != row {
                    prop_assert!(v[col].is_zero());
                }
            }
        }
    }

    #[test]
    fn determinant_is_multiplicative(n in 1usize..4, seed in any::<u64>()) {
        let gen = |s: u64| Matrix::from_fn(n, n, |i, j| int(((s >> ((i * n + j) % 60)) as i64 % 5) - 2));
        let (a, b) = (gen(seed), gen(seed.rotate_left(17)));
        prop_assert_eq!(determinant(&(&a * &b)).unwrap(), determinant(&a).unwrap() * determinant(&b).unwrap());
    }

    #[test]
    fn inverse_exists_iff_determinant_nonzero(m in square()) {
        let d = determinant(&m).unwrap();
        match inverse(&m) {
            Ok(inv) => {
                prop_assert!(!d.is_zero());
                prop_assert_eq!(&m * &inv, Matrix::identity(m.rows()));
            }
            Err(_) => prop_assert!(d.is_zero()),
        }
    }

    #[test]
    fn solve_recovers_consistent_systems(m in shaped(), x in proptest::collection::vec(-3i64..=3, 4)) {
        let x: Vec<Rational> = x.into_iter().take(m.cols()).chain(std::iter::repeat(0)).take(m.cols()).map(int).collect();
        let b = m.mul_vec(&x);
        let y = solve(&m, &b).unwrap().expect("consistent");
        prop_assert_eq!(m.mul_vec(&y), b);
    }
}

#[test]
fn inconsistent_system_has_no_solution() {
    let m = Matrix::from_i64(&[vec![1, 1], vec![2, 2]]);
    assert_eq!(solve(&m, &[int(1), int(3)]).unwrap(), None);
}

#[test]
fn determinant_of_non_square_is_an_error() {
    assert!(determinant(&Matrix::zeros(2, 3)).is_err());
}

#[test]
fn exact_fractions_survive_elimination() {
    let m = Matrix::from_i64(&[vec![3, 1], vec![1, 3]]);
    let inv = inverse(&m).unwrap();
    assert_eq!(inv[(0, 0)], ncmotives::linalg::frac(3, 8));
    assert_eq!(inv[(0, 1)], ncmotives::linalg::frac(-1, 8));
}
