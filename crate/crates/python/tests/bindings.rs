// The wrapped functions are plain Rust functions too; these run without an interpreter.

#[test]
fn euler_matrix_by_name_and_by_quiver() {
    assert_eq!(ncmotives_py::euler_matrix("\"A2\"", 16).unwrap(), vec![vec![1, -1], vec![0, 1]]);
    let quiver = r#"{"vertices": 2, "arrows": [{"from": 0, "to": 1, "label": "a"}, {"from": 0, "to": 1, "label": "b"}]}"#;
    assert_eq!(ncmotives_py::euler_matrix(quiver, 16).unwrap(), vec![vec![1, -2], vec![0, 1]]);
    assert!(ncmotives_py::euler_matrix("\"NoSuchAlgebra\"", 16).is_err());
}

#[test]
fn hochschild_of_a_tensor_square() {
    let (start, dims) = ncmotives_py::hochschild("\"A2xA2\"", 16).unwrap();
    assert_eq!(start, 0);
    assert_eq!(dims[0], 4);
    assert!(dims[1..].iter().all(|&d| d == 0));
}

#[test]
fn run_returns_exit_code_and_streams() {
    let (code, out, err) = ncmotives_py::run(vec!["--help".into()]);
    assert_eq!(code, 0);
    assert!(out.contains("euler-matrix") || err.contains("euler-matrix"));
    let (code, _, _) = ncmotives_py::run(vec!["bogus".into()]);
    assert_eq!(code, 2);
}
