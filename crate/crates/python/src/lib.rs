//! Python module `ncmotives_py`: thin wrappers over the core crate.
//! Algebras are given as JSON text in any form the CLI accepts, e.g. `"\"A2\""`
//! or a quiver object.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use ncmotives::complex::Complex;
use ncmotives::error::Error;
use ncmotives::json::{parse_document, AlgebraSpec};

const DEFAULT_CAP: usize = 16;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Json(_) | Error::Input(_) | Error::InvalidQuiver(_) | Error::CyclicQuiver => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn load(spec: &str) -> PyResult<std::sync::Arc<ncmotives::algebra::Algebra>> {
    let spec: AlgebraSpec = parse_document(spec).map_err(to_py)?;
    spec.load().map_err(to_py)
}

/// `chi(S_i, S_j)` on the simple modules, as integers.
#[pyfunction]
#[pyo3(signature = (algebra, cap = DEFAULT_CAP))]
pub fn euler_matrix(algebra: &str, cap: usize) -> PyResult<Vec<Vec<i64>>> {
    let a = load(algebra)?;
    let g = ncmotives::invariants::euler_matrix(&a, cap).map_err(to_py)?;
    g.matrix.to_i64_rows().ok_or_else(|| PyRuntimeError::new_err("Euler matrix is not integral"))
}

/// Dimensions of `HH_0, HH_1, ...` with diagonal coefficients.
#[pyfunction]
#[pyo3(signature = (algebra, cap = DEFAULT_CAP))]
pub fn hochschild(algebra: &str, cap: usize) -> PyResult<(i64, Vec<usize>)> {
    let a = load(algebra)?;
    let env = ncmotives::algebra::bimodule_algebra(&a, &a);
    let diag = ncmotives::module::diagonal_bimodule(&env).map_err(to_py)?;
    let p = ncmotives::hochschild::hochschild(&a, &Complex::concentrated(diag, 0), cap).map_err(to_py)?;
    Ok((p.start, p.dims))
}

/// Runs the command-line tool in-process: `(exit_code, stdout, stderr)`.
#[pyfunction]
pub fn run(args: Vec<String>) -> (i32, String, String) {
    let argv = std::iter::once("ncmotives".to_string()).chain(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = ncmotives::cli::run_with(argv, &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned(), String::from_utf8_lossy(&err).into_owned())
}

#[pymodule]
fn ncmotives_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(euler_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(hochschild, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
