//! Exact Euler forms, Serre functors, Hochschild homology and numerical
//! equivalence for noncommutative motives of finite-dimensional algebras.

pub mod algebra;
pub mod cli;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod hochschild;
pub mod hom;
pub mod invariants;
pub mod json;
pub mod linalg;
pub mod module;
pub mod motives;
pub mod perfect;
pub mod random;
pub mod report;
pub mod resolution;
pub mod suite;
pub mod tensor;

pub use error::{Error, Result};
