//! Dense linear algebra over a generic [`Field`].

pub mod field;
pub mod matrix;
pub mod subspace;

pub use field::{format_rational, format_rational_short, parse_rational, Field};
pub use matrix::{vector, Matrix};
pub use subspace::Subspace;
