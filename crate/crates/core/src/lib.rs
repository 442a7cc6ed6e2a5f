pub mod algcore;
pub mod centres;
pub mod constructions;
pub mod error;
pub mod exactlin;
pub mod functors;
pub mod identity_lab;
pub mod io;
pub mod report;
pub mod s3rep;

pub use algcore::Algebra;
pub use error::{Error, Result};
pub use exactlin::{Field, Matrix, Subspace};
pub use report::{Check, Report};
pub use s3rep::{IsotypicDecomposition, S3Action};

pub type Rational = num_rational::BigRational;
pub type QMatrix = Matrix<Rational>;
pub type QSubspace = Subspace<Rational>;
pub type QAlgebra = Algebra<Rational>;
