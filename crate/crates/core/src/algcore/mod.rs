//! Structure-constant algebras and the generic toolbox.

mod algebra;
mod derivations;
mod identities;
mod structure;

pub use algebra::{Algebra, SparseVec};
pub use derivations::{commutator, MapAlgebra};
pub use identities::polarization_points;
pub use structure::Quotient;
