//! Built-in algebras, graded algebras and the contraction of graded algebras.

mod builtins;
pub mod d4;
mod graded;
mod triality;

pub use builtins::{abelian, b2, gamma, gamma_printed, grassmann2, lambda, osp, osp_printed, sl2, t7seed};
pub use d4::{build_d4, make_d4, D4Build, D4Signs};
pub use graded::{contract, GradeSet, GradedAlgebra};
pub use triality::{direct_sum_action, make_tab, make_tl, restrict_with_action, CompatiblePair};
