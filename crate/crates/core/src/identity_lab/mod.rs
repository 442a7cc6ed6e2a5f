//! Graded identities: parsing, expansion through a contraction, derivation of
//! identity sets and evaluation on graded algebras.

mod ast;
mod eval;
mod expand;
mod poly;

pub use ast::{parse_delta, parse_identity_file, DeltaPoly, Var};
pub use eval::{check_identities, eval_identity, identity_holds};
pub use expand::{derive_variety, expand, expand_element, ExpandedElement};
pub use poly::{Mono, Poly};

use crate::constructions::GradeSet;

/// Anticommutativity and the Jacobi identity.
pub const LIE_AXIOMS: &str = "\
# anticommutativity
x0*y0 + y0*x0
# Jacobi
x0*y0*z0 + y0*z0*x0 + z0*x0*y0
";

/// The graded identities satisfied by the grade-2-contracting variety over
/// `{0,2}`, written in this grammar.
pub const GRADED_AXIOMS: &str = "\
x2*x2
x2*y2*a0 - x2*a0*y2 - x2*(y2*a0)
6*p0(x2*y2)*z2 - p2(p2(x2*y2)*z2) - p2(p2(z2*y2)*x2) - p2(p2(x2*z2)*y2)
p0(p2(x2*y2)*z2) + p0(p2(z2*x2)*y2) + p0(p2(y2*z2)*x2)
";

pub fn lie_axioms() -> Vec<DeltaPoly> {
    parse_identity_file(LIE_AXIOMS, GradeSet::Delta).expect("built-in axioms")
}

/// Serializes an identity set, one per line.
pub fn format_identity_file(fs: &[Poly]) -> String {
    fs.iter().map(|f| format!("{f}\n")).collect()
}
