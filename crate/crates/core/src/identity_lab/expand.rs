//! Substituting `x ↦ x⊗a` into an identity and splitting the result along the
//! basis of the companion algebra.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::One;

use super::ast::{DeltaPoly, Var};
use super::poly::Poly;
use crate::constructions::GradedAlgebra;
use crate::error::{Error, Result};
use crate::Rational;

/// `Σₖ gₖ ⊗ aₖ`, keyed by the carrier index `k`.
pub type ExpandedElement = BTreeMap<usize, Poly>;

fn merge(into: &mut ExpandedElement, c: &Rational, from: &ExpandedElement) {
    for (k, p) in from {
        let slot = into.entry(*k).or_default();
        slot.axpy(c, p);
    }
    into.retain(|_, p| !p.is_zero());
}

/// Evaluates `f` on `xᵢ⊗a_{T(xᵢ)}` in the contraction with `lam`.
pub fn expand_element(f: &DeltaPoly, lam: &GradedAlgebra<Rational>, t: &BTreeMap<Var, usize>) -> Result<ExpandedElement> {
    for v in f.variables() {
        let k = *t
            .get(&v)
            .ok_or_else(|| Error::Precondition(format!("variable {}{} has no carrier", v.0, v.1)))?;
        if k >= lam.dim() || lam.grades[k] != v.1 {
            return Err(Error::GradeMismatch(format!(
                "variable {}{} assigned to basis element {k} of grade {}",
                v.0,
                v.1,
                lam.grades.get(k).map_or("?".to_string(), |g| g.to_string())
            )));
        }
    }
    Ok(walk(f, lam, t))
}

fn walk(f: &DeltaPoly, lam: &GradedAlgebra<Rational>, t: &BTreeMap<Var, usize>) -> ExpandedElement {
    let gs = lam.grade_set;
    match f {
        DeltaPoly::Var { name, grade } => {
            BTreeMap::from([(t[&(name.clone(), *grade)], Poly::var(name, *grade))])
        }
        DeltaPoly::Sum(ts) => {
            let mut out = ExpandedElement::new();
            for s in ts {
                merge(&mut out, &Rational::one(), &walk(s, lam, t));
            }
            out
        }
        DeltaPoly::Scale(c, a) => {
            let mut out = ExpandedElement::new();
            merge(&mut out, c, &walk(a, lam, t));
            out
        }
        DeltaPoly::Proj(g, a) => walk(a, lam, t)
            .into_iter()
            .filter(|(k, _)| lam.grades[*k] == *g)
            .collect(),
        DeltaPoly::Mul(a, b) => {
            let (ea, eb) = (walk(a, lam, t), walk(b, lam, t));
            let mut out = ExpandedElement::new();
            for (k1, p1) in &ea {
                for (k2, p2) in &eb {
                    let prod = p1.mul(p2);
                    for (k, c) in lam.alg.basis_product(*k1, *k2) {
                        let piece = prod.project(lam.grades[*k], gs);
                        merge(&mut out, c, &BTreeMap::from([(*k, piece)]));
                    }
                }
            }
            out
        }
    }
}

/// The component identities `gₖ` of `f` under the assignment `t`.
pub fn expand(f: &DeltaPoly, lam: &GradedAlgebra<Rational>, t: &BTreeMap<Var, usize>) -> Result<Vec<Poly>> {
    Ok(expand_element(f, lam, t)?.into_values().collect())
}

/// All component identities of every `f` over every grade-compatible
/// assignment of basis elements of `lam`, in canonical form and deduplicated.
/// The written grades of the variables of `f` are ignored: each assignment
/// regrades them to the grades of their carriers.
pub fn derive_variety(fs: &[DeltaPoly], lam: &GradedAlgebra<Rational>) -> Vec<Poly> {
    let mut out = BTreeSet::new();
    let n = lam.dim();
    for f in fs {
        let vars: Vec<Var> = f.variables().into_iter().collect();
        let count = n.checked_pow(vars.len() as u32).expect("assignment count");
        for code in 0..count {
            let mut c = code;
            let carriers: Vec<usize> = vars
                .iter()
                .map(|_| {
                    let k = c % n;
                    c /= n;
                    k
                })
                .collect();
            let regrade: BTreeMap<Var, Var> = vars
                .iter()
                .zip(&carriers)
                .map(|(v, k)| (v.clone(), (v.0.clone(), lam.grades[*k])))
                .collect();
            let mut t = BTreeMap::new();
            let clash = vars.iter().zip(&carriers).any(|(v, k)| {
                let key = regrade[v].clone();
                t.insert(key, *k).is_some_and(|old| old != *k)
            });
            if clash {
                continue;
            }
            let g = f.rename(&|v| regrade[v].clone());
            for p in expand(&g, lam, &t).expect("assignment is grade compatible") {
                out.insert(p.canonical());
            }
        }
    }
    out.into_iter().collect()
}
