//! Deciding whether a graded algebra satisfies an identity.

use std::collections::BTreeMap;

use super::ast::Var;
use super::poly::Poly;
use crate::algcore::polarization_points;
use crate::constructions::GradedAlgebra;
use crate::exactlin::vector;
use crate::report::{Report, MAX_WITNESSES};
use crate::Rational;

/// Substitution points per variable: the homogeneous basis for variables of
/// degree one, polarization points otherwise.
fn points(f: &Poly, m: &GradedAlgebra<Rational>) -> Vec<(Var, Vec<Vec<Rational>>)> {
    f.variables()
        .into_iter()
        .map(|v| {
            let idx = m.indices_of_grade(v.1);
            let d = f.degree_in(&v).max(1);
            let pts = polarization_points::<Rational>(idx.len(), d)
                .into_iter()
                .map(|c| {
                    let mut x = vector::zeros(m.dim());
                    for (i, ci) in idx.iter().zip(c) {
                        x[*i] = ci;
                    }
                    x
                })
                .collect();
            (v, pts)
        })
        .collect()
}

/// Visits every substitution until `visit` returns `false`.
fn for_each_substitution(
    f: &Poly,
    m: &GradedAlgebra<Rational>,
    mut visit: impl FnMut(&BTreeMap<Var, Vec<Rational>>, &[usize]) -> bool,
) {
    let pts = points(f, m);
    if pts.iter().any(|(_, p)| p.is_empty()) {
        return;
    }
    let mut idx = vec![0usize; pts.len()];
    loop {
        let env: BTreeMap<Var, Vec<Rational>> = pts
            .iter()
            .zip(&idx)
            .map(|((v, p), i)| (v.clone(), p[*i].clone()))
            .collect();
        if !visit(&env, &idx) {
            return;
        }
        let mut pos = 0;
        while pos < idx.len() {
            idx[pos] += 1;
            if idx[pos] < pts[pos].1.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
        if pos == idx.len() {
            return;
        }
    }
}

/// `f` vanishes on `m`. Closure of the grading is assumed.
pub fn identity_holds(f: &Poly, m: &GradedAlgebra<Rational>) -> bool {
    let mut ok = true;
    for_each_substitution(f, m, |env, _| {
        ok = vector::is_zero(&f.eval(m, env));
        ok
    });
    ok
}

/// Evaluates `f` on all substitutions and lists violations. Grade closure of
/// `m` is checked alongside, since the expanded form relies on it.
pub fn eval_identity(f: &Poly, m: &GradedAlgebra<Rational>) -> Report {
    let mut r = Report::new(format!("{f} = 0"));
    r.check_witnesses("grade closure", m.closure_violations());
    let mut bad = Vec::new();
    let mut count = 0usize;
    for_each_substitution(f, m, |env, _| {
        let val = f.eval(m, env);
        if !vector::is_zero(&val) {
            count += 1;
            if bad.len() < MAX_WITNESSES {
                let args: Vec<String> = env
                    .iter()
                    .map(|((n, g), x)| format!("{n}{g} := {}", m.alg.format_vector(x)))
                    .collect();
                bad.push(format!("{}: {}", args.join(", "), m.alg.format_vector(&val)));
            }
        }
        true
    });
    r.check_witnesses("identity", bad);
    r.quantity("violations", count);
    r
}

/// One check per identity, with early exit per identity.
pub fn check_identities(fs: &[Poly], m: &GradedAlgebra<Rational>) -> Report {
    let mut r = Report::new("identity set");
    r.check_witnesses("grade closure", m.closure_violations());
    for f in fs {
        r.check(f.to_string(), identity_holds(f, m));
    }
    r
}
