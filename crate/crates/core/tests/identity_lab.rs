use std::collections::BTreeMap;
use std::time::Instant;

use triality_core::constructions::{lambda, make_d4, make_tl, sl2, GradeSet};
use triality_core::functors::*;
use triality_core::identity_lab::*;
use triality_core::Rational;

#[test]
fn derived_lie_variety_over_lambda() {
    let (lam, _) = lambda::<Rational>();
    let t0 = Instant::now();
    let derived = derive_variety(&lie_axioms(), &lam);
    println!("{} identities in {:?}", derived.len(), t0.elapsed());
    for d in &derived {
        println!("  {d}");
    }
    let (a, s) = make_d4::<Rational>();
    let d4 = TrialityAlgebra::new(a, s).unwrap();
    let psi_d4 = psi(&d4).unwrap();
    let t0 = Instant::now();
    let r = check_identities(&derived, &psi_d4);
    println!("{r}\n{:?}", t0.elapsed());
    assert!(r.passed());
    let m = functor_f(&d4).unwrap();
    let p0 = phi0(&m).unwrap();
    assert!(check_identities(&derived, &p0.graded).passed());
    assert!(!check_identities(&derived, &lam).passed());
    let (a, s) = make_tl(&sl2::<Rational>()).unwrap();
    let t = psi(&TrialityAlgebra::new(a, s).unwrap()).unwrap();
    assert!(check_identities(&derived, &t).passed());
}

#[test]
fn expand_antisymmetry_on_a() {
    let (lam, _) = lambda::<Rational>();
    let f = parse_delta("x0*y0 + y0*x0", GradeSet::Delta).unwrap();
    let t = BTreeMap::from([(("x".to_string(), 0), 0), (("y".to_string(), 0), 0)]);
    let e = expand_element(&f, &lam, &t).unwrap();
    assert_eq!(e.len(), 1);
    assert_eq!(e[&0].to_string(), "x0*y0 + y0*x0");
    let bad = BTreeMap::from([(("x".to_string(), 0), 1), (("y".to_string(), 0), 0)]);
    assert!(expand(&f, &lam, &bad).is_err());
}

#[test]
fn graded_axiom_text_matches_hand_coded_check() {
    let axioms: Vec<Poly> = parse_identity_file(GRADED_AXIOMS, GradeSet::Delta)
        .unwrap()
        .iter()
        .map(|d| Poly::from_delta(d, GradeSet::Delta))
        .collect();
    let (lam, _) = lambda::<Rational>();
    let (a, s) = make_d4::<Rational>();
    let d4 = TrialityAlgebra::new(a, s).unwrap();
    let (a, s) = make_tl(&sl2()).unwrap();
    let tsl2 = TrialityAlgebra::new(a, s).unwrap();
    let psi_t = psi(&tsl2).unwrap();
    let mut members = vec![lam, psi(&d4).unwrap(), psi_t.clone()];
    for (i, j, k, c) in psi_t.alg.nonzero_constants().into_iter().take(6) {
        let alg = psi_t.alg.with_constant(i, j, k, c * Rational::from_integer(2.into()));
        members.push(triality_core::constructions::GradedAlgebra::new(alg, psi_t.grades.clone(), psi_t.grade_set).unwrap());
    }
    for m in &members {
        let hand = m.check_graded_identities().passed();
        let text = check_identities(&axioms, m).passed();
        assert_eq!(hand, text);
    }
}
