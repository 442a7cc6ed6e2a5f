use triality_core::constructions::{contract, gamma, make_d4, make_tl, sl2, t7seed};
use triality_core::functors::*;
use triality_core::{QAlgebra, Rational};

fn t_of(l: &QAlgebra) -> TrialityAlgebra<Rational> {
    let (a, s) = make_tl(l).unwrap();
    TrialityAlgebra::new(a, s).unwrap()
}

fn m7() -> MalcevAlgebra<Rational> {
    let (alg, _) = contract(&t7seed::<Rational>(), &gamma()).unwrap();
    MalcevAlgebra::new(alg).unwrap()
}

#[test]
fn f_of_t_sl2_is_sl2() {
    let t = t_of(&sl2());
    let f = functor_f(&t).unwrap();
    assert_eq!(f.dim(), 3);
    assert!(f.alg.is_lie());
    assert!(psi(&t).unwrap().check_graded_identities().passed());
    assert!(psi_roundtrip_report(&t).unwrap().passed());
}

#[test]
fn t_sl2_roundtrip() {
    let t = t_of(&sl2());
    assert!(is_normal(&t));
    let r = roundtrip_check(&t).unwrap();
    println!("{}", r.report);
    assert!(r.isomorphic);
}

#[test]
fn t_abelian_not_normal() {
    let t = t_of(&QAlgebra::abelian(2));
    assert!(!is_normal(&t));
    let r = roundtrip_check(&t).unwrap();
    println!("{}", r.report);
    assert!(!r.isomorphic);
    assert_ne!(r.report.quantities["dim_L"], r.report.quantities["dim_G(F(L))"]);
}

#[test]
fn m7_functors() {
    let m = m7();
    assert_eq!(m.dim(), 7);
    assert!(!m.alg.is_lie());
    let p = phi0(&m).unwrap();
    assert!(p.graded.check_graded_identities().passed());
    let g = functor_g(&m).unwrap();
    assert!(g.alg.is_lie());
    let back = functor_f(&g).unwrap();
    assert!(back.alg.same_constants(&m.alg));
    assert!(malcev_radical(&m).unwrap().is_zero());
}

#[test]
fn d4_functors() {
    let (a, s) = make_d4::<Rational>();
    let t = TrialityAlgebra::new(a, s).unwrap();
    let f = functor_f(&t).unwrap();
    assert_eq!(f.dim(), 7);
    assert!(!f.alg.is_lie());
    assert!(f.alg.simplicity_certificate().passed());
    assert!(is_normal(&t));
    let r = roundtrip_check(&t).unwrap();
    assert!(r.isomorphic);
    let tr = triviality_check(&t).unwrap();
    assert!(!tr.passed());
}

fn d4_grading_automorphism(t: i64) -> triality_core::QMatrix {
    use triality_core::constructions::d4::{e, f, subset, D4_DIM};
    let mut deg = vec![0i32; D4_DIM];
    for i in 1..=4 {
        deg[e(i)] = 1;
        deg[f(i)] = -1;
    }
    for m in 0..16usize {
        deg[subset(m)] = m.count_ones() as i32 - 2;
    }
    let t = Rational::from_integer(t.into());
    triality_core::QMatrix::from_fn(D4_DIM, D4_DIM, |i, j| {
        if i == j {
            num_traits::Pow::pow(&t, deg[i])
        } else {
            Rational::from_integer(0.into())
        }
    })
}

#[test]
fn grading_automorphism_of_d4_transports() {
    let (a, s) = make_d4::<Rational>();
    let l = TrialityAlgebra::new(a, s).unwrap();
    let r = transport_automorphism(&l, &d4_grading_automorphism(2)).unwrap();
    println!("{r}");
    assert!(r.passed());
}

#[test]
fn non_equivariant_map_is_rejected() {
    let (a, s) = make_d4::<Rational>();
    let l = TrialityAlgebra::new(a, s).unwrap();
    let half = transport_automorphism(&l, &d4_grading_automorphism(2).mul(&l.act.sigma)).unwrap();
    assert!(half.get("phi is an automorphism of L").unwrap().passed);
    assert!(!half.get("phi commutes with S3").unwrap().passed);
}
