use triality_core::algcore::Algebra;
use triality_core::centres::*;
use triality_core::constructions::{make_d4, make_tab, make_tl, sl2, CompatiblePair};
use triality_core::functors::*;
use triality_core::{QSubspace, Rational};

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn t_sl2() -> TrialityAlgebra<Rational> {
    let (a, s) = make_tl(&sl2()).unwrap();
    TrialityAlgebra::new(a, s).unwrap()
}

#[test]
fn t_sl2_centre_is_everything() {
    let t = t_sl2();
    let tc = t_centre(&t).unwrap();
    assert!(tc.report.passed());
    assert!(tc.total.is_full());
    let r = centre_correspondence(&t).unwrap();
    println!("{r}");
    assert!(r.passed());
    let r4 = theorem4_check(&t).unwrap();
    println!("{r4}");
    assert!(r4.passed());
}

#[test]
fn d4_centre_is_zero() {
    let (a, s) = make_d4::<Rational>();
    let t = TrialityAlgebra::new(a, s).unwrap();
    assert!(t_centre(&t).unwrap().total.is_zero());
    assert!(centre_correspondence(&t).unwrap().passed());
    assert!(theorem4_check(&t).unwrap().passed());
}

#[test]
fn tab_correspondence() {
    let l = sl2::<Rational>();
    let e = QSubspace::span(3, vec![vec![q(1), q(0), q(0)]]);
    let he = QSubspace::span(3, vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]]);
    let (a, s, _) = make_tab(&l, &CompatiblePair::new(e, he)).unwrap();
    assert_eq!(a.dim(), 5);
    let t = TrialityAlgebra::new(a, s).unwrap();
    let r = centre_correspondence(&t).unwrap();
    println!("{r}");
    assert!(r.passed());
}

#[test]
fn zero_algebra() {
    let z = Algebra::<Rational>::zero_product(vec![]).unwrap();
    let m = MalcevAlgebra::new(z).unwrap();
    assert!(lie_centre(&m).unwrap().is_zero());
}

#[test]
fn h_with_ef_is_not_compatible() {
    let l = sl2::<Rational>();
    let h = QSubspace::span(3, vec![vec![q(0), q(1), q(0)]]);
    let ef = QSubspace::span(3, vec![vec![q(1), q(0), q(0)], vec![q(0), q(0), q(1)]]);
    let pair = CompatiblePair::new(h, ef);
    assert_eq!(pair.violations(&l), vec!["B is not a subalgebra"]);
    assert!(make_tab(&l, &pair).is_err());
}

#[test]
fn correspondence_over_the_corpus() {
    let dir = std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let mut seen = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_none_or(|e| e != "json") {
            continue;
        }
        let f = triality_core::io::AlgebraFile::load(&path).unwrap();
        let alg = f.algebra().unwrap();
        let act = f.action().unwrap();
        if let Some(act) = act.filter(|_| alg.is_lie()) {
            let t = TrialityAlgebra::new(alg, act).unwrap();
            let r = centre_correspondence(&t).unwrap();
            assert!(r.passed(), "{}: {r}", path.display());
            seen += 1;
        } else if alg.check_malcev().passed() && !alg.is_lie() {
            let m = MalcevAlgebra::new(alg).unwrap();
            assert!(lie_centre(&m).unwrap().is_zero(), "{}", path.display());
        }
    }
    assert!(seen >= 2);
}
