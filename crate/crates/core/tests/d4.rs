use triality_core::constructions::d4::{e, f, h, subset_of};
use triality_core::constructions::{build_d4, D4Signs};
use triality_core::{Field, QAlgebra, Rational};

fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn basis(a: &QAlgebra, i: usize) -> Vec<Rational> {
    a.basis_vector(i)
}

#[test]
fn d4_integrity() {
    let b = build_d4::<Rational>();
    println!("{}", b.report);
    assert!(b.report.passed());
    let a = &b.alg;
    assert_eq!(a.dim(), 28);
    assert_eq!(a.killing_form().rank(), 28);
    assert!(b.act.is_triality().unwrap().holds);
    let dec = b.act.decompose().unwrap();
    assert_eq!((dec.fixed.dim(), dec.sign.dim(), dec.two_dim.dim()), (14, 0, 14));
    assert_eq!(dec.pairs.len(), 7);
    assert_ne!(b.signs, D4Signs::PRINTED);
}

#[test]
fn d4_table_entries() {
    let b = build_d4::<Rational>();
    let a = &b.alg;
    let p = |x: usize, y: usize| a.product(&basis(a, x), &basis(a, y)).unwrap();
    assert_eq!(p(e(1), f(1)), basis(a, h(1)));
    assert_eq!(p(e(1), subset_of(&[2, 4])), basis(a, subset_of(&[1, 2, 4])));
    assert_eq!(p(subset_of(&[1, 2]), h(1)), basis(a, subset_of(&[1, 2])));
    let mut neg = basis(a, subset_of(&[1, 2]));
    neg[subset_of(&[1, 2])] = q(-1, 1);
    assert_eq!(p(subset_of(&[1, 2]), h(3)), neg);
}
