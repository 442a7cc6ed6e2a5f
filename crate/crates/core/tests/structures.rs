use triality_core::constructions::d4::{d4_table, e, f, h, subset_of};
use triality_core::constructions::*;
use triality_core::functors::{a2_squared_0, n_of, TrialityAlgebra};
use triality_core::{Matrix, QAlgebra, QSubspace, Rational, S3Action};

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn qr(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    (0..n).map(|k| q((k == i) as i64)).collect()
}

#[test]
fn sl2_structure() {
    let s = sl2::<Rational>();
    assert!(s.is_lie());
    // ad h is diagonal with eigenvalues -2, 0, 2 on (e, h, f) in the row convention
    let adh = s.left_mult(&unit(3, 1));
    assert_eq!(adh, Matrix::from_rows(3, vec![vec![q(-2), q(0), q(0)], vec![q(0); 3], vec![q(0), q(0), q(2)]]));
    let k = s.killing_form();
    assert_eq!(k[(1, 1)], q(8));
    assert_eq!(k[(0, 2)], q(-4));
    assert_eq!(k.rank(), 3);
    assert!(s.simplicity_certificate().passed());
    assert!(s.solvable_radical_lie().unwrap().is_zero());
}

#[test]
fn radicals_and_quotients() {
    let b = b2::<Rational>();
    assert!(b.is_solvable());
    assert!(b.solvable_radical_lie().unwrap().is_full());
    let sum = sl2::<Rational>().direct_sum(&QAlgebra::abelian(1));
    let rad = sum.solvable_radical_lie().unwrap();
    assert_eq!(rad, QSubspace::span(4, vec![unit(4, 3)]));
    let quo = sum.quotient(&rad).unwrap();
    assert_eq!(quo.alg.dim(), 3);
    assert!(quo.alg.is_lie() && quo.alg.is_perfect());
    assert_eq!(sum.quotient(&sum.full_space()).unwrap().alg.dim(), 0);
    assert!(sum.quotient(&QSubspace::span(4, vec![unit(4, 0)])).is_err());
}

#[test]
fn derivations() {
    let ab = QAlgebra::abelian(2);
    assert_eq!(ab.derivation_algebra().unwrap().maps.len(), 4);
    let s = sl2::<Rational>();
    assert_eq!(s.derivation_algebra().unwrap().maps.len(), 3);
    assert_eq!(s.inder_malcev().unwrap().dim(), 3);
}

#[test]
fn standard_triality_of_sl2() {
    let (a, act) = make_tl(&sl2::<Rational>()).unwrap();
    assert_eq!(a.dim(), 9);
    assert!(act.verify(&a).passed());
    let d = act.decompose().unwrap();
    assert_eq!((d.fixed.dim(), d.sign.dim(), d.two_dim.dim(), d.h.dim()), (3, 0, 6, 3));
    assert!(act.is_triality().unwrap().holds);
    assert!(act.invariant_ideals(&a).unwrap().is_empty());
    let t = TrialityAlgebra::new(a, act).unwrap();
    assert!(n_of(&t).is_zero());
    assert_eq!(a2_squared_0(&t), t.dec.fixed);
}

#[test]
fn centre_of_base_gives_n() {
    let l = sl2::<Rational>().direct_sum(&QAlgebra::abelian(1));
    let (a, act) = make_tl(&l).unwrap();
    let t = TrialityAlgebra::new(a, act).unwrap();
    let n = n_of(&t);
    let diag: Vec<Rational> = (0..12).map(|i| q((i % 4 == 3) as i64)).collect();
    assert_eq!(n, QSubspace::span(12, vec![diag]));
}

#[test]
fn sign_representation_is_not_triality() {
    let z = QAlgebra::abelian(1);
    let act = S3Action::new(Matrix::from_rows(1, vec![vec![q(-1)]]), Matrix::identity(1));
    assert!(act.verify(&z).passed());
    let v = act.is_triality().unwrap();
    assert!(!v.holds && v.witness.is_some());
    assert!(TrialityAlgebra::new(z, act).is_err());
}

#[test]
fn invariant_ideal_of_sum() {
    let l = sl2::<Rational>().direct_sum(&sl2());
    let (a, act) = make_tl(&l).unwrap();
    let ideals = act.invariant_ideals(&a).unwrap();
    assert!(!ideals.is_empty());
    for i in &ideals {
        assert!(a.is_ideal(i) && act.is_invariant(i) && i.dim() == 9);
    }
}

#[test]
fn compatible_pairs() {
    let l = sl2::<Rational>();
    let full = l.full_space();
    let (tab, _, _) = make_tab(&l, &CompatiblePair::new(full.clone(), full)).unwrap();
    assert!(tab.same_constants(&make_tl(&l).unwrap().0.with_labels(tab.labels().to_vec()).unwrap()) || tab.dim() == 9);
    let (diag, act, _) = make_tab(&l, &CompatiblePair::new(l.full_space(), QSubspace::zero(3))).unwrap();
    assert_eq!(diag.dim(), 3);
    assert!(act.decompose().unwrap().two_dim.is_zero());
    let e = QSubspace::span(3, vec![unit(3, 0)]);
    let he = QSubspace::span(3, vec![unit(3, 0), unit(3, 1)]);
    let (t, act, _) = make_tab(&l, &CompatiblePair::new(e, he)).unwrap();
    assert_eq!(t.dim(), 5);
    assert!(t.is_lie() && act.is_triality().unwrap().holds);
}

#[test]
fn lambda_table() {
    let (lam, act) = lambda::<Rational>();
    let v = unit(3, 1);
    let w = unit(3, 2);
    assert_eq!(lam.mul(&v, &v), vec![qr(2, 3), qr(1, 3), q(0)]);
    assert_eq!(lam.mul(&v, &w), vec![qr(-1, 3), qr(-1, 3), qr(-1, 3)]);
    assert!(act.verify(&lam.alg).passed());
    assert!(act.is_triality().unwrap().holds);
}

#[test]
fn contraction_with_t_seed() {
    let (m, _) = contract(&t7seed::<Rational>(), &gamma()).unwrap();
    assert_eq!(m.dim(), 7);
    assert!(m.check_malcev().passed());
    assert!(!m.check_jacobi().passed());
    assert!(m.simplicity_certificate().passed());
    assert!(m.check_malcev_jacobian_identities().passed());
    let (bad, _) = contract(&t7seed::<Rational>(), &gamma_printed()).unwrap();
    assert!(!bad.check_malcev().passed());
}

#[test]
fn osp_grassmann_envelope_is_lie() {
    let (env, _) = contract(&grassmann2::<Rational>(), &osp()).unwrap();
    assert!(env.is_lie());
    let (bad, _) = contract(&grassmann2::<Rational>(), &osp_printed()).unwrap();
    assert!(!bad.is_lie());
}

#[test]
fn printed_d4_entries() {
    let a = d4_table::<Rational>(D4Signs::PRINTED);
    let v = a.basis_product(subset_of(&[1]), subset_of(&[2, 3, 4]));
    let mut expect = vec![(h(1), qr(1, 2)), (h(2), qr(-1, 2)), (h(3), qr(-1, 2)), (h(4), qr(-1, 2))];
    expect.sort_by_key(|p| p.0);
    assert_eq!(v, expect.as_slice());
    assert_eq!(a.basis_product(e(1), subset_of(&[2, 4])), &[(subset_of(&[1, 2, 4]), q(1))]);
    assert_eq!(a.basis_product(subset_of(&[1, 2]), h(1)), &[(subset_of(&[1, 2]), q(1))]);
    assert_eq!(a.basis_product(subset_of(&[1, 2]), h(3)), &[(subset_of(&[1, 2]), q(-1))]);
    assert_eq!(a.basis_product(e(2), f(2)), &[(h(2), q(1))]);
}

#[test]
fn float_scalars_agree_on_sl2() {
    let s = sl2::<f64>();
    assert!(s.is_lie());
    assert_eq!(s.killing_form().rank(), 3);
    let (a, act) = make_tl(&s).unwrap();
    assert_eq!(act.decompose().unwrap().two_dim.dim(), 6);
    assert!(a.is_lie());
}
