//! The Lie centre of a Malcev algebra and the T-centre of an algebra with
//! triality.

use crate::algcore::polarization_points;
use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Matrix, Subspace};
use crate::functors::{functor_f, MalcevAlgebra, TrialityAlgebra};
use crate::report::Report;

/// `{n : J(n, x, y) = 0 for all x, y}`, verified to be an ideal.
pub fn lie_centre<F: Field>(m: &MalcevAlgebra<F>) -> Result<Subspace<F>> {
    let a = &m.alg;
    let n = a.dim();
    if n == 0 {
        return Ok(Subspace::zero(0));
    }
    let rows: Vec<Vec<F>> = (0..n)
        .map(|k| {
            let bk = a.basis_vector(k);
            let mut row = Vec::with_capacity(n * n * n);
            for i in 0..n {
                for j in 0..n {
                    row.extend(a.jacobian(&bk, &a.basis_vector(i), &a.basis_vector(j)));
                }
            }
            row
        })
        .collect();
    let c = Matrix::from_rows(n * n * n, rows).left_kernel();
    if !a.is_ideal(&c) {
        return Err(Error::Inconsistent("Lie centre is not an ideal".into()));
    }
    Ok(c)
}

/// The three pieces of the T-centre and their sum.
#[derive(Clone, Debug)]
pub struct TCentre<F> {
    pub t1: Subspace<F>,
    pub t2: Subspace<F>,
    pub t0: Subspace<F>,
    pub total: Subspace<F>,
    pub report: Report,
}

/// `((xy)₂y)₂ - ((xy^σ)₂y^σ)₂ - (x(yy^σ)₂)₂`.
fn t_defect<F: Field>(a: &TrialityAlgebra<F>, x: &[F], y: &[F]) -> Vec<F> {
    let m = |p: &[F], q: &[F]| a.alg.mul(p, q);
    let p2 = |v: &[F]| a.pi2(v);
    let ys = a.act.sigma.apply(y);
    let first = p2(&m(&p2(&m(x, y)), y));
    let second = p2(&m(&p2(&m(x, &ys)), &ys));
    let third = p2(&m(x, &p2(&m(y, &ys))));
    vector::sub(&vector::sub(&first, &second), &third)
}

/// `T(A)₁ = {x ∈ H : defect(x, y) = 0 for y ∈ A₂}`, `T(A)₂ = T(A)₁ + T(A)₁^ρ`,
/// `T(A)₀ = (T(A)₂A)₀`.
pub fn t_centre<F: Field>(a: &TrialityAlgebra<F>) -> Result<TCentre<F>> {
    let n = a.dim();
    let h = &a.dec.h;
    let two = &a.dec.two_dim;
    let mut report = Report::new("T-centre");
    let t1 = if h.is_zero() {
        Subspace::zero(n)
    } else {
        let ys: Vec<Vec<F>> = polarization_points::<F>(two.dim(), 2)
            .iter()
            .map(|c| two.combine(c))
            .collect();
        let rows: Vec<Vec<F>> = h
            .basis()
            .iter()
            .map(|x| ys.iter().flat_map(|y| t_defect(a, x, y)).collect())
            .collect();
        let coeffs = Matrix::from_rows(n * ys.len(), rows).left_kernel();
        Subspace::span(n, coeffs.basis().iter().map(|c| h.combine(c)).collect())
    };
    let t1_rho = t1.image(&a.act.rho);
    let t2 = t1.sum(&t1_rho)?;
    report.check("T1 + T1^rho is rho^2-stable", t2.contains_subspace(&t1.image(&a.act.rho.mul(&a.act.rho))));
    let mut gens = Vec::new();
    for t in t2.basis() {
        for k in 0..n {
            let b = a.alg.basis_vector(k);
            gens.push(a.pi0(&a.alg.mul(t, &b)));
            gens.push(a.pi0(&a.alg.mul(&b, t)));
        }
    }
    let t0 = Subspace::span(n, gens);
    let total = t0.sum(&t2)?;
    report.quantity("dim T1", t1.dim());
    report.quantity("dim T2", t2.dim());
    report.quantity("dim T0", t0.dim());
    report.quantity("dim", total.dim());
    report.check("S3-invariant", a.act.is_invariant(&total));
    report.check("ideal", a.alg.is_ideal(&total));
    Ok(TCentre {
        t1,
        t2,
        t0,
        total,
        report,
    })
}

/// The σ-fixed slice of `t_centre(A) ∩ A₂`, read in `F(A)`, equals the Lie
/// centre of `F(A)`.
pub fn centre_correspondence<F: Field>(a: &TrialityAlgebra<F>) -> Result<Report> {
    let tc = t_centre(a)?;
    let slice = tc.total.intersect(&a.dec.h)?;
    let slice = slice
        .coords_in(&a.dec.h)
        .ok_or_else(|| Error::Inconsistent("slice outside H".into()))?;
    let fa = functor_f(a)?;
    let lc = lie_centre(&fa)?;
    let mut r = Report::new("centre correspondence");
    r.absorb("t-centre: ", tc.report);
    r.quantity("dim F(A)", fa.dim());
    r.quantity("dim slice of T-centre", slice.dim());
    r.quantity("dim Lie centre of F(A)", lc.dim());
    r.check("slice of T-centre = Lie centre of F(A)", slice.same(&lc));
    Ok(r)
}

/// The quotient by the T-centre (written `L(A)` in the statement) has zero
/// T-centre. Non-perfect inputs give a report with the hypothesis unmet.
pub fn theorem4_check<F: Field>(a: &TrialityAlgebra<F>) -> Result<Report> {
    let mut r = Report::new("T-centre of A/L(A), L(A) = T-centre");
    let perfect = a.alg.is_perfect();
    r.quantity("hypothesis", if perfect { "A perfect" } else { "hypothesis not met: A is not perfect" });
    if !perfect {
        return Ok(r);
    }
    let tc = t_centre(a)?;
    r.quantity("dim L(A)", tc.total.dim());
    let q = a.alg.quotient(&tc.total)?;
    let act = a.act.on_quotient(&q);
    let qa = TrialityAlgebra::new(q.alg, act)?;
    r.quantity("dim A/L(A)", qa.dim());
    let again = t_centre(&qa)?;
    r.check("L(A/L(A)) = 0", again.total.is_zero());
    Ok(r)
}
