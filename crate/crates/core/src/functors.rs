//! Functors between Lie algebras with triality, Δ-graded algebras and Malcev
//! algebras, with the normality and roundtrip machinery.

use crate::algcore::Algebra;
use crate::constructions::{contract, lambda, GradeSet, GradedAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Matrix, Subspace};
use crate::report::Report;
use crate::s3rep::{IsotypicDecomposition, S3Action};

/// An algebra with a verified S3 action satisfying the triality equation.
#[derive(Clone, Debug)]
pub struct TrialityAlgebra<F> {
    pub alg: Algebra<F>,
    pub act: S3Action<F>,
    pub dec: IsotypicDecomposition<F>,
}

impl<F: Field> TrialityAlgebra<F> {
    pub fn new(alg: Algebra<F>, act: S3Action<F>) -> Result<Self> {
        let r = act.verify(&alg);
        if !r.passed() {
            return Err(Error::Precondition(format!("S3 action rejected:\n{r}")));
        }
        let verdict = act.is_triality()?;
        if let Some((i, v)) = verdict.witness {
            return Err(Error::Precondition(format!(
                "triality fails at {}: {}",
                alg.label(i),
                alg.format_vector(&v)
            )));
        }
        let dec = act.decompose()?;
        Ok(TrialityAlgebra { alg, act, dec })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// `π₀(x)`, the fixed component.
    pub fn pi0(&self, x: &[F]) -> Vec<F> {
        self.dec.e0.apply(x)
    }

    /// `π₂(x)`, the two-dimensional isotypic component.
    pub fn pi2(&self, x: &[F]) -> Vec<F> {
        self.dec.e2.apply(x)
    }
}

/// An anticommutative algebra passing the polarized Malcev check.
#[derive(Clone, Debug)]
pub struct MalcevAlgebra<F> {
    pub alg: Algebra<F>,
}

impl<F: Field> MalcevAlgebra<F> {
    pub fn new(alg: Algebra<F>) -> Result<Self> {
        let r = alg.check_malcev();
        if !r.passed() {
            return Err(Error::Precondition(format!("not a Malcev algebra:\n{r}")));
        }
        Ok(MalcevAlgebra { alg })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }
}

/// `Ψ(L)`: grade 0 on the rref basis of `L₀`, grade 2 on the rref basis of
/// `H = {x ∈ L₂ : x^σ = x}`.
pub fn psi<F: Field>(l: &TrialityAlgebra<F>) -> Result<GradedAlgebra<F>> {
    let m0 = &l.dec.fixed;
    let h = &l.dec.h;
    let d0 = m0.dim();
    let d2 = h.dim();
    let basis: Vec<&Vec<F>> = m0.basis().iter().chain(h.basis()).collect();
    let fail = || Error::Inconsistent("product leaves its isotypic slice".into());
    let mut labels: Vec<String> = (0..d0).map(|i| format!("a{i}")).collect();
    labels.extend((0..d2).map(|i| format!("h{i}")));
    let three_halves = F::from_ratio(3, 2);
    let minus_three = F::from_int(-3);
    let mut rows = Vec::with_capacity((d0 + d2) * (d0 + d2));
    for (i, bi) in basis.iter().enumerate() {
        for (j, bj) in basis.iter().enumerate() {
            let p = l.alg.mul(bi, bj);
            let mut out = vector::zeros(d0 + d2);
            match (i < d0, j < d0) {
                (true, true) => {
                    out[..d0].clone_from_slice(&m0.coords(&p).ok_or_else(fail)?);
                }
                (true, false) | (false, true) => {
                    out[d0..].clone_from_slice(&h.coords(&p).ok_or_else(fail)?);
                }
                (false, false) => {
                    let p0 = vector::scale(&three_halves, &l.pi0(&p));
                    let p2 = vector::scale(&minus_three, &l.pi2(&p));
                    out[..d0].clone_from_slice(&m0.coords(&p0).ok_or_else(fail)?);
                    out[d0..].clone_from_slice(&h.coords(&p2).ok_or_else(fail)?);
                }
            }
            rows.push(out);
        }
    }
    let mut it = rows.into_iter();
    let alg = Algebra::from_fn(labels, |_, _| it.next().expect("all pairs"))?;
    let mut grades = vec![0u8; d0];
    grades.extend(std::iter::repeat(2).take(d2));
    GradedAlgebra::new(alg, grades, GradeSet::Delta)
}

/// `Ψ₀(M)`: the grade-2 part with product `(xy)₂`.
pub fn psi0<F: Field>(m: &GradedAlgebra<F>) -> Result<MalcevAlgebra<F>> {
    if m.grade_set != GradeSet::Delta {
        return Err(Error::GradeMismatch("expected grade set {0,2}".into()));
    }
    MalcevAlgebra::new(m.grade_two_algebra()?)
}

/// `F = Ψ₀∘Ψ`.
pub fn functor_f<F: Field>(l: &TrialityAlgebra<F>) -> Result<MalcevAlgebra<F>> {
    psi0(&psi(l)?)
}

/// `Φ₀(M) = Inder(M) ⊕ M` together with the inner derivation span (flattened).
#[derive(Clone, Debug)]
pub struct Phi0<F> {
    pub graded: GradedAlgebra<F>,
    pub inder: Subspace<F>,
}

/// `Φ₀(M)`: grade 0 is the Lie algebra of inner derivations, grade 2 is `M`,
/// `D·z = D(z)`, `z·D = -D(z)`, `x·y = D(x,y)/6 + xy`.
pub fn phi0<F: Field>(m: &MalcevAlgebra<F>) -> Result<Phi0<F>> {
    let a = &m.alg;
    let n = a.dim();
    let inder = a.inder_malcev()?;
    let d = inder.dim();
    let maps: Vec<Matrix<F>> = inder.basis().iter().map(|v| Matrix::unflatten(n, v)).collect();
    let fail = || Error::Inconsistent("inner derivations are not closed".into());
    let sixth = F::from_ratio(1, 6);
    let mut rows = Vec::with_capacity((d + n) * (d + n));
    for i in 0..d + n {
        for j in 0..d + n {
            let mut out = vector::zeros(d + n);
            match (i < d, j < d) {
                (true, true) => {
                    let c = crate::algcore::commutator(&maps[i], &maps[j]).flatten();
                    out[..d].clone_from_slice(&inder.coords(&c).ok_or_else(fail)?);
                }
                (true, false) => {
                    out[d..].clone_from_slice(maps[i].row(j - d));
                }
                (false, true) => {
                    out[d..].clone_from_slice(&vector::neg(maps[j].row(i - d)));
                }
                (false, false) => {
                    let x = a.basis_vector(i - d);
                    let y = a.basis_vector(j - d);
                    let dxy = vector::scale(&sixth, &a.inner_derivation(&x, &y).flatten());
                    out[..d].clone_from_slice(&inder.coords(&dxy).ok_or_else(fail)?);
                    out[d..].clone_from_slice(&a.mul(&x, &y));
                }
            }
            rows.push(out);
        }
    }
    let mut labels: Vec<String> = (0..d).map(|i| format!("D{i}")).collect();
    labels.extend(a.labels().iter().cloned());
    let mut it = rows.into_iter();
    let alg = Algebra::from_fn(labels, |_, _| it.next().expect("all pairs"))?;
    let mut grades = vec![0u8; d];
    grades.extend(std::iter::repeat(2).take(n));
    Ok(Phi0 {
        graded: GradedAlgebra::new(alg, grades, GradeSet::Delta)?,
        inder,
    })
}

/// `M□Λ` with the action on the `Λ` factor and the contraction basis pairs.
pub fn phi_with_pairs<F: Field>(m: &GradedAlgebra<F>) -> Result<(TrialityAlgebra<F>, Vec<(usize, usize)>)> {
    let (lam, lam_act) = lambda::<F>();
    let (alg, pairs) = contract(m, &lam)?;
    let n = alg.dim();
    let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j));
    let induced = |g: &Matrix<F>| -> Result<Matrix<F>> {
        let mut out = Matrix::zeros(n, n);
        for (t, &(i, j)) in pairs.iter().enumerate() {
            for k in 0..lam.dim() {
                let c = &g[(j, k)];
                if c.is_negligible() {
                    continue;
                }
                let u = index(i, k).ok_or_else(|| Error::Inconsistent("action leaves the grade".into()))?;
                out[(t, u)] = c.clone();
            }
        }
        Ok(out)
    };
    let act = S3Action::new(induced(&lam_act.sigma)?, induced(&lam_act.rho)?);
    Ok((TrialityAlgebra::new(alg, act)?, pairs))
}

/// `Φ(M) = M□Λ`.
pub fn phi<F: Field>(m: &GradedAlgebra<F>) -> Result<TrialityAlgebra<F>> {
    Ok(phi_with_pairs(m)?.0)
}

/// `G = Φ∘Φ₀`.
pub fn functor_g<F: Field>(m: &MalcevAlgebra<F>) -> Result<TrialityAlgebra<F>> {
    phi(&phi0(m)?.graded)
}

/// The explicit map `Ψ(L)□Λ → L`: `c⊗a ↦ c`, `h⊗v ↦ -h^ρ`, `h⊗w ↦ h + h^ρ`,
/// as a matrix with rows indexed by the contraction basis.
pub fn psi_contract_map<F: Field>(l: &TrialityAlgebra<F>, pairs: &[(usize, usize)]) -> Matrix<F> {
    let d0 = l.dec.fixed.dim();
    let rows = pairs
        .iter()
        .map(|&(i, j)| {
            if i < d0 {
                l.dec.fixed.basis()[i].clone()
            } else {
                let h = &l.dec.h.basis()[i - d0];
                let hr = l.act.rho.apply(h);
                match j {
                    1 => vector::neg(&hr),
                    _ => vector::add(h, &hr),
                }
            }
        })
        .collect();
    Matrix::from_rows(l.dim(), rows)
}

/// Checks that `f: source → target` is a bijective, S3-equivariant morphism.
pub fn verify_isomorphism<F: Field>(
    source: &TrialityAlgebra<F>,
    target: &TrialityAlgebra<F>,
    f: &Matrix<F>,
    r: &mut Report,
    prefix: &str,
) {
    let square = f.rows() == source.dim() && f.cols() == target.dim();
    r.check(format!("{prefix}dimensions agree"), square && source.dim() == target.dim());
    if !square || source.dim() != target.dim() {
        return;
    }
    r.check(format!("{prefix}bijective"), f.rank() == source.dim());
    r.check_witnesses(format!("{prefix}morphism"), source.alg.morphism_violations(&target.alg, f));
    let equivariant = source.act.sigma.mul(f).same(&f.mul(&target.act.sigma))
        && source.act.rho.mul(f).same(&f.mul(&target.act.rho));
    r.check(format!("{prefix}S3-equivariant"), equivariant);
}

/// `contract(Ψ(L), Λ) ≅ L` via the explicit map.
pub fn psi_roundtrip_report<F: Field>(l: &TrialityAlgebra<F>) -> Result<Report> {
    let m = psi(l)?;
    let (back, pairs) = phi_with_pairs(&m)?;
    let f = psi_contract_map(l, &pairs);
    let mut r = Report::new("contract(psi(L), Lambda) -> L");
    verify_isomorphism(&back, l, &f, &mut r, "");
    Ok(r)
}

/// `N(A) = {a ∈ A₀ : aA₂ = 0}`.
pub fn n_of<F: Field>(l: &TrialityAlgebra<F>) -> Subspace<F> {
    let n = l.dim();
    let fixed = &l.dec.fixed;
    let two = &l.dec.two_dim;
    if fixed.is_zero() {
        return Subspace::zero(n);
    }
    let rows: Vec<Vec<F>> = fixed
        .basis()
        .iter()
        .map(|a| two.basis().iter().flat_map(|t| l.alg.mul(a, t)).collect())
        .collect();
    if two.is_zero() {
        return fixed.clone();
    }
    let m = Matrix::from_rows(two.dim() * n, rows);
    let coeffs = m.left_kernel();
    Subspace::span(n, coeffs.basis().iter().map(|c| fixed.combine(c)).collect())
}

/// `(A₂²)₀`.
pub fn a2_squared_0<F: Field>(l: &TrialityAlgebra<F>) -> Subspace<F> {
    let sq = l.alg.product_space(&l.dec.two_dim, &l.dec.two_dim);
    Subspace::span(l.dim(), sq.basis().iter().map(|v| l.pi0(v)).collect())
}

/// `N(A) = 0` and `A₀ = (A₂²)₀`.
pub fn is_normal<F: Field>(l: &TrialityAlgebra<F>) -> bool {
    n_of(l).is_zero() && a2_squared_0(l).same(&l.dec.fixed)
}

/// `K(A) = (A₂ ⊕ (A₂²)₀) / (N(A) ∩ (A₂²)₀)` with the induced action.
pub fn k_of<F: Field>(l: &TrialityAlgebra<F>) -> Result<TrialityAlgebra<F>> {
    let sq0 = a2_squared_0(l);
    let core = l.dec.two_dim.sum(&sq0)?;
    let sub = l.alg.restrict(&core)?;
    let sub_act = l.act.restrict(&core)?;
    let ideal = n_of(l).intersect(&sq0)?;
    let ideal_in_core = ideal
        .coords_in(&core)
        .ok_or_else(|| Error::Inconsistent("N ∩ (A₂²)₀ outside the core".into()))?;
    let q = sub.quotient(&ideal_in_core)?;
    let act = sub_act.on_quotient(&q);
    TrialityAlgebra::new(q.alg, act)
}

/// Outcome of [`roundtrip_check`].
#[derive(Clone, Debug)]
pub struct Roundtrip {
    pub normal: bool,
    pub isomorphic: bool,
    pub report: Report,
}

/// Builds `π: M₀ → Inder(M₂)`, `(xy)₀ ↦ D(x,y)/6`, checks it is well defined,
/// and for normal `L` extends it to a verified isomorphism `G(F(L)) → L`.
pub fn roundtrip_check<F: Field>(l: &TrialityAlgebra<F>) -> Result<Roundtrip> {
    let mut r = Report::new("roundtrip G(F(L)) -> L");
    let normal = is_normal(l);
    r.quantity("normal", normal);
    let m = psi(l)?;
    let m2 = psi0(&m)?;
    let d0 = l.dec.fixed.dim();
    let d2 = l.dec.h.dim();
    let n2 = d2 * d2;
    // spanning vectors (xᵢxⱼ)₀ in M₀ coordinates and targets D(xᵢ,xⱼ)/6
    let sixth = F::from_ratio(1, 6);
    let mut span_rows = Vec::new();
    let mut target_rows = Vec::new();
    for i in 0..d2 {
        for j in 0..d2 {
            let p = m.alg.mul(&m.alg.basis_vector(d0 + i), &m.alg.basis_vector(d0 + j));
            span_rows.push(p[..d0].to_vec());
            let dij = m2.alg.inner_derivation(&m2.alg.basis_vector(i), &m2.alg.basis_vector(j));
            target_rows.push(vector::scale(&sixth, &dij.flatten()));
        }
    }
    let gmat = Matrix::from_rows(d0, span_rows);
    let tmat = Matrix::from_rows(n2, target_rows);
    let relations = gmat.left_kernel();
    let bad: Vec<String> = relations
        .basis()
        .iter()
        .filter(|rel| !vector::is_zero(&tmat.apply(rel)))
        .map(|rel| format!("relation with support {:?}", vector::support(rel)))
        .collect();
    let well_defined = bad.is_empty();
    r.check_witnesses("pi well defined on linear relations", bad);
    if normal && !well_defined {
        return Err(Error::Inconsistent("pi is not well defined on a normal input".into()));
    }

    let g = functor_g(&m2)?;
    r.quantity("dim_L", l.dim());
    r.quantity("dim_G(F(L))", g.dim());
    if !normal {
        let mut obstruction = Vec::new();
        if g.dim() != l.dim() {
            obstruction.push(format!("dim G(F(L)) = {} but dim L = {}", g.dim(), l.dim()));
        }
        let nn = n_of(l);
        if !nn.is_zero() {
            obstruction.push(format!("N(L) has dimension {}", nn.dim()));
        }
        let sq0 = a2_squared_0(l);
        if !sq0.same(&l.dec.fixed) {
            obstruction.push(format!("(L2^2)_0 has dimension {} < dim L0 = {}", sq0.dim(), d0));
        }
        r.check_witnesses("roundtrip obstruction found", vec![]);
        r.quantity("obstruction", obstruction.join("; "));
        return Ok(Roundtrip {
            normal,
            isomorphic: false,
            report: r,
        });
    }

    // π on the M₀ basis: solve c·G = eₖ, then π(eₖ) = c·T
    let mut pi_rows = Vec::with_capacity(d0);
    for k in 0..d0 {
        let c = gmat
            .solve_left(&vector::unit(d0, k))
            .ok_or_else(|| Error::Inconsistent("(M2^2)_0 does not span M0 on a normal input".into()))?;
        pi_rows.push(tmat.apply(&c));
    }
    let pi = Matrix::from_rows(n2, pi_rows);
    let inder = m2.alg.inder_malcev()?;
    let image = Subspace::row_space(&pi);
    r.check("pi bijective onto Inder(M2)", image.same(&inder) && pi.rank() == d0);

    // G(F(L)) basis: Inder rref basis ⊗ a, then M₂ ⊗ v, M₂ ⊗ w. Send an Inder
    // element back through π⁻¹ to M₀, then through the explicit contract map.
    let pi_on_inder = Matrix::from_rows(
        inder.dim(),
        pi.row_vecs()
            .iter()
            .map(|v| inder.coords(v).ok_or_else(|| Error::Inconsistent("pi leaves Inder".into())))
            .collect::<Result<Vec<_>>>()?,
    );
    let pi_inv = pi_on_inder
        .inverse()
        .ok_or_else(|| Error::Inconsistent("pi is not invertible on a normal input".into()))?;
    let (_, pairs) = phi_with_pairs(&phi0(&m2)?.graded)?;
    let (_, l_pairs) = phi_with_pairs(&m)?;
    let back = psi_contract_map(l, &l_pairs);
    let di = inder.dim();
    let rows = pairs
        .iter()
        .map(|&(i, j)| {
            if i < di {
                // Σ (π⁻¹)ᵢₖ aₖ ⊗ a
                let mut v = vector::zeros(l.dim());
                for k in 0..d0 {
                    let t = l_pairs.iter().position(|&p| p == (k, 0)).expect("grade zero pair");
                    vector::axpy(&mut v, &pi_inv[(i, k)], back.row(t));
                }
                v
            } else {
                let t = l_pairs.iter().position(|&p| p == (d0 + i - di, j)).expect("grade two pair");
                back.row(t).to_vec()
            }
        })
        .collect();
    let iso = Matrix::from_rows(l.dim(), rows);
    verify_isomorphism(&g, l, &iso, &mut r, "G(F(L)) -> L ");
    let isomorphic = r.passed();
    if !isomorphic {
        return Err(Error::Inconsistent(format!("roundtrip map fails on a normal input:\n{r}")));
    }
    Ok(Roundtrip {
        normal,
        isomorphic,
        report: r,
    })
}

/// `Inder(M, I)`, the span of `D(x, y)` with `y ∈ I`.
pub fn inder_relative<F: Field>(m: &MalcevAlgebra<F>, ideal: &Subspace<F>) -> Result<Subspace<F>> {
    m.alg.inder_relative(ideal)
}

/// `F(P)` Lie and `Ψ(P)` Lie must agree; both together mean `P` is trivial.
pub fn triviality_check<F: Field>(p: &TrialityAlgebra<F>) -> Result<Report> {
    let m = psi(p)?;
    let fp = psi0(&m)?;
    let malcev_lie = fp.alg.is_lie();
    let graded_lie = m.alg.is_lie();
    if malcev_lie != graded_lie {
        return Err(Error::Inconsistent(format!(
            "F(P) Lie = {malcev_lie} but psi(P) Lie = {graded_lie}"
        )));
    }
    let mut r = Report::new("triviality");
    r.check("F(P) is a Lie algebra", malcev_lie);
    r.check("psi(P) is a Lie algebra", graded_lie);
    r.quantity("trivial", malcev_lie && graded_lie);
    Ok(r)
}

/// Malcev radical: `rad(G(M)) ∩ H` read in the coordinates of `M`, re-verified
/// to be a solvable ideal of `M`.
pub fn malcev_radical<F: Field>(m: &MalcevAlgebra<F>) -> Result<Subspace<F>> {
    let g = functor_g(m)?;
    let fg = functor_f(&g)?;
    if !fg.alg.same_constants(&m.alg) {
        return Err(Error::Inconsistent("F(G(M)) differs from M on the canonical slice".into()));
    }
    let rad = g.alg.solvable_radical_lie()?;
    let slice = rad.intersect(&g.dec.h)?;
    let coords = slice
        .coords_in(&g.dec.h)
        .ok_or_else(|| Error::Inconsistent("slice outside H".into()))?;
    if !m.alg.is_ideal(&coords) || !m.alg.is_solvable_subspace(&coords) {
        return Err(Error::Inconsistent("radical slice is not a solvable ideal".into()));
    }
    Ok(coords)
}

/// `is_solvable(F(L)) ⟺ is_solvable(L)`.
pub fn solvability_transfer<F: Field>(l: &TrialityAlgebra<F>) -> Result<Report> {
    let fl = functor_f(l)?;
    let a = l.alg.is_solvable();
    let b = fl.alg.is_solvable();
    let mut r = Report::new("solvability transfer");
    r.quantity("L solvable", a);
    r.quantity("F(L) solvable", b);
    r.check("solvable(F(L)) iff solvable(L)", a == b);
    Ok(r)
}

/// For an automorphism `φ` of `L` commuting with `S₃`, the restriction to
/// `H` is an automorphism of `F(L)`.
pub fn transport_automorphism<F: Field>(l: &TrialityAlgebra<F>, phi: &Matrix<F>) -> Result<Report> {
    let mut r = Report::new("automorphism transport");
    r.check_witnesses("phi is an automorphism of L", l.alg.morphism_violations(&l.alg, phi));
    r.check("phi invertible", phi.rank() == l.dim());
    let commutes = l.act.sigma.mul(phi).same(&phi.mul(&l.act.sigma)) && l.act.rho.mul(phi).same(&phi.mul(&l.act.rho));
    r.check("phi commutes with S3", commutes);
    let fl = functor_f(l)?;
    let h = &l.dec.h;
    let induced = h
        .basis()
        .iter()
        .map(|b| h.coords(&phi.apply(b)))
        .collect::<Option<Vec<_>>>();
    match induced {
        Some(rows) => {
            let m = Matrix::from_rows(h.dim(), rows);
            r.check("F(phi) invertible", m.rank() == h.dim());
            r.check_witnesses("F(phi) is an automorphism of F(L)", fl.alg.morphism_violations(&fl.alg, &m));
        }
        None => {
            r.check("phi preserves H", false);
        }
    }
    Ok(r)
}
