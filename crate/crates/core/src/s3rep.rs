//! S3 actions on algebras: verification, isotypic decomposition, triality.

use crate::algcore::{Algebra, Quotient};
use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Matrix, Subspace};
use crate::report::Report;

/// The action of `S₃ = ⟨σ, ρ | σ² = ρ³ = 1, σρσ = ρ²⟩` by two matrices acting
/// on the right, `x ↦ x^σ = x·S`.
#[derive(Clone, PartialEq, Debug)]
pub struct S3Action<F> {
    pub sigma: Matrix<F>,
    pub rho: Matrix<F>,
}

/// `A = A₀ ⊕ A_sign ⊕ A₂` with standard pairs spanning `A₂`.
#[derive(Clone, Debug)]
pub struct IsotypicDecomposition<F> {
    pub fixed: Subspace<F>,
    pub sign: Subspace<F>,
    pub two_dim: Subspace<F>,
    /// The σ-fixed part of `two_dim`.
    pub h: Subspace<F>,
    /// `(v, w)` with `v^σ = w`, `v^ρ = w`, `w^ρ = -v-w` and `v + w` running
    /// over the rref basis of `h`.
    pub pairs: Vec<(Vec<F>, Vec<F>)>,
    pub e0: Matrix<F>,
    pub e1: Matrix<F>,
    pub e2: Matrix<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrialityVerdict<F> {
    pub holds: bool,
    /// First basis vector `x` violating the triality equation, with the value of
    /// `(x^σ - x)(1 + ρ + ρ²)`.
    pub witness: Option<(usize, Vec<F>)>,
}

impl<F: Field> S3Action<F> {
    pub fn new(sigma: Matrix<F>, rho: Matrix<F>) -> Self {
        S3Action { sigma, rho }
    }

    pub fn trivial(n: usize) -> Self {
        S3Action {
            sigma: Matrix::identity(n),
            rho: Matrix::identity(n),
        }
    }

    /// Action by permutations of the basis: `bᵢ^σ = b_{sigma[i]}`.
    pub fn from_permutations(sigma: &[usize], rho: &[usize]) -> Self {
        let perm = |p: &[usize]| {
            let n = p.len();
            let mut m = Matrix::zeros(n, n);
            for (i, &j) in p.iter().enumerate() {
                m[(i, j)] = F::one();
            }
            m
        };
        S3Action {
            sigma: perm(sigma),
            rho: perm(rho),
        }
    }

    pub fn dim(&self) -> usize {
        self.sigma.rows()
    }

    /// The six group elements `1, ρ, ρ², σ, σρ, σρ²` with their signs.
    pub fn elements(&self) -> Vec<(Matrix<F>, i64)> {
        let n = self.dim();
        let id = Matrix::identity(n);
        let r2 = self.rho.mul(&self.rho);
        vec![
            (id, 1),
            (self.rho.clone(), 1),
            (r2.clone(), 1),
            (self.sigma.clone(), -1),
            (self.sigma.mul(&self.rho), -1),
            (self.sigma.mul(&r2), -1),
        ]
    }

    fn projector(&self, signed: bool) -> Matrix<F> {
        let n = self.dim();
        let mut acc = Matrix::zeros(n, n);
        for (g, s) in self.elements() {
            acc = if signed && s < 0 { acc.sub(&g) } else { acc.add(&g) };
        }
        acc.scale(&F::from_ratio(1, 6))
    }

    /// `e₀ = (1/6) Σ g`.
    pub fn e0(&self) -> Matrix<F> {
        self.projector(false)
    }

    /// `e₁ = (1/6) Σ sgn(g) g`.
    pub fn e1(&self) -> Matrix<F> {
        self.projector(true)
    }

    pub fn apply_sigma(&self, x: &[F]) -> Vec<F> {
        self.sigma.apply(x)
    }

    pub fn apply_rho(&self, x: &[F]) -> Vec<F> {
        self.rho.apply(x)
    }

    pub fn relations_hold(&self) -> bool {
        let n = self.dim();
        let id = Matrix::identity(n);
        self.sigma.mul(&self.sigma).same(&id)
            && self.rho.pow(3).same(&id)
            && self.sigma.mul(&self.rho).mul(&self.sigma).same(&self.rho.mul(&self.rho))
    }

    pub fn is_invariant(&self, s: &Subspace<F>) -> bool {
        s.is_invariant(&self.sigma) && s.is_invariant(&self.rho)
    }

    /// Induced action on an invariant subspace, in its rref coordinates.
    pub fn restrict(&self, s: &Subspace<F>) -> Result<S3Action<F>> {
        let induced = |g: &Matrix<F>| -> Result<Matrix<F>> {
            let rows = s
                .basis()
                .iter()
                .map(|b| {
                    s.coords(&g.apply(b))
                        .ok_or_else(|| Error::Precondition("subspace is not S3-invariant".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_rows(s.dim(), rows))
        };
        Ok(S3Action {
            sigma: induced(&self.sigma)?,
            rho: induced(&self.rho)?,
        })
    }

    /// Induced action on a quotient by an invariant ideal.
    pub fn on_quotient(&self, q: &Quotient<F>) -> S3Action<F> {
        let induced = |g: &Matrix<F>| {
            let rows = q.complement.iter().map(|&c| q.projection.apply(g.row(c))).collect();
            Matrix::from_rows(q.complement.len(), rows)
        };
        S3Action {
            sigma: induced(&self.sigma),
            rho: induced(&self.rho),
        }
    }

    /// Relations and the automorphism property on all basis pairs.
    pub fn verify(&self, a: &Algebra<F>) -> Report {
        let mut r = Report::new("S3 action");
        let n = a.dim();
        if self.sigma.rows() != n || self.sigma.cols() != n || self.rho.rows() != n || self.rho.cols() != n {
            r.check("matrix shapes", false);
            return r;
        }
        let id = Matrix::identity(n);
        r.check("sigma^2 = 1", self.sigma.mul(&self.sigma).same(&id));
        r.check("rho^3 = 1", self.rho.pow(3).same(&id));
        r.check(
            "sigma rho sigma = rho^2",
            self.sigma.mul(&self.rho).mul(&self.sigma).same(&self.rho.mul(&self.rho)),
        );
        r.check_witnesses("sigma is an automorphism", a.morphism_violations(a, &self.sigma));
        r.check_witnesses("rho is an automorphism", a.morphism_violations(a, &self.rho));
        r
    }

    /// Isotypic decomposition with standard pairs. Every projector identity and
    /// pair relation is re-verified; a failure is reported as an error.
    pub fn decompose(&self) -> Result<IsotypicDecomposition<F>> {
        let n = self.dim();
        if !self.relations_hold() {
            return Err(Error::Precondition("matrices do not satisfy the S3 relations".into()));
        }
        let e0 = self.e0();
        let e1 = self.e1();
        let id = Matrix::identity(n);
        let e2 = id.sub(&e0).sub(&e1);
        for (name, p) in [("e0", &e0), ("e1", &e1), ("e2", &e2)] {
            if !p.mul(p).same(p) {
                return Err(Error::Inconsistent(format!("{name} is not idempotent")));
            }
        }
        let zero = Matrix::zeros(n, n);
        if !e0.mul(&e1).same(&zero) || !e0.mul(&e2).same(&zero) || !e1.mul(&e2).same(&zero) {
            return Err(Error::Inconsistent("projectors are not orthogonal".into()));
        }
        let fixed = Subspace::row_space(&e0);
        let sign = Subspace::row_space(&e1);
        let two_dim = Subspace::row_space(&e2);
        if fixed.dim() + sign.dim() + two_dim.dim() != n {
            return Err(Error::Inconsistent("isotypic dimensions do not add up".into()));
        }
        for s in [&fixed, &sign, &two_dim] {
            if !self.is_invariant(s) {
                return Err(Error::Inconsistent("isotypic component is not invariant".into()));
            }
        }
        let h = two_dim
            .intersect(&self.sigma.sub(&id).left_kernel())
            .expect("same ambient");
        let mut pairs = Vec::with_capacity(h.dim());
        for hb in h.basis() {
            let hr = self.rho.apply(hb);
            let v = vector::neg(&hr);
            let w = vector::add(hb, &hr);
            let eq = |a: &[F], b: &[F]| vector::is_zero(&vector::sub(a, b));
            let ok = eq(&self.sigma.apply(&v), &w)
                && eq(&self.sigma.apply(&w), &v)
                && eq(&self.rho.apply(&v), &w)
                && vector::is_zero(&vector::add(&self.rho.apply(&w), &vector::add(&v, &w)));
            if !ok {
                return Err(Error::Inconsistent("standard pair relations fail".into()));
            }
            pairs.push((v, w));
        }
        let pair_span = Subspace::span(
            n,
            pairs.iter().flat_map(|(v, w)| [v.clone(), w.clone()]).collect(),
        );
        if !pair_span.same(&two_dim) {
            return Err(Error::Inconsistent("standard pairs do not span the two-dimensional part".into()));
        }
        Ok(IsotypicDecomposition {
            fixed,
            sign,
            two_dim,
            h,
            pairs,
            e0,
            e1,
            e2,
        })
    }

    /// The triality equation `(x^σ - x) + (x^σ - x)^ρ + (x^σ - x)^{ρ²} = 0` on
    /// every basis vector, cross-checked against the vanishing of the sign
    /// component. Disagreement between the two is an error.
    pub fn is_triality(&self) -> Result<TrialityVerdict<F>> {
        let n = self.dim();
        let id = Matrix::identity(n);
        let t = self.sigma.sub(&id).mul(&id.add(&self.rho).add(&self.rho.mul(&self.rho)));
        let witness = (0..n).find(|&i| !vector::is_zero(t.row(i))).map(|i| (i, t.row(i).to_vec()));
        let by_equation = witness.is_none();
        let by_sign = self.e1().rank() == 0;
        if by_equation != by_sign {
            return Err(Error::Inconsistent(
                "triality equation and sign component disagree".into(),
            ));
        }
        Ok(TrialityVerdict {
            holds: by_equation,
            witness,
        })
    }

    /// Proper nonzero S3-invariant ideals generated by single basis vectors of
    /// the isotypic components. A probe, not a classification.
    pub fn invariant_ideals(&self, a: &Algebra<F>) -> Result<Vec<Subspace<F>>> {
        let dec = self.decompose()?;
        let mut found: Vec<Subspace<F>> = Vec::new();
        for part in [&dec.fixed, &dec.sign, &dec.two_dim] {
            for b in part.basis() {
                let orbit = self.elements().into_iter().map(|(g, _)| g.apply(b)).collect();
                let ideal = a.ideal_closure(&Subspace::span(a.dim(), orbit));
                if !ideal.is_zero() && !ideal.is_full() && !found.contains(&ideal) {
                    found.push(ideal);
                }
            }
        }
        Ok(found)
    }
}
