use crate::algcore::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Matrix, Subspace};
use crate::s3rep::S3Action;

/// `T(L) = L₁ ⊕ L₂ ⊕ L₃` with `σ` swapping the first two copies and `ρ`
/// cycling `1 → 2 → 3 → 1`.
pub fn make_tl<F: Field>(l: &Algebra<F>) -> Result<(Algebra<F>, S3Action<F>)> {
    if !l.check_jacobi().passed() || !l.check_anticommutative().passed() {
        return Err(Error::Precondition("T(L) requires a Lie algebra".into()));
    }
    let n = l.dim();
    let labels = (1..=3)
        .flat_map(|c| l.labels().iter().map(move |s| format!("{s}_{c}")))
        .collect();
    let mut products = Vec::new();
    for c in 0..3 {
        for (i, j, k, v) in l.nonzero_constants() {
            products.push((c * n + i, c * n + j, vec![(c * n + k, v)]));
        }
    }
    let alg = Algebra::from_products(labels, products)?;
    let block = |perm: [usize; 3]| -> Vec<usize> {
        (0..3).flat_map(|c| (0..n).map(move |i| perm[c] * n + i)).collect()
    };
    let act = S3Action::from_permutations(&block([1, 0, 2]), &block([1, 2, 0]));
    Ok((alg, act))
}

/// Subalgebras `A, B` of a Lie algebra with `B² ⊆ A` and `AB ⊆ B`.
#[derive(Clone, Debug, PartialEq)]
pub struct CompatiblePair<F> {
    pub a: Subspace<F>,
    pub b: Subspace<F>,
}

impl<F: Field> CompatiblePair<F> {
    pub fn new(a: Subspace<F>, b: Subspace<F>) -> Self {
        CompatiblePair { a, b }
    }

    /// Names of the violated conditions; empty iff compatible.
    pub fn violations(&self, l: &Algebra<F>) -> Vec<&'static str> {
        let mut bad = Vec::new();
        if !l.is_subalgebra(&self.a) {
            bad.push("A is not a subalgebra");
        }
        if !l.is_subalgebra(&self.b) {
            bad.push("B is not a subalgebra");
        }
        if !self.a.contains_subspace(&l.product_space(&self.b, &self.b)) {
            bad.push("B^2 is not contained in A");
        }
        if !self.b.contains_subspace(&l.product_space(&self.a, &self.b)) {
            bad.push("AB is not contained in B");
        }
        bad
    }
}

/// The invariant subalgebra `T(A,B) ⊆ T(L)`: diagonal copies of `A` plus
/// `a₁ + b₂ + c₃` with `a, b, c ∈ B`, `a + b + c = 0`. Returned on the rref
/// basis of the subspace, with the induced action and the subspace itself.
pub fn make_tab<F: Field>(
    l: &Algebra<F>,
    pair: &CompatiblePair<F>,
) -> Result<(Algebra<F>, S3Action<F>, Subspace<F>)> {
    let bad = pair.violations(l);
    if !bad.is_empty() {
        return Err(Error::Precondition(format!("incompatible pair: {}", bad.join(", "))));
    }
    let (t, act) = make_tl(l)?;
    let n = l.dim();
    let place = |parts: [&[F]; 3]| -> Vec<F> {
        let mut v = vector::zeros(3 * n);
        for (c, p) in parts.iter().enumerate() {
            for (i, x) in p.iter().enumerate() {
                v[c * n + i] = x.clone();
            }
        }
        v
    };
    let zero = vector::zeros::<F>(n);
    let mut gens = Vec::new();
    for a in pair.a.basis() {
        gens.push(place([a, a, a]));
    }
    for b in pair.b.basis() {
        let nb = vector::neg(b);
        gens.push(place([b, &nb, &zero]));
        gens.push(place([&zero, b, &nb]));
    }
    let s = Subspace::span(3 * n, gens);
    let sub = t.restrict(&s)?;
    let sub = sub.with_labels((0..s.dim()).map(|i| format!("t{i}")).collect())?;
    let induced = act.restrict(&s)?;
    Ok((sub, induced, s))
}

/// Restricts an algebra with action to an invariant subalgebra.
pub fn restrict_with_action<F: Field>(
    alg: &Algebra<F>,
    act: &S3Action<F>,
    s: &Subspace<F>,
) -> Result<(Algebra<F>, S3Action<F>)> {
    Ok((alg.restrict(s)?, act.restrict(s)?))
}

/// `σ`, `ρ` applied block-wise to a direct sum.
pub fn direct_sum_action<F: Field>(x: &S3Action<F>, y: &S3Action<F>) -> S3Action<F> {
    let block = |a: &Matrix<F>, b: &Matrix<F>| {
        let (n, m) = (a.rows(), b.rows());
        Matrix::from_fn(n + m, n + m, |i, j| match (i < n, j < n) {
            (true, true) => a[(i, j)].clone(),
            (false, false) => b[(i - n, j - n)].clone(),
            _ => F::zero(),
        })
    };
    S3Action::new(block(&x.sigma, &y.sigma), block(&x.rho, &y.rho))
}
