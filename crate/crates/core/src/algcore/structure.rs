use super::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Matrix, Subspace};
use crate::report::Report;

/// An algebra `A/I` with the projection `A → A/I` (right action, `dim A × dim A/I`).
#[derive(Clone, Debug)]
pub struct Quotient<F> {
    pub alg: Algebra<F>,
    pub projection: Matrix<F>,
    /// Basis indices of `A` whose images form the basis of `A/I`.
    pub complement: Vec<usize>,
}

impl<F: Field> Algebra<F> {
    pub fn full_space(&self) -> Subspace<F> {
        Subspace::full(self.dim())
    }

    /// Smallest subspace containing `gens` and closed under the product.
    pub fn subalgebra_closure(&self, gens: &Subspace<F>) -> Subspace<F> {
        let mut s = gens.clone();
        loop {
            let next = s
                .sum(&self.product_space(&s, &s))
                .expect("same ambient space");
            if next == s {
                return s;
            }
            s = next;
        }
    }

    /// Smallest two-sided ideal containing `gens`.
    pub fn ideal_closure(&self, gens: &Subspace<F>) -> Subspace<F> {
        let n = self.dim();
        let mut s = gens.clone();
        loop {
            let mut rows = s.basis_vectors();
            for v in s.basis() {
                for j in 0..n {
                    rows.push(self.mul_basis_right(v, j));
                    rows.push(self.mul_basis_left(j, v));
                }
            }
            let next = Subspace::span(n, rows);
            if next == s {
                return s;
            }
            s = next;
        }
    }

    pub fn is_ideal(&self, s: &Subspace<F>) -> bool {
        let n = self.dim();
        s.basis().iter().all(|v| {
            (0..n).all(|j| s.contains(&self.mul_basis_right(v, j)) && s.contains(&self.mul_basis_left(j, v)))
        })
    }

    pub fn is_subalgebra(&self, s: &Subspace<F>) -> bool {
        s.contains_subspace(&self.product_space(s, s))
    }

    /// `S⁽⁰⁾ = S`, `S⁽ⁱ⁺¹⁾ = S⁽ⁱ⁾S⁽ⁱ⁾`, until the series stabilizes.
    /// The last entry is the stable term.
    pub fn derived_series_of(&self, s: &Subspace<F>) -> Vec<Subspace<F>> {
        let mut series = vec![s.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.product_space(last, last);
            if &next == last {
                return series;
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                return series;
            }
        }
    }

    pub fn derived_series(&self) -> Vec<Subspace<F>> {
        self.derived_series_of(&self.full_space())
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_solvable_subspace(&self, s: &Subspace<F>) -> bool {
        self.derived_series_of(s).last().is_some_and(Subspace::is_zero)
    }

    pub fn square(&self) -> Subspace<F> {
        let full = self.full_space();
        self.product_space(&full, &full)
    }

    pub fn is_perfect(&self) -> bool {
        self.square().is_full()
    }

    /// Gram matrix of `(x, y) ↦ tr(L_x L_y)`.
    pub fn trace_form(&self) -> Matrix<F> {
        let n = self.dim();
        let ls: Vec<Matrix<F>> = (0..n).map(|i| self.left_mult_basis(i)).collect();
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut t = F::zero();
                for a in 0..n {
                    for b in 0..n {
                        let x = &ls[i][(a, b)];
                        if x.is_negligible() {
                            continue;
                        }
                        let y = &ls[j][(b, a)];
                        if !y.is_negligible() {
                            t = t + x.clone() * y.clone();
                        }
                    }
                }
                g[(i, j)] = t.clone();
                g[(j, i)] = t;
            }
        }
        g
    }

    /// The Killing form; identical to [`Self::trace_form`] with `ad = L`.
    pub fn killing_form(&self) -> Matrix<F> {
        self.trace_form()
    }

    /// Two-sided annihilator `{x : xA = Ax = 0}`.
    pub fn centre(&self) -> Subspace<F> {
        let n = self.dim();
        // row i holds the coordinates of bᵢbⱼ and bⱼbᵢ for every j
        let mut m = Matrix::zeros(n, 2 * n * n);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_product(i, j) {
                    m[(i, j * n + k)] = c.clone();
                }
                for (k, c) in self.basis_product(j, i) {
                    m[(i, n * n + j * n + k)] = c.clone();
                }
            }
        }
        m.left_kernel()
    }

    /// `A² = A`, zero centre, nondegenerate trace form, and every basis vector
    /// generating `A` as an ideal. Sufficient for simplicity; not necessary.
    pub fn simplicity_certificate(&self) -> Report {
        let n = self.dim();
        let mut r = Report::new("simplicity certificate");
        r.check("nonzero", n > 0);
        r.check("perfect", self.is_perfect());
        let c = self.centre();
        r.check_witnesses(
            "centre zero",
            c.basis().iter().map(|v| self.format_vector(v)).collect(),
        );
        let rank = self.trace_form().rank();
        r.check("trace form nondegenerate", rank == n);
        r.quantity("trace_form_rank", rank);
        let mut bad = Vec::new();
        for i in 0..n {
            let gen = Subspace::span(n, vec![self.basis_vector(i)]);
            if !self.ideal_closure(&gen).is_full() {
                bad.push(self.label(i).to_string());
            }
        }
        r.check_witnesses("every basis vector generates A", bad);
        r
    }

    /// `{x : κ(x, A²) = 0}`, the solvable radical of a Lie algebra in
    /// characteristic zero. The result is re-verified solvable.
    pub fn solvable_radical_lie(&self) -> Result<Subspace<F>> {
        if !self.check_anticommutative().passed() || !self.check_jacobi().passed() {
            return Err(Error::Precondition("solvable radical requires a Lie algebra".into()));
        }
        let n = self.dim();
        let sq = self.square();
        let rad = if sq.is_zero() {
            Subspace::full(n)
        } else {
            sq.basis_matrix().mul(&self.killing_form()).kernel()
        };
        if !self.is_solvable_subspace(&rad) || !self.is_ideal(&rad) {
            return Err(Error::Inconsistent("radical is not a solvable ideal".into()));
        }
        Ok(rad)
    }

    /// `A/I` on the complement spanned by the non-pivot basis vectors of `I`.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<Quotient<F>> {
        let n = self.dim();
        if ideal.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: ideal.ambient_dim(),
            });
        }
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal(format!("subspace of dimension {}", ideal.dim())));
        }
        let comp = ideal.canonical_complement();
        let project = |v: &[F]| -> Vec<F> {
            let r = ideal.reduce(v);
            comp.iter().map(|&c| r[c].clone()).collect()
        };
        let projection = Matrix::from_rows(comp.len(), (0..n).map(|i| project(&self.basis_vector(i))).collect());
        let labels = comp.iter().map(|&c| self.label(c).to_string()).collect();
        let alg = Algebra::from_fn(labels, |a, b| {
            project(&self.mul_basis_left(comp[a], &self.basis_vector(comp[b])))
        })?;
        for i in 0..n {
            for j in 0..n {
                let lhs = projection.apply(&self.mul_basis_left(i, &self.basis_vector(j)));
                let rhs = alg.mul(projection.row(i), projection.row(j));
                if !vector::is_zero(&vector::sub(&lhs, &rhs)) {
                    return Err(Error::Inconsistent("quotient projection is not a morphism".into()));
                }
            }
        }
        Ok(Quotient {
            alg,
            projection,
            complement: comp,
        })
    }

    /// Checks `f(bᵢbⱼ) = f(bᵢ)f(bⱼ)` for a linear map `f: self → target`.
    pub fn morphism_violations(&self, target: &Algebra<F>, f: &Matrix<F>) -> Vec<String> {
        let n = self.dim();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let lhs = f.apply(&self.mul_basis_left(i, &self.basis_vector(j)));
                let rhs = target.mul(f.row(i), f.row(j));
                if !vector::is_zero(&vector::sub(&lhs, &rhs)) {
                    bad.push(format!("({}, {})", self.label(i), self.label(j)));
                }
            }
        }
        bad
    }

    /// Checks the structure constants of `self` and `other` for literal equality.
    pub fn same_constants(&self, other: &Algebra<F>) -> bool {
        self.dim() == other.dim() && self.nonzero_constants() == other.nonzero_constants()
    }
}
