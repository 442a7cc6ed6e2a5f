use super::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Matrix, Subspace};

/// A Lie algebra of linear maps, with each basis element's matrix attached.
#[derive(Clone, Debug)]
pub struct MapAlgebra<F> {
    pub alg: Algebra<F>,
    /// Matrices of the basis elements (right action on the host).
    pub maps: Vec<Matrix<F>>,
    /// The same maps flattened row-major, as a subspace of `F^{n²}`.
    pub span: Subspace<F>,
}

/// Matrix of `a∘b - b∘a` under the right-action convention.
pub fn commutator<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    b.mul(a).sub(&a.mul(b))
}

fn map_algebra<F: Field>(n: usize, span: Subspace<F>, prefix: &str) -> Result<MapAlgebra<F>> {
    let maps: Vec<Matrix<F>> = span.basis().iter().map(|v| Matrix::unflatten(n, v)).collect();
    let d = maps.len();
    let mut rows = Vec::with_capacity(d * d);
    for a in &maps {
        for b in &maps {
            let c = commutator(a, b).flatten();
            rows.push(
                span.coords(&c)
                    .ok_or_else(|| Error::Inconsistent("span of maps is not closed under commutator".into()))?,
            );
        }
    }
    let labels = (0..d).map(|i| format!("{prefix}{i}")).collect();
    let mut it = rows.into_iter();
    let alg = Algebra::from_fn(labels, |_, _| it.next().expect("d² commutators"))?;
    Ok(MapAlgebra { alg, maps, span })
}

impl<F: Field> Algebra<F> {
    /// Checks `D(bᵢbⱼ) = D(bᵢ)bⱼ + bᵢD(bⱼ)` on all basis pairs.
    pub fn is_derivation(&self, d: &Matrix<F>) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = d.apply(&self.mul_basis_left(i, &self.basis_vector(j)));
                let rhs = vector::add(&self.mul_basis_right(d.row(i), j), &self.mul_basis_left(i, d.row(j)));
                vector::is_zero(&vector::sub(&lhs, &rhs))
            })
        })
    }

    /// All derivations, by solving the linear system over basis pairs.
    pub fn derivation_algebra(&self) -> Result<MapAlgebra<F>> {
        let n = self.dim();
        // unknown D[m][k] at column m*n + k; equation per (i, j, k)
        let mut rows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut eq = vector::zeros::<F>(n * n);
                    for (m, c) in self.basis_product(i, j) {
                        eq[m * n + k] = eq[m * n + k].clone() + c.clone();
                    }
                    // D(bᵢ)bⱼ = Σ_m D[i][m] c[m][j][k]
                    for m in 0..n {
                        let c = self.constant(m, j, k);
                        if !c.is_negligible() {
                            eq[i * n + m] = eq[i * n + m].clone() - c;
                        }
                        let c = self.constant(i, m, k);
                        if !c.is_negligible() {
                            eq[j * n + m] = eq[j * n + m].clone() - c;
                        }
                    }
                    if !vector::is_zero(&eq) {
                        rows.push(eq);
                    }
                }
            }
        }
        let span = if rows.is_empty() {
            Subspace::full(n * n)
        } else {
            Matrix::from_rows(n * n, rows).kernel()
        };
        map_algebra(n, span, "d")
    }

    /// `D(x,y) = L_{xy} + L_x∘L_y - L_y∘L_x`, i.e. `z ↦ (xy)z + x(yz) - y(xz)`.
    pub fn inner_derivation(&self, x: &[F], y: &[F]) -> Matrix<F> {
        let n = self.dim();
        let xy = self.mul(x, y);
        let rows = (0..n)
            .map(|k| {
                let z = self.basis_vector(k);
                let a = self.mul(&xy, &z);
                let b = self.mul(x, &self.mul(y, &z));
                let c = self.mul(y, &self.mul(x, &z));
                vector::sub(&vector::add(&a, &b), &c)
            })
            .collect();
        Matrix::from_rows(n, rows)
    }

    /// Span of `D(x, y)` for `x` over a basis of `A` and `y` over a basis of `ideal`.
    /// Every generator is verified to be a derivation.
    pub fn inder_relative(&self, ideal: &Subspace<F>) -> Result<Subspace<F>> {
        let n = self.dim();
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal("inner derivations relative to a non-ideal".into()));
        }
        let mut gens = Vec::new();
        for i in 0..n {
            let x = self.basis_vector(i);
            for y in ideal.basis() {
                let d = self.inner_derivation(&x, y);
                if d.is_zero() {
                    continue;
                }
                if !self.is_derivation(&d) {
                    return Err(Error::Inconsistent(format!(
                        "D({}, {}) is not a derivation",
                        self.label(i),
                        self.format_vector(y)
                    )));
                }
                gens.push(d.flatten());
            }
        }
        Ok(Subspace::span(n * n, gens))
    }

    /// The inner derivation algebra of a Malcev algebra: span of `D(bᵢ, bⱼ)`, `i < j`.
    pub fn inder_malcev(&self) -> Result<Subspace<F>> {
        let n = self.dim();
        let mut gens = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let d = self.inner_derivation(&self.basis_vector(i), &self.basis_vector(j));
                if d.is_zero() {
                    continue;
                }
                if !self.is_derivation(&d) {
                    return Err(Error::Precondition(format!(
                        "D({}, {}) is not a derivation; the algebra is not Malcev",
                        self.label(i),
                        self.label(j)
                    )));
                }
                gens.push(d.flatten());
            }
        }
        Ok(Subspace::span(n * n, gens))
    }

    /// [`Self::inder_malcev`] as a Lie algebra under the commutator.
    pub fn inder_malcev_algebra(&self) -> Result<MapAlgebra<F>> {
        map_algebra(self.dim(), self.inder_malcev()?, "D")
    }
}
