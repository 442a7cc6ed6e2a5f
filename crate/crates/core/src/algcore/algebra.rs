use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Matrix, Subspace};

/// Sparse product of two basis vectors: `(k, c)` pairs, sorted by `k`, no zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

/// Finite-dimensional algebra given by structure constants
/// `bᵢ·bⱼ = Σₖ c[i][j][k] bₖ`.
#[derive(Clone, PartialEq, Debug)]
pub struct Algebra<F> {
    labels: Vec<String>,
    table: Vec<SparseVec<F>>,
}

fn normalize<F: Field>(mut entries: Vec<(usize, F)>) -> SparseVec<F> {
    entries.sort_by_key(|(k, _)| *k);
    let mut out: SparseVec<F> = Vec::with_capacity(entries.len());
    for (k, c) in entries {
        match out.last_mut() {
            Some((last, acc)) if *last == k => *acc = acc.clone() + c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_negligible());
    out
}

fn to_sparse<F: Field>(v: &[F]) -> SparseVec<F> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_negligible())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

impl<F: Field> Algebra<F> {
    /// The algebra with zero multiplication.
    pub fn zero_product(labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        Self::from_table(labels, vec![Vec::new(); n * n])
    }

    pub fn abelian(dim: usize) -> Self {
        Self::zero_product((0..dim).map(|i| format!("x{i}")).collect()).expect("distinct labels")
    }

    fn from_table(labels: Vec<String>, table: Vec<SparseVec<F>>) -> Result<Self> {
        let n = labels.len();
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::Precondition(format!("duplicate basis label {l:?}")));
            }
        }
        debug_assert_eq!(table.len(), n * n);
        for entry in &table {
            if let Some((k, _)) = entry.iter().find(|(k, _)| *k >= n) {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: *k + 1,
                });
            }
        }
        Ok(Algebra { labels, table })
    }

    /// Builds from a list of `(i, j, [(k, c)])` products; unlisted pairs are zero
    /// and repeated entries accumulate.
    pub fn from_products(
        labels: Vec<String>,
        products: impl IntoIterator<Item = (usize, usize, Vec<(usize, F)>)>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut raw: Vec<Vec<(usize, F)>> = vec![Vec::new(); n * n];
        for (i, j, terms) in products {
            if i >= n || j >= n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: i.max(j) + 1,
                });
            }
            raw[i * n + j].extend(terms);
        }
        Self::from_table(labels, raw.into_iter().map(normalize).collect())
    }

    /// Builds from a dense rule `(i, j) ↦ bᵢ·bⱼ`.
    pub fn from_fn(labels: Vec<String>, mut f: impl FnMut(usize, usize) -> Vec<F>) -> Result<Self> {
        let n = labels.len();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                if v.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: v.len(),
                    });
                }
                table.push(to_sparse(&v));
            }
        }
        Self::from_table(labels, table)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: labels.len(),
            });
        }
        self.labels = labels;
        Self::from_table(self.labels, self.table)
    }

    /// `bᵢ·bⱼ` in sparse form.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.table[i * self.dim() + j]
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> F {
        self.basis_product(i, j)
            .iter()
            .find(|(m, _)| *m == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(F::zero)
    }

    /// Returns a copy with `c[i][j][k]` replaced.
    pub fn with_constant(&self, i: usize, j: usize, k: usize, value: F) -> Self {
        let n = self.dim();
        let mut out = self.clone();
        let mut entry: Vec<(usize, F)> = out.table[i * n + j]
            .iter()
            .filter(|(m, _)| *m != k)
            .cloned()
            .collect();
        entry.push((k, value));
        out.table[i * n + j] = normalize(entry);
        out
    }

    /// Every nonzero structure constant as `(i, j, k, c)` in lexicographic order.
    pub fn nonzero_constants(&self) -> Vec<(usize, usize, usize, F)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_product(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        vector::unit(self.dim(), i)
    }

    fn check_len(&self, v: &[F]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Bilinear product of two elements.
    pub fn product(&self, x: &[F], y: &[F]) -> Result<Vec<F>> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.mul(x, y))
    }

    /// Unchecked product used internally on vectors known to have length `dim`.
    pub(crate) fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out: Vec<F> = vector::zeros(n);
        let ys = vector::support(y);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_negligible() {
                continue;
            }
            for &j in &ys {
                let coef = xi.clone() * y[j].clone();
                for (k, c) in &self.table[i * n + j] {
                    out[*k] = out[*k].clone() + coef.clone() * c.clone();
                }
            }
        }
        out
    }

    /// `bᵢ · y`
    pub(crate) fn mul_basis_left(&self, i: usize, y: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out: Vec<F> = vector::zeros(n);
        for (j, yj) in y.iter().enumerate() {
            if yj.is_negligible() {
                continue;
            }
            for (k, c) in &self.table[i * n + j] {
                out[*k] = out[*k].clone() + yj.clone() * c.clone();
            }
        }
        out
    }

    /// `x · bⱼ`
    pub(crate) fn mul_basis_right(&self, x: &[F], j: usize) -> Vec<F> {
        let n = self.dim();
        let mut out: Vec<F> = vector::zeros(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_negligible() {
                continue;
            }
            for (k, c) in &self.table[i * n + j] {
                out[*k] = out[*k].clone() + xi.clone() * c.clone();
            }
        }
        out
    }

    /// `L_x : y ↦ xy`, as a matrix whose row `k` is `x·bₖ`.
    pub fn left_mult(&self, x: &[F]) -> Matrix<F> {
        let n = self.dim();
        Matrix::from_rows(n, (0..n).map(|k| self.mul_basis_right(x, k)).collect())
    }

    /// `R_x : y ↦ yx`.
    pub fn right_mult(&self, x: &[F]) -> Matrix<F> {
        let n = self.dim();
        Matrix::from_rows(n, (0..n).map(|k| self.mul_basis_left(k, x)).collect())
    }

    /// `L_{bᵢ}` built straight from the table.
    pub fn left_mult_basis(&self, i: usize) -> Matrix<F> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            for (m_idx, c) in self.basis_product(i, k) {
                m[(k, *m_idx)] = c.clone();
            }
        }
        m
    }

    /// Span of all products `s·t` with `s ∈ a`, `t ∈ b`.
    pub fn product_space(&self, a: &Subspace<F>, b: &Subspace<F>) -> Subspace<F> {
        let mut rows = Vec::new();
        for s in a.basis() {
            for t in b.basis() {
                let p = self.mul(s, t);
                if !vector::is_zero(&p) {
                    rows.push(p);
                }
            }
        }
        Subspace::span(self.dim(), rows)
    }

    /// `A ⊕ B` with zero cross products.
    pub fn direct_sum(&self, other: &Algebra<F>) -> Algebra<F> {
        let (n, m) = (self.dim(), other.dim());
        let clash = self.labels.iter().any(|l| other.labels.contains(l));
        let labels: Vec<String> = if clash {
            self.labels
                .iter()
                .map(|l| format!("{l}_1"))
                .chain(other.labels.iter().map(|l| format!("{l}_2")))
                .collect()
        } else {
            self.labels.iter().chain(&other.labels).cloned().collect()
        };
        let mut products = Vec::new();
        for (i, j, k, c) in self.nonzero_constants() {
            products.push((i, j, vec![(k, c)]));
        }
        for (i, j, k, c) in other.nonzero_constants() {
            products.push((n + i, n + j, vec![(n + k, c)]));
        }
        let out = Algebra::from_products(labels, products).expect("direct sum labels are distinct");
        debug_assert_eq!(out.dim(), n + m);
        out
    }

    /// Structure constants on the rref basis of a subalgebra `s`.
    pub fn restrict(&self, s: &Subspace<F>) -> Result<Algebra<F>> {
        let basis = s.basis();
        let d = basis.len();
        let mut rows = Vec::with_capacity(d * d);
        for a in basis {
            for b in basis {
                let p = self.mul(a, b);
                let c = s
                    .coords(&p)
                    .ok_or_else(|| Error::Precondition("subspace is not closed under the product".into()))?;
                rows.push(c);
            }
        }
        let labels = (0..d).map(|i| format!("s{i}")).collect();
        let mut it = rows.into_iter();
        Algebra::from_fn(labels, |_, _| it.next().expect("d² products"))
    }

    /// Renders `Σ cᵢ bᵢ` with basis labels.
    pub fn format_vector(&self, v: &[F]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_negligible())
            .map(|(i, c)| {
                if c.is_one() {
                    self.labels[i].clone()
                } else {
                    format!("({c})*{}", self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl<F: Field> fmt::Display for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra of dimension {}", self.dim())?;
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let p = self.basis_product(i, j);
                if p.is_empty() {
                    continue;
                }
                let mut v = vector::zeros(n);
                for (k, c) in p {
                    v[*k] = c.clone();
                }
                writeln!(f, "  {}*{} = {}", self.labels[i], self.labels[j], self.format_vector(&v))?;
            }
        }
        Ok(())
    }
}
