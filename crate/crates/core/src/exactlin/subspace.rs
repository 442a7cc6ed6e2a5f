use std::fmt;

use super::field::Field;
use super::matrix::{rref_rows, vector, Matrix};
use crate::error::{Error, Result};

/// A linear subspace of `F^n`, stored by its reduced row-echelon basis.
///
/// The basis is canonical, so derived `PartialEq` is subspace equality.
#[derive(Clone, PartialEq, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| vector::unit(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: Vec<Vec<F>>) -> Self {
        let mut rows = vectors;
        for r in &rows {
            assert_eq!(r.len(), ambient, "vector not in ambient space");
        }
        let pivots = rref_rows(&mut rows, ambient);
        Subspace {
            ambient,
            basis: rows,
            pivots,
        }
    }

    pub fn row_space(m: &Matrix<F>) -> Self {
        Self::span(m.cols(), m.row_vecs())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.clone()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(self.ambient, self.basis.clone())
    }

    /// Subtracts the basis components at the pivot columns. The result is zero
    /// iff `x` lies in the subspace, and it is supported off the pivots.
    pub fn reduce(&self, x: &[F]) -> Vec<F> {
        assert_eq!(x.len(), self.ambient);
        let mut r = x.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if !c.is_negligible() {
                vector::axpy(&mut r, &-c, b);
            }
        }
        r
    }

    pub fn contains(&self, x: &[F]) -> bool {
        vector::is_zero(&self.reduce(x))
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// Coordinates of `x` in the rref basis, read off at the pivot columns.
    pub fn coords(&self, x: &[F]) -> Option<Vec<F>> {
        let c: Vec<F> = self.pivots.iter().map(|&p| x[p].clone()).collect();
        let back = self.combine(&c);
        if vector::is_zero(&vector::sub(&back, x)) {
            Some(c)
        } else {
            None
        }
    }

    /// `Σ cᵢ bᵢ` over the rref basis.
    pub fn combine(&self, c: &[F]) -> Vec<F> {
        assert_eq!(c.len(), self.dim());
        let mut out = vector::zeros(self.ambient);
        for (ci, b) in c.iter().zip(&self.basis) {
            vector::axpy(&mut out, ci, b);
        }
        out
    }

    /// Equality up to the scalar tolerance.
    pub fn same(&self, other: &Subspace<F>) -> bool {
        self.ambient == other.ambient && self.dim() == other.dim() && self.contains_subspace(other)
    }

    fn check_ambient(&self, other: &Subspace<F>) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(other)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Ok(Subspace::span(self.ambient, rows))
    }

    /// Zassenhaus: row-reduce `[a | a ; b | 0]`; rows with zero left half give
    /// the intersection in their right half.
    pub fn intersect(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut rows: Vec<Vec<F>> = Vec::new();
        for a in &self.basis {
            let mut r = a.clone();
            r.extend(a.iter().cloned());
            rows.push(r);
        }
        for b in &other.basis {
            let mut r = b.clone();
            r.extend(std::iter::repeat(F::zero()).take(n));
            rows.push(r);
        }
        let pivots = rref_rows(&mut rows, 2 * n);
        let inter = rows
            .into_iter()
            .zip(pivots)
            .filter(|(_, p)| *p >= n)
            .map(|(r, _)| r[n..].to_vec())
            .collect();
        Ok(Subspace::span(n, inter))
    }

    /// Image under the right action `x ↦ x·m`.
    pub fn image(&self, m: &Matrix<F>) -> Subspace<F> {
        assert_eq!(m.rows(), self.ambient);
        Subspace::span(m.cols(), self.basis.iter().map(|b| m.apply(b)).collect())
    }

    pub fn is_invariant(&self, m: &Matrix<F>) -> bool {
        self.basis.iter().all(|b| self.contains(&m.apply(b)))
    }

    /// The complement spanned by unit vectors at the non-pivot columns.
    pub fn canonical_complement(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// `{y : ⟨x, y⟩ = 0 ∀x}` for the standard dot product.
    pub fn annihilator(&self) -> Subspace<F> {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient);
        }
        self.basis_matrix().kernel()
    }

    /// Re-expresses this subspace in the coordinates of a larger one.
    pub fn coords_in(&self, host: &Subspace<F>) -> Option<Subspace<F>> {
        let rows = self
            .basis
            .iter()
            .map(|b| host.coords(b))
            .collect::<Option<Vec<_>>>()?;
        Some(Subspace::span(host.dim(), rows))
    }

    /// Embeds a subspace given in coordinates of `host` back into the ambient space.
    pub fn lift_from(coords: &Subspace<F>, host: &Subspace<F>) -> Subspace<F> {
        assert_eq!(coords.ambient, host.dim());
        Subspace::span(
            host.ambient,
            coords.basis.iter().map(|c| host.combine(c)).collect(),
        )
    }
}

impl<F: Field> fmt::Display for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span(dim {} in {})", self.dim(), self.ambient)?;
        for b in &self.basis {
            let cells: Vec<String> = b.iter().map(|c| c.to_string()).collect();
            write!(f, "\n  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn sum_and_intersection_trivial() {
        let a = Subspace::span(3, vec![vec![q(1), q(2), q(0)]]);
        let z = Subspace::zero(3);
        let full = Subspace::full(3);
        assert_eq!(a.sum(&z).unwrap(), a);
        assert_eq!(a.intersect(&full).unwrap(), a);
    }

    #[test]
    fn coordinate_axes_meet_in_zero() {
        let e1 = Subspace::span(2, vec![vec![q(1), q(0)]]);
        let e2 = Subspace::span(2, vec![vec![q(0), q(1)]]);
        assert!(e1.intersect(&e2).unwrap().is_zero());
    }

    #[test]
    fn ambient_mismatch_is_error() {
        assert!(Subspace::<Rational>::zero(2).sum(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::span(2, vec![vec![q(2), q(4)]]);
        let b = Subspace::span(2, vec![vec![q(-1), q(-2)], vec![q(3), q(6)]]);
        assert_eq!(a, b);
    }

    #[test]
    fn coords_and_reduce() {
        let s = Subspace::span(3, vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]]);
        let x = vec![q(2), q(5), q(3)];
        let c = s.coords(&x).unwrap();
        assert_eq!(s.combine(&c), x);
        assert_eq!(s.coords(&[q(1), q(0), q(-1)]), Some(vec![q(1), q(0)]));
        assert!(s.coords(&[q(0), q(0), q(1)]).is_none());
        assert!(vector::is_zero(&s.reduce(&x)));
    }
}
