use std::fmt;
use std::ops::{Index, IndexMut};

use super::field::Field;
use super::subspace::Subspace;

/// Dense row-major matrix. Vectors are rows and maps act on the right,
/// so the image of `x` under `m` is `m.apply(x) = x · m`.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share the length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn into_data(self) -> Vec<F> {
        self.data
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_negligible)
    }

    /// Entrywise equality up to [`Field::is_negligible`].
    pub fn same(&self, other: &Matrix<F>) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.sub(other).is_zero()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// `x · self`.
    pub fn apply(&self, x: &[F]) -> Vec<F> {
        assert_eq!(x.len(), self.rows, "vector length mismatch");
        let mut out = vec![F::zero(); self.cols];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_negligible() {
                continue;
            }
            for (o, m) in out.iter_mut().zip(self.row(i)) {
                if !m.is_negligible() {
                    *o = o.clone() + xi.clone() * m.clone();
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let rows = (0..self.rows).map(|i| other.apply(self.row(i))).collect();
        Matrix::from_rows(other.cols, rows)
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Matrix<F> {
        assert!(self.is_square());
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn trace(&self) -> F {
        assert!(self.is_square());
        (0..self.rows).fold(F::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row-echelon form together with the pivot columns.
    /// Zero rows are kept at the bottom so the shape is unchanged.
    pub fn rref_with_pivots(&self) -> (Matrix<F>, Vec<usize>) {
        let mut rows = self.row_vecs();
        let pivots = rref_rows(&mut rows, self.cols);
        while rows.len() < self.rows {
            rows.push(vec![F::zero(); self.cols]);
        }
        (Matrix::from_rows(self.cols, rows), pivots)
    }

    pub fn rref(&self) -> Matrix<F> {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.row_vecs();
        rref_rows(&mut rows, self.cols).len()
    }

    /// Right null space `{v : self · vᵀ = 0}`.
    pub fn kernel(&self) -> Subspace<F> {
        let mut rows = self.row_vecs();
        let pivots = rref_rows(&mut rows, self.cols);
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                let c = &rows[r][free];
                if !c.is_negligible() {
                    v[p] = -c.clone();
                }
            }
            basis.push(v);
        }
        Subspace::span(self.cols, basis)
    }

    /// Left null space `{v : v · self = 0}`, as a subspace of `F^rows`.
    pub fn left_kernel(&self) -> Subspace<F> {
        self.transpose().kernel()
    }

    /// One solution of `self · x = rhs` (column convention), or `None`.
    pub fn solve(&self, rhs: &[F]) -> Option<Vec<F>> {
        assert_eq!(rhs.len(), self.rows, "rhs length must equal row count");
        let mut rows: Vec<Vec<F>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(rhs[i].clone());
                r
            })
            .collect();
        let pivots = rref_rows(&mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = rows[r][self.cols].clone();
        }
        Some(x)
    }

    /// Solves `x · self = rhs` for a row vector `x`.
    pub fn solve_left(&self, rhs: &[F]) -> Option<Vec<F>> {
        self.transpose().solve(rhs)
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut rows: Vec<Vec<F>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
                r
            })
            .collect();
        let pivots = rref_rows(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let inv = rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Matrix::from_rows(n, inv))
    }

    /// Reinterprets a square matrix as a flat row vector of length `n²`.
    pub fn flatten(&self) -> Vec<F> {
        self.data.clone()
    }

    pub fn unflatten(n: usize, v: &[F]) -> Matrix<F> {
        assert_eq!(v.len(), n * n);
        Matrix {
            rows: n,
            cols: n,
            data: v.to_vec(),
        }
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;

    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// In-place Gauss-Jordan elimination on `rows`; returns pivot columns and
/// truncates the zero rows. Pivots are chosen by smallest `pivot_weight`.
pub(crate) fn rref_rows<F: Field>(rows: &mut Vec<Vec<F>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let best = (r..rows.len())
            .filter(|&i| !rows[i][c].is_negligible())
            .min_by_key(|&i| rows[i][c].pivot_weight());
        let Some(p) = best else { continue };
        rows.swap(r, p);
        let inv = F::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            if !x.is_negligible() {
                *x = x.clone() * inv.clone();
            }
        }
        rows[r][c] = F::one();
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, tail) = tail.split_first_mut().expect("pivot row");
        for other in head.iter_mut().chain(tail.iter_mut()) {
            let factor = other[c].clone();
            if factor.is_negligible() {
                continue;
            }
            for (x, p) in other.iter_mut().zip(pivot_row.iter()) {
                if !p.is_negligible() {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
            other[c] = F::zero();
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub mod vector {
    //! Row-vector helpers on plain slices.
    use super::Field;

    pub fn zeros<F: Field>(n: usize) -> Vec<F> {
        vec![F::zero(); n]
    }

    pub fn unit<F: Field>(n: usize, i: usize) -> Vec<F> {
        let mut v = zeros(n);
        v[i] = F::one();
        v
    }

    pub fn add<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
    }

    pub fn sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
    }

    pub fn scale<F: Field>(c: &F, a: &[F]) -> Vec<F> {
        a.iter().map(|x| c.clone() * x.clone()).collect()
    }

    /// `y += c·x`
    pub fn axpy<F: Field>(y: &mut [F], c: &F, x: &[F]) {
        assert_eq!(y.len(), x.len());
        if c.is_negligible() {
            return;
        }
        for (yi, xi) in y.iter_mut().zip(x) {
            if !xi.is_negligible() {
                *yi = yi.clone() + c.clone() * xi.clone();
            }
        }
    }

    pub fn is_zero<F: Field>(a: &[F]) -> bool {
        a.iter().all(Field::is_negligible)
    }

    pub fn neg<F: Field>(a: &[F]) -> Vec<F> {
        a.iter().map(|x| -x.clone()).collect()
    }

    /// Indices of the non-zero coordinates.
    pub fn support<F: Field>(a: &[F]) -> Vec<usize> {
        a.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_negligible())
            .map(|(i, _)| i)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
        let cols = rows[0].len();
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn rref_identity_fixed_point() {
        let id = Matrix::<Rational>::identity(2);
        assert_eq!(id.rref(), id);
    }

    #[test]
    fn rref_rank_one() {
        assert_eq!(mat(&[&[2, 4], &[1, 2]]).rref(), mat(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn kernel_trivial_cases() {
        assert_eq!(Matrix::<Rational>::zeros(3, 3).kernel().dim(), 3);
        assert_eq!(Matrix::<Rational>::identity(3).kernel().dim(), 0);
    }

    #[test]
    fn kernel_of_single_row() {
        let m = mat(&[&[1, 1, 0]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 2);
        assert_eq!(m.rank() + k.dim(), 3);
        for v in k.basis_vectors() {
            assert!(vector::is_zero(&m.transpose().apply(&v)));
        }
    }

    #[test]
    fn solve_identity_and_unsolvable() {
        let rhs = vec![q(3), q(-5)];
        assert_eq!(Matrix::identity(2).solve(&rhs), Some(rhs));
        assert_eq!(mat(&[&[1, 0], &[1, 0]]).solve(&[q(1), q(2)]), None);
    }

    #[test]
    fn inverse_round_trip() {
        let m = mat(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(mat(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn left_kernel_annihilates() {
        let m = mat(&[&[1, 2], &[2, 4], &[0, 1]]);
        let lk = m.left_kernel();
        assert_eq!(lk.dim(), 1);
        for v in lk.basis_vectors() {
            assert!(vector::is_zero(&m.apply(&v)));
        }
    }

    #[test]
    fn floats_use_tolerance() {
        let m = Matrix::<f64>::from_rows(2, vec![vec![1.0, 1.0 / 3.0], vec![3.0, 1.0]]);
        assert_eq!(m.rank(), 1);
    }
}
