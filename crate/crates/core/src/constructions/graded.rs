use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algcore::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Subspace};
use crate::report::Report;

/// The grade sets supported by [`GradedAlgebra`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GradeSet {
    /// `{0, 2}` with `M₀M₀ ⊆ M₀`, `M₀M₂ + M₂M₀ ⊆ M₂`, `M₂M₂` unrestricted.
    Delta,
    /// `{0, 1}` with the additive ℤ₂ rule.
    Z2,
}

impl GradeSet {
    pub fn grades(self) -> &'static [u8] {
        match self {
            GradeSet::Delta => &[0, 2],
            GradeSet::Z2 => &[0, 1],
        }
    }

    pub fn from_grades(g: &[u8]) -> Option<GradeSet> {
        match g {
            [0, 2] => Some(GradeSet::Delta),
            [0, 1] => Some(GradeSet::Z2),
            _ => None,
        }
    }

    pub fn contains(self, g: u8) -> bool {
        self.grades().contains(&g)
    }

    /// Grades a product of homogeneous elements of grades `a`, `b` may have.
    pub fn product_grades(self, a: u8, b: u8) -> &'static [u8] {
        match (self, a, b) {
            (GradeSet::Delta, 0, 0) => &[0],
            (GradeSet::Delta, 2, 2) => &[0, 2],
            (GradeSet::Delta, _, _) => &[2],
            (GradeSet::Z2, a, b) if (a + b) % 2 == 0 => &[0],
            (GradeSet::Z2, _, _) => &[1],
        }
    }
}

impl fmt::Display for GradeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.grades().iter().map(|g| g.to_string()).collect();
        write!(f, "{{{}}}", g.join(","))
    }
}

/// An algebra with a homogeneous basis.
#[derive(Clone, PartialEq, Debug)]
pub struct GradedAlgebra<F> {
    pub alg: Algebra<F>,
    pub grades: Vec<u8>,
    pub grade_set: GradeSet,
}

impl<F: Field> GradedAlgebra<F> {
    pub fn new(alg: Algebra<F>, grades: Vec<u8>, grade_set: GradeSet) -> Result<Self> {
        if grades.len() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: grades.len(),
            });
        }
        if let Some(g) = grades.iter().find(|g| !grade_set.contains(**g)) {
            return Err(Error::GradeMismatch(format!("grade {g} not in {grade_set}")));
        }
        Ok(GradedAlgebra { alg, grades, grade_set })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn indices_of_grade(&self, g: u8) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.grades[i] == g).collect()
    }

    pub fn part(&self, g: u8) -> Subspace<F> {
        let n = self.dim();
        Subspace::span(n, self.indices_of_grade(g).into_iter().map(|i| vector::unit(n, i)).collect())
    }

    /// `(x)_g`, the homogeneous component of grade `g`.
    pub fn project(&self, x: &[F], g: u8) -> Vec<F> {
        x.iter()
            .zip(&self.grades)
            .map(|(c, &h)| if h == g { c.clone() } else { F::zero() })
            .collect()
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        self.alg.mul(x, y)
    }

    /// `(x y)_g`.
    pub fn mul_proj(&self, x: &[F], y: &[F], g: u8) -> Vec<F> {
        self.project(&self.alg.mul(x, y), g)
    }

    /// Violations of the grading rule on basis pairs.
    pub fn closure_violations(&self) -> Vec<String> {
        let n = self.dim();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let allowed = self.grade_set.product_grades(self.grades[i], self.grades[j]);
                for (k, _) in self.alg.basis_product(i, j) {
                    if !allowed.contains(&self.grades[*k]) {
                        bad.push(format!(
                            "{}*{} has a component in grade {}",
                            self.alg.label(i),
                            self.alg.label(j),
                            self.grades[*k]
                        ));
                        break;
                    }
                }
            }
        }
        bad
    }

    /// The grade-2 part with product `(xy)₂`; zero if the grade set is not Δ.
    pub fn grade_two_algebra(&self) -> Result<Algebra<F>> {
        let idx = self.indices_of_grade(2);
        let labels = idx.iter().map(|&i| self.alg.label(i).to_string()).collect();
        Algebra::from_fn(labels, |a, b| {
            let p = self.alg.mul_basis_left(idx[a], &self.alg.basis_vector(idx[b]));
            idx.iter().map(|&k| p[k].clone()).collect()
        })
    }

    /// Closure and the identities characterizing the variety of Δ-graded
    /// algebras `M` with `M□Λ` Lie.
    pub fn check_graded_identities(&self) -> Report {
        let mut r = Report::new("graded identities");
        if self.grade_set != GradeSet::Delta {
            r.check("grade set is {0,2}", false);
            return r;
        }
        r.check_witnesses("grade closure", self.closure_violations());
        let n = self.dim();
        let a_idx = self.indices_of_grade(0);
        let x_idx = self.indices_of_grade(2);
        let e = |i: usize| vector::unit::<F>(n, i);
        let lab = |i: usize| self.alg.label(i).to_string();

        // m² = 0 on bᵢ and bᵢ + bⱼ
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i..n {
                let m = if i == j { e(i) } else { vector::add(&e(i), &e(j)) };
                if !vector::is_zero(&self.mul(&m, &m)) {
                    bad.push(if i == j { format!("m={}", lab(i)) } else { format!("m={}+{}", lab(i), lab(j)) });
                }
            }
        }
        r.check_witnesses("m^2 = 0", bad);

        // (mn)_i a = ((ma)n)_i + (m(na))_i
        let mut bad = Vec::new();
        for m in 0..n {
            for nn in 0..n {
                let mn = self.mul(&e(m), &e(nn));
                for &a in &a_idx {
                    let ma_n = self.mul(&self.mul(&e(m), &e(a)), &e(nn));
                    let m_na = self.mul(&e(m), &self.mul(&e(nn), &e(a)));
                    for g in [0u8, 2] {
                        let lhs = self.mul(&self.project(&mn, g), &e(a));
                        let rhs = vector::add(&self.project(&ma_n, g), &self.project(&m_na, g));
                        if !vector::is_zero(&vector::sub(&lhs, &rhs)) {
                            bad.push(format!("i={g}, m={}, n={}, a={}", lab(m), lab(nn), lab(a)));
                        }
                    }
                }
            }
        }
        r.check_witnesses("(mn)_i a = (ma n)_i + (m na)_i", bad);

        let mut bad4 = Vec::new();
        let mut bad5 = Vec::new();
        for &x in &x_idx {
            for &y in &x_idx {
                let xy = self.mul(&e(x), &e(y));
                let xy0 = self.project(&xy, 0);
                let xy2 = self.project(&xy, 2);
                for &z in &x_idx {
                    let lhs = vector::scale(&F::from_int(6), &self.mul(&xy0, &e(z)));
                    let zy2 = self.mul_proj(&e(z), &e(y), 2);
                    let xz2 = self.mul_proj(&e(x), &e(z), 2);
                    let rhs = vector::add(
                        &vector::add(&self.mul_proj(&xy2, &e(z), 2), &self.mul_proj(&zy2, &e(x), 2)),
                        &self.mul_proj(&xz2, &e(y), 2),
                    );
                    if !vector::is_zero(&vector::sub(&lhs, &rhs)) {
                        bad4.push(format!("x={}, y={}, z={}", lab(x), lab(y), lab(z)));
                    }
                    let zx2 = self.mul_proj(&e(z), &e(x), 2);
                    let yz2 = self.mul_proj(&e(y), &e(z), 2);
                    let s = vector::add(
                        &vector::add(&self.mul_proj(&xy2, &e(z), 0), &self.mul_proj(&zx2, &e(y), 0)),
                        &self.mul_proj(&yz2, &e(x), 0),
                    );
                    if !vector::is_zero(&s) {
                        bad5.push(format!("x={}, y={}, z={}", lab(x), lab(y), lab(z)));
                    }
                }
            }
        }
        r.check_witnesses("6(xy)_0 z = ((xy)_2 z)_2 + ((zy)_2 x)_2 + ((xz)_2 y)_2", bad4);
        r.check_witnesses("((xy)_2 z)_0 + ((zx)_2 y)_0 + ((yz)_2 x)_0 = 0", bad5);
        r
    }
}

/// `C□D = ⊕_α C_α ⊗ D_α` with the component-wise product.
///
/// Basis order: for each basis vector of `C`, each basis vector of `D` of the
/// same grade. The pairs are returned alongside the algebra.
pub fn contract<F: Field>(c: &GradedAlgebra<F>, d: &GradedAlgebra<F>) -> Result<(Algebra<F>, Vec<(usize, usize)>)> {
    if c.grade_set != d.grade_set {
        return Err(Error::GradeMismatch(format!(
            "cannot contract grade sets {} and {}",
            c.grade_set, d.grade_set
        )));
    }
    let mut pairs = Vec::new();
    for i in 0..c.dim() {
        for j in 0..d.dim() {
            if c.grades[i] == d.grades[j] {
                pairs.push((i, j));
            }
        }
    }
    let mut index = vec![usize::MAX; c.dim() * d.dim()];
    for (t, &(i, j)) in pairs.iter().enumerate() {
        index[i * d.dim() + j] = t;
    }
    let labels = pairs
        .iter()
        .map(|&(i, j)| format!("{}⊗{}", c.alg.label(i), d.alg.label(j)))
        .collect();
    let mut products = Vec::new();
    for (s, &(i, j)) in pairs.iter().enumerate() {
        for (t, &(k, l)) in pairs.iter().enumerate() {
            let mut terms = Vec::new();
            for (p, cp) in c.alg.basis_product(i, k) {
                for (q, dq) in d.alg.basis_product(j, l) {
                    let u = index[p * d.dim() + q];
                    if u != usize::MAX {
                        terms.push((u, cp.clone() * dq.clone()));
                    }
                }
            }
            if !terms.is_empty() {
                products.push((s, t, terms));
            }
        }
    }
    Ok((Algebra::from_products(labels, products)?, pairs))
}
