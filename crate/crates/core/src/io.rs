//! JSON interchange format. Scalars are exact rationals written `"p/q"`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::constructions::{GradeSet, GradedAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{format_rational, parse_rational, Matrix};
use crate::{QAlgebra, QMatrix, Rational, S3Action};

/// `(i, j, [(k, c)])` meaning `bᵢbⱼ = Σ c·bₖ`.
pub type ProductEntry = (usize, usize, Vec<(usize, String)>);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub products: Vec<ProductEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grades: Option<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grade_set: Option<GradeSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<Vec<Vec<String>>>,
}

fn matrix_out(m: &QMatrix) -> Vec<Vec<String>> {
    m.row_vecs().iter().map(|r| r.iter().map(format_rational).collect()).collect()
}

fn scalar(s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| Error::Format(format!("bad scalar '{s}'")))
}

fn matrix_in(rows: &[Vec<String>], n: usize, what: &str) -> Result<QMatrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Format(format!("{what} must be a {n}x{n} matrix")));
    }
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| scalar(s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(n, parsed))
}

impl AlgebraFile {
    pub fn from_algebra(name: &str, alg: &QAlgebra) -> Self {
        let mut products: Vec<ProductEntry> = Vec::new();
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let p = alg.basis_product(i, j);
                if !p.is_empty() {
                    products.push((i, j, p.iter().map(|(k, c)| (*k, format_rational(c))).collect()));
                }
            }
        }
        AlgebraFile {
            name: name.to_string(),
            dim: alg.dim(),
            basis: alg.labels().to_vec(),
            products,
            grades: None,
            grade_set: None,
            sigma: None,
            rho: None,
        }
    }

    pub fn from_graded(name: &str, g: &GradedAlgebra<Rational>) -> Self {
        let mut f = AlgebraFile::from_algebra(name, &g.alg);
        f.grades = Some(g.grades.clone());
        f.grade_set = Some(g.grade_set);
        f
    }

    pub fn with_action(mut self, act: &S3Action<Rational>) -> Self {
        self.sigma = Some(matrix_out(&act.sigma));
        self.rho = Some(matrix_out(&act.rho));
        self
    }

    pub fn algebra(&self) -> Result<QAlgebra> {
        if self.basis.len() != self.dim {
            return Err(Error::Format(format!(
                "dim is {} but {} basis labels are given",
                self.dim,
                self.basis.len()
            )));
        }
        let mut entries = Vec::with_capacity(self.products.len());
        for (i, j, terms) in &self.products {
            let bad = |x: usize| x >= self.dim;
            if bad(*i) || bad(*j) || terms.iter().any(|(k, _)| bad(*k)) {
                return Err(Error::Format(format!("product ({i}, {j}) references an index >= dim {}", self.dim)));
            }
            let terms = terms.iter().map(|(k, s)| Ok((*k, scalar(s)?))).collect::<Result<Vec<_>>>()?;
            entries.push((*i, *j, terms));
        }
        QAlgebra::from_products(self.basis.clone(), entries)
    }

    pub fn graded(&self) -> Result<Option<GradedAlgebra<Rational>>> {
        match (&self.grades, self.grade_set) {
            (Some(g), Some(gs)) => Ok(Some(GradedAlgebra::new(self.algebra()?, g.clone(), gs)?)),
            (None, None) => Ok(None),
            _ => Err(Error::Format("grades and grade_set must be given together".into())),
        }
    }

    pub fn action(&self) -> Result<Option<S3Action<Rational>>> {
        match (&self.sigma, &self.rho) {
            (Some(s), Some(r)) => Ok(Some(S3Action::new(
                matrix_in(s, self.dim, "sigma")?,
                matrix_in(r, self.dim, "rho")?,
            ))),
            (None, None) => Ok(None),
            _ => Err(Error::Format("sigma and rho must be given together".into())),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
        AlgebraFile::from_json(&text)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json()).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{lambda, make_d4};

    #[test]
    fn round_trip_with_action_and_grading() {
        let (lam, act) = lambda::<Rational>();
        let f = AlgebraFile::from_graded("lambda", &lam).with_action(&act);
        let back = AlgebraFile::from_json(&f.to_json()).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.graded().unwrap().unwrap(), lam);
        let a = back.action().unwrap().unwrap();
        assert!(a.sigma.same(&act.sigma) && a.rho.same(&act.rho));
    }

    #[test]
    fn d4_round_trip() {
        let (alg, act) = make_d4::<Rational>();
        let f = AlgebraFile::from_algebra("d4", &alg).with_action(&act);
        assert!(f.algebra().unwrap().same_constants(&alg));
    }

    #[test]
    fn bad_index_rejected() {
        let mut f = AlgebraFile::from_algebra("x", &QAlgebra::abelian(2));
        f.products.push((0, 5, vec![(0, "1/1".into())]));
        assert!(matches!(f.algebra(), Err(Error::Format(_))));
        f.products.pop();
        f.products.push((0, 1, vec![(0, "one".into())]));
        assert!(matches!(f.algebra(), Err(Error::Format(_))));
    }
}
