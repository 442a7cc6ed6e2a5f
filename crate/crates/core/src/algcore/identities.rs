//! Identity checks on structure-constant algebras.
//!
//! Multilinear identities are checked on basis tuples. Identities of degree two
//! in a variable are checked on `bᵢ` and `bᵢ + bⱼ` for that variable, which is
//! complete over a field of characteristic zero.

use super::algebra::Algebra;
use crate::exactlin::{vector, Field};
use crate::report::Report;

/// Points on which a polynomial map of degree at most `degree` is determined.
///
/// Degree 1 gives the basis, degree 2 gives `bᵢ` and `bᵢ + bⱼ` (exact for maps
/// homogeneous of degree 2). Higher degrees use every point supported on at
/// most `degree` coordinates with coefficients in `0..=degree`.
pub fn polarization_points<F: Field>(n: usize, degree: usize) -> Vec<Vec<F>> {
    match degree {
        0 => vec![vector::zeros(n)],
        1 => (0..n).map(|i| vector::unit(n, i)).collect(),
        2 => {
            let mut pts: Vec<Vec<F>> = (0..n).map(|i| vector::unit(n, i)).collect();
            for i in 0..n {
                for j in i + 1..n {
                    let mut v = vector::unit(n, i);
                    v[j] = F::one();
                    pts.push(v);
                }
            }
            pts
        }
        d => grid_points(n, d),
    }
}

fn grid_points<F: Field>(n: usize, d: usize) -> Vec<Vec<F>> {
    let mut out = Vec::new();
    let mut support = Vec::new();
    fn rec<F: Field>(n: usize, d: usize, start: usize, support: &mut Vec<usize>, out: &mut Vec<Vec<F>>) {
        if !support.is_empty() {
            let k = support.len();
            let mut coeffs = vec![1usize; k];
            loop {
                let mut v = vector::zeros(n);
                for (s, c) in support.iter().zip(&coeffs) {
                    v[*s] = F::from_int(*c as i64);
                }
                out.push(v);
                let mut pos = 0;
                while pos < k && coeffs[pos] == d {
                    coeffs[pos] = 1;
                    pos += 1;
                }
                if pos == k {
                    break;
                }
                coeffs[pos] += 1;
            }
        }
        if support.len() == d {
            return;
        }
        for i in start..n {
            support.push(i);
            rec(n, d, i + 1, support, out);
            support.pop();
        }
    }
    rec::<F>(n, d, 0, &mut support, &mut out);
    out
}

impl<F: Field> Algebra<F> {
    /// `J(x,y,z) = (xy)z + (yz)x + (zx)y`.
    pub fn jacobian(&self, x: &[F], y: &[F], z: &[F]) -> Vec<F> {
        let a = self.mul(&self.mul(x, y), z);
        let b = self.mul(&self.mul(y, z), x);
        let c = self.mul(&self.mul(z, x), y);
        vector::add(&vector::add(&a, &b), &c)
    }

    fn lbl(&self, v: &[F]) -> String {
        let s = vector::support(v);
        if s.len() == 1 && v[s[0]].is_one() {
            self.label(s[0]).to_string()
        } else {
            self.format_vector(v)
        }
    }

    pub fn check_anticommutative(&self) -> Report {
        let n = self.dim();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i..n {
                let s = vector::add(
                    &self.mul_basis_left(i, &self.basis_vector(j)),
                    &self.mul_basis_left(j, &self.basis_vector(i)),
                );
                if !vector::is_zero(&s) {
                    bad.push(format!(
                        "{}*{} + {}*{} = {}",
                        self.label(i),
                        self.label(j),
                        self.label(j),
                        self.label(i),
                        self.format_vector(&s)
                    ));
                }
            }
        }
        let mut r = Report::new("anticommutativity");
        r.check_witnesses("anticommutative", bad);
        r
    }

    pub fn check_jacobi(&self) -> Report {
        let n = self.dim();
        let mut bad = Vec::new();
        let mut count = 0usize;
        for i in 0..n {
            let bi = self.basis_vector(i);
            for j in 0..n {
                let bj = self.basis_vector(j);
                let ij = self.mul_basis_left(i, &bj);
                for k in 0..n {
                    let bk = self.basis_vector(k);
                    let a = self.mul_basis_right(&ij, k);
                    let b = self.mul_basis_right(&self.mul_basis_left(j, &bk), i);
                    let c = self.mul_basis_right(&self.mul_basis_left(k, &bi), j);
                    let jac = vector::add(&vector::add(&a, &b), &c);
                    if !vector::is_zero(&jac) {
                        count += 1;
                        if bad.len() < crate::report::MAX_WITNESSES {
                            bad.push(format!(
                                "J({}, {}, {}) = {}",
                                self.label(i),
                                self.label(j),
                                self.label(k),
                                self.format_vector(&jac)
                            ));
                        }
                    }
                }
            }
        }
        let mut r = Report::new("Jacobi identity");
        r.check_witnesses("jacobi", bad);
        r.quantity("violating_triples", count);
        r
    }

    /// Jacobi on all basis triples, stopping at the first violation.
    pub fn jacobi_holds(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul_basis_left(i, &self.basis_vector(j));
                for k in 0..n {
                    let a = self.mul_basis_right(&ij, k);
                    let b = self.mul_basis_right(&self.mul_basis_left(j, &self.basis_vector(k)), i);
                    let c = self.mul_basis_right(&self.mul_basis_left(k, &self.basis_vector(i)), j);
                    if !vector::is_zero(&vector::add(&vector::add(&a, &b), &c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_lie(&self) -> bool {
        self.check_anticommutative().passed() && self.check_jacobi().passed()
    }

    /// `((xy)z)x + ((yz)x)x + ((zx)x)y - (xz)(yx)`.
    pub fn malcev_defect(&self, x: &[F], y: &[F], z: &[F]) -> Vec<F> {
        let xy = self.mul(x, y);
        let a = self.mul(&self.mul(&xy, z), x);
        let b = self.mul(&self.mul(&self.mul(y, z), x), x);
        let c = self.mul(&self.mul(&self.mul(z, x), x), y);
        let d = self.mul(&self.mul(x, z), &self.mul(y, x));
        vector::sub(&vector::add(&vector::add(&a, &b), &c), &d)
    }

    /// The Malcev identity, polarized in `x`, plus anticommutativity.
    pub fn check_malcev(&self) -> Report {
        let n = self.dim();
        let mut r = Report::new("Malcev identity");
        r.absorb("", self.check_anticommutative());
        let xs: Vec<Vec<F>> = polarization_points(n, 2);
        let mut bad = Vec::new();
        for x in &xs {
            for j in 0..n {
                let y = self.basis_vector(j);
                for k in 0..n {
                    let z = self.basis_vector(k);
                    let d = self.malcev_defect(x, &y, &z);
                    if !vector::is_zero(&d) {
                        bad.push(format!(
                            "x={}, y={}, z={}: defect {}",
                            self.lbl(x),
                            self.label(j),
                            self.label(k),
                            self.format_vector(&d)
                        ));
                    }
                }
            }
        }
        r.check_witnesses("malcev", bad);
        r
    }

    /// Three identities in the Jacobian that hold in every Malcev algebra:
    /// `2J(x,y,z)x + J(xy,x,z) + J(zx,x,y) = 0`, `J(xy,x,y) = 0` and
    /// `J(x,y,z)x = J(xz,x,y)`. Checked independently of [`Self::check_malcev`].
    pub fn check_malcev_jacobian_identities(&self) -> Report {
        let n = self.dim();
        let quad: Vec<Vec<F>> = polarization_points(n, 2);
        let lin: Vec<Vec<F>> = polarization_points(n, 1);
        let mut bad_a = Vec::new();
        let mut bad_c = Vec::new();
        for x in &quad {
            for y in &lin {
                for z in &lin {
                    let jxyz = self.jacobian(x, y, z);
                    let jx = self.mul(&jxyz, x);
                    let a = vector::add(
                        &vector::add(&vector::add(&jx, &jx), &self.jacobian(&self.mul(x, y), x, z)),
                        &self.jacobian(&self.mul(z, x), x, y),
                    );
                    if !vector::is_zero(&a) {
                        bad_a.push(format!("x={}, y={}, z={}", self.lbl(x), self.lbl(y), self.lbl(z)));
                    }
                    let c = vector::sub(&jx, &self.jacobian(&self.mul(x, z), x, y));
                    if !vector::is_zero(&c) {
                        bad_c.push(format!("x={}, y={}, z={}", self.lbl(x), self.lbl(y), self.lbl(z)));
                    }
                }
            }
        }
        let mut bad_b = Vec::new();
        for x in &quad {
            for y in &quad {
                let b = self.jacobian(&self.mul(x, y), x, y);
                if !vector::is_zero(&b) {
                    bad_b.push(format!("x={}, y={}", self.lbl(x), self.lbl(y)));
                }
            }
        }
        let mut r = Report::new("Jacobian identities of Malcev algebras");
        r.check_witnesses("2J(x,y,z)x+J(xy,x,z)+J(zx,x,y)=0", bad_a);
        r.check_witnesses("J(xy,x,y)=0", bad_b);
        r.check_witnesses("J(x,y,z)x=J(xz,x,y)", bad_c);
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_points_count() {
        assert_eq!(polarization_points::<f64>(4, 2).len(), 4 + 6);
        assert_eq!(polarization_points::<f64>(3, 1).len(), 3);
    }

    #[test]
    fn grid_points_cover_small_supports() {
        // supports of size 1..=3 in 3 coordinates, coefficients 1..=3
        let pts = polarization_points::<f64>(3, 3);
        assert_eq!(pts.len(), 3 * 3 + 3 * 9 + 27);
    }
}
