use super::graded::{GradeSet, GradedAlgebra};
use crate::algcore::Algebra;
use crate::exactlin::{Field, Matrix};
use crate::s3rep::S3Action;

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn q<F: Field>(n: i64, d: i64) -> F {
    F::from_ratio(n, d)
}

/// Adds `bᵢbⱼ = v` and `bⱼbᵢ = -v`.
fn anti<F: Field>(out: &mut Vec<(usize, usize, Vec<(usize, F)>)>, i: usize, j: usize, v: Vec<(usize, F)>) {
    let neg = v.iter().map(|(k, c)| (*k, -c.clone())).collect();
    out.push((i, j, v));
    out.push((j, i, neg));
}

fn sl2_products<F: Field>(out: &mut Vec<(usize, usize, Vec<(usize, F)>)>) {
    let (e, h, f) = (0, 1, 2);
    anti(out, e, h, vec![(e, q(2, 1))]);
    anti(out, e, f, vec![(h, q(1, 1))]);
    anti(out, f, h, vec![(f, q(-2, 1))]);
}

/// `sl₂` on `(e, h, f)` with `eh = 2e`, `ef = h`, `fh = -2f`.
pub fn sl2<F: Field>() -> Algebra<F> {
    let mut p = Vec::new();
    sl2_products(&mut p);
    Algebra::from_products(labels(&["e", "h", "f"]), p).expect("sl2")
}

/// The two-dimensional nonabelian Lie algebra, `xy = -yx = y`.
pub fn b2<F: Field>() -> Algebra<F> {
    let mut p = Vec::new();
    anti(&mut p, 0, 1, vec![(1, F::one())]);
    Algebra::from_products(labels(&["x", "y"]), p).expect("b2")
}

pub fn abelian<F: Field>(dim: usize) -> Algebra<F> {
    Algebra::abelian(dim)
}

/// The three-dimensional algebra on `(a, v, w)`: `a` is a unit for `v, w`,
/// `v² = (v+2a)/3`, `w² = (w+2a)/3`, `vw = wv = -(v+w+a)/3`, with `a` fixed
/// and `σ: v ↔ w`, `ρ: v ↦ w ↦ -v-w`.
pub fn lambda<F: Field>() -> (GradedAlgebra<F>, S3Action<F>) {
    let (a, v, w) = (0, 1, 2);
    let t = |n| q::<F>(n, 3);
    let products = vec![
        (a, a, vec![(a, F::one())]),
        (a, v, vec![(v, F::one())]),
        (v, a, vec![(v, F::one())]),
        (a, w, vec![(w, F::one())]),
        (w, a, vec![(w, F::one())]),
        (v, v, vec![(v, t(1)), (a, t(2))]),
        (w, w, vec![(w, t(1)), (a, t(2))]),
        (v, w, vec![(v, t(-1)), (w, t(-1)), (a, t(-1))]),
        (w, v, vec![(v, t(-1)), (w, t(-1)), (a, t(-1))]),
    ];
    let alg = Algebra::from_products(labels(&["a", "v", "w"]), products).expect("lambda");
    let g = GradedAlgebra::new(alg, vec![0, 2, 2], GradeSet::Delta).expect("lambda grades");
    let z = F::zero;
    let o = F::one;
    let sigma = Matrix::from_rows(3, vec![vec![o(), z(), z()], vec![z(), z(), o()], vec![z(), o(), z()]]);
    let rho = Matrix::from_rows(3, vec![vec![o(), z(), z()], vec![z(), z(), o()], vec![z(), -o(), -o()]]);
    (g, S3Action::new(sigma, rho))
}

/// Even part `sl₂ = (e, h, f)`, odd part `(p, n)` = `(w₂, w₋₂)` or `(v₁, v₋₁)`.
/// `module` lists `(odd, even, target, coeff)` for `odd·even`; the reverse
/// product is its negative. `odd` lists the symmetric odd products.
fn sl2_extension<F: Field>(
    names: [&str; 2],
    module: &[(usize, usize, usize, (i64, i64))],
    odd: &[(usize, usize, Vec<(usize, (i64, i64))>)],
) -> GradedAlgebra<F> {
    let mut p = Vec::new();
    sl2_products(&mut p);
    for &(x, s, t, (n, d)) in module {
        anti(&mut p, x, s, vec![(t, q(n, d))]);
    }
    for (x, y, v) in odd {
        let v: Vec<(usize, F)> = v.iter().map(|&(k, (n, d))| (k, q(n, d))).collect();
        p.push((*x, *y, v.clone()));
        if x != y {
            p.push((*y, *x, v));
        }
    }
    let alg = Algebra::from_products(labels(&["e", "h", "f", names[0], names[1]]), p).expect("sl2 extension");
    GradedAlgebra::new(alg, vec![0, 0, 0, 1, 1], GradeSet::Z2).expect("grades")
}

const E: usize = 0;
const H: usize = 1;
const F_: usize = 2;
const P: usize = 3;
const N: usize = 4;

/// `Γ = S ⊕ W`, the ℤ₂-graded algebra whose contraction with a Grassmann-type
/// partner yields Malcev algebras. Odd products `w₂² = f`, `w₂w₋₂ = -h/2`,
/// `w₋₂² = e`; module `w₂e = -2w₋₂`, `w₋₂f = 2w₂`, `w₂h = 2w₂`, `w₋₂h = -2w₋₂`.
pub fn gamma<F: Field>() -> GradedAlgebra<F> {
    sl2_extension(
        ["w2", "w-2"],
        &[(P, E, N, (-2, 1)), (N, F_, P, (2, 1)), (P, H, P, (2, 1)), (N, H, N, (-2, 1))],
        &[
            (P, P, vec![(F_, (1, 1))]),
            (P, N, vec![(H, (-1, 2))]),
            (N, N, vec![(E, (1, 1))]),
        ],
    )
}

/// `Γ` transcribed literally from its usual printed table, which does not
/// produce Malcev contractions. Kept for regression tests.
pub fn gamma_printed<F: Field>() -> GradedAlgebra<F> {
    sl2_extension(
        ["w2", "w-2"],
        &[(P, E, P, (-2, 1)), (N, F_, P, (2, 1)), (P, H, P, (2, 1)), (N, H, N, (-2, 1))],
        &[
            (P, P, vec![(F_, (1, 1))]),
            (P, N, vec![(H, (1, 1))]),
            (N, N, vec![(E, (1, 1))]),
        ],
    )
}

/// `osp(1,2) = S ⊕ V` with `v₁f = v₋₁`, `v₋₁e = -v₁`, `v₁h = v₁`, `v₋₁h = -v₋₁`,
/// `v₁² = e`, `v₁v₋₁ = v₋₁v₁ = h/2`, `v₋₁² = f`.
pub fn osp<F: Field>() -> GradedAlgebra<F> {
    sl2_extension(
        ["v1", "v-1"],
        &[(P, F_, N, (1, 1)), (N, E, P, (-1, 1)), (P, H, P, (1, 1)), (N, H, N, (-1, 1))],
        &[
            (P, P, vec![(E, (1, 1))]),
            (P, N, vec![(H, (1, 2))]),
            (N, N, vec![(F_, (1, 1))]),
        ],
    )
}

/// `osp` with the literal printed coefficients (`v₋₁h = v₋₁`, `v₁v₋₁ = h`).
pub fn osp_printed<F: Field>() -> GradedAlgebra<F> {
    sl2_extension(
        ["v1", "v-1"],
        &[(P, F_, N, (1, 1)), (N, E, P, (-1, 1)), (P, H, P, (1, 1)), (N, H, N, (1, 1))],
        &[
            (P, P, vec![(E, (1, 1))]),
            (P, N, vec![(H, (1, 1))]),
            (N, N, vec![(F_, (1, 1))]),
        ],
    )
}

/// The three-dimensional ℤ₂-graded algebra `T = ke ⊕ (kx ⊕ ky)` with
/// `e² = e`, `ex = xe = x`, `ey = ye = y`, `xy = -yx = e`, `x² = y² = 0`.
pub fn t7seed<F: Field>() -> GradedAlgebra<F> {
    let (e, x, y) = (0, 1, 2);
    let one = F::one;
    let products = vec![
        (e, e, vec![(e, one())]),
        (e, x, vec![(x, one())]),
        (x, e, vec![(x, one())]),
        (e, y, vec![(y, one())]),
        (y, e, vec![(y, one())]),
        (x, y, vec![(e, one())]),
        (y, x, vec![(e, -one())]),
    ];
    let alg = Algebra::from_products(labels(&["e", "x", "y"]), products).expect("t7seed");
    GradedAlgebra::new(alg, vec![0, 1, 1], GradeSet::Z2).expect("grades")
}

/// The Grassmann algebra on two odd generators, basis `(1, ξ1, ξ2, ξ1ξ2)`.
pub fn grassmann2<F: Field>() -> GradedAlgebra<F> {
    let one = F::one;
    let (u, a, b, ab) = (0, 1, 2, 3);
    let products = vec![
        (u, u, vec![(u, one())]),
        (u, a, vec![(a, one())]),
        (a, u, vec![(a, one())]),
        (u, b, vec![(b, one())]),
        (b, u, vec![(b, one())]),
        (u, ab, vec![(ab, one())]),
        (ab, u, vec![(ab, one())]),
        (a, b, vec![(ab, one())]),
        (b, a, vec![(ab, -one())]),
    ];
    let alg = Algebra::from_products(labels(&["1", "xi1", "xi2", "xi1xi2"]), products).expect("grassmann");
    GradedAlgebra::new(alg, vec![0, 1, 1, 0], GradeSet::Z2).expect("grades")
}
