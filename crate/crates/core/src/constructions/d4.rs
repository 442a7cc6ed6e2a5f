//! The 28-dimensional split Lie algebra of type D4 on the basis
//! `e₁..e₄, h₁..h₄, f₁..f₄` and one vector per subset `μ ⊆ {1,2,3,4}`.

use crate::algcore::Algebra;
use crate::exactlin::Field;
use crate::report::Report;
use crate::s3rep::S3Action;

pub const D4_DIM: usize = 28;

pub fn e(i: usize) -> usize {
    i - 1
}

pub fn h(i: usize) -> usize {
    3 + i
}

pub fn f(i: usize) -> usize {
    7 + i
}

/// Index of the subset with bitmask `mask` (bit `i-1` set iff `i ∈ μ`).
pub fn subset(mask: usize) -> usize {
    12 + mask
}

/// Index of the subset listing the given members.
pub fn subset_of(members: &[usize]) -> usize {
    subset(members.iter().fold(0, |m, &i| m | 1 << (i - 1)))
}

const FULL: usize = 0b1111;

/// Global signs applied to four families of products: `φ·ψ ∈ k eᵢ`,
/// `φ·ψ ∈ k fᵢ`, `φ·ψ ∈ span(hᵢ)`, and `φ·hᵢ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct D4Signs {
    pub e_case: i64,
    pub f_case: i64,
    pub h_case: i64,
    pub phi_h: i64,
}

impl D4Signs {
    pub const PRINTED: D4Signs = D4Signs {
        e_case: 1,
        f_case: 1,
        h_case: 1,
        phi_h: 1,
    };

    pub fn all() -> Vec<D4Signs> {
        let mut out = Vec::new();
        for bits in 0..16u32 {
            let s = |b: u32| if bits >> b & 1 == 1 { -1 } else { 1 };
            out.push(D4Signs {
                e_case: s(0),
                f_case: s(1),
                h_case: s(2),
                phi_h: s(3),
            });
        }
        out
    }

    pub fn flips(&self) -> usize {
        [self.e_case, self.f_case, self.h_case, self.phi_h]
            .iter()
            .filter(|&&s| s < 0)
            .count()
    }
}

impl std::fmt::Display for D4Signs {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = |s: i64| if s < 0 { '-' } else { '+' };
        write!(
            fm,
            "e-case {}, f-case {}, h-case {}, phi*h {}",
            c(self.e_case),
            c(self.f_case),
            c(self.h_case),
            c(self.phi_h)
        )
    }
}

fn subset_label(mask: usize) -> String {
    let members: Vec<String> = (1..=4).filter(|i| mask >> (i - 1) & 1 == 1).map(|i| i.to_string()).collect();
    format!("{{{}}}", members.join(","))
}

pub fn d4_labels() -> Vec<String> {
    let mut l = Vec::with_capacity(D4_DIM);
    for x in ["e", "h", "f"] {
        for i in 1..=4 {
            l.push(format!("{x}{i}"));
        }
    }
    for m in 0..16 {
        l.push(subset_label(m));
    }
    l
}

fn sign_pow(k: u32) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The multiplication table with the given sign convention. Listed products
/// are extended by anticommutativity; every other basis pair multiplies to zero.
pub fn d4_table<F: Field>(signs: D4Signs) -> Algebra<F> {
    let mut listed: Vec<Option<Vec<(usize, F)>>> = vec![None; D4_DIM * D4_DIM];
    let mut set = |i: usize, j: usize, v: Vec<(usize, F)>| {
        let slot = &mut listed[i * D4_DIM + j];
        match slot {
            Some(old) => old.extend(v),
            None => *slot = Some(v),
        }
    };
    let int = |n: i64| F::from_int(n);
    for i in 1..=4 {
        set(e(i), f(i), vec![(h(i), int(1))]);
        set(e(i), h(i), vec![(e(i), int(2))]);
        set(h(i), f(i), vec![(f(i), int(2))]);
        let bit = 1 << (i - 1);
        for m in 0..16 {
            if m & bit == 0 {
                set(e(i), subset(m), vec![(subset(m | bit), int(1))]);
                set(subset(m), h(i), vec![(subset(m), int(-signs.phi_h))]);
            } else {
                set(subset(m), f(i), vec![(subset(m & !bit), int(1))]);
                set(subset(m), h(i), vec![(subset(m), int(signs.phi_h))]);
            }
        }
    }
    for p in 0..16usize {
        for qm in 0..16usize {
            let inter = p & qm;
            let uni = p | qm;
            let sq = sign_pow(qm.count_ones());
            if uni == FULL && inter.count_ones() == 1 {
                let i = inter.trailing_zeros() as usize + 1;
                set(subset(p), subset(qm), vec![(e(i), int(-sq * signs.e_case))]);
            } else if inter == 0 && uni.count_ones() == 3 {
                let i = (FULL & !uni).trailing_zeros() as usize + 1;
                set(subset(p), subset(qm), vec![(f(i), int(sq * signs.f_case))]);
            } else if inter == 0 && uni == FULL {
                let half = F::from_ratio(sq * signs.h_case, 2);
                let mut v = Vec::new();
                for i in 1..=4 {
                    if qm >> (i - 1) & 1 == 1 {
                        v.push((h(i), half.clone()));
                    }
                    if p >> (i - 1) & 1 == 1 {
                        v.push((h(i), -half.clone()));
                    }
                }
                set(subset(p), subset(qm), v);
            }
        }
    }
    let mut products = Vec::new();
    for i in 0..D4_DIM {
        for j in 0..D4_DIM {
            match (&listed[i * D4_DIM + j], &listed[j * D4_DIM + i]) {
                (Some(v), _) => products.push((i, j, v.clone())),
                (None, Some(v)) => products.push((i, j, v.iter().map(|(k, c)| (*k, -c.clone())).collect())),
                (None, None) => {}
            }
        }
    }
    Algebra::from_products(d4_labels(), products).expect("d4 table")
}

/// The permutation action of `S₃` on indices `1, 2, 3` (fixing `4`), extended to
/// `eᵢ, hᵢ, fᵢ` and to subsets: `σ = (1 2)`, `ρ = (1 2 3)`.
pub fn d4_action<F: Field>() -> S3Action<F> {
    let perm_of = |p: [usize; 4]| -> Vec<usize> {
        let mut out = vec![0; D4_DIM];
        for i in 1..=4 {
            out[e(i)] = e(p[i - 1]);
            out[h(i)] = h(p[i - 1]);
            out[f(i)] = f(p[i - 1]);
        }
        for m in 0..16 {
            let image = (1..=4)
                .filter(|i| m >> (i - 1) & 1 == 1)
                .fold(0, |acc, i| acc | 1 << (p[i - 1] - 1));
            out[subset(m)] = subset(image);
        }
        out
    };
    S3Action::from_permutations(&perm_of([2, 1, 3, 4]), &perm_of([2, 3, 1, 4]))
}

/// Outcome of the sign-repair search.
#[derive(Clone, Debug)]
pub struct D4Build<F> {
    pub alg: Algebra<F>,
    pub act: S3Action<F>,
    pub signs: D4Signs,
    pub report: Report,
}

/// Builds the printed table; if it fails Jacobi, tries all sixteen global sign
/// conventions and keeps the passing one with fewest flips.
pub fn build_d4<F: Field>() -> D4Build<F> {
    let mut report = Report::new("D4 construction");
    let printed = d4_table::<F>(D4Signs::PRINTED);
    let printed_jacobi = printed.check_jacobi();
    report.check("printed table anticommutative", printed.check_anticommutative().passed());
    report.quantity(
        "printed_jacobi_violations",
        printed_jacobi.quantities.get("violating_triples").cloned().unwrap_or_default(),
    );
    let (alg, signs) = if printed_jacobi.passed() {
        report.quantity("sign_repair", "none needed");
        (printed, D4Signs::PRINTED)
    } else {
        let passing: Vec<D4Signs> = D4Signs::all()
            .into_iter()
            .filter(|s| d4_table::<F>(*s).jacobi_holds())
            .collect();
        report.quantity(
            "sign_combinations_passing",
            passing.iter().map(|s| format!("[{s}]")).collect::<Vec<_>>().join(" "),
        );
        let chosen = *passing
            .iter()
            .min_by_key(|s| s.flips())
            .expect("some sign convention satisfies Jacobi");
        report.quantity("sign_repair", format!("[{chosen}]"));
        (d4_table::<F>(chosen), chosen)
    };
    let act = d4_action::<F>();
    report.check("jacobi", alg.check_jacobi().passed());
    report.check("anticommutative", alg.check_anticommutative().passed());
    report.absorb("action: ", act.verify(&alg));
    D4Build {
        alg,
        act,
        signs,
        report,
    }
}

/// The algebra and action of [`build_d4`].
pub fn make_d4<F: Field>() -> (Algebra<F>, S3Action<F>) {
    let b = build_d4();
    (b.alg, b.act)
}
