//! Expanded form: a linear combination of product trees, simplified by the
//! grade-closure rules of the grade set.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ast::{DeltaPoly, Var};
use crate::constructions::{GradeSet, GradedAlgebra};
use crate::exactlin::{format_rational_short, vector};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mono {
    Var(String, u8),
    Mul(Box<Mono>, Box<Mono>),
    Proj(u8, Box<Mono>),
}

impl Mono {
    /// Grades the value of this tree can have on homogeneous inputs.
    pub fn grades(&self, gs: GradeSet) -> BTreeSet<u8> {
        match self {
            Mono::Var(_, g) | Mono::Proj(g, _) => BTreeSet::from([*g]),
            Mono::Mul(a, b) => {
                let (ga, gb) = (a.grades(gs), b.grades(gs));
                let mut out = BTreeSet::new();
                for x in &ga {
                    for y in &gb {
                        out.extend(gs.product_grades(*x, *y).iter().copied());
                    }
                }
                out
            }
        }
    }

    /// `p_g(self)` with the closure rules applied; `None` is zero.
    fn project(self, g: u8, gs: GradeSet) -> Option<Mono> {
        let grades = self.grades(gs);
        if !grades.contains(&g) {
            None
        } else if grades.len() == 1 {
            Some(self)
        } else {
            Some(Mono::Proj(g, Box::new(self)))
        }
    }

    fn rename(&self, f: &impl Fn(&Var) -> Var) -> Mono {
        match self {
            Mono::Var(n, g) => {
                let (n, g) = f(&(n.clone(), *g));
                Mono::Var(n, g)
            }
            Mono::Mul(a, b) => Mono::Mul(Box::new(a.rename(f)), Box::new(b.rename(f))),
            Mono::Proj(g, a) => Mono::Proj(*g, Box::new(a.rename(f))),
        }
    }

    fn count(&self, v: &Var, acc: &mut usize) {
        match self {
            Mono::Var(n, g) => {
                if n == &v.0 && *g == v.1 {
                    *acc += 1;
                }
            }
            Mono::Mul(a, b) => {
                a.count(v, acc);
                b.count(v, acc);
            }
            Mono::Proj(_, a) => a.count(v, acc),
        }
    }

    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            Mono::Var(n, g) => {
                out.insert((n.clone(), *g));
            }
            Mono::Mul(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Mono::Proj(_, a) => a.collect_vars(out),
        }
    }

    pub fn eval(&self, m: &GradedAlgebra<Rational>, env: &BTreeMap<Var, Vec<Rational>>) -> Vec<Rational> {
        match self {
            Mono::Var(n, g) => env[&(n.clone(), *g)].clone(),
            Mono::Mul(a, b) => m.alg.mul(&a.eval(m, env), &b.eval(m, env)),
            Mono::Proj(g, a) => m.project(&a.eval(m, env), *g),
        }
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mono::Var(n, g) => write!(f, "{n}{g}"),
            Mono::Mul(a, b) => match **b {
                Mono::Mul(..) => write!(f, "{a}*({b})"),
                _ => write!(f, "{a}*{b}"),
            },
            Mono::Proj(g, a) => write!(f, "p{g}({a})"),
        }
    }
}

/// A linear combination of [`Mono`]s with nonzero rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly {
    pub terms: BTreeMap<Mono, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn var(name: &str, grade: u8) -> Self {
        Poly::mono(Mono::Var(name.to_string(), grade))
    }

    fn mono(m: Mono) -> Self {
        let mut p = Poly::zero();
        p.terms.insert(m, Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Mono, c: Rational) {
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// `self += c·other`.
    pub fn axpy(&mut self, c: &Rational, other: &Poly) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), c * v);
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        let mut p = Poly::zero();
        p.axpy(c, self);
        p
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut p = Poly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                p.add_term(Mono::Mul(Box::new(a.clone()), Box::new(b.clone())), x * y);
            }
        }
        p
    }

    pub fn project(&self, g: u8, gs: GradeSet) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in &self.terms {
            if let Some(m) = m.clone().project(g, gs) {
                p.add_term(m, c.clone());
            }
        }
        p
    }

    pub fn from_delta(e: &DeltaPoly, gs: GradeSet) -> Poly {
        match e {
            DeltaPoly::Var { name, grade } => Poly::var(name, *grade),
            DeltaPoly::Sum(ts) => {
                let mut p = Poly::zero();
                for t in ts {
                    p.axpy(&Rational::one(), &Poly::from_delta(t, gs));
                }
                p
            }
            DeltaPoly::Scale(c, a) => Poly::from_delta(a, gs).scale(c),
            DeltaPoly::Mul(a, b) => Poly::from_delta(a, gs).mul(&Poly::from_delta(b, gs)),
            DeltaPoly::Proj(g, a) => Poly::from_delta(a, gs).project(*g, gs),
        }
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            m.collect_vars(&mut out);
        }
        out
    }

    /// Largest number of occurrences of `v` in one monomial.
    pub fn degree_in(&self, v: &Var) -> usize {
        self.terms
            .keys()
            .map(|m| {
                let mut c = 0;
                m.count(v, &mut c);
                c
            })
            .max()
            .unwrap_or(0)
    }

    pub fn rename(&self, f: &impl Fn(&Var) -> Var) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in &self.terms {
            p.add_term(m.rename(f), c.clone());
        }
        p
    }

    /// Integer coefficients with gcd 1, first coefficient positive.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lcm = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.terms.values().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let first_negative = ints[0].is_negative();
        let mut p = Poly::zero();
        for ((m, _), n) in self.terms.iter().zip(ints) {
            let mut q = Rational::new(n, gcd.clone());
            if first_negative {
                q = -q;
            }
            p.terms.insert(m.clone(), q);
        }
        p
    }

    /// The least primitive form over renamings that permute same-grade
    /// variables.
    pub fn canonical(&self) -> Poly {
        let vars: Vec<Var> = self.variables().into_iter().collect();
        let mut best = self.primitive();
        for perm in grade_preserving_permutations(&vars) {
            let map: BTreeMap<Var, Var> = vars.iter().cloned().zip(perm).collect();
            let cand = self.rename(&|v| map[v].clone()).primitive();
            if cand < best {
                best = cand;
            }
        }
        best
    }

    pub fn eval(&self, m: &GradedAlgebra<Rational>, env: &BTreeMap<Var, Vec<Rational>>) -> Vec<Rational> {
        let mut out = vector::zeros(m.dim());
        for (mono, c) in &self.terms {
            vector::axpy(&mut out, c, &mono.eval(m, env));
        }
        out
    }
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

/// Every image of `vars` under a permutation that keeps grades.
fn grade_preserving_permutations(vars: &[Var]) -> Vec<Vec<Var>> {
    let grades: BTreeSet<u8> = vars.iter().map(|v| v.1).collect();
    let mut out: Vec<BTreeMap<Var, Var>> = vec![BTreeMap::new()];
    for g in grades {
        let group: Vec<Var> = vars.iter().filter(|v| v.1 == g).cloned().collect();
        let mut next = Vec::new();
        for base in &out {
            for p in permutations(&group) {
                let mut m = base.clone();
                m.extend(group.iter().cloned().zip(p));
                next.push(m);
            }
        }
        out = next;
    }
    out.into_iter().map(|m| vars.iter().map(|v| m[v].clone()).collect()).collect()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !a.is_one() {
                write!(f, "{}*", format_rational_short(&a))?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity_lab::parse_delta;

    fn p(s: &str) -> Poly {
        Poly::from_delta(&parse_delta(s, GradeSet::Delta).unwrap(), GradeSet::Delta)
    }

    #[test]
    fn closure_rules_simplify() {
        assert_eq!(p("p0(x0*y0)"), p("x0*y0"));
        assert!(p("p2(x0*y0)").is_zero());
        assert!(p("p0(x2*y0)").is_zero());
        assert_eq!(p("p2(x2)"), p("x2"));
        assert_ne!(p("p2(x2*y2)"), p("x2*y2"));
    }

    #[test]
    fn canonical_identifies_renamings_and_multiples() {
        assert_eq!(p("2*x2*y2 + 2*y2*x2").canonical(), p("-y2*x2 - x2*y2").canonical());
        assert_ne!(p("x2*y2").canonical(), p("x2*y0").canonical());
    }

    #[test]
    fn print_parse_round_trip() {
        let q = p("6*p0(x2*y2)*z2 - p2(p2(x2*y2)*z2) - 3/2*x2*(y2*z0)");
        assert_eq!(p(&q.to_string()), q);
    }
}
