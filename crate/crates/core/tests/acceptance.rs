//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use triality_core::centres::{centre_correspondence, theorem4_check};
use triality_core::constructions::{
    b2, build_d4, contract, gamma, lambda, make_tab, make_tl, sl2, t7seed, CompatiblePair, GradedAlgebra,
};
use triality_core::functors::*;
use triality_core::identity_lab::{derive_variety, identity_holds, lie_axioms, Poly};
use triality_core::io::AlgebraFile;
use triality_core::{QAlgebra, QSubspace, Rational, Report};

type Graded = GradedAlgebra<Rational>;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn corpus(name: &str) -> AlgebraFile {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name);
    AlgebraFile::load(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

fn triality(l: &QAlgebra) -> TrialityAlgebra<Rational> {
    let (a, s) = make_tl(l).unwrap();
    TrialityAlgebra::new(a, s).unwrap()
}

fn d4() -> TrialityAlgebra<Rational> {
    let b = build_d4::<Rational>();
    TrialityAlgebra::new(b.alg, b.act).unwrap()
}

/// Collects named sub-checks; the criterion passes iff all do.
struct Criterion {
    notes: Vec<String>,
    ok: bool,
}

impl Criterion {
    fn new() -> Self {
        Criterion {
            notes: Vec::new(),
            ok: true,
        }
    }

    fn check(&mut self, name: &str, passed: bool) {
        if !passed {
            self.notes.push(format!("failed: {name}"));
        }
        self.ok &= passed;
    }

    fn report(&mut self, name: &str, r: &Report) {
        if !r.passed() {
            self.notes.push(format!("failed: {name}\n{r}"));
        }
        self.ok &= r.passed();
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

fn d4_integrity(c: &mut Criterion) {
    let b = build_d4::<Rational>();
    c.note(format!("sign repair: {}", b.report.quantities["sign_repair"]));
    c.check("28-dimensional", b.alg.dim() == 28);
    c.report("anticommutativity", &b.alg.check_anticommutative());
    c.report("Jacobi on all triples", &b.alg.check_jacobi());
    c.check("Killing form rank 28", b.alg.killing_form().rank() == 28);
    c.report("S3 relations and automorphisms", &b.act.verify(&b.alg));
    let v = b.act.is_triality().unwrap();
    c.check("triality equation on every basis vector", v.holds);
    let d = b.act.decompose().unwrap();
    c.note(format!("fixed {}, sign {}, two_dim {}", d.fixed.dim(), d.sign.dim(), d.two_dim.dim()));
    c.check("isotypic dimensions 14/0/14", (d.fixed.dim(), d.sign.dim(), d.two_dim.dim()) == (14, 0, 14));
}

fn malcev_extraction(c: &mut Criterion) {
    let m = functor_f(&d4()).unwrap();
    c.check("dim F(D4) = 7", m.dim() == 7);
    c.report("polarized Malcev check", &m.alg.check_malcev());
    let j = m.alg.check_jacobi();
    let witness = j.get("jacobi").and_then(|ch| ch.witnesses.first().cloned());
    c.check("fails Jacobi with a witness", !j.passed() && witness.is_some());
    if let Some(w) = witness {
        c.note(format!("Jacobi witness: {w}"));
    }
    c.check("centre = 0", m.alg.centre().is_zero());
    c.report("simplicity certificate", &m.alg.simplicity_certificate());
}

fn roundtrips(c: &mut Criterion) {
    let l = d4();
    let m = functor_f(&l).unwrap();
    let g = functor_g(&m).unwrap();
    c.check("G(F(D4)) is 28-dimensional", g.dim() == 28);
    let fgf = functor_f(&g).unwrap();
    c.check("F(G(F(D4))) has the structure constants of F(D4)", fgf.alg.same_constants(&m.alg));
    let rt = roundtrip_check(&l).unwrap();
    c.check("D4 is normal", rt.normal);
    c.report("verified isomorphism G(F(D4)) -> D4", &rt.report);
    c.report("contract(psi(D4), Lambda) -> D4", &psi_roundtrip_report(&l).unwrap());
}

fn trivial_triality(c: &mut Criterion) {
    let (a, s) = make_tl(&sl2::<Rational>()).unwrap();
    c.check("T(sl2) passes triality", s.is_triality().unwrap().holds);
    let t = TrialityAlgebra::new(a, s).unwrap();
    let tr = triviality_check(&t).unwrap();
    c.report("triviality_check reports trivial", &tr);
    let f = functor_f(&t).unwrap();
    c.check("F(T(sl2)) is 3-dimensional", f.dim() == 3);
    c.check("F(T(sl2)) is Lie", f.alg.is_lie());
    c.check("Killing form of F(T(sl2)) nondegenerate", f.alg.killing_form().rank() == 3);
    let rt = roundtrip_check(&t).unwrap();
    c.check("T(sl2) normal and roundtrip isomorphic", rt.normal && rt.isomorphic);
}

fn flip_sign(g: &Graded, rng: &mut ChaCha8Rng) -> (Graded, String) {
    let entries: Vec<_> = g.alg.nonzero_constants().into_iter().filter(|(i, j, _, _)| i != j).collect();
    let (i, j, k, v) = entries.choose(rng).expect("a nonzero off-diagonal constant").clone();
    let w = g.alg.constant(j, i, k);
    let alg = g.alg.with_constant(i, j, k, -v).with_constant(j, i, k, -w);
    let desc = format!("flip c({},{};{})", g.alg.label(i), g.alg.label(j), g.alg.label(k));
    (GradedAlgebra::new(alg, g.grades.clone(), g.grade_set).unwrap(), desc)
}

fn identity_oracle(c: &mut Criterion) {
    let (lam, _) = lambda::<Rational>();
    let derived = derive_variety(&lie_axioms(), &lam);
    c.note(format!("{} derived identities", derived.len()));
    c.check("derived set is finite and nonempty", !derived.is_empty());
    let accepts = |g: &Graded, ids: &[Poly]| g.closure_violations().is_empty() && ids.iter().all(|f| identity_holds(f, g));
    let l = d4();
    let psi_d4 = psi(&l).unwrap();
    let phi0_fd4 = phi0(&functor_f(&l).unwrap()).unwrap().graded;
    c.check("psi(D4) satisfies every derived identity", accepts(&psi_d4, &derived));
    c.check("phi0(F(D4)) satisfies every derived identity", accepts(&phi0_fd4, &derived));

    // graded views of the golden corpus
    let t_sl2 = corpus("t_sl2.json");
    let m7 = MalcevAlgebra::new(corpus("m7.json").algebra().unwrap()).unwrap();
    let d4_file = corpus("d4.json");
    let members: Vec<(String, Graded)> = vec![
        ("lambda".into(), corpus("lambda.json").graded().unwrap().unwrap()),
        ("psi(d4)".into(), psi(&TrialityAlgebra::new(d4_file.algebra().unwrap(), d4_file.action().unwrap().unwrap()).unwrap()).unwrap()),
        ("psi(t_sl2)".into(), psi(&TrialityAlgebra::new(t_sl2.algebra().unwrap(), t_sl2.action().unwrap().unwrap()).unwrap()).unwrap()),
        ("phi0(m7)".into(), phi0(&m7).unwrap().graded),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let accepted: Vec<&(String, Graded)> = members.iter().filter(|(_, g)| g.check_graded_identities().passed()).collect();
    let mut agree = 0;
    let mut rejected_mutants = 0;
    for (name, g) in &members {
        let hand = g.check_graded_identities().passed();
        let mech = accepts(g, &derived);
        c.note(format!("{name}: hand-coded {hand}, derived {mech}"));
        agree += (hand == mech) as usize;
    }
    for n in 0..20 {
        let (name, base) = accepted[n % accepted.len()];
        let (mutant, desc) = flip_sign(base, &mut rng);
        let hand = mutant.check_graded_identities().passed();
        let mech = accepts(&mutant, &derived);
        if hand != mech || hand {
            c.note(format!("mutant {n} of {name} ({desc}): hand-coded {hand}, derived {mech}"));
        }
        agree += (hand == mech) as usize;
        rejected_mutants += (!hand && !mech) as usize;
    }
    c.note(format!("{agree}/{} verdicts agree, {rejected_mutants}/20 mutants rejected by both", members.len() + 20));
    c.check("hand-coded and derived agree on corpus and mutants", agree == members.len() + 20);
    c.check("every mutant rejected by both", rejected_mutants == 20);
}

fn centres(c: &mut Criterion) {
    let l = d4();
    c.report("correspondence on D4", &centre_correspondence(&l).unwrap());
    let t = triality(&sl2());
    let r = centre_correspondence(&t).unwrap();
    c.check("T(sl2): both sides full", r.quantities["dim slice of T-centre"] == "3" && r.quantities["dim Lie centre of F(A)"] == "3");
    c.report("correspondence on T(sl2)", &r);

    let s = sl2::<Rational>();
    let unit = |i: usize| (0..3).map(|k| q((k == i) as i64)).collect::<Vec<_>>();
    let literal = CompatiblePair::new(QSubspace::span(3, vec![unit(1)]), QSubspace::span(3, vec![unit(0), unit(2)]));
    let why = literal.violations(&s);
    c.note(format!("(span{{h}}, span{{e,f}}) rejected: {}", why.join(", ")));
    c.check("literal pair rejected since span{e,f} is not a subalgebra", make_tab(&s, &literal).is_err());
    let pair = CompatiblePair::new(QSubspace::span(3, vec![unit(0)]), QSubspace::span(3, vec![unit(0), unit(1)]));
    let (a, act, _) = make_tab(&s, &pair).unwrap();
    c.check("T(span{e}, span{h,e}) is 5-dimensional", a.dim() == 5);
    let tab = TrialityAlgebra::new(a, act).unwrap();
    c.report("correspondence on T(span{e}, span{h,e})", &centre_correspondence(&tab).unwrap());
    c.report("theorem4_check on D4", &theorem4_check(&l).unwrap());
    c.report("theorem4_check on T(sl2)", &theorem4_check(&t).unwrap());
}

fn radicals(c: &mut Criterion) {
    let sum = sl2::<Rational>().direct_sum(&b2());
    for (name, l) in [("T(sl2)", sl2::<Rational>()), ("T(b2)", b2()), ("T(sl2+b2)", sum)] {
        let r = solvability_transfer(&triality(&l)).unwrap();
        c.note(format!("{name}: L solvable {}, F(L) solvable {}", r.quantities["L solvable"], r.quantities["F(L) solvable"]));
        c.report(name, &r);
    }
    let f = functor_f(&triality(&sl2::<Rational>().direct_sum(&b2()))).unwrap();
    let rad = malcev_radical(&f).unwrap();
    c.check("Malcev radical of F(T(sl2+b2)) has dimension 2", rad.dim() == 2);
    c.check("Malcev radical is solvable", f.alg.is_solvable_subspace(&rad));
}

fn contraction(c: &mut Criterion) {
    let (m, _) = contract(&t7seed::<Rational>(), &gamma()).unwrap();
    c.check("7-dimensional", m.dim() == 7);
    c.report("Malcev check", &m.check_malcev());
    c.check("fails Jacobi", !m.check_jacobi().passed());
    c.report("simplicity certificate", &m.simplicity_certificate());
}

fn main() {
    let criteria: [(&str, fn(&mut Criterion), u64); 8] = [
        ("D4 integrity", d4_integrity, 30),
        ("Malcev extraction", malcev_extraction, 5),
        ("functor roundtrips", roundtrips, 60),
        ("trivial-triality suite", trivial_triality, 5),
        ("identity derivation oracle", identity_oracle, 60),
        ("centre correspondence", centres, 10),
        ("radical/solvability transfer", radicals, 10),
        ("contraction example", contraction, 5),
    ];
    let mut failures = 0;
    for (n, (name, run, limit)) in criteria.iter().enumerate() {
        let mut c = Criterion::new();
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| run(&mut c)));
        let elapsed = start.elapsed();
        if let Err(p) = outcome {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            c.ok = false;
            c.note(format!("panicked: {msg}"));
        }
        let in_time = elapsed <= Duration::from_secs(*limit);
        if !in_time {
            c.note(format!("exceeded the {limit} s budget"));
        }
        let ok = c.ok && in_time;
        failures += (!ok) as usize;
        println!(
            "criterion {} [{}] {name} ({:.2} s, budget {limit} s)",
            n + 1,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        for note in &c.notes {
            for line in note.lines() {
                println!("    {line}");
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
