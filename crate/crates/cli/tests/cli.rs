use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use triality_core::io::AlgebraFile;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_triality")).args(args).output().expect("spawn triality")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn d4_construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let d4 = dir.path().join("d4.json");
    assert_eq!(code(&run(&["construct", "d4", "-o", s(&d4)])), 0);
    let v = run(&["verify", s(&d4), "--lie", "--triality"]);
    assert_eq!(code(&v), 0, "{}", stdout(&v));
}

#[test]
fn malcev_from_d4() {
    let dir = tempfile::tempdir().unwrap();
    let m7 = dir.path().join("m7.json");
    let d4 = corpus().join("d4.json");
    assert_eq!(code(&run(&["functor", "F", s(&d4), "-o", s(&m7)])), 0);
    let v = run(&["verify", s(&m7), "--malcev"]);
    assert_eq!(code(&v), 0, "{}", stdout(&v));
    assert_eq!(AlgebraFile::load(&m7).unwrap().dim, 7);
}

#[test]
fn sign_mutation_fails_lie_check() {
    let dir = tempfile::tempdir().unwrap();
    let mut f = AlgebraFile::load(&corpus().join("d4.json")).unwrap();
    let (i, j, _) = f.products.iter().find(|(i, j, _)| i != j).cloned().unwrap();
    for (a, b, terms) in f.products.iter_mut() {
        if (*a, *b) == (i, j) || (*a, *b) == (j, i) {
            let c = &mut terms[0].1;
            *c = c.strip_prefix('-').map(str::to_string).unwrap_or_else(|| format!("-{c}"));
        }
    }
    let p = dir.path().join("mutated.json");
    f.save(&p).unwrap();
    let v = run(&["verify", s(&p), "--lie"]);
    assert_eq!(code(&v), 1);
    assert!(stdout(&v).contains("J("), "{}", stdout(&v));
}

#[test]
fn bad_files_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.json");
    assert_eq!(code(&run(&["verify", s(&missing), "--lie"])), 2);
    let garbled = dir.path().join("garbled.json");
    std::fs::write(&garbled, "{\"name\": 3}").unwrap();
    assert_eq!(code(&run(&["verify", s(&garbled)])), 2);
    let mut f = AlgebraFile::load(&corpus().join("lambda.json")).unwrap();
    f.products[0].2[0].0 = 99;
    let bad_index = dir.path().join("bad_index.json");
    f.save(&bad_index).unwrap();
    let o = run(&["verify", s(&bad_index)]);
    assert_eq!(code(&o), 2);
    assert!(!o.stderr.is_empty());
}

#[test]
fn roundtrip_and_radical() {
    let t = corpus().join("t_sl2.json");
    assert_eq!(code(&run(&["roundtrip", s(&t)])), 0);
    let r = run(&["radical", s(&corpus().join("m7.json"))]);
    assert_eq!(code(&r), 0);
    assert!(stdout(&r).contains("dim"));
}

#[test]
fn graded_identities_on_psi_d4() {
    let dir = tempfile::tempdir().unwrap();
    let psi = dir.path().join("psi.json");
    assert_eq!(code(&run(&["functor", "psi", s(&corpus().join("d4.json")), "-o", s(&psi)])), 0);
    let ids = corpus().join("identities");
    for file in ["graded.txt", "lambda_derived.txt"] {
        let o = run(&["eval-identity", "--id", s(&ids.join(file)), "--on", s(&psi)]);
        assert_eq!(code(&o), 0, "{file}: {}", stdout(&o));
    }
    let o = run(&["eval-identity", "--id", s(&ids.join("graded.txt")), "--on", s(&corpus().join("lambda.json"))]);
    assert_eq!(code(&o), 1);
}

#[test]
fn reports_are_deterministic() {
    let d4 = corpus().join("d4.json");
    let a = run(&["--json", "decompose", s(&d4)]);
    let b = run(&["--json", "decompose", s(&d4)]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn golden_corpus_regenerates() {
    let dir = tempfile::tempdir().unwrap();
    let out = |n: &str| dir.path().join(n);
    let jobs: Vec<(&str, Vec<String>)> = vec![
        ("d4.json", vec!["construct".into(), "d4".into()]),
        ("lambda.json", vec!["construct".into(), "lambda".into()]),
        ("gamma.json", vec!["construct".into(), "gamma".into()]),
        ("osp.json", vec!["construct".into(), "osp".into()]),
        ("t7.json", vec!["construct".into(), "t7".into()]),
        ("t_sl2.json", vec!["construct".into(), "tL".into(), "--base".into(), "sl2".into()]),
        ("m7.json", vec!["functor".into(), "F".into(), s(&out("d4.json")).into()]),
    ];
    for (name, mut args) in jobs {
        args.extend(["-o".into(), s(&out(name)).into()]);
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(code(&run(&argv)), 0, "{name}");
        let fresh = std::fs::read_to_string(out(name)).unwrap();
        let golden = std::fs::read_to_string(corpus().join(name)).unwrap();
        assert!(fresh == golden, "{name} differs from the golden corpus");
    }
    let ld = out("lambda_derived.txt");
    let o = run(&[
        "derive-identities",
        "--axioms",
        s(&corpus().join("identities/lie.txt")),
        "--lambda",
        s(&out("lambda.json")),
        "-o",
        s(&ld),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        std::fs::read_to_string(ld).unwrap(),
        std::fs::read_to_string(corpus().join("identities/lambda_derived.txt")).unwrap()
    );
}
