use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use triality_core::centres::{centre_correspondence, lie_centre, t_centre, theorem4_check};
use triality_core::constructions::{
    b2, build_d4, contract, gamma, gamma_printed, lambda, make_tab, make_tl, osp, osp_printed, sl2, t7seed,
    CompatiblePair, GradeSet, GradedAlgebra,
};
use triality_core::exactlin::parse_rational;
use triality_core::functors::{
    functor_f, functor_g, malcev_radical, phi, phi0, psi, psi0, roundtrip_check, MalcevAlgebra, TrialityAlgebra,
};
use triality_core::identity_lab::{
    check_identities, derive_variety, eval_identity, format_identity_file, parse_identity_file, Poly,
};
use triality_core::io::AlgebraFile;
use triality_core::{Error, QAlgebra, QSubspace, Rational, Report};

#[derive(Parser)]
#[command(name = "triality", version, about = "Lie algebras with triality, Malcev algebras and graded identities")]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a named algebra and write it to a file.
    Construct(ConstructArgs),
    /// Check structural identities of an algebra file (default: --lie).
    Verify {
        file: PathBuf,
        #[arg(long)]
        lie: bool,
        #[arg(long)]
        malcev: bool,
        #[arg(long)]
        triality: bool,
        #[arg(long)]
        graded: bool,
        /// Simplicity certificate.
        #[arg(long)]
        simple: bool,
    },
    /// S3-isotypic decomposition of an algebra with action.
    Decompose { file: PathBuf },
    /// Apply a functor and write the result.
    Functor {
        which: FunctorKind,
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Lie centre of a Malcev algebra, or T-centre of an algebra with triality.
    Centre { which: CentreKind, file: PathBuf },
    /// Build the isomorphism G(F(L)) -> L, or report why there is none.
    Roundtrip { file: PathBuf },
    /// Solvable radical of a Lie algebra, or Malcev radical of a Malcev algebra.
    Radical { file: PathBuf },
    /// Derive the graded identities induced by a set of axioms through a
    /// graded companion algebra.
    DeriveIdentities {
        #[arg(long)]
        axioms: PathBuf,
        #[arg(long)]
        lambda: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Evaluate identities on a graded algebra.
    EvalIdentity {
        #[arg(long)]
        id: PathBuf,
        #[arg(long)]
        on: PathBuf,
    },
}

#[derive(Args)]
struct ConstructArgs {
    which: Builtin,
    /// Base Lie algebra for tL and tAB: sl2, b2, abelianN, sums like sl2+b2, or a JSON file.
    #[arg(long, default_value = "sl2")]
    base: String,
    /// Subalgebra A for tAB, vectors separated by ';', coordinates by ','.
    #[arg(long)]
    a: Option<String>,
    /// Subalgebra B for tAB, same syntax as --a.
    #[arg(long)]
    b: Option<String>,
    /// Use the literal printed table (gamma, osp).
    #[arg(long)]
    printed: bool,
    /// For t7, write the 3-dimensional seed instead of its contraction with gamma.
    #[arg(long)]
    seed: bool,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Builtin {
    D4,
    Lambda,
    Gamma,
    Osp,
    T7,
    #[value(name = "tL")]
    TL,
    #[value(name = "tAB")]
    TAB,
}

#[derive(Clone, Copy, ValueEnum)]
enum FunctorKind {
    Psi,
    Psi0,
    Phi,
    Phi0,
    #[value(name = "F")]
    F,
    #[value(name = "G")]
    G,
}

#[derive(Clone, Copy, ValueEnum)]
enum CentreKind {
    Lie,
    T,
    Correspondence,
    Theorem4,
}

type Res<T> = std::result::Result<T, Error>;

struct Out {
    json: bool,
}

impl Out {
    fn report(&self, r: &Report) {
        if self.json {
            println!("{}", r.to_json());
        } else {
            print!("{r}");
        }
    }
}

fn load(path: &Path) -> Res<AlgebraFile> {
    AlgebraFile::load(path)
}

fn stem(path: &Path) -> String {
    path.file_stem().map_or("algebra".into(), |s| s.to_string_lossy().into_owned())
}

fn triality_of(f: &AlgebraFile) -> Res<TrialityAlgebra<Rational>> {
    let act = f
        .action()?
        .ok_or_else(|| Error::Format(format!("{}: no sigma/rho action in file", f.name)))?;
    TrialityAlgebra::new(f.algebra()?, act)
}

fn graded_of(f: &AlgebraFile) -> Res<GradedAlgebra<Rational>> {
    f.graded()?
        .ok_or_else(|| Error::Format(format!("{}: no grading in file", f.name)))
}

fn base_algebra(name: &str) -> Res<QAlgebra> {
    if Path::new(name).is_file() {
        return load(Path::new(name))?.algebra();
    }
    let mut acc: Option<QAlgebra> = None;
    for part in name.split('+') {
        let a = match part.trim() {
            "sl2" => sl2(),
            "b2" => b2(),
            p if p.starts_with("abelian") => {
                let n: usize = p["abelian".len()..]
                    .parse()
                    .map_err(|_| Error::Format(format!("bad base '{p}'")))?;
                QAlgebra::abelian(n)
            }
            p => return Err(Error::Format(format!("unknown base algebra '{p}'"))),
        };
        acc = Some(match acc {
            None => a,
            Some(prev) => prev.direct_sum(&a),
        });
    }
    acc.ok_or_else(|| Error::Format("empty base".into()))
}

fn subspace_arg(text: &str, n: usize) -> Res<QSubspace> {
    let mut vecs = Vec::new();
    for v in text.split(';').map(str::trim).filter(|v| !v.is_empty()) {
        let coords = v
            .split(',')
            .map(|s| parse_rational(s).ok_or_else(|| Error::Format(format!("bad scalar '{s}'"))))
            .collect::<Res<Vec<_>>>()?;
        if coords.len() != n {
            return Err(Error::Format(format!("vector '{v}' needs {n} coordinates")));
        }
        vecs.push(coords);
    }
    Ok(QSubspace::span(n, vecs))
}

fn construct(args: &ConstructArgs) -> Res<AlgebraFile> {
    let name = stem(&args.output);
    Ok(match args.which {
        Builtin::D4 => {
            let b = build_d4::<Rational>();
            for (k, v) in &b.report.quantities {
                eprintln!("{k}: {v}");
            }
            AlgebraFile::from_algebra(&name, &b.alg).with_action(&b.act)
        }
        Builtin::Lambda => {
            let (g, act) = lambda::<Rational>();
            AlgebraFile::from_graded(&name, &g).with_action(&act)
        }
        Builtin::Gamma => AlgebraFile::from_graded(&name, &if args.printed { gamma_printed() } else { gamma() }),
        Builtin::Osp => AlgebraFile::from_graded(&name, &if args.printed { osp_printed() } else { osp() }),
        Builtin::T7 => {
            let seed = t7seed::<Rational>();
            if args.seed {
                AlgebraFile::from_graded(&name, &seed)
            } else {
                let (alg, _) = contract(&seed, &gamma())?;
                AlgebraFile::from_algebra(&name, &alg)
            }
        }
        Builtin::TL => {
            let (alg, act) = make_tl(&base_algebra(&args.base)?)?;
            AlgebraFile::from_algebra(&name, &alg).with_action(&act)
        }
        Builtin::TAB => {
            let l = base_algebra(&args.base)?;
            let n = l.dim();
            let a = subspace_arg(args.a.as_deref().unwrap_or(""), n)?;
            let b = subspace_arg(args.b.as_deref().unwrap_or(""), n)?;
            let (alg, act, _) = make_tab(&l, &CompatiblePair::new(a, b))?;
            AlgebraFile::from_algebra(&name, &alg).with_action(&act)
        }
    })
}

fn verify(file: &Path, flags: [bool; 5], out: &Out) -> Res<bool> {
    let f = load(file)?;
    let alg = f.algebra()?;
    let [mut lie, malcev, triality, graded, simple] = flags;
    if !flags.iter().any(|x| *x) {
        lie = true;
    }
    let mut r = Report::new(format!("verify {}", f.name));
    r.quantity("dim", alg.dim());
    if lie {
        r.absorb("", alg.check_anticommutative());
        r.absorb("", alg.check_jacobi());
    }
    if malcev {
        r.absorb("", alg.check_malcev());
    }
    if triality {
        let act = f
            .action()?
            .ok_or_else(|| Error::Format(format!("{}: no sigma/rho action in file", f.name)))?;
        r.absorb("", act.verify(&alg));
        if act.relations_hold() {
            let v = act.is_triality()?;
            let witness = v
                .witness
                .map(|(i, d)| vec![format!("{}: defect {}", alg.label(i), alg.format_vector(&d))])
                .unwrap_or_default();
            r.check_witnesses("triality", witness);
        }
    }
    if graded {
        let g = graded_of(&f)?;
        if g.grade_set != GradeSet::Delta {
            return Err(Error::Format(format!("--graded needs grade set {}, file has {}", GradeSet::Delta, g.grade_set)));
        }
        r.absorb("", g.check_graded_identities());
    }
    if simple {
        r.absorb("", alg.simplicity_certificate());
    }
    out.report(&r);
    Ok(r.passed())
}

fn decompose(file: &Path, out: &Out) -> Res<bool> {
    let f = load(file)?;
    let act = f
        .action()?
        .ok_or_else(|| Error::Format(format!("{}: no sigma/rho action in file", f.name)))?;
    let d = act.decompose()?;
    let mut r = Report::new(format!("S3 decomposition of {}", f.name));
    r.quantity("dim", act.dim());
    r.quantity("fixed", d.fixed.dim());
    r.quantity("sign", d.sign.dim());
    r.quantity("two_dim", d.two_dim.dim());
    r.quantity("H", d.h.dim());
    r.check("triality", act.is_triality()?.holds);
    out.report(&r);
    Ok(r.passed())
}

fn functor(which: FunctorKind, file: &Path, output: &Path) -> Res<bool> {
    let f = load(file)?;
    let name = stem(output);
    let res = match which {
        FunctorKind::Psi => AlgebraFile::from_graded(&name, &psi(&triality_of(&f)?)?),
        FunctorKind::Psi0 => AlgebraFile::from_algebra(&name, &psi0(&graded_of(&f)?)?.alg),
        FunctorKind::Phi => {
            let t = phi(&graded_of(&f)?)?;
            AlgebraFile::from_algebra(&name, &t.alg).with_action(&t.act)
        }
        FunctorKind::Phi0 => AlgebraFile::from_graded(&name, &phi0(&MalcevAlgebra::new(f.algebra()?)?)?.graded),
        FunctorKind::F => AlgebraFile::from_algebra(&name, &functor_f(&triality_of(&f)?)?.alg),
        FunctorKind::G => {
            let t = functor_g(&MalcevAlgebra::new(f.algebra()?)?)?;
            AlgebraFile::from_algebra(&name, &t.alg).with_action(&t.act)
        }
    };
    eprintln!("{}: dim {}", output.display(), res.dim);
    res.save(output)?;
    Ok(true)
}

fn basis_lines(alg: &QAlgebra, s: &QSubspace) -> Vec<String> {
    s.basis().iter().map(|v| alg.format_vector(v)).collect()
}

fn centre(which: CentreKind, file: &Path, out: &Out) -> Res<bool> {
    let f = load(file)?;
    let r = match which {
        CentreKind::Lie => {
            let m = MalcevAlgebra::new(f.algebra()?)?;
            let c = lie_centre(&m)?;
            let mut r = Report::new(format!("Lie centre of {}", f.name));
            r.quantity("dim", c.dim());
            for (i, b) in basis_lines(&m.alg, &c).into_iter().enumerate() {
                r.quantity(format!("basis[{i}]"), b);
            }
            r
        }
        CentreKind::T => {
            let t = triality_of(&f)?;
            let c = t_centre(&t)?;
            let mut r = c.report.clone();
            r.subject = format!("T-centre of {}", f.name);
            for (i, b) in basis_lines(&t.alg, &c.total).into_iter().enumerate() {
                r.quantity(format!("basis[{i}]"), b);
            }
            r
        }
        CentreKind::Correspondence => centre_correspondence(&triality_of(&f)?)?,
        CentreKind::Theorem4 => theorem4_check(&triality_of(&f)?)?,
    };
    out.report(&r);
    Ok(r.passed())
}

fn roundtrip(file: &Path, out: &Out) -> Res<bool> {
    let rt = roundtrip_check(&triality_of(&load(file)?)?)?;
    out.report(&rt.report);
    Ok(rt.isomorphic)
}

fn radical(file: &Path, out: &Out) -> Res<bool> {
    let f = load(file)?;
    let alg = f.algebra()?;
    let mut r = Report::new(format!("radical of {}", f.name));
    let rad = if alg.is_lie() {
        r.quantity("kind", "solvable radical of a Lie algebra");
        alg.solvable_radical_lie()?
    } else {
        r.quantity("kind", "Malcev radical");
        malcev_radical(&MalcevAlgebra::new(alg.clone())?)?
    };
    r.quantity("dim", rad.dim());
    r.check("solvable ideal", alg.is_ideal(&rad) && alg.is_solvable_subspace(&rad));
    for (i, b) in basis_lines(&alg, &rad).into_iter().enumerate() {
        r.quantity(format!("basis[{i}]"), b);
    }
    out.report(&r);
    Ok(r.passed())
}

fn read_text(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

fn derive_identities(axioms: &Path, lam: &Path, output: &Path) -> Res<bool> {
    let lam = graded_of(&load(lam)?)?;
    let fs = parse_identity_file(&read_text(axioms)?, lam.grade_set)?;
    let derived = derive_variety(&fs, &lam);
    eprintln!("{} identities", derived.len());
    std::fs::write(output, format_identity_file(&derived)).map_err(|e| Error::Format(format!("{}: {e}", output.display())))?;
    Ok(true)
}

fn eval_identities(id: &Path, on: &Path, out: &Out) -> Res<bool> {
    let m = graded_of(&load(on)?)?;
    let fs: Vec<Poly> = parse_identity_file(&read_text(id)?, m.grade_set)?
        .iter()
        .map(|e| Poly::from_delta(e, m.grade_set))
        .collect();
    if fs.len() == 1 {
        let r = eval_identity(&fs[0], &m);
        out.report(&r);
        return Ok(r.passed());
    }
    let r = check_identities(&fs, &m);
    out.report(&r);
    Ok(r.passed())
}

fn run(cli: &Cli) -> Res<bool> {
    let out = Out { json: cli.json };
    match &cli.cmd {
        Cmd::Construct(args) => {
            let f = construct(args)?;
            eprintln!("{}: dim {}", args.output.display(), f.dim);
            f.save(&args.output)?;
            Ok(true)
        }
        Cmd::Verify {
            file,
            lie,
            malcev,
            triality,
            graded,
            simple,
        } => verify(file, [*lie, *malcev, *triality, *graded, *simple], &out),
        Cmd::Decompose { file } => decompose(file, &out),
        Cmd::Functor { which, file, output } => functor(*which, file, output),
        Cmd::Centre { which, file } => centre(*which, file, &out),
        Cmd::Roundtrip { file } => roundtrip(file, &out),
        Cmd::Radical { file } => radical(file, &out),
        Cmd::DeriveIdentities { axioms, lambda, output } => derive_identities(axioms, lambda, output),
        Cmd::EvalIdentity { id, on } => eval_identities(id, on, &out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
