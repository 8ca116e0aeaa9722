use macdonald_cli::{App, EvalRecord, SuiteReport};
use macdonald_core::combin::IntVector;
use macdonald_core::exactalg::{FieldElem, XPolynomial};
use macdonald_core::families::{Families, FamilyKind, FamilyTag, MemberRecord, XRational};
use macdonald_core::identities::report::Case;
use macdonald_core::identities::{IdentityReport, Registry, Status};

struct Run {
    code: u8,
    out: String,
    err: String,
}

fn run_app(app: &App, args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("macdonald").chain(args.iter().copied());
    let code = app.run(argv, &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn run(args: &[&str]) -> Run {
    run_app(&App::new(Registry::standard()), args)
}

#[test]
fn compute_prints_canonical_text() {
    let r = run(&["compute", "--family", "G", "--index", "0,1"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out, "-1/t + x2\n");
    let r = run(&["compute", "--family", "E", "--index", "0,0,1", "--n", "3"]);
    assert_eq!(r.out, "x3\n");
}

#[test]
fn eval_examples() {
    let r = run(&["eval", "--family", "K", "--index", "0,0", "--point", "atau"]);
    assert_eq!((r.code, r.out.as_str()), (0, "1\n"));
    let r = run(&["eval", "--family", "K", "--index", "-1,2", "--point", "atau"]);
    assert_eq!(r.out, "1\n");
    let r = run(&["eval", "--family", "G", "--index", "0,1", "--point", "bar:1,0"]);
    assert_eq!(r.out, "0\n");
    let r = run(&["eval", "--family", "G", "--index", "1", "--point", "tilde:0", "--scale", "a"]);
    assert_eq!(r.out, "-1 + a\n");
    let r = run(&["eval", "--family", "K", "--index", "1,0", "--point", "barinv:0,1", "--format", "json"]);
    let rec: EvalRecord = serde_json::from_str(&r.out).unwrap();
    assert_eq!(rec.index, vec![1, 0]);
    assert_eq!(rec.point, "barinv:0,1");
}

#[test]
fn compute_json_round_trips() {
    let fam = Families::new();
    for (family, index) in [("G", "2,0,1"), ("Kcirc", "1,1"), ("Kprime", "0,2"), ("K", "-1,0"), ("Kbar", "-1,1")] {
        let r = run(&["compute", "--family", family, "--index", index, "--format", "json"]);
        assert_eq!(r.code, 0, "{}", r.err);
        let rec: MemberRecord = serde_json::from_str(&r.out).unwrap();
        let tag: FamilyTag = family.parse().unwrap();
        let v: IntVector = index.parse().unwrap();
        assert!(rec.represents(&fam.member(tag, &v).unwrap()).unwrap(), "{family} {index}");
        assert_eq!(serde_json::to_string_pretty(&rec).unwrap() + "\n", r.out);
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "okounkov", "--n", "2", "--max-weight", "3", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.out, b.out);
    let report: IdentityReport = serde_json::from_str(&a.out).unwrap();
    assert_eq!(report.status, Status::Pass);
    assert_eq!(report.elapsed_ms, None);
}

#[test]
fn verify_example() {
    let r = run(&["verify", "duality", "--n", "2", "--max-weight", "3", "--format", "json"]);
    assert_eq!(r.code, 0);
    let report: IdentityReport = serde_json::from_str(&r.out).unwrap();
    assert_eq!(report.identity, "duality");
    assert_eq!(report.params.shards.len(), 1);
    let r = run(&["verify", "transfer", "--n", "1", "--timings"]);
    assert!(r.out.starts_with("PASS transfer ("), "{}", r.out);
    assert!(r.out.contains(" ms)"));
}

#[test]
fn suite_runs_selected_identities() {
    let r = run(&["suite", "--n", "2", "--max-weight", "2", "--format", "json", "eval-relations", "okounkov"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let s: SuiteReport = serde_json::from_str(&r.out).unwrap();
    assert_eq!(s.status, Status::Pass);
    assert_eq!(s.reports.len(), 2);
    let r = run(&["suite", "--all", "--n", "2", "--max-weight", "2"]);
    assert_eq!(r.code, 0);
    assert!(r.out.ends_with("13/13 identities passed\n"));
}

fn false_registry() -> Registry {
    let mut reg = Registry::standard();
    reg.register("one-is-two", "1 = 2", |_, s| {
        let mut c = Case::new(&[("n", &IntVector::zeros(s.n))]);
        c.check("1 = 2", &FieldElem::one(), &FieldElem::from_int(2));
        (1, c.into_witnesses())
    });
    reg
}

#[test]
fn false_identity_exits_one() {
    let app = App::new(false_registry());
    let r = run_app(&app, &["verify", "one-is-two"]);
    assert_eq!(r.code, 1);
    assert!(r.out.starts_with("FAIL one-is-two (3 cases)"));
    assert!(r.out.contains("lhs: 1"));
    let r = run_app(&app, &["suite", "--all", "--n", "1", "--max-weight", "1"]);
    assert_eq!(r.code, 1);
    assert!(r.out.ends_with("13/14 identities passed\n"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["compute", "--family", "X", "--index", "1"][..],
        &["compute", "--family", "G", "--index", "1,,0"],
        &["compute", "--family", "G", "--index", "1,0", "--n", "3"],
        &["compute", "--family", "O", "--index", "-1,0"],
        &["compute", "--family", "Kplus", "--index", "0,1"],
        &["compute", "--family", "Ocirc", "--index", "1"],
        &["eval", "--family", "K", "--index", "1,0", "--point", "nowhere"],
        &["eval", "--family", "K", "--index", "1,0", "--point", "bar:1"],
        &["verify", "no-such-identity"],
        &["suite"],
        &["suite", "duality", "nope"],
        &["verify", "duality", "--min-entry", "3", "--max-entry", "1"],
        &["frobnicate"],
        &[],
    ] {
        let r = run(args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.out);
        assert!(!r.err.is_empty(), "{args:?}");
        assert!(r.out.is_empty(), "{args:?}");
    }
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let r = run(&["compute", "--family", "G", "--index", "0,1", "--output", path.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert!(r.out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "-1/t + x2\n");
}

#[test]
fn disk_cache_persists_polynomials() {
    let dir = tempfile::tempdir().unwrap();
    let mut app = App::new(Registry::standard());
    app.cache_dir = Some(dir.path().to_path_buf());
    let first = run_app(&app, &["compute", "--family", "K", "--index", "1,2"]);
    let file = dir.path().join("K_1_2.json");
    assert!(file.exists());
    let rec: MemberRecord = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(rec.family, "K");
    // Rational members stay in memory only.
    run_app(&app, &["compute", "--family", "K", "--index", "-1,0"]);
    assert!(!dir.path().join("K_-1_0.json").exists());

    let second = run_app(&app, &["compute", "--family", "K", "--index", "1,2"]);
    assert_eq!(first.out, second.out);
    assert!(second.err.is_empty());

    // A cached record is what gets served.
    let tag = FamilyTag::plain(FamilyKind::G);
    let planted = XRational::from_poly(XPolynomial::parse("x1 + 7", 1).unwrap());
    let bogus = MemberRecord::new(tag, &IntVector::new(vec![5]), &planted);
    std::fs::write(dir.path().join("G_5.json"), serde_json::to_string(&bogus).unwrap()).unwrap();
    let r = run_app(&app, &["compute", "--family", "G", "--index", "5"]);
    assert_eq!(r.out, "7 + x1\n");

    std::fs::write(dir.path().join("broken.json"), "{").unwrap();
    let r = run_app(&app, &["compute", "--family", "G", "--index", "1"]);
    assert_eq!(r.code, 0);
    assert!(r.err.contains("skipping cache file"));
}

#[test]
fn binary_honors_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_macdonald");
    let out = std::process::Command::new(bin)
        .args(["eval", "--family", "K", "--index", "0,0", "--point", "atau"])
        .env_remove("MACDONALD_CACHE_DIR")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1\n");
    let out = std::process::Command::new(bin).args(["verify", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
