use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subfield")).args(args).output().expect("spawn subfield")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn mindist_first_line() {
    let text = ok(&["mindist", &path("example1.code"), "--lambda", "2"]);
    assert_eq!(text.lines().next(), Some("d_lambda = 9; minima = {(3,3),(0,6)}"));
    assert!(text.contains("mld = false"));
}

#[test]
fn mindist_cyclic_17() {
    let text = ok(&["--threads", "4", "mindist", &path("gf2_17.code"), "--lambda", "3"]);
    assert_eq!(
        text.lines().next(),
        Some("d_lambda = 11; minima = {(17,0),(8,1),(5,2),(4,3),(3,4),(2,5),(1,6),(0,7)}")
    );
}

#[test]
fn ball_radius_zero() {
    let text = ok(&["ball", "--q", "2", "--m", "2", "--n", "3", "--r", "0", "--lambda", "2"]);
    assert_eq!(text.lines().next(), Some("1"));
    let text = ok(&["ball", "--q", "2", "--m", "2", "--n", "3", "--r", "2", "--lambda", "2"]);
    assert_eq!(text.lines().next(), Some("13"));
}

#[test]
fn macwilliams_of_dual_fixture() {
    let text = ok(&["macwilliams", &path("gf2_17_dual.code")]);
    assert!(text.contains("+ 68 Y0^10 Y1^5 Y2^2 +"));
    assert!(text.contains("total = 262144"));
}

#[test]
fn restrict_mds16() {
    let text = ok(&["restrict", &path("mds16.code")]);
    assert_eq!(text, "dimension = 9\nhamming = 7\n");
}

#[test]
fn weight_of_vector() {
    let text = ok(&["weight", "--p", "2", "--m", "2", "--lambda", "2", "1,1,1,a,a,a"]);
    assert!(text.contains("br = (3,3)"));
    assert!(text.contains("lambda_weight = 9"));
    assert!(text.contains("rank = 2"));
}

#[test]
fn decode_lambda_breaks_tie() {
    let file = path("example2.code");
    let text = ok(&["decode", &file, "--lambda", "2", "0,1,1"]);
    assert!(text.contains("codeword = (1,1,1)"));
    assert!(text.contains("unique = true"));
    let text = ok(&["decode", &file, "--lambda", "1", "0,1,1", "--exhaustive"]);
    assert!(text.contains("ties = 3"));
    assert!(text.contains("unique = false"));
}

#[test]
fn dual_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dual.code");
    let out_s = out.to_string_lossy().into_owned();
    ok(&["dual", &path("gf2_17.code"), "--out", &out_s]);
    let generated = ok(&["enumerator", &out_s]);
    let fixture = ok(&["enumerator", &path("gf2_17_dual.code")]);
    assert_eq!(generated, fixture);
    assert!(generated.contains("total = 65536"));
}

#[test]
fn simulate_requires_seed_and_is_deterministic() {
    let file = path("example2.code");
    let base = ["simulate", &file, "--lambda", "2", "--p-base", "0.05", "--p-roof", "0.02", "--trials", "800"];
    let out = run(&base);
    assert_eq!(out.status.code(), Some(1));
    let mut seeded = base.to_vec();
    seeded.extend(["--seed", "9"]);
    let a = ok(&seeded);
    let mut threaded = vec!["--threads", "3"];
    threaded.extend(seeded.iter().copied());
    assert_eq!(a, ok(&threaded));
    assert!(a.contains("trials = 800"));
}

#[test]
fn bounds_csv_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b.csv");
    let out_s = out.to_string_lossy().into_owned();
    ok(&["bounds", "--q", "2", "--m", "2", "--lambda", "2", "--d", "3", "--n-from", "1", "--n-to", "6", "--out", &out_s]);
    let csv = std::fs::read_to_string(&out).unwrap();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("n,gv,packing,singleton"));
    assert_eq!(lines.count(), 6);
}

#[test]
fn gv_is_seed_deterministic() {
    let args = [
        "gv", "--p", "2", "--m", "2", "--lambda", "2", "--n", "6", "--d", "3", "--eps", "0.42", "--trials", "50", "--seed", "5",
    ];
    assert_eq!(ok(&args), ok(&args));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["mindist", "/no/such/file.code", "--lambda", "2"]).status.code(), Some(1));
    assert_eq!(run(&["weight", "--p", "2", "--m", "2", "--lambda", "2", "1,b"]).status.code(), Some(2));
    assert_eq!(run(&["weight", "--p", "4", "--m", "2", "--lambda", "2", "1"]).status.code(), Some(2));
    assert_eq!(run(&["--cap", "10", "mindist", &path("gf2_17.code"), "--lambda", "2"]).status.code(), Some(3));
}

#[test]
fn malformed_code_file() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.code");
    std::fs::write(&bad, "p=2\nm=2\nmodulus=1,1,1\ncolour=blue\n").unwrap();
    let out = run(&["mindist", &bad.to_string_lossy(), "--lambda", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));
}
