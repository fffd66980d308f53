use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_posflag")).args(args).output().expect("binary runs")
}

fn run_with_threads(args: &[&str], threads: usize) -> Output {
    Command::new(env!("CARGO_BIN_EXE_posflag"))
        .args(args)
        .env("RAYON_NUM_THREADS", threads.to_string())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn example_flag_is_tp_by_both_methods() {
    let o = run(&["test-flag", &fixture("example_flag.txt"), "--method", "both", "--mode", "positive"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("TP / TP / AGREE"));
}

#[test]
fn identity_flag_is_tnn_but_not_tp() {
    let o = run(&["test-flag", &fixture("identity3.txt"), "--mode", "positive", "--quiet"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "not TP / not TP / AGREE");
    let o = run(&["test-flag", &fixture("identity3.txt"), "--mode", "nonnegative", "--method", "wronskian", "--quiet"]);
    assert_eq!(stdout(&o).trim(), "TNN");
}

#[test]
fn bad_matrices_exit_2() {
    let o = run(&["test-flag", &fixture("singular.txt")]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a flag"));
    assert_eq!(code(&run(&["test-flag", &fixture("malformed.txt")])), 2);
    assert_eq!(code(&run(&["test-flag", &fixture("no_such_file.txt")])), 2);
}

#[test]
fn flag_json_report() {
    let o = run(&["--json", "test-flag", &fixture("example_flag.txt")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["agree"], true);
    assert_eq!(v["wronskian"]["levels"][0]["wronskian"], serde_json::json!(["1", "3", "1"]));
}

#[test]
fn wronskian_fixtures() {
    let o = run(&["wronskian", &fixture("partial_flag.txt"), "--k", "2"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("1 + x + 4x^2 + x^3 + x^4; roots in (0,inf): 0"));
    assert!(out.contains("Wr = 2 + 2x + 8x^2 + 2x^3 + 2x^4"));
    let o = run(&["wronskian", &fixture("ones.txt"), "--quiet"]);
    assert!(stdout(&o).starts_with("1 + x + x^2;"));
    let o = run(&["wronskian", &fixture("dependent.txt")]);
    assert_eq!(stdout(&o).trim(), "zero Wronskian (dependent)");
    assert_eq!(code(&run(&["wronskian", &fixture("ones.txt"), "--k", "2"])), 2);
}

#[test]
fn wronskian_root_counts() {
    let o = run(&["--json", "wronskian", &fixture("identity3.txt"), "--k", "1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["roots"]["infinity"], 2);
    assert_eq!(v["roots"]["positive"], 0);
}

#[test]
fn dual_reproduces_the_pairing_complement() {
    let o = run(&["dual", &fixture("chart24.txt")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    // [[1,0],[0,3],[-3d,3b],[c,-a]] with (a,b,c,d) = (1,2,3,4)
    assert!(out.contains("  1 0\n  0 3\n  -12 6\n  3 -1\n"), "{out}");
    assert!(out.contains("(V^perp)^perp = V: true"));
    let o = run(&["dual", "--n", "3"]);
    assert!(stdout(&o).contains("  1 0 0\n  0 1 0\n  0 0 1\n"));
}

#[test]
fn grassmannian_verdict_with_witness() {
    let o = run(&["test-gr", &fixture("partial_flag.txt")]);
    assert_eq!(stdout(&o).lines().next(), Some("Gr(2,4): neither, witness {2,3}"));
}

#[test]
fn actions() {
    let o = run(&["shift", "--t", "-1", "--n", "3", "--quiet"]);
    assert_eq!(code(&o), 0);
    let o = run(&["shift", "--t", "-1", "--n", "3"]);
    assert!(stdout(&o).contains("  1 -1 1\n  0 1 -2\n  0 0 1\n"));
    for args in [vec!["--alpha", "0,-1,1,0"], vec!["--alpha", "2,1,1,1"], vec!["--rev"]] {
        let mut all = vec!["sl2", "--quiet"];
        let f = fixture("chart24.txt");
        all.push(&f);
        all.extend(args);
        let o = run(&all);
        assert_eq!(code(&o), 0);
        assert!(stdout(&o).contains("equivariant: true"));
    }
    assert_eq!(code(&run(&["sl2", &fixture("chart24.txt"), "--alpha", "1,1,1,1"])), 2);
}

#[test]
fn conjecture_examples() {
    let o = run(&["check-conjecture", r#"{"k":2,"n":4,"roots":["-1","-2","-3","-4"]}"#, "--which", "positivity"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("2/2 solutions, real: true, TP: true, status Verified"));
    let o = run(&["check-conjecture", r#"{"k":1,"n":5,"roots":["-1","-1","-2","-3"]}"#]);
    assert_eq!(code(&o), 0);
    let o = run(&["check-conjecture", r#"{"k":2,"n":4,"roots":["1","-2","-3","-4"]}"#, "--which", "positivity"]);
    assert_eq!(code(&o), 2);
    let o = run(&["check-conjecture", &fixture("secant24.json"), "--which", "positivity"]);
    assert_eq!(code(&o), 2);
    assert_eq!(code(&run(&["check-conjecture", "{not json"])), 2);
}

#[test]
fn secant_instance_and_json_output() {
    let dir = std::env::temp_dir().join(format!("posflag-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("report.json");
    let o = run(&["check-conjecture", &fixture("secant24.json"), "--output", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["kind"], "secant");
    assert_eq!(v["found"], 2);
    assert_eq!(v["status"], "Verified");
    let o = run(&["solve-secant", &fixture("secant24.json")]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).matches(": real, TP,").count(), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn solve_wronski_counts() {
    let o = run(&["solve-wronski", "--k", "2", "--n", "5", "--roots", "-1,-2,-3,-4,-5,-6"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("5/5 solutions"));
    assert_eq!(code(&run(&["solve-wronski", "--k", "2", "--n", "4", "--roots", "-1,-2"])), 2);
}

#[test]
fn reports_are_byte_identical_across_runs_and_threads() {
    let args = ["--json", "--seed", "7", "check-conjecture", r#"{"k":2,"n":5,"roots":["-1","-2","-3","-4","-5","-6"]}"#];
    let a = run_with_threads(&args, 1);
    let b = run_with_threads(&args, 1);
    let c = run_with_threads(&args, 4);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn selftest_passes() {
    let o = run(&["selftest"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}
