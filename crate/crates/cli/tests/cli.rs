use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    format!("{}/../core/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crcodes"))
        .args(args)
        .env_remove("CRCODES_SEED")
        .env_remove("CRCODES_BUDGET")
        .env_remove("CRCODES_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("crcodes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn spectrum_golden() {
    let o = run(&["spectrum", "--matrix", &fixture("cr21_4.H")]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "{22^1,10^2,4^12,1^44,-5^14,-8^8}\n");
}

#[test]
fn verify_golden() {
    let o = run(&["verify", "--matrix", &fixture("cr21_4.H"), "--code", &fixture("cr21_4.C")]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("{21,4;2,21}"));
    assert_eq!(lines.next(), Some("quotient: ((1,21,0),(2,16,4),(0,21,1))"));
    assert_eq!(lines.next(), Some("cells: (6,63,12)"));
}

#[test]
fn bundled_fixtures_by_name() {
    let by_name = run(&["verify", "--matrix", "cr21_4", "--code", "cr21_4.C"]);
    let by_path = run(&["verify", "--matrix", &fixture("cr21_4.H"), "--code", &fixture("cr21_4.C")]);
    assert!(by_name.status.success());
    assert_eq!(stdout(&by_name), stdout(&by_path));
    assert_eq!(run(&["spectrum", "--matrix", "no_such_fixture"]).status.code(), Some(1));
}

#[test]
fn empty_code_is_a_usage_error() {
    let empty = temp_file("empty.C", "# q=3 k=4\n");
    let o = run(&["verify", "--matrix", &fixture("cr21_4.H"), "--code", &empty]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bad_invocations_exit_one() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["spectrum"]).status.code(), Some(1));
    assert_eq!(run(&["spectrum", "--matrix", "/nonexistent"]).status.code(), Some(1));
    assert_eq!(run(&["search", "--matrix", &fixture("cr10_8.H"), "--array", "{10;8"]).status.code(), Some(1));
    assert!(run(&["--help"]).status.success());
}

#[test]
fn non_srg_exits_two() {
    let o = run(&["srg", "--matrix", &fixture("cr21_4.H")]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["srg", "--matrix", &fixture("srg81_20.H"), "--complement"]);
    assert_eq!(stdout(&o), "SRG(81,60,45,42)\n");
}

#[test]
fn search_then_verify() {
    let o = run(&["search", "--matrix", &fixture("cr10_8.H"), "--array", "{10;8}", "--exact"]);
    assert!(o.status.success());
    let code = temp_file("found.C", &stdout(&o));
    let v = run(&["verify", "--matrix", &fixture("cr10_8.H"), "--code", &code]);
    assert!(stdout(&v).starts_with("{10;8}\nquotient: ((4,10),(8,6))\n"));
}

#[test]
fn search_exit_codes() {
    // 81·2/22 is not an integer: no code, proven without search
    let o = run(&["search", "--matrix", &fixture("cr21_4.H"), "--array", "{20;2}"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["search", "--matrix", &fixture("golay11.H"), "--array", "{20;7}", "--heuristic", "--budget", "5"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn heuristic_output_is_reproducible() {
    let args = ["search", "--matrix", &fixture("cr28_8_b.H"), "--array", "{28;8}", "--heuristic", "--seed", "9"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let threaded = run(&[&args[..], &["--threads", "2"]].concat());
    assert_eq!(a.stdout, threaded.stdout);
}

#[test]
fn seed_flag_wins_over_environment() {
    let args = ["search", "--matrix", &fixture("cr35_10.H"), "--array", "{25;20}", "--heuristic", "--seed", "4"];
    let flag = run(&args);
    let both = Command::new(env!("CARGO_BIN_EXE_crcodes")).args(args).env("CRCODES_SEED", "77").output().unwrap();
    assert_eq!(flag.stdout, both.stdout);
}

#[test]
fn feasible_lists_srg243_arrays() {
    let o = run(&[
        "feasible",
        "--degree",
        "22",
        "--order",
        "243",
        "--eigenvalues",
        "22,4,-5",
        "--rho-max",
        "1",
        "--eigenvalue",
        "-5",
    ]);
    assert!(o.status.success());
    let arrays: Vec<String> = stdout(&o).lines().map(|l| l.split_whitespace().next().unwrap().to_string()).collect();
    let expected: Vec<String> = (5..=13).rev().map(|c| format!("{{{};{c}}}", 27 - c)).collect();
    assert_eq!(arrays, expected);
}

#[test]
fn feasible_from_matrix_reports_tau() {
    let o = run(&["feasible", "--matrix", &fixture("cr10_8.H"), "--rho-max", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l.starts_with("{10;8}") && l.contains("tau: 6/7")));
}

#[test]
fn split_of_two_cube_code() {
    let code = temp_file("h22.C", "# q=2 k=2\n00\n11\n");
    let o = run(&["--q", "2", "construct", "--op", "split", "--hamming", "--code", &code, "--i", "1", "--verify"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("H(6,2): quotient ((0,6),(2,4))"), "{err}");
    assert!(err.contains("verified (exhaustive, 64 vertices)"), "{err}");
}

#[test]
fn rule_files_chain() {
    let lifted = run(&[
        "construct",
        "--op",
        "lift",
        "--matrix",
        &fixture("cr10_8.H"),
        "--code",
        &temp_file("c.C", &stdout(&run(&["search", "--matrix", &fixture("cr10_8.H"), "--array", "{10;8}"]))),
    ]);
    assert!(lifted.status.success());
    let rule = temp_file("lift.rule", &stdout(&lifted));
    let o = run(&["construct", "--op", "inflate", "--rule", &rule, "--s", "2", "--verify", "--samples", "2000"]);
    assert!(o.status.success());
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("H(14,3): quotient ((8,20),(16,12))  array {20;16}"), "{err}");
    assert!(err.contains("sampled, 2000 vertices"), "{err}");
    let explicit = run(&["construct", "--op", "extend", "--rule", &rule, "--t", "1", "--explicit"]);
    assert_eq!(stdout(&explicit).lines().count(), 1 + 36 * 27 * 3);
}

#[test]
fn classify_small_and_with_search() {
    let o = run(&["--q", "2", "classify", "--k", "2", "--n", "3", "--connected"]);
    assert_eq!(stdout(&o).matches("# class").count(), 1);
    let o = run(&["classify", "--k", "4", "--n", "11", "--connected", "--contains", "{21,4;2,21}"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).matches("# class").count(), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("401 classes enumerated"));
}
