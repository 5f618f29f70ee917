use std::io::Write;
use std::process::{Command, Output, Stdio};

fn cliffroot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffroot"))
        .args(args)
        .env_remove("CLIFFROOT_FORMAT")
        .output()
        .expect("spawn cliffroot")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_exit_codes() {
    assert_eq!(cliffroot(&["verify", "--sig", "3,0", "--mv", "e123"]).status.code(), Some(0));
    assert_eq!(cliffroot(&["verify", "--sig", "2,1", "--mv", "e123"]).status.code(), Some(1));
    assert_eq!(cliffroot(&["verify", "--sig", "3,0", "--mv", "e14"]).status.code(), Some(2));
    assert_eq!(cliffroot(&["verify", "--sig", "9,0", "--mv", "e1"]).status.code(), Some(2));
    assert_eq!(cliffroot(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_json_reports_grades() {
    let o = cliffroot(&["--format", "json", "verify", "--sig", "0,2", "--mv", "-e12"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["is_root"], true);
    assert_eq!(v["per_grade"].as_array().unwrap().len(), 3);
}

#[test]
fn derive_in_every_format() {
    let text = stdout(&cliffroot(&["derive", "--sig", "2,0"]));
    assert!(text.contains("1: alpha^2 + b1^2 + b2^2 - beta^2 = -1"), "{text}");
    let json = cliffroot(&["--format", "json", "derive", "--sig", "1,1"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["forms"].as_array().unwrap().len(), 4);
    assert!(cliffroot(&["--format", "csv", "derive", "--sig", "1,0"]).status.success());
}

#[test]
fn sample_is_deterministic() {
    let args = ["--format", "json", "sample", "--sig", "1,3", "--case", "N4_A0_APN0", "--count", "5", "--seed", "9"];
    let a = cliffroot(&args);
    let b = cliffroot(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let other = cliffroot(&["--format", "json", "sample", "--sig", "1,3", "--case", "N4_A0_APN0", "--count", "5", "--seed", "10"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn sample_rejects_inapplicable_case() {
    let o = cliffroot(&["sample", "--sig", "2,1", "--case", "N3_PSEUDO"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn sample_pipes_into_classify() {
    let sampled = cliffroot(&["--format", "json", "sample", "--sig", "2,2", "--case", "N4_Z_BPN0_BN0_BEN0", "--count", "4"]);
    assert!(sampled.status.success());
    let mut child = Command::new(env!("CARGO_BIN_EXE_cliffroot"))
        .args(["--format", "json", "classify"])
        .env_remove("CLIFFROOT_FORMAT")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&sampled.stdout).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let records = v.as_array().unwrap();
    assert_eq!(records.len(), 4);
    assert!(records.iter().all(|r| r["case"] == "N4_Z_BPN0_BN0_BEN0"));
}

#[test]
fn classify_non_root_exits_one() {
    let o = cliffroot(&["classify", "--sig", "3,0", "--mv", "e1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn format_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_cliffroot"))
        .args(["verify", "--sig", "0,1", "--mv", "e1"])
        .env("CLIFFROOT_FORMAT", "csv")
        .output()
        .unwrap();
    assert!(stdout(&o).starts_with("is_root,residual"));
    let flag_wins = Command::new(env!("CARGO_BIN_EXE_cliffroot"))
        .args(["--format", "text", "verify", "--sig", "0,1", "--mv", "e1"])
        .env("CLIFFROOT_FORMAT", "csv")
        .output()
        .unwrap();
    assert!(stdout(&flag_wins).starts_with("root"));
}

#[test]
fn table_csv_has_a_row_per_branch() {
    let o = cliffroot(&["--format", "csv", "table", "--n", "4"]);
    assert!(o.status.success());
    let mut reader = csv::Reader::from_reader(o.stdout.as_slice());
    let rows = reader.records().count();
    assert!(rows >= 35, "{rows} rows");
}

#[test]
fn solve_finds_nothing_in_cl10() {
    let o = cliffroot(&["solve", "--sig", "1,0", "--random", "50", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("converged: 0 of 50"));
}

#[test]
fn solve_finds_roots_in_cl30() {
    let o = cliffroot(&["--format", "json", "solve", "--sig", "3,0", "--random", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["converged"].as_u64().unwrap() > 0);
}

#[test]
fn scan_exit_says_whether_region_is_root_free() {
    let free = cliffroot(&["scan", "--sig", "1,0", "--box=-2,2", "--res", "41"]);
    assert_eq!(free.status.code(), Some(0));
    assert!(stdout(&free).contains("analytic bound"));
    let hit = cliffroot(&["scan", "--sig", "0,1", "--box=-1,1", "--res", "3"]);
    assert_eq!(hit.status.code(), Some(1));
}
