use std::process::{Command, Output};

use bihook::fock::DecompositionMatrix;
use bihook::structure::Verdict;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bihook")).args(args).env_remove("BIHOOK_CACHE_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn structure_json_round_trips() {
    let o = run(&["structure", "--e", "2", "--p", "2", "--k", "2", "--j", "2", "--format", "json"]);
    assert!(o.status.success());
    let v: Verdict = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.specht.to_string(), "4|4");
    let again = serde_json::to_string_pretty(&v).unwrap();
    assert_eq!(again.trim(), stdout(&o).trim());
}

#[test]
fn llt_json_round_trips_and_csv_lists_entries() {
    let o = run(&["llt", "--e", "2", "--n", "4", "--format", "json"]);
    assert!(o.status.success());
    let m: DecompositionMatrix = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(m.check_unitriangular().is_ok());
    let csv = stdout(&run(&["llt", "--e", "2", "--n", "4", "--rows", "bihooks", "--format", "csv"]));
    assert!(csv.starts_with("lambda,mu,entry\n"));
    assert!(csv.contains("2|2,4|-,q\n"));
    assert!(csv.contains("2|2,\"2,1|1\",q\n"));
}

#[test]
fn cache_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_bihook"))
        .args(["llt", "--e", "3", "--n", "3", "--format", "csv"])
        .env("BIHOOK_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
}

#[test]
fn bad_inputs_fail() {
    assert!(!run(&["summands", "--k", "3", "--j", "2", "--p", "4"]).status.success());
    assert!(!run(&["mullineux", "--e", "3", "--shape", "1,2|-"]).status.success());
    assert!(!run(&["structure", "--e", "2", "--k", "1", "--j", "1", "--format", "csv"]).status.success());
    assert!(!run(&["verify", "--suite", "nope"]).status.success());
}

#[test]
fn small_commands() {
    assert_eq!(stdout(&run(&["summands", "--k", "4", "--j", "2", "--p", "2"])), "2\n");
    assert_eq!(stdout(&run(&["summands", "--k", "2", "--j", "2", "--p", "2"])), "1\n");
    assert_eq!(stdout(&run(&["qdim", "--shape", "2|2", "--e", "2"])).trim(), "q^-1 + 4q + q^3");
    assert_eq!(stdout(&run(&["induce", "--e", "4", "--a", "2", "--b", "1", "--shape", "4|4"])).trim(), "6,1|6,1");
    let v = run(&["verify", "--suite", "schur"]);
    assert!(v.status.success());
    assert!(stdout(&v).starts_with("suite schur: ok"));
}
