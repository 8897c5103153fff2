use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paraspace"))
        .args(args)
        .current_dir(dir)
        .env_remove("PARASPACE_BUDGET")
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const YES_BF: &str = "bf 2\n[formula]\nv1 & ~v2\n[assignment]\n10\n";
const NO_BF: &str = "bf 2\n[formula]\nv1 & ~v2\n[assignment]\n11\n";

#[test]
fn solve_prints_and_exits_with_the_answer() {
    let d = TempDir::new().unwrap();
    fs::write(d.path().join("yes.txt"), YES_BF).unwrap();
    fs::write(d.path().join("no.txt"), NO_BF).unwrap();
    let y = run(d.path(), &["solve", "bf", "yes.txt"]);
    assert_eq!((code(&y), stdout(&y).trim()), (0, "yes"));
    let n = run(d.path(), &["solve", "bf", "no.txt"]);
    assert_eq!((code(&n), stdout(&n).trim()), (1, "no"));
}

#[test]
fn budget_exhaustion_exits_two() {
    let d = TempDir::new().unwrap();
    let g = run(d.path(), &["gen", "lcs", "--seed", "3", "--size", "6", "--out", "l.txt"]);
    assert_eq!(code(&g), 0);
    let o = run(d.path(), &["solve", "lcs", "l.txt", "--budget", "0"]);
    assert_eq!((code(&o), stdout(&o).trim()), (2, "budget-exceeded"));
    let e = Command::new(env!("CARGO_BIN_EXE_paraspace"))
        .args(["solve", "lcs", "l.txt"])
        .current_dir(d.path())
        .env("PARASPACE_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(code(&e), 2);
}

#[test]
fn usage_errors_exit_three() {
    let d = TempDir::new().unwrap();
    assert_eq!(code(&run(d.path(), &["reduce", "unknown", "x", "y"])), 3);
    assert_eq!(code(&run(d.path(), &["frobnicate"])), 3);
    assert_eq!(code(&run(d.path(), &["solve", "bf", "missing.txt"])), 3);
    assert_eq!(code(&run(d.path(), &["--help"])), 0);
}

#[test]
fn reduce_lists_and_applies() {
    let d = TempDir::new().unwrap();
    let l = stdout(&run(d.path(), &["reduce", "--list"]));
    for name in ["family_to_subset_bf", "tm_space_compress", "seqca_to_lcs", "mfa_to_dag"] {
        assert!(l.contains(name), "{name}");
    }
    assert_eq!(code(&run(d.path(), &["gen", "family-union:bf", "--seed", "4", "--out", "f.txt"])), 0);
    let r = run(d.path(), &["reduce", "family_to_subset_bf+subset_to_weighted_bf", "f.txt", "w.txt"]);
    assert_eq!(code(&r), 0);
    assert!(fs::read_to_string(d.path().join("w.txt")).unwrap().starts_with("weighted-union"));
    let a = code(&run(d.path(), &["solve", "family-union", "f.txt"]));
    let b = code(&run(d.path(), &["solve", "weighted-union", "w.txt"]));
    assert_eq!(a, b);
}

#[test]
fn verify_writes_a_report() {
    let d = TempDir::new().unwrap();
    let o = run(d.path(), &["verify", "--reduction", "seqca_to_lcs", "--cases", "100", "--seed", "7"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("seqca_to_lcs"));
    let report = fs::read_to_string(d.path().join("seqca_to_lcs.seed7.report.jsonl")).unwrap();
    assert_eq!(report.lines().count(), 100);
    assert!(!report.contains("\"disagree\""));
}

#[test]
fn verify_reports_next_to_inputs() {
    let d = TempDir::new().unwrap();
    fs::create_dir(d.path().join("in")).unwrap();
    assert_eq!(code(&run(d.path(), &["gen", "layered-reach", "--seed", "2", "--out", "in/g.txt"])), 0);
    let o = run(d.path(), &["verify", "--reduction", "layeredreach_to_lcs_injective", "--input", "in/g.txt"]);
    assert_eq!(code(&o), 0);
    assert!(d.path().join("in/g.txt.layeredreach_to_lcs_injective.report.jsonl").exists());
}

#[test]
fn gen_is_reproducible() {
    let d = TempDir::new().unwrap();
    let a = stdout(&run(d.path(), &["gen", "tm-run", "--seed", "11"]));
    assert_eq!(a, stdout(&run(d.path(), &["gen", "tm-run", "--seed", "11"])));
    assert_ne!(a, stdout(&run(d.path(), &["gen", "tm-run", "--seed", "12"])));
}

#[test]
fn normalize_rewrites_words() {
    let d = TempDir::new().unwrap();
    fs::write(d.path().join("r.txt"), "rs 2\n[alphabet]\na b c\n[rules]\na b -> c\nc c -> a\n").unwrap();
    let o = run(d.path(), &["normalize", "r.txt", "--word", "a b a b"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "a"), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(code(&run(d.path(), &["normalize", "r.txt"])), 3);
}
