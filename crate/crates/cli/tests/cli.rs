use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

const P3: &str = "p mmds 3 2\ne 1 2\ne 2 3\n";
const C4: &str = "p mmds 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n";

fn mmds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mmds"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn file(dir: &TempDir, name: &str, text: &str) -> String {
    let p: PathBuf = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn solve_prints_verdicts() {
    let dir = TempDir::new().unwrap();
    let p3 = file(&dir, "p3.gr", P3);
    let c4 = file(&dir, "c4.gr", C4);
    let o = mmds(&["solve", "--algo", "brute", "-k", "1", &p3]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "FEASIBLE\n2\n");
    for algo in ["brute", "twdp", "vcfpt"] {
        let o = mmds(&["solve", "--algo", algo, "-k", "1", &c4]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), "INFEASIBLE\n", "{algo}");
    }
}

#[test]
fn algorithms_and_worker_counts_agree() {
    let dir = TempDir::new().unwrap();
    let g = file(
        &dir,
        "g.gr",
        "p mmds 7 8\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 7\ne 1 7\ne 2 6\n",
    );
    for k in 1..=3 {
        let k = k.to_string();
        let verdicts: Vec<String> = ["brute", "twdp", "vcfpt"]
            .iter()
            .flat_map(|algo| {
                ["1", "4"].map(|jobs| {
                    let o = mmds(&["solve", "--algo", algo, "-k", &k, "--jobs", jobs, &g]);
                    stdout(&o).lines().next().unwrap().to_string()
                })
            })
            .collect();
        assert!(verdicts.iter().all(|v| v == &verdicts[0]), "{verdicts:?}");
    }
    let a = mmds(&["solve", "--algo", "twdp", "-k", "2", "--jobs", "1", &g]);
    let b = mmds(&["solve", "--algo", "twdp", "-k", "2", "--jobs", "4", &g]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn verify_prints_checker_verdict() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4.gr", C4);
    let s = file(&dir, "s.txt", "1\n3\n");
    let o = mmds(&["verify", "-k", "1", "--solution", &s, &c4]);
    assert_eq!(stdout(&o), "MembershipExceeded 2 2\n");
    let o = mmds(&["verify", "-k", "2", "--solution", &s, &c4]);
    assert_eq!(stdout(&o), "Feasible\n");
}

#[test]
fn minimize_reports_kstar() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4.gr", C4);
    for algo in ["brute", "twdp", "vcfpt"] {
        let o = mmds(&["minimize", "--algo", algo, &c4]);
        assert_eq!(stdout(&o).lines().next(), Some("k* 2"), "{algo}");
    }
}

#[test]
fn twdp_uses_supplied_decomposition() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4.gr", C4);
    let good = file(&dir, "good.td", "s td 2 3 4\nb 1 1 2 3\nb 2 1 3 4\n1 2\n");
    let bad = file(&dir, "bad.td", "s td 2 2 4\nb 1 1 2\nb 2 3 4\n1 2\n");
    let o = mmds(&["solve", "--algo", "twdp", "-k", "2", "--td", &good, &c4]);
    assert_eq!(stdout(&o).lines().next(), Some("FEASIBLE"));
    let o = mmds(&["solve", "--algo", "twdp", "-k", "2", "--td", &bad, &c4]);
    assert_eq!(o.status.code(), Some(2));
    let o = mmds(&["check-td", &c4, &good]);
    assert_eq!(stdout(&o), "VALID width 2\n");
    let o = mmds(&["check-td", &c4, &bad]);
    assert!(stdout(&o).starts_with("INVALID"));
}

#[test]
fn interval_greedy_reports_membership() {
    let dir = TempDir::new().unwrap();
    let iv = file(&dir, "iv.txt", "i 10 0 2\ni 20 1 5\ni 30 4 6\ni 40 8 9\n");
    let o = mmds(&["interval-greedy", &iv]);
    let text = stdout(&o);
    let last = text.lines().last().unwrap();
    let m: usize = last
        .strip_prefix("max membership ")
        .unwrap()
        .parse()
        .unwrap();
    assert!((1..=3).contains(&m));
    assert!(text.lines().any(|l| l == "40"));
}

#[test]
fn generate_writes_artifacts() {
    let dir = TempDir::new().unwrap();
    let colored = file(
        &dir,
        "k2.gr",
        "p mmds 4 2\ne 1 3\ne 2 4\nn 1 1\nn 2 1\nn 3 2\nn 4 2\n",
    );
    let out = dir.path().join("h.gr");
    let td = dir.path().join("h.td");
    let wit = dir.path().join("h.sol");
    let labels = dir.path().join("h.labels");
    let o = mmds(&[
        "generate",
        "mcc",
        &colored,
        "--out",
        out.to_str().unwrap(),
        "--emit-td",
        td.to_str().unwrap(),
        "--emit-witness",
        wit.to_str().unwrap(),
        "--labels",
        labels.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let o = mmds(&[
        "check-td",
        "--path",
        out.to_str().unwrap(),
        td.to_str().unwrap(),
    ]);
    assert!(stdout(&o).starts_with("VALID width"));
    let o = mmds(&[
        "verify",
        "-k",
        "3",
        "--solution",
        wit.to_str().unwrap(),
        out.to_str().unwrap(),
    ]);
    assert_eq!(stdout(&o), "Feasible\n");
    let text = fs::read_to_string(&labels).unwrap();
    assert!(text.lines().all(|l| l.split('\t').count() == 2));
}

#[test]
fn generate_then_solve_round_trip() {
    let dir = TempDir::new().unwrap();
    let cnf = file(&dir, "f.cnf", "p cnf 3 1\n1 2 3 0\n");
    let o = mmds(&["generate", "pp1in3sat", &cnf]);
    let g = file(&dir, "g.gr", &stdout(&o));
    let o = mmds(&["solve", "--algo", "brute", "-k", "1", &g]);
    assert_eq!(stdout(&o).lines().next(), Some("FEASIBLE"));
}

#[test]
fn errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4.gr", C4);
    let broken = file(&dir, "broken.gr", "p mmds 2 1\ne 1 5\n");
    for args in [
        vec!["solve", "--algo", "ilp", "-k", "1", c4.as_str()],
        vec!["solve", "-k", "1", "missing.gr"],
        vec!["solve", "-k", "1", broken.as_str()],
        vec!["solve", "--bogus"],
        vec!["generate", "sat3", c4.as_str()],
    ] {
        let o = mmds(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&o.stderr);
        assert!(!err.trim().is_empty());
    }
}

#[test]
fn bench_runs_selected_criteria() {
    let o = mmds(&["bench", "--only", "4,5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains("PASS")).count(), 2);
}
