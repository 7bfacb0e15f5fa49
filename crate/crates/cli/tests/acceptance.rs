//! The ten acceptance criteria, one line each.

use std::io::Write;
use std::process::Command;

use knotadj_cli::checks::{all_checks, run_checks, Context, Status};

#[test]
fn acceptance() {
    let cx = Context::default();
    let outcomes = run_checks(&cx, &[]).unwrap();
    assert_eq!(outcomes.len(), 10);
    let mut failed = Vec::new();
    // written to the raw handle so the lines show without --nocapture
    let mut out = std::io::stdout().lock();
    writeln!(out).unwrap();
    for o in &outcomes {
        writeln!(out, "{}", o.summary()).unwrap();
        if o.status != Status::Pass {
            failed.push(o.to_string());
        }
    }
    assert!(failed.is_empty(), "\n{}", failed.join("\n"));
}

#[test]
fn ids_are_unique_and_numbered() {
    let checks = all_checks();
    let mut ids: Vec<_> = checks.iter().map(|c| c.id).collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), 10);
    assert!(checks.iter().map(|c| c.number).eq(1..=10));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_knotadj");
    let dir = std::env::temp_dir().join(format!("knotadj-acc-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (out, manifest) = (dir.join("report.txt"), dir.join("manifest.txt"));
    let st = Command::new(bin)
        .args(["verify-paper", "--only", "fixture-integrity", "--only", "2", "--out"])
        .arg(&out)
        .arg("--manifest")
        .arg(&manifest)
        .output()
        .unwrap();
    assert_eq!(st.status.code(), Some(0), "{}", String::from_utf8_lossy(&st.stderr));
    let report = std::fs::read_to_string(&out).unwrap();
    assert!(report.starts_with("criterion  1 fixture-integrity"));
    assert_eq!(report.matches("PASS").count(), 2);
    let m = std::fs::read_to_string(&manifest).unwrap();
    assert!(m.starts_with("command verify-paper --only fixture-integrity,2\n"));
    assert!(m.contains("outcome exit 0"));

    let st = Command::new(bin).args(["verify-paper", "--only", "nope"]).output().unwrap();
    assert_eq!(st.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
