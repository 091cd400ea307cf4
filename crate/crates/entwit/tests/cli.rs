//! End-to-end checks of the `entwit` binary: CSV contracts, exit codes, and
//! determinism across thread counts.

use std::path::Path;
use std::process::{Command, Output};

fn entwit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_entwit"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn werner_csv_contract() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.csv");
    let run = entwit(&["werner", "--out", out.to_str().unwrap()]);
    assert!(run.status.success(), "stderr: {}", String::from_utf8_lossy(&run.stderr));

    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "p,tw_value,hz1,hz2,negativity,verdict_tw,verdict_hz"
    );
    assert_eq!(lines.count(), 101);

    // Verdicts are recomputable from the emitted columns.
    for line in text.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        let tw: f64 = f[1].parse().unwrap();
        let verdict_tw = f[5] == "1";
        assert_eq!(verdict_tw, tw < -1e-10, "row {line}");
    }
}

#[test]
fn kerr_requires_amplitudes() {
    let run = entwit(&["kerr", "--grid", "t=0:6.3:4"]);
    assert_eq!(run.status.code(), Some(2));
}

#[test]
fn kerr_small_run_emits_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k.csv");
    let run = entwit(&[
        "kerr",
        "--alpha",
        "1.2",
        "--beta",
        "1.2",
        "--grid",
        "t=0:1:3",
        "--theta-points",
        "8",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(run.status.success(), "stderr: {}", String::from_utf8_lossy(&run.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("t,cutoff_a,cutoff_b,discarded_weight,tw_lhs,tw_value"));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn region_csv_is_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let args_for = |path: &Path, threads: &str| {
        vec![
            "region".to_string(),
            "--grid".into(),
            "p=0:1:3".into(),
            "--grid".into(),
            "r=0.2:0.6:2".into(),
            "--cutoff".into(),
            "12".into(),
            "--out".into(),
            path.to_str().unwrap().to_string(),
            "--threads".into(),
            threads.to_string(),
        ]
    };
    let p1 = dir.path().join("r1.csv");
    let p2 = dir.path().join("r2.csv");
    let r1 = Command::new(env!("CARGO_BIN_EXE_entwit"))
        .args(args_for(&p1, "1"))
        .output()
        .unwrap();
    let r2 = Command::new(env!("CARGO_BIN_EXE_entwit"))
        .args(args_for(&p2, "2"))
        .output()
        .unwrap();
    assert!(r1.status.success() && r2.status.success());
    assert_eq!(std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
}

#[test]
fn witness_subcommand_reads_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("spec.conf");
    std::fs::write(
        &cfg,
        "# one-off evaluation\nstate = werner2\np = 0.8\nop_a1 = sigma-\nop_b1 = sigma-\nphase = 0\n",
    )
    .unwrap();
    let run = entwit(&["witness", cfg.to_str().unwrap()]);
    assert!(run.status.success());
    let stdout = String::from_utf8_lossy(&run.stdout);
    // Family value is twice the collapsed pairwise witness (-0.1125).
    assert!(stdout.contains("value"), "stdout: {stdout}");
    assert!(stdout.contains("-2.250000000000e-01"), "stdout: {stdout}");
    assert!(stdout.contains("entangled      = true"));

    let bad = entwit(&["witness", "/nonexistent/path.conf"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn selftest_runs_clean_with_seed() {
    let run = entwit(&["selftest", "--seed", "7"]);
    assert!(run.status.success(), "stderr: {}", String::from_utf8_lossy(&run.stderr));
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert_eq!(stdout.matches("pass").count(), 6, "stdout: {stdout}");
}

#[test]
fn bell_table_covers_both_pairings() {
    let run = entwit(&["bell"]);
    assert!(run.status.success());
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert!(stdout.starts_with("state,op_a,op_b,"));
    assert_eq!(stdout.lines().count(), 5);
    // The lowering pair detects bell2, the mixed pairing detects bell1.
    let rows: Vec<&str> = stdout.lines().collect();
    let find = |state: &str, op_b: &str| -> f64 {
        rows.iter()
            .find(|r| r.starts_with(&format!("{state},sigma-,{op_b}")))
            .unwrap()
            .split(',')
            .nth(3)
            .unwrap()
            .parse()
            .unwrap()
    };
    assert!((find("bell2", "sigma-") + 0.25).abs() < 1e-12);
    assert!((find("bell1", "sigma+") + 0.25).abs() < 1e-12);
    assert!(find("bell1", "sigma-") > 0.0);
}

#[test]
fn truncation_failure_exits_three() {
    // An explicit cutoff far below what the tail tolerance demands.
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("spec.conf");
    std::fs::write(
        &cfg,
        "state = cross-kerr\nalpha = 3\nbeta = 3\nt = 0.3\ncutoff = 4\nop_a1 = a\nop_b1 = a\n",
    )
    .unwrap();
    let run = entwit(&["witness", cfg.to_str().unwrap()]);
    assert_eq!(run.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&run.stderr);
    assert!(stderr.contains("cutoff"), "stderr: {stderr}");
}
