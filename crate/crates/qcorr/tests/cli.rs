//! End-to-end tests of the `qcorr` binary: exit codes, JSON/CSV wire
//! formats, determinism, and the CSV-row → analyze round trip.

use std::process::{Command, Output};

fn qcorr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcorr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_str(stdout_of(out).trim()).expect("stdout is a JSON object")
}

#[test]
fn analyze_werner_half() {
    let out = qcorr(&["analyze", "werner", "--c", "0.5"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    let v = json_of(&out);
    assert!(v["discord"].as_f64().unwrap() > 0.2);
    assert_eq!(v["gap"].as_f64().unwrap(), 0.25);
    assert!((v["concurrence"].as_f64().unwrap() - 0.25).abs() <= 1e-9);
    assert_eq!(v["consistent"], serde_json::Value::Bool(false));
    assert!(v.get("skipped").is_none(), "werner schema has no skipped column");
}

#[test]
fn analyze_classical_mixture() {
    let out = qcorr(&[
        "analyze", "classical", "--a", "0.5", "--b", "0", "--c", "0", "--d", "0.5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert!(v["discord"].as_f64().unwrap() <= 1e-7);
    assert_eq!(v["gap"].as_f64().unwrap(), 0.0);
    assert_eq!(v["mutual_information"].as_f64().unwrap(), 1.0);
    assert_eq!(v["skipped"], serde_json::Value::Bool(false));
}

#[test]
fn analyze_out_of_range_exits_2() {
    let out = qcorr(&["analyze", "werner", "--c", "2.0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("outside [-1/3, 1]"));
    assert!(stdout_of(&out).is_empty());
}

#[test]
fn usage_errors_exit_2() {
    let out = qcorr(&["analyze", "werner"]); // missing --c
    assert_eq!(out.status.code(), Some(2));
    let out = qcorr(&["analyze", "werner", "--c", "0.1", "--grid", "64"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_werner_matches_figure_curve() {
    let out = qcorr(&[
        "sweep", "werner", "--c-min", "-0.3333", "--c-max", "1", "--steps", "101",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 102);
    assert_eq!(
        lines[0],
        "c,entropy_total,mutual_information,classical_correlation,discord,concurrence,\
exp_xx,exp_yy,exp_xy,exp_yx,gap,consistent"
    );
    for row in &lines[1..] {
        let fields: Vec<&str> = row.split(',').collect();
        let c: f64 = fields[0].parse().unwrap();
        let discord: f64 = fields[4].parse().unwrap();
        if c.abs() >= 0.05 {
            assert!(discord >= 1e-4, "row {row}");
        }
        if c.abs() <= 1e-3 {
            assert!(discord <= 1e-6, "row {row}");
        }
    }
    let summary = stderr_of(&out);
    assert!(summary.contains("cells=101 skipped=0"), "summary: {summary}");
}

#[test]
fn sweep_is_byte_identical_across_runs() {
    let args = [
        "sweep", "werner", "--c-min", "-0.3333", "--c-max", "1", "--steps", "101",
    ];
    let first = qcorr(&args);
    let second = qcorr(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn sweep_counterexample_compact_ranges() {
    let out = qcorr(&[
        "sweep",
        "counterexample",
        "--alpha",
        "-0.2:0.2:5",
        "--beta",
        "-0.2:0.2:5",
        "--z",
        "0:0.15:4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "alpha,beta,z,entropy_total,mutual_information,classical_correlation,discord,\
concurrence,exp_xx,exp_yy,exp_xy,exp_yx,gap,consistent,skipped"
    );
    let mut max_discord = 0.0f64;
    for row in &lines[1..] {
        let fields: Vec<&str> = row.split(',').collect();
        let alpha: f64 = fields[0].parse().unwrap();
        let beta: f64 = fields[1].parse().unwrap();
        let z: f64 = fields[2].parse().unwrap();
        let discord: f64 = fields[6].parse().unwrap();
        let gap: f64 = fields[12].parse().unwrap();
        assert!(gap.abs() <= 1e-12, "row {row}");
        assert!(discord < 0.3, "row {row}");
        if alpha == beta || z == 0.0 {
            assert!(discord <= 1e-6, "row {row}");
        }
        max_discord = max_discord.max(discord);
        assert_eq!(fields[14], "false");
    }
    assert!(max_discord >= 1e-3, "family should be discordant somewhere");
}

#[test]
fn csv_rows_reproduce_through_analyze() {
    let out = qcorr(&[
        "sweep",
        "counterexample",
        "--alpha",
        "-0.2:0.2:3",
        "--beta",
        "-0.15:0.15:2",
        "--z",
        "0.025:0.125:2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let header: Vec<&str> = text.lines().next().unwrap().split(',').collect();
    for row in text.lines().skip(1) {
        let fields: Vec<&str> = row.split(',').collect();
        let reanalyzed = qcorr(&[
            "analyze",
            "counterexample",
            "--alpha",
            fields[0],
            "--beta",
            fields[1],
            "--z",
            fields[2],
        ]);
        assert_eq!(reanalyzed.status.code(), Some(0));
        let v = json_of(&reanalyzed);
        for (name, csv_value) in header.iter().zip(&fields) {
            match v[*name] {
                serde_json::Value::Bool(b) => assert_eq!(&b.to_string(), csv_value),
                ref jv => {
                    let jv = jv.as_f64().unwrap();
                    let cv: f64 = csv_value.parse().unwrap();
                    assert_eq!(jv, cv, "field {name} of row {row}");
                }
            }
        }
    }
}

#[test]
fn sweep_reports_skipped_cells() {
    // alpha = ±0.3 falls outside alpha² + z² ≤ 1/16 for any z
    let out = qcorr(&[
        "sweep", "counterexample", "--alpha", "-0.3:0.3:7", "--beta", "0", "--z", "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stderr_of(&out).contains("cells=7 skipped=2"),
        "summary: {}",
        stderr_of(&out)
    );
    assert_eq!(stdout_of(&out).lines().count(), 1 + 5);
}

#[test]
fn sweep_counterexample_default_grid() {
    let out = qcorr(&["sweep", "counterexample"]);
    assert_eq!(out.status.code(), Some(0));
    // the default 9×9×7 grid lies entirely inside the PSD region
    assert!(
        stderr_of(&out).contains("cells=567 skipped=0"),
        "summary: {}",
        stderr_of(&out)
    );
    assert_eq!(stdout_of(&out).lines().count(), 1 + 567);
    for row in stdout_of(&out).lines().skip(1) {
        let fields: Vec<&str> = row.split(',').collect();
        let alpha: f64 = fields[0].parse().unwrap();
        let beta: f64 = fields[1].parse().unwrap();
        let discord: f64 = fields[6].parse().unwrap();
        if alpha == beta {
            assert!(discord <= 1e-6, "row {row}");
        }
    }
}

#[test]
fn analyze_xstate_matches_its_schema() {
    let out = qcorr(&[
        "analyze", "xstate", "--a", "0.3", "--b", "0.2", "--c", "0.2", "--d", "0.3",
        "--w", "0.1", "--z", "0.05",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        [
            "a", "b", "c", "d", "w", "z", "entropy_total", "mutual_information",
            "classical_correlation", "discord", "concurrence", "exp_xx", "exp_yy",
            "exp_xy", "exp_yx", "gap", "consistent", "skipped",
        ]
    );
    // <XX> = 2(w+z), <YY> = 2(z-w)
    assert_eq!(v["exp_xx"].as_f64().unwrap(), 0.3);
    assert_eq!(v["exp_yy"].as_f64().unwrap(), -0.1);
}

#[test]
fn sweep_xstate_skips_invalid_cells() {
    // diagonal fixed at (0.5, 0, 0, 0.5); w beyond ±sqrt(a·d) = ±0.5 must skip
    let out = qcorr(&[
        "sweep", "xstate", "--a", "0.5", "--b", "0", "--c", "0", "--d", "0.5",
        "--w", "-0.75:0.75:7", "--z", "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stderr_of(&out).contains("cells=7 skipped=2"),
        "summary: {}",
        stderr_of(&out)
    );
    // the surviving w = ±0.5 rows are the Bell projectors: discord 1, entangled
    for row in stdout_of(&out).lines().skip(1) {
        let fields: Vec<&str> = row.split(',').collect();
        let w: f64 = fields[4].parse().unwrap();
        let discord: f64 = fields[9].parse().unwrap();
        let concurrence: f64 = fields[10].parse().unwrap();
        if w.abs() == 0.5 {
            assert!((discord - 1.0).abs() <= 1e-6, "row {row}");
            assert!((concurrence - 1.0).abs() <= 1e-9, "row {row}");
        }
    }
}

#[test]
fn invalid_epsilon_exits_2() {
    let out = qcorr(&["sweep", "werner", "--c", "0:1:3", "--epsilon", "-1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("epsilon"));
}

#[test]
fn unwritable_output_exits_3() {
    let out = qcorr(&[
        "sweep", "werner", "--c", "0:1:2", "--out", "/nonexistent-dir/w.csv",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("cannot write output"));
}

#[test]
fn grid_override_is_honored() {
    let coarse = qcorr(&["analyze", "werner", "--c", "0.5", "--grid", "8x16"]);
    assert_eq!(coarse.status.code(), Some(0));
    let fine = qcorr(&["analyze", "werner", "--c", "0.5"]);
    let d_coarse = json_of(&coarse)["discord"].as_f64().unwrap();
    let d_fine = json_of(&fine)["discord"].as_f64().unwrap();
    // the Werner objective is flat in the setting, so both land on the optimum
    assert!((d_coarse - d_fine).abs() <= 1e-9);
}

#[test]
fn verify_passes_on_fresh_build() {
    let out = qcorr(&["verify"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    let text: String = stdout_of(&out);
    assert_eq!(text.matches("[PASS]").count(), 7);
    assert!(!text.contains("[FAIL]"));
    assert!(text.trim_end().ends_with("verification passed"));
}

#[test]
fn analyze_writes_to_file() {
    let dir = std::env::temp_dir().join("qcorr-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = qcorr(&[
        "analyze", "counterexample", "--alpha", "0.2", "--beta", "-0.2", "--z", "0.1",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let discord = v["discord"].as_f64().unwrap();
    assert!((1e-3..0.3).contains(&discord), "discord = {discord}");
    assert_eq!(v["consistent"], serde_json::Value::Bool(true));
    std::fs::remove_file(&path).ok();
}
