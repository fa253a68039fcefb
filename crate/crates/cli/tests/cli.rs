use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn c4free(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_c4free"))
        .args(args)
        .env("C4FREE_THREADS", "1")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn enumerate_counts() {
    let out = c4free(&["enumerate", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["vertices"], 64);
    assert_eq!(v["edges"], 192);
    assert_eq!(v["cycles"], 240);

    let out = c4free(&["enumerate", "--n", "2", "--list"]);
    let v = json(&out);
    assert_eq!(
        v["cycle_list"][0]["vertices"],
        serde_json::json!([0, 1, 2, 3])
    );
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let full = dir.path().join("full.jsonl");
    fs::write(&full, "[0, 1]\n[0, 2]\n[1, 3]\n[2, 3]\n").unwrap();
    let out = c4free(&["verify", "--n", "2", p(&full)]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["first_violation"], 0);
    assert_eq!(v["violations"], 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("1 cycles checked, 1 violations"));

    let path = dir.path().join("path.jsonl");
    fs::write(&path, "[0, 1]\n[0, 2]\n[1, 3]\n").unwrap();
    let out = c4free(&["verify", "--n", "2", p(&path)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["free"], true);

    let bad = dir.path().join("bad.jsonl");
    fs::write(&bad, "[0, 3]\n").unwrap();
    assert_eq!(
        c4free(&["verify", "--n", "2", p(&bad)]).status.code(),
        Some(3)
    );

    let missing = dir.path().join("missing.jsonl");
    assert_eq!(
        c4free(&["verify", "--n", "2", p(&missing)]).status.code(),
        Some(3)
    );
}

#[test]
fn usage_errors() {
    assert_eq!(c4free(&[]).status.code(), Some(2));
    assert_eq!(c4free(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(c4free(&["enumerate", "--n", "1"]).status.code(), Some(2));
    assert_eq!(c4free(&["enumerate", "--n", "17"]).status.code(), Some(2));
    assert_eq!(c4free(&["--help"]).status.code(), Some(0));
}

#[test]
fn ilp_q6() {
    let dir = tempfile::tempdir().unwrap();
    let mps = dir.path().join("q6.mps");
    let out = c4free(&["ilp", "--n", "6", "--out", p(&mps)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["variables"], 192);
    assert_eq!(v["constraints"], 240);
    let text = fs::read_to_string(&mps).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with(" BV ")).count(), 192);
    assert_eq!(text.lines().filter(|l| l.starts_with(" L ")).count(), 240);
    assert!(text.ends_with("ENDATA\n"));
}

#[test]
fn ilp_solution_value_is_compared() {
    let dir = tempfile::tempdir().unwrap();
    let mps = dir.path().join("q4.mps");
    let good = dir.path().join("good.txt");
    let wrong = dir.path().join("wrong.txt");
    fs::write(&good, "24\n").unwrap();
    fs::write(&wrong, "25\n").unwrap();

    let out = c4free(&[
        "ilp",
        "--n",
        "4",
        "--out",
        p(&mps),
        "--solution-value",
        p(&good),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["agrees"], true);
    let out = c4free(&[
        "ilp",
        "--n",
        "4",
        "--out",
        p(&mps),
        "--solution-value",
        p(&wrong),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exact_writes_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("q3.jsonl");
    let out = c4free(&["exact", "--n", "3", "--out", p(&w)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["optimum"], 9);
    assert_eq!(
        c4free(&["verify", "--n", "3", p(&w)]).status.code(),
        Some(0)
    );
}

fn search(out_dir: &Path) -> Output {
    c4free(&[
        "search",
        "--n",
        "5",
        "--trials",
        "3",
        "--seed",
        "41",
        "--steps-min",
        "200000",
        "--steps-max",
        "400000",
        "--out",
        p(out_dir),
    ])
}

#[test]
fn search_then_verify_and_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let run = dir.path().join("run");
    let out = search(&run);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let summary = json(&out);
    assert_eq!(summary["best_violations"], 0);

    let best = run.join("best.jsonl");
    let out = c4free(&["verify", "--n", "5", p(&best)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["edges"], summary["best_edges"]);

    let manifest: Value =
        serde_json::from_str(&fs::read_to_string(run.join("manifest.json")).unwrap()).unwrap();
    for s in manifest["solutions"].as_array().unwrap() {
        let file = run.join(s["file"].as_str().unwrap());
        assert_eq!(
            c4free(&["verify", "--n", "5", p(&file)]).status.code(),
            Some(0)
        );
    }

    let out = c4free(&["analyze", "--n", "5", p(&best)]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["trace_equality"], true);
    assert_eq!(r["edges"], summary["best_edges"]);

    let out = c4free(&[
        "classify",
        "--n",
        "5",
        p(&run),
        "--pairs",
        "10",
        "--seed",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["all_free"], true);

    let out = c4free(&[
        "distances",
        "--n",
        "5",
        p(&run),
        p(&best),
        "--pairs",
        "10",
        "--seed",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = c4free(&["classify", "--n", "6", p(&run)]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn same_seed_same_run_directory() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    assert_eq!(search(&a).status.code(), Some(0));
    assert_eq!(search(&b).status.code(), Some(0));
    for name in ["manifest.json", "best.jsonl"] {
        assert_eq!(
            fs::read(a.join(name)).unwrap(),
            fs::read(b.join(name)).unwrap(),
            "{name}"
        );
    }
    let mut names: Vec<_> = fs::read_dir(a.join("solutions"))
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    names.sort();
    assert!(!names.is_empty());
    for name in names {
        assert_eq!(
            fs::read(a.join("solutions").join(&name)).unwrap(),
            fs::read(b.join("solutions").join(&name)).unwrap()
        );
    }
}

#[test]
fn config_file_and_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    fs::write(
        &cfg,
        r#"{"n": 4, "trials": 2, "seed": 5, "steps": {"lo": 100000, "hi": 100000}}"#,
    )
    .unwrap();
    let run = dir.path().join("run");
    let out = c4free(&[
        "search",
        "--config",
        p(&cfg),
        "--trials",
        "1",
        "--out",
        p(&run),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    assert_eq!(v["n"], 4);
    assert_eq!(v["seed"], 5);
    assert_eq!(v["trials"], 1);
}

#[test]
fn missing_seed_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let run = dir.path().join("run");
    let out = c4free(&[
        "search",
        "--n",
        "3",
        "--trials",
        "1",
        "--steps-max",
        "2000",
        "--steps-min",
        "2000",
        "--out",
        p(&run),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let err = String::from_utf8_lossy(&out.stderr);
    let seed: u64 = err
        .lines()
        .find_map(|l| l.strip_prefix("seed: "))
        .unwrap()
        .trim()
        .parse()
        .unwrap();
    assert_eq!(json(&out)["seed"], seed);
}

#[test]
fn swap_phase_at_target() {
    let dir = tempfile::tempdir().unwrap();
    let run = dir.path().join("run");
    let out = c4free(&[
        "search",
        "--n",
        "4",
        "--phase",
        "swap",
        "--target",
        "24",
        "--trials",
        "2",
        "--seed",
        "3",
        "--steps-min",
        "200000",
        "--steps-max",
        "200000",
        "--out",
        p(&run),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(json(&out)["best_edges"], 24);

    let out = c4free(&[
        "search",
        "--n",
        "4",
        "--phase",
        "swap",
        "--target",
        "26",
        "--trials",
        "1",
        "--seed",
        "3",
        "--steps-min",
        "20000",
        "--steps-max",
        "20000",
        "--out",
        p(&dir.path().join("r2")),
    ]);
    assert_eq!(out.status.code(), Some(1));
}
