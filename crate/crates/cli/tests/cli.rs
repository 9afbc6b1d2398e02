use std::path::Path;
use std::process::{Command, Output};

use posgames::Document;
use serde_json::Value;

fn posgames(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_posgames"))
        .args(args)
        .current_dir(dir)
        .env_remove("POSGAMES_MEMO_CAP")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn gen_layered_digraph_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = posgames(dir.path(), &["gen", "gtb", "--t", "3", "--b", "2", "-o", "g.json"]);
    assert_eq!(code(&out), 0);
    let d = Document::read(dir.path().join("g.json"))
        .unwrap()
        .into_digraph()
        .unwrap();
    assert_eq!((d.nv(), d.arcs().len()), (6, 9));
    let text = std::fs::read_to_string(dir.path().join("g.json")).unwrap();
    assert!(text.trim_start().starts_with("{\n  \"type\": \"digraph\""));
}

#[test]
fn cycle_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let out = posgames(dir.path(), &["dom", "closedform", "cycle", "--n", "8"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out), serde_json::json!({"value": 4}));
}

#[test]
fn cycle_suite_agrees() {
    let dir = tempfile::tempdir().unwrap();
    let out = posgames(dir.path(), &["verify", "wc-cycles", "--max-n", "9"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["ok"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 7);
}

#[test]
fn solve_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        code(&posgames(
            dir.path(),
            &["gen", "pair-family", "--t", "3", "-o", "h.json"]
        )),
        0
    );
    let wc = posgames(dir.path(), &["solve", "wc", "-i", "h.json"]);
    assert_eq!(code(&wc), 0);
    let doc = Document::from_value(json(&wc)).unwrap();
    let Document::SolveResult(r) = doc else {
        panic!("expected a solve result")
    };
    assert_eq!(r.min_rounds.finite(), Some(3));
    assert_eq!(r.frontier, vec![(3, 2)]);
    let mb = json(&posgames(dir.path(), &["solve", "mb", "-i", "h.json"]));
    assert_eq!(mb["maker_wins"], false);
    assert_eq!(mb["min_rounds"], Value::Null);
    let bounded = json(&posgames(dir.path(), &["solve", "wc", "-i", "h.json", "--rounds", "2"]));
    assert_eq!(bounded["maker_wins"], false);
}

#[test]
fn aux_game_with_preclaimed_ends() {
    let dir = tempfile::tempdir().unwrap();
    posgames(dir.path(), &["gen", "gtb", "--t", "2", "--b", "2", "-o", "g.json"]);
    let win = |r: &str| {
        json(&posgames(
            dir.path(),
            &[
                "solve", "aux", "-i", "g.json", "--b", "2", "--pre", "0,2", "--rounds", r,
            ],
        ))["maker_wins"]
            .clone()
    };
    assert_eq!(win("2"), true);
    assert_eq!(win("1"), false);
}

#[test]
fn csv_frontier() {
    let dir = tempfile::tempdir().unwrap();
    posgames(
        dir.path(),
        &["gen", "complete-uniform", "--n", "4", "--k", "2", "-o", "k4.json"],
    );
    let out = posgames(dir.path(), &["--format", "csv", "frontier", "wc", "-i", "k4.json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "t,s\n2,2\n");
}

#[test]
fn domination_tools() {
    let dir = tempfile::tempdir().unwrap();
    posgames(dir.path(), &["gen", "path", "--n", "6", "-o", "p6.json"]);
    assert_eq!(
        json(&posgames(dir.path(), &["dom", "gamma", "-i", "p6.json"]))["gamma"],
        2
    );
    let r = json(&posgames(dir.path(), &["dom", "residue", "-i", "p6.json"]));
    assert_eq!(r["removed_pairs"].as_array().unwrap().len(), 2);
    assert_eq!(r["residue"]["type"], "graph");
    let v = json(&posgames(dir.path(), &["dom", "solve", "-i", "p6.json"]));
    assert_eq!((v["min_rounds"].as_u64(), v["min_size"].as_u64()), (Some(3), Some(3)));
    let t = json(&posgames(dir.path(), &["dom", "closedform", "tree", "-i", "p6.json"]));
    assert_eq!(t["value"], 3);
}

#[test]
fn strategy_verification_and_violation() {
    let dir = tempfile::tempdir().unwrap();
    let ok = posgames(dir.path(), &["verify", "breaker-pairing", "--t", "4"]);
    assert_eq!(code(&ok), 0);
    assert_eq!(json(&ok)["verdict"]["ok"], true);
    let bad = posgames(dir.path(), &["verify", "maker-gtb", "--within", "1"]);
    assert_eq!(code(&bad), 1);
    let v = json(&bad);
    assert_eq!(v["verdict"]["ok"], false);
    assert!(!v["verdict"]["counterexample"].as_array().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["solve", "mb"][..],
        &["verify", "no-such-suite"],
        &["gen", "gtb", "--t", "3"],
        &["solve", "mb", "-i", "missing.json"],
        &["dom", "closedform", "cycle"],
        &["frobnicate"],
    ] {
        assert_eq!(code(&posgames(dir.path(), args)), 2, "{args:?}");
    }
    std::fs::write(dir.path().join("bad.json"), r#"{"type":"graph","n":2,"edges":[[0,5]]}"#).unwrap();
    assert_eq!(code(&posgames(dir.path(), &["dom", "gamma", "-i", "bad.json"])), 2);
}

#[test]
fn memo_guard_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    posgames(
        dir.path(),
        &["gen", "complete-uniform", "--n", "8", "--k", "3", "-o", "k.json"],
    );
    let out = posgames(dir.path(), &["--memo-cap", "10", "solve", "mb", "-i", "k.json"]);
    assert_eq!(code(&out), 3);
    let env = Command::new(env!("CARGO_BIN_EXE_posgames"))
        .args(["solve", "mb", "-i", "k.json"])
        .current_dir(dir.path())
        .env("POSGAMES_MEMO_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(code(&env), 3);
}

#[test]
fn manifest_records_inputs_and_result() {
    let dir = tempfile::tempdir().unwrap();
    posgames(dir.path(), &["gen", "cycle", "--n", "5", "-o", "c5.json"]);
    let out = posgames(dir.path(), &["--manifest", "run.json", "dom", "solve", "-i", "c5.json"]);
    assert_eq!(code(&out), 0);
    let m: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("run.json")).unwrap()).unwrap();
    let digest = m["inputs"][0]["sha256"].as_str().unwrap();
    assert_eq!(digest.len(), 64);
    assert_eq!(m["result"], json(&out));
    assert_eq!(m["version"], env!("CARGO_PKG_VERSION"));
    assert!(m["wall_time_secs"].as_f64().unwrap() >= 0.0);
}

#[test]
fn seeded_suites_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let run = || posgames(dir.path(), &["verify", "residue", "--count", "10", "--seed", "7"]).stdout;
    let first = run();
    assert_eq!(first, run());
    let v: Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["ok"], true);
    let tree = |seed: &str| posgames(dir.path(), &["gen", "random-tree", "--n", "9", "--seed", seed]).stdout;
    assert_eq!(tree("3"), tree("3"));
}

#[test]
fn parallel_and_sequential_agree() {
    let dir = tempfile::tempdir().unwrap();
    posgames(
        dir.path(),
        &[
            "gen", "hmbst", "--m", "1", "--b", "1", "--s", "3", "--t", "3", "-o", "h.json",
        ],
    );
    let seq = posgames(dir.path(), &["solve", "mb", "-i", "h.json"]).stdout;
    let par = posgames(dir.path(), &["--jobs", "4", "solve", "mb", "-i", "h.json"]).stdout;
    assert_eq!(seq, par);
}
