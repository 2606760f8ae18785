use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cardgeom")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn deck_gen_formats() {
    let o = run(&["deck", "gen", "--game", "quads", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cards"].as_array().unwrap().len(), 64);

    let o = run(&["deck", "gen", "--game", "set", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("code,bits,label\n"));
    assert!(text.contains("0,0000,1 Green Empty Oval"));

    let o = run(&["--format", "text", "deck", "gen", "--game", "socks"]);
    assert_eq!(stdout(&o).lines().count(), 63);
}

#[test]
fn deck_gen_writes_file_and_names() {
    let dir = std::env::temp_dir().join(format!("cardgeom-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let names = dir.join("names.txt");
    std::fs::write(&names, "# Fano symbols\n0: sun\n1: moon\n2: star\n").unwrap();
    let out = dir.join("fano.json");
    let o = run(&[
        "deck", "gen", "--game", "spotit", "--q", "2", "--format", "json",
        "--names", names.to_str().unwrap(), "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["cards"].as_array().unwrap().len(), 7);
    assert!(v["cards"].as_array().unwrap().iter().any(|c| c["label"].as_str().unwrap().contains("sun")));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn prob_table_closed_form_agrees() {
    let a = stdout(&run(&["prob", "table", "--max", "61", "--format", "csv"]));
    let b = stdout(&run(&["prob", "table", "--max", "61", "--closed-form", "--format", "csv"]));
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 32);
    let all = stdout(&run(&["prob", "table", "--max", "63", "--all", "--format", "json"]));
    let rows: Vec<Value> = serde_json::from_str(&all).unwrap();
    assert_eq!(rows.len(), 64);
    assert_eq!(rows[0]["exact"], "1");
    assert_eq!(rows[63]["exact"], "1");
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "planes"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("4 passed, 0 failed"));
    // the every-n form of the 1/64 anchor is false for even n
    let o = run(&["verify", "probability"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  probability/anchor_every_n"));
    let o = run(&["verify", "correspondence", "--format", "json"]);
    let checks: Vec<Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["frobnicate"][..],
        &["deck", "gen", "--game", "poker"],
        &["deck", "gen", "--game", "set", "--bogus"],
        &["correspond", "--code", "0110"],
        &["correspond", "--code", "011020"],
        &["search", "cap", "--dim", "5", "--budget", "1"],
        &["search", "noquad", "--budget", "0"],
        &["estimate", "noquad", "--samples", "10"],
        &["simulate", "--game", "set", "--variant", "tower"],
        &["grid", "--code", "011010", "--format", "csv"],
        &["deck", "gen", "--game", "spotit", "--q", "4"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn correspond_and_grid() {
    let o = run(&["correspond", "--code", "011010"]);
    let text = stdout(&o);
    assert!(text.contains("2 Yellow Circles") && text.contains("blue, green, purple"));
    let o = run(&["correspond", "--code", "011010", "--origin", "011010", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["socks"], "empty");
    let v: Value = serde_json::from_str(&stdout(&run(&["grid", "--code", "111111", "--format", "json"]))).unwrap();
    assert_eq!((v["row"].as_u64(), v["col"].as_u64()), (Some(7), Some(7)));
}

#[test]
fn search_and_simulate_batch() {
    let v: Value = serde_json::from_str(&stdout(&run(&["search", "cap", "--dim", "3", "--budget", "5", "--format", "json"]))).unwrap();
    assert_eq!(v["pile"].as_array().unwrap().len(), 9);
    assert_eq!(v["exhaustive"], true);
    let args = ["simulate", "--game", "socks", "--variant", "official", "--runs", "50", "--seed", "3", "--format", "json"];
    let a = stdout(&run(&args));
    let mut threaded = args.to_vec();
    threaded.extend(["--threads", "4"]);
    assert_eq!(a, stdout(&run(&threaded)));
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["runs"], 50);
}
