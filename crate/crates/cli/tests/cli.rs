use std::fs;
use std::process::{Command, Output};

fn satgame(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_satgame"))
        .args(args)
        .env("SATGAME_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.records().map(|x| x.unwrap().iter().map(str::to_string).collect()).collect()
}

#[test]
fn solve_reports_windows() {
    let o = satgame(&["solve", "--family", "P4", "--n", "4..7"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r[7] == "PASS"));
    assert_eq!((rows[0][4].as_str(), rows[1][4].as_str()), ("2", "3"));

    let o = satgame(&["solve", "--family", "Trees:4", "--n", "6", "--first", "S"]);
    let rows = csv_rows(&stdout(&o));
    assert_eq!((rows.len(), rows[0][4].as_str()), (1, "6"));
}

#[test]
fn exit_codes() {
    let o = satgame(&["solve", "--family", "P4", "--n", "64"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("UNSOLVED"));
    let o = satgame(&["solve", "--family", "P5", "--n", "8", "--node-cap", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(satgame(&["solve", "--family", "Q9", "--n", "4"]).status.code(), Some(2));
    assert_eq!(satgame(&["solve", "--family", "P4", "--n", "5..2"]).status.code(), Some(2));
    assert_eq!(satgame(&["play", "--family", "P4", "--n", "5", "--prolonger", "nope", "--shortener", "least"]).status.code(), Some(2));
    assert_eq!(satgame(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn play_writes_a_record() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("game.jsonl");
    let o = satgame(&[
        "play", "--family", "P5", "--n", "12", "--prolonger", "p-p5", "--shortener", "s-p5", "--first", "P", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let score: usize = stdout(&o).trim().strip_prefix("score ").unwrap().parse().unwrap();
    assert!((11..=14).contains(&score));
    let rec = satgame::GameRecord::from_json_line(fs::read_to_string(&path).unwrap().trim()).unwrap();
    rec.verify().unwrap();
    assert_eq!(rec.score, score);

    let o = satgame(&["play", "--family", "Star:4", "--n", "20", "--prolonger", "p-star", "--shortener", "random:3"]);
    let rec = satgame::GameRecord::from_json_line(stdout(&o).trim()).unwrap();
    assert!(rec.terminal.min_degree() >= 1);

    let o = satgame(&["play", "--family", "P4", "--n", "3", "--prolonger", "random:1", "--shortener", "random:2"]);
    assert_eq!(satgame::GameRecord::from_json_line(stdout(&o).trim()).unwrap().score, 3);
}

#[test]
fn enumerate_lists_classes() {
    let o = satgame(&["enumerate", "--family", "P4", "--n", "4"]);
    assert_eq!(csv_rows(&stdout(&o)).len(), 3);
    let o = satgame(&["enumerate", "--family", "P4", "--n", "5"]);
    assert!(csv_rows(&stdout(&o)).iter().all(|r| r[2] == "4"));
    let o = satgame(&["enumerate", "--family", "Trees:3", "--n", "4"]);
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][3], "K2+K2");
    assert_eq!(satgame(&["enumerate", "--family", "P4", "--n", "12"]).status.code(), Some(3));
}

#[test]
fn sweep_table() {
    let o = satgame(&[
        "sweep", "--family", "P4", "--n", "5..7", "--prolonger", "p-p4,least", "--shortener", "s-p4", "--format", "jsonl",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[0]["n"], 5);
    assert_eq!(lines[0]["prolonger"], "p-p4");
}

#[test]
fn identical_config_gives_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, args: &[&str]| {
        let path = dir.path().join(name);
        let mut all: Vec<&str> = args.to_vec();
        let p = path.to_str().unwrap().to_string();
        all.extend(["--out", &p]);
        let o = satgame(&all);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        fs::read(&path).unwrap()
    };
    let verify = ["verify", "--n-max", "5", "--games", "200", "--fuzz-n-max", "12", "--seed", "7"];
    assert_eq!(run("a.csv", &verify), run("b.csv", &verify));
    let mut serial = verify.to_vec();
    serial.push("--serial");
    assert_eq!(run("c.csv", &verify), run("d.csv", &serial));
    let sweep = ["sweep", "--family", "P5", "--n", "6..9", "--prolonger", "random,greedy-max", "--shortener", "random", "--seed", "3"];
    assert_eq!(run("e.csv", &sweep), run("f.csv", &sweep));
}

#[test]
fn verify_suites() {
    let o = satgame(&["verify", "--suite", "algebra"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().skip(1).all(|l| l.contains(",PASS,")));
    let o = satgame(&["verify", "--suite", "p4", "--n-max", "6", "--format", "jsonl"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(rows.iter().any(|r| r["check"] == "characterization"));
    assert!(rows.iter().all(|r| r["verdict"] == "PASS" || r["verdict"] == "DEVIATION"));
}
