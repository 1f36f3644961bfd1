mod args;

use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use rayon::prelude::*;
use satgame::analysis::{bound, enumerate_saturated, BoundReport, Theorem};
use satgame::verify::{self, Row, Suite, Verdict, VerifyOptions};
use satgame::{by_name, labels, play, ForbiddenFamily, Graph, Player, SolveError, Solver, SolverConfig, Strategy, Variant};
use serde::Serialize;

use args::{Cli, Command, EnumerateArgs, Format, Output, PlayArgs, SolveArgs, SweepArgs, VerifyArgs};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    let result = match cli.command {
        Command::Solve(a) => solve(a),
        Command::Play(a) => play_one(a),
        Command::Sweep(a) => sweep(a),
        Command::Verify(a) => run_verify(a),
        Command::Enumerate(a) => enumerate(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("SATGAME_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| format!("SATGAME_THREADS={value:?} is not a number"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn emit<T: Serialize>(rows: &[T], output: &Output) -> Result<(), Failure> {
    let bytes = match output.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.serialize(r).map_err(io::Error::other)?;
            }
            w.into_inner().map_err(|e| io::Error::other(e.to_string()))?
        }
        Format::Jsonl => {
            let mut out = Vec::new();
            for r in rows {
                serde_json::to_writer(&mut out, r).map_err(io::Error::other)?;
                out.push(b'\n');
            }
            out
        }
    };
    write_out(&bytes, output.out.as_deref())
}

fn write_out(bytes: &[u8], path: Option<&Path>) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, bytes)?,
        None => io::stdout().lock().write_all(bytes)?,
    }
    Ok(())
}

/// The theorem window that applies to a game, if any.
fn theorem_bound(family: &ForbiddenFamily, variant: Variant, n: usize) -> Option<BoundReport> {
    let (theorem, k) = match (family, variant) {
        (ForbiddenFamily::Path(k), Variant::ProlongerMayPass) => (Theorem::PassPath, Some(*k)),
        (ForbiddenFamily::Path(4), Variant::Standard) => (Theorem::Path4, None),
        (ForbiddenFamily::Path(5), Variant::Standard) => (Theorem::Path5, None),
        (ForbiddenFamily::TreeFamily(k), Variant::Standard) => (Theorem::Trees, Some(*k)),
        (ForbiddenFamily::Star(s), Variant::Standard) => (Theorem::Star, Some(s - 1)),
        _ => return None,
    };
    bound(theorem, n, k).ok()
}

#[derive(Serialize)]
struct SolveRow {
    family: String,
    variant: String,
    n: usize,
    first: String,
    score: Option<usize>,
    lower: Option<String>,
    upper: Option<String>,
    verdict: String,
    detail: String,
}

fn solve(a: SolveArgs) -> Result<u8, Failure> {
    let family = a.game.family().map_err(usage)?;
    let config = SolverConfig {
        max_n: a.caps.max_n,
        node_limit: a.caps.node_cap,
        time_limit: a.caps.time(),
        parallel: true,
    };
    let mut rows = Vec::new();
    for n in a.n.0.clone() {
        let report = theorem_bound(&family, a.game.variant, n);
        let solver = Solver::new(n, family.clone(), a.game.variant, config.clone());
        for first in a.game.firsts() {
            let result = solver.as_ref().map_err(Clone::clone).and_then(|s| s.solve(first));
            rows.push(solve_row(&family, a.game.variant, n, first, report.clone(), result));
        }
    }
    emit(&rows, &a.output)?;
    Ok(exit_code(rows.iter().map(|r| r.verdict.as_str())))
}

fn solve_row(
    family: &ForbiddenFamily,
    variant: Variant,
    n: usize,
    first: Player,
    report: Option<BoundReport>,
    result: Result<satgame::SolveResult, SolveError>,
) -> SolveRow {
    let mut row = SolveRow {
        family: family.to_string(),
        variant: variant.to_string(),
        n,
        first: first.to_string(),
        score: None,
        lower: report.as_ref().map(|r| r.lower.to_string()),
        upper: report.as_ref().map(|r| r.upper.to_string()),
        verdict: String::new(),
        detail: String::new(),
    };
    match result {
        Ok(r) => {
            row.score = Some(r.score);
            row.verdict = match report.map(|b| b.with_observed(r.score).holds) {
                Some(true) => "PASS",
                Some(false) => "FAIL",
                None => "NA",
            }
            .into();
            let pv: Vec<String> = r.principal_variation.iter().map(ToString::to_string).collect();
            row.detail = pv.join(" ");
        }
        Err(e) => {
            row.verdict = if e.is_limit() { "UNSOLVED" } else { "FAIL" }.into();
            row.detail = e.to_string();
        }
    }
    row
}

/// 1 on any failure, else 3 on any unsolved row, else 0.
fn exit_code<'a>(verdicts: impl Iterator<Item = &'a str>) -> u8 {
    let mut code = 0;
    for v in verdicts {
        match v {
            "FAIL" => return EXIT_FAIL,
            "UNSOLVED" => code = EXIT_CAP,
            _ => {}
        }
    }
    code
}

fn strategy(name: &str, seed: u64) -> Result<Box<dyn Strategy>, Failure> {
    let name = if name.trim() == "random" { format!("random:{seed}") } else { name.to_string() };
    by_name(&name).map_err(usage)
}

fn play_one(a: PlayArgs) -> Result<u8, Failure> {
    let family = a.game.family().map_err(usage)?;
    let first = a.game.first.unwrap_or(Player::Prolonger);
    let p = strategy(&a.prolonger, a.seed)?;
    let s = strategy(&a.shortener, a.seed)?;
    match play(a.n, family, a.game.variant, first, &*p, &*s) {
        Ok(rec) => {
            let mut line = rec.to_json_line();
            line.push('\n');
            match &a.out {
                Some(path) => {
                    fs::write(path, line)?;
                    println!("score {}", rec.score);
                }
                None => {
                    print!("{line}");
                    eprintln!("score {}", rec.score);
                }
            }
            Ok(0)
        }
        Err(e @ satgame::PlayError::Game(_)) => Err(usage(e)),
        Err(e) => {
            eprintln!("error: {e}");
            Ok(EXIT_FAIL)
        }
    }
}

#[derive(Serialize)]
struct SweepRow {
    family: String,
    variant: String,
    n: usize,
    first: String,
    prolonger: String,
    shortener: String,
    score: Option<usize>,
    lower: Option<String>,
    upper: Option<String>,
    within: Option<bool>,
    error: String,
}

fn sweep(a: SweepArgs) -> Result<u8, Failure> {
    let family = a.game.family().map_err(usage)?;
    let names = |s: &str| s.split(',').map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect::<Vec<_>>();
    let (ps, ss) = (names(&a.prolonger), names(&a.shortener));
    for name in ps.iter().chain(&ss) {
        strategy(name, a.seed)?;
    }
    let mut cells = Vec::new();
    for n in a.n.0.clone() {
        for first in a.game.firsts() {
            for p in &ps {
                for s in &ss {
                    cells.push((n, first, p.clone(), s.clone()));
                }
            }
        }
    }
    let rows: Vec<SweepRow> = cells
        .par_iter()
        .map(|(n, first, p, s)| {
            let report = theorem_bound(&family, a.game.variant, *n);
            let pro = strategy(p, a.seed).ok().expect("checked above");
            let sho = strategy(s, a.seed).ok().expect("checked above");
            let result = play(*n, family.clone(), a.game.variant, *first, &*pro, &*sho);
            let score = result.as_ref().ok().map(|r| r.score);
            SweepRow {
                family: family.to_string(),
                variant: a.game.variant.to_string(),
                n: *n,
                first: first.to_string(),
                prolonger: p.clone(),
                shortener: s.clone(),
                score,
                lower: report.as_ref().map(|r| r.lower.to_string()),
                upper: report.as_ref().map(|r| r.upper.to_string()),
                within: report.zip(score).map(|(r, x)| r.with_observed(x).holds),
                error: result.err().map(|e| e.to_string()).unwrap_or_default(),
            }
        })
        .collect();
    emit(&rows, &a.output)?;
    Ok(if rows.iter().any(|r| !r.error.is_empty()) { EXIT_FAIL } else { 0 })
}

fn run_verify(a: VerifyArgs) -> Result<u8, Failure> {
    let opts = VerifyOptions {
        n_max: a.n_max,
        seed: a.seed,
        games: a.games,
        fuzz_n_max: a.fuzz_n_max,
        node_limit: a.caps.node_cap,
        time_limit: a.caps.time(),
        parallel: !a.serial,
    };
    let suites = if a.suite.is_empty() { Suite::ALL.to_vec() } else { a.suite.clone() };
    let rows: Vec<Row> = suites.iter().flat_map(|&s| verify::run(s, &opts)).collect();
    emit(&rows, &a.output)?;
    let code = if rows.iter().any(|r| r.verdict == Verdict::Fail) {
        EXIT_FAIL
    } else if rows.iter().any(|r| r.verdict == Verdict::Unsolved) {
        EXIT_CAP
    } else {
        0
    };
    Ok(code)
}

#[derive(Serialize)]
struct EnumRow {
    n: usize,
    graph6: String,
    edges: usize,
    labels: String,
}

fn enumerate(a: EnumerateArgs) -> Result<u8, Failure> {
    let family = a.family().map_err(usage)?;
    let mut rows = Vec::new();
    for n in a.n.0.clone() {
        let keys = match enumerate_saturated(n, &family) {
            Ok(keys) => keys,
            Err(e) => {
                eprintln!("error: {e}");
                return Ok(EXIT_CAP);
            }
        };
        for key in keys {
            let g = Graph::from_graph6(key.graph6()).expect("canonical keys decode");
            let names: Vec<String> = labels(&g).iter().map(ToString::to_string).collect();
            rows.push(EnumRow {
                n,
                graph6: key.graph6().to_string(),
                edges: g.edge_count(),
                labels: names.join("+"),
            });
        }
    }
    emit(&rows, &a.output)?;
    Ok(0)
}
