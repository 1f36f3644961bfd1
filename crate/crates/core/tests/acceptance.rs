//! Acceptance gate: one PASS/FAIL line per criterion. Tolerances are exact
//! (rational comparisons) unless a time budget is stated.

mod common;

use std::time::{Duration, Instant};

use num_rational::Ratio;
use satgame::analysis::{
    all_graphs_up_to_iso, classify_p4_saturated, classify_p5_saturated, f_closed, f_sequence, literal_p4_reading,
    literal_p5_reading, tree_score_formula, TreeScore,
};
use satgame::verify::{self, Suite, Verdict, VerifyOptions};
use satgame::{
    ForbiddenFamily, Graph, Player, ProlongerP4, ProlongerP5, ProlongerTraceable, ShortenerP4, ShortenerP5, Solver,
    SolverConfig, Strategy, Variant,
};

type Q = Ratio<i128>;

const P4_BUDGET: Duration = Duration::from_secs(60);
const P5_BUDGET: Duration = Duration::from_secs(300);
const FIRSTS: [Player; 2] = [Player::Prolonger, Player::Shortener];

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn solver(n: usize, family: &str, variant: Variant) -> Solver {
    Solver::new(n, family.parse().unwrap(), variant, SolverConfig::default()).unwrap()
}

fn q(x: usize) -> Q {
    Q::from_integer(x as i128)
}

/// Collects failures; the criterion passes when there are none.
#[derive(Default)]
struct Check {
    failures: Vec<String>,
    checked: usize,
}

impl Check {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn done(self, summary: impl Into<String>) -> Outcome {
        match self.failures.first() {
            None => pass(format!("{} ({} checks)", summary.into(), self.checked)),
            Some(f) => Outcome {
                ok: false,
                detail: format!("{} of {} failed; first: {f}", self.failures.len(), self.checked),
            },
        }
    }
}

fn window(family: &str, ns: std::ops::RangeInclusive<usize>, budget: Duration, lo: fn(usize) -> Q, hi: fn(usize) -> Q) -> Check {
    let mut c = Check::default();
    for n in ns {
        let s = solver(n, family, Variant::Standard);
        for first in FIRSTS {
            let start = Instant::now();
            let score = s.solve(first).unwrap().score;
            let took = start.elapsed();
            c.expect(lo(n) <= q(score) && q(score) <= hi(n), || format!("{family} n={n} {first}: {score}"));
            c.expect(took <= budget, || format!("{family} n={n} {first}: {took:?}"));
        }
    }
    c
}

fn criterion_1() -> Outcome {
    let mut c = window("P4", 3..=8, P4_BUDGET, |n| Q::new(4 * n as i128 - 8, 5), |n| Q::new(4 * n as i128 + 5, 5));
    let p4: ForbiddenFamily = "P4".parse().unwrap();
    for (n, first, want) in [(4, Player::Prolonger, 2), (4, Player::Shortener, 3), (5, Player::Prolonger, 4), (5, Player::Shortener, 4)] {
        let oracle = common::minimax(&Graph::new_empty(n).unwrap(), &p4, Variant::Standard, first);
        let got = solver(n, "P4", Variant::Standard).solve(first).unwrap().score;
        c.expect(oracle == want && got == want, || format!("anchor n={n} {first}: oracle {oracle}, solver {got}"));
    }
    c.done("P4 window n=3..8, anchors 2/3/4")
}

fn criterion_2() -> Outcome {
    window("P5", 4..=8, P5_BUDGET, |n| q(n - 1), |n| q(n + 2)).done("P5 window n=4..8")
}

fn criterion_3() -> Outcome {
    let mut c = Check::default();
    for k in 3..=5usize {
        for n in k..=9 {
            if n % (k - 1) == 1 {
                continue;
            }
            let TreeScore::Exact(want) = tree_score_formula(n, k) else {
                panic!("exact case expected at n={n} k={k}");
            };
            let s = solver(n, &format!("Trees:{k}"), Variant::Standard);
            for first in FIRSTS {
                let got = s.solve(first).unwrap().score;
                c.expect(got == want, || format!("k={k} n={n} {first}: {got} != {want}"));
            }
        }
    }
    c.done("tree formula exact for 3<=k<=5, k<=n<=9")
}

fn criterion_4() -> Outcome {
    let mut c = Check::default();
    for (n, k) in [(5usize, 4usize), (6, 4), (7, 4), (6, 5), (7, 5)] {
        let s = solver(n, &format!("Pk:{k}"), Variant::ProlongerMayPass);
        for first in FIRSTS {
            let got = s.best_response(&ProlongerTraceable, Player::Prolonger, first).unwrap().score;
            let floor = Q::new((n * (k - 2)) as i128, 4);
            c.expect(q(got) >= floor, || format!("n={n} k={k} {first}: {got} < {floor}"));
        }
    }
    c.done("traceable Prolonger guarantees n(k-2)/4")
}

fn criterion_5() -> Outcome {
    let mut c = Check::default();
    let sides: [(&str, &dyn Strategy, Player, fn(usize) -> Option<usize>, fn(usize) -> Option<usize>); 4] = [
        ("P4", &ShortenerP4, Player::Shortener, |_| None, |n| Some((4 * n + 5) / 5)),
        ("P4", &ProlongerP4, Player::Prolonger, |n| Some((4 * n).saturating_sub(8).div_ceil(5)), |_| None),
        ("P5", &ShortenerP5, Player::Shortener, |_| None, |n| Some(n + 2)),
        ("P5", &ProlongerP5, Player::Prolonger, |n| Some(n - 1), |_| None),
    ];
    for (family, strategy, side, lo, hi) in sides {
        for n in 2..=8 {
            let s = solver(n, family, Variant::Standard);
            for first in FIRSTS {
                let got = s.best_response(strategy, side, first).unwrap().score;
                let ok = lo(n).is_none_or(|l| got >= l) && hi(n).is_none_or(|h| got <= h);
                c.expect(ok, || format!("{family} {} n={n} {first}: {got}", strategy.name()));
            }
        }
    }
    c.done("one-sided P4/P5 strategy bounds, n<=8")
}

fn criterion_6() -> Outcome {
    let mut c = Check::default();
    let mut notes = Vec::new();
    let cases: [(&str, usize, fn(&Graph) -> bool, fn(&Graph) -> bool); 2] = [
        ("P4", 7, |g| classify_p4_saturated(g).is_ok(), literal_p4_reading),
        ("P5", 8, |g| classify_p5_saturated(g).is_ok(), literal_p5_reading),
    ];
    for (name, top, classify, literal) in cases {
        let family: ForbiddenFamily = name.parse().unwrap();
        let mut literal_off = 0;
        for n in 1..=top {
            for g in all_graphs_up_to_iso(n).unwrap() {
                let saturated = common::is_free(&g, &family) && common::legal(&g, &family).is_empty();
                c.expect(classify(&g) == saturated, || format!("{name} {}", g.to_graph6()));
                literal_off += usize::from(literal(&g) != saturated);
            }
        }
        notes.push(format!("{name} literal-reading deviations: {literal_off}"));
    }
    c.done(format!("classifiers match the oracle; {}", notes.join(", ")))
}

fn claims() -> Vec<verify::Row> {
    verify::run(Suite::Claims, &VerifyOptions::default())
}

fn criterion_7(rows: &[verify::Row]) -> Outcome {
    let mut c = Check::default();
    for r in rows.iter().filter(|r| r.check != "star-trace") {
        c.expect(r.verdict == Verdict::Pass, || format!("{} {}", r.check, r.detail));
    }
    c.done("claim invariants, 10^4 fuzzed games each")
}

fn criterion_8(rows: &[verify::Row]) -> Outcome {
    let mut c = Check::default();
    for n in [10usize, 100, 1000] {
        for k in 2..=50usize {
            // Independent rerun of the recurrence f_{i+1} = f_i + c - 2 f_i / (k - i).
            let cst = q(n + 2 * k + 2);
            let mut f = Q::from_integer(0);
            let seq = f_sequence(n, k);
            for (i, value) in seq.iter().enumerate() {
                let closed = Q::new((i * (n + 2 * k + 2) * (k - i)) as i128, (k - 1) as i128);
                c.expect(*value == f && f == closed && f_closed(n, k, i) == closed, || format!("n={n} k={k} i={i}"));
                f = f + cst - f * q(2) / q(k - i);
            }
            c.expect(seq.len() == k, || format!("n={n} k={k}: length {}", seq.len()));
        }
    }
    for r in rows.iter().filter(|r| r.check == "star-trace") {
        c.expect(r.verdict == Verdict::Pass, || format!("star-trace {}", r.detail));
    }
    c.done("f closed form and star-trace statistics")
}

fn criterion_9() -> Outcome {
    let mut c = Check::default();
    let opts = VerifyOptions {
        n_max: Some(6),
        games: 300,
        ..VerifyOptions::default()
    };
    let report = || -> String {
        verify::run_all(&opts)
            .iter()
            .map(|r| serde_json::to_string(r).unwrap() + "\n")
            .collect()
    };
    let (a, b) = (report(), report());
    c.expect(a == b, || "verify reports differ between runs".into());
    let serial = VerifyOptions { parallel: false, ..opts.clone() };
    let ser: String = verify::run_all(&serial).iter().map(|r| serde_json::to_string(r).unwrap() + "\n").collect();
    c.expect(a == ser, || "parallel and serial verify reports differ".into());
    for family in ["P4", "P5", "Trees:4", "Star:3", "Pk:6"] {
        for n in 2..=8 {
            for variant in [Variant::Standard, Variant::ProlongerMayPass] {
                let config = |parallel| SolverConfig { parallel, ..SolverConfig::default() };
                let par = Solver::new(n, family.parse().unwrap(), variant, config(true)).unwrap();
                let one = Solver::new(n, family.parse().unwrap(), variant, config(false)).unwrap();
                for first in FIRSTS {
                    let (x, y) = (par.solve(first).unwrap().score, one.solve(first).unwrap().score);
                    c.expect(x == y, || format!("{family} n={n} {variant} {first}: {x} vs {y}"));
                }
            }
        }
    }
    c.done("byte-identical reports, parallel = serial")
}

fn main() {
    let claim_rows = claims();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("P4 score window and anchors", Box::new(criterion_1)),
        ("P5 score window", Box::new(criterion_2)),
        ("tree-family exact scores", Box::new(criterion_3)),
        ("pass-game traceable lower bound", Box::new(criterion_4)),
        ("one-sided strategy guarantees", Box::new(criterion_5)),
        ("characterization oracle equivalence", Box::new(criterion_6)),
        ("claim invariants on fuzzed games", Box::new(|| criterion_7(&claim_rows))),
        ("star-game algebra and traces", Box::new(|| criterion_8(&claim_rows))),
        ("determinism", Box::new(criterion_9)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let verdict = if out.ok { "PASS" } else { "FAIL" };
        failed += usize::from(!out.ok);
        println!("criterion {}: {verdict} {name}: {} [{:.1}s]", i + 1, out.detail, start.elapsed().as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
