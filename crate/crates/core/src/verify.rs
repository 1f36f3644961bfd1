//! Verification suites: each runs a group of checks and returns one row per
//! check. Rows carry no timings, so equal options give identical reports.

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{
    self, bound, check_four_vertex_components, check_new_vertices, check_single_cherry, check_standalone_triangles,
    check_star_min_degree, check_traceable, classify_p4_saturated, classify_p5_saturated, degree_sum_bound,
    degree_sum_bound_two_sided, degree_sum_minimizer, f_closed, f_sequence, literal_p4_reading, literal_p5_reading,
    trace_stats, tree_score_formula, tree_score_interval_floored, ClaimViolation, Theorem, TreeScore,
};
use crate::family::ForbiddenFamily;
use crate::game::{play, GameRecord, Player, Variant};
use crate::graph::Graph;
use crate::solver::{SolveError, SolveResult, Solver, SolverConfig};
use crate::strategy::{
    Baseline, LeastEdge, ProlongerP4, ProlongerP5, ProlongerStarLex, ProlongerTraceable, ShortenerP4, ShortenerP5,
    Strategy,
};

type Q = Ratio<i128>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    P4,
    P5,
    Trees,
    Pass,
    Star,
    Algebra,
    Claims,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::P4,
        Suite::P5,
        Suite::Trees,
        Suite::Pass,
        Suite::Star,
        Suite::Algebra,
        Suite::Claims,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::P4 => "p4",
            Suite::P5 => "p5",
            Suite::Trees => "trees",
            Suite::Pass => "pass",
            Suite::Star => "star",
            Suite::Algebra => "algebra",
            Suite::Claims => "claims",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    /// A documented difference from a statement read literally; not a
    /// failure.
    Deviation,
    /// The solver hit a cap or a time limit.
    Unsolved,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Deviation => "DEVIATION",
            Verdict::Unsolved => "UNSOLVED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub suite: Suite,
    pub check: String,
    pub params: String,
    pub verdict: Verdict,
    pub detail: String,
}

impl Row {
    fn new(suite: Suite, check: &str, params: impl Into<String>, ok: bool, detail: impl Into<String>) -> Row {
        Row {
            suite,
            check: check.to_string(),
            params: params.into(),
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Largest `n` for solver and enumeration checks; each suite clamps it
    /// to its own default range.
    pub n_max: Option<usize>,
    pub seed: u64,
    /// Fuzzed games per claim.
    pub games: usize,
    /// Largest `n` in fuzzed games.
    pub fuzz_n_max: usize,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    pub parallel: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: None,
            seed: 0,
            games: 10_000,
            fuzz_n_max: 20,
            node_limit: None,
            time_limit: None,
            parallel: true,
        }
    }
}

impl VerifyOptions {
    fn n_max(&self, default: usize) -> usize {
        self.n_max.map_or(default, |n| n.min(default))
    }

    fn solver(&self, n: usize, family: ForbiddenFamily, variant: Variant) -> Result<Solver, SolveError> {
        let config = SolverConfig {
            node_limit: self.node_limit,
            time_limit: self.time_limit,
            parallel: self.parallel,
            ..SolverConfig::default()
        };
        Solver::new(n, family, variant, config)
    }
}

pub fn run(suite: Suite, opts: &VerifyOptions) -> Vec<Row> {
    match suite {
        Suite::P4 => p4_suite(opts),
        Suite::P5 => p5_suite(opts),
        Suite::Trees => trees_suite(opts),
        Suite::Pass => pass_suite(opts),
        Suite::Star => star_suite(opts),
        Suite::Algebra => algebra_suite(opts),
        Suite::Claims => claims_suite(opts),
    }
}

pub fn run_all(opts: &VerifyOptions) -> Vec<Row> {
    Suite::ALL.into_iter().flat_map(|s| run(s, opts)).collect()
}

const FIRSTS: [Player; 2] = [Player::Prolonger, Player::Shortener];

fn q(x: usize) -> Q {
    Q::from_integer(x as i128)
}

fn unsolved(suite: Suite, check: &str, params: String, err: &SolveError) -> Row {
    Row {
        suite,
        check: check.to_string(),
        params,
        verdict: if err.is_limit() { Verdict::Unsolved } else { Verdict::Fail },
        detail: err.to_string(),
    }
}

/// A solver value against an inclusive rational window.
fn window_row(
    suite: Suite,
    check: &str,
    params: String,
    result: Result<SolveResult, SolveError>,
    lower: Option<Q>,
    upper: Option<Q>,
) -> Row {
    match result {
        Err(e) => unsolved(suite, check, params, &e),
        Ok(r) => {
            let x = q(r.score);
            let ok = lower.is_none_or(|l| l <= x) && upper.is_none_or(|u| x <= u);
            let show = |b: Option<Q>| b.map_or("-".to_string(), |b| b.to_string());
            Row::new(
                suite,
                check,
                params,
                ok,
                format!("score {} in [{}, {}]", r.score, show(lower), show(upper)),
            )
        }
    }
}

fn theorem_window(theorem: Theorem, n: usize, k: Option<usize>) -> (Q, Q) {
    let r = bound(theorem, n, k).expect("parameters inside the theorem's domain");
    (r.lower, r.upper)
}

/// Solver windows, anchors and one-sided strategy bounds for a path game.
fn path_game_rows(
    suite: Suite,
    opts: &VerifyOptions,
    theorem: Theorem,
    k: usize,
    solve_range: std::ops::RangeInclusive<usize>,
    strategies: (&dyn Strategy, &dyn Strategy),
) -> Vec<Row> {
    let family = ForbiddenFamily::Path(k);
    let mut rows = Vec::new();
    let top = opts.n_max(8);
    for n in *solve_range.start()..=top.min(*solve_range.end()) {
        let (lo, hi) = theorem_window(theorem, n, None);
        let solver = match opts.solver(n, family.clone(), Variant::Standard) {
            Ok(s) => s,
            Err(e) => {
                rows.push(unsolved(suite, "solve-window", format!("n={n}"), &e));
                continue;
            }
        };
        for first in FIRSTS {
            let params = format!("n={n} first={first}");
            rows.push(window_row(suite, "solve-window", params.clone(), solver.solve(first), Some(lo), Some(hi)));
        }
        let (shortener, prolonger) = strategies;
        for first in FIRSTS {
            let params = format!("n={n} first={first}");
            let up = solver.best_response(shortener, Player::Shortener, first);
            rows.push(window_row(suite, &format!("vs-{}", shortener.name()), params.clone(), up, None, Some(hi)));
            let down = solver.best_response(prolonger, Player::Prolonger, first);
            let ceil = Q::from_integer(lo.ceil().to_integer().max(0));
            rows.push(window_row(suite, &format!("vs-{}", prolonger.name()), params, down, Some(ceil), None));
        }
    }
    rows
}

/// Classifier acceptance against saturation over all graphs up to
/// isomorphism, plus a deviation row for the word-for-word reading.
fn characterization_rows(
    suite: Suite,
    family: &ForbiddenFamily,
    n_top: usize,
    classify: fn(&Graph) -> bool,
    literal: fn(&Graph) -> bool,
) -> Vec<Row> {
    let mut rows = Vec::new();
    for n in 1..=n_top {
        let graphs = analysis::all_graphs_up_to_iso(n).expect("within enumeration cap");
        let saturated: Vec<bool> = graphs.par_iter().map(|g| family.is_saturated(g)).collect();
        let mismatches: Vec<&Graph> = graphs
            .iter()
            .zip(&saturated)
            .filter(|(g, &s)| classify(g) != s)
            .map(|(g, _)| g)
            .collect();
        let literal_off: Vec<&Graph> = graphs
            .iter()
            .zip(&saturated)
            .filter(|(g, &s)| literal(g) != s)
            .map(|(g, _)| g)
            .collect();
        let sat_count = saturated.iter().filter(|&&s| s).count();
        let params = format!("n={n}");
        rows.push(Row::new(
            suite,
            "characterization",
            params.clone(),
            mismatches.is_empty(),
            format!(
                "{} graphs, {} saturated, {} mismatches{}",
                graphs.len(),
                sat_count,
                mismatches.len(),
                examples(&mismatches)
            ),
        ));
        if !literal_off.is_empty() {
            rows.push(Row {
                suite,
                check: "literal-reading".into(),
                params,
                verdict: Verdict::Deviation,
                detail: format!("{} graphs accepted but not saturated{}", literal_off.len(), examples(&literal_off)),
            });
        }
    }
    rows
}

fn examples(gs: &[&Graph]) -> String {
    if gs.is_empty() {
        return String::new();
    }
    let shown: Vec<String> = gs.iter().take(3).map(|g| g.to_graph6()).collect();
    format!(" e.g. {}", shown.join(" "))
}

fn p4_suite(opts: &VerifyOptions) -> Vec<Row> {
    let suite = Suite::P4;
    let mut rows = Vec::new();
    let family = ForbiddenFamily::Path(4);
    // Anchor values, confirmed independently by an unmemoized search in the
    // solver's tests.
    for (n, first, want) in [(4, Player::Prolonger, 2), (4, Player::Shortener, 3), (5, Player::Prolonger, 4), (5, Player::Shortener, 4)] {
        let params = format!("n={n} first={first}");
        match opts.solver(n, family.clone(), Variant::Standard).and_then(|s| s.solve(first)) {
            Ok(r) => rows.push(Row::new(suite, "anchor", params, r.score == want, format!("score {} expected {want}", r.score))),
            Err(e) => rows.push(unsolved(suite, "anchor", params, &e)),
        }
    }
    rows.extend(path_game_rows(suite, opts, Theorem::Path4, 4, 3..=8, (&ShortenerP4, &ProlongerP4)));
    rows.extend(characterization_rows(
        suite,
        &family,
        opts.n_max(7),
        |g| classify_p4_saturated(g).is_ok(),
        literal_p4_reading,
    ));
    rows
}

fn p5_suite(opts: &VerifyOptions) -> Vec<Row> {
    let suite = Suite::P5;
    let mut rows = path_game_rows(suite, opts, Theorem::Path5, 5, 4..=8, (&ShortenerP5, &ProlongerP5));
    rows.extend(characterization_rows(
        suite,
        &ForbiddenFamily::Path(5),
        opts.n_max(8),
        |g| classify_p5_saturated(g).is_ok(),
        literal_p5_reading,
    ));
    rows
}

fn trees_suite(opts: &VerifyOptions) -> Vec<Row> {
    let suite = Suite::Trees;
    let mut rows = Vec::new();
    let top = opts.n_max(9);
    for k in 3..=5 {
        let family = ForbiddenFamily::TreeFamily(k);
        for n in k..=top {
            let formula = tree_score_formula(n, k);
            let solver = match opts.solver(n, family.clone(), Variant::Standard) {
                Ok(s) => s,
                Err(e) => {
                    rows.push(unsolved(suite, "formula", format!("k={k} n={n}"), &e));
                    continue;
                }
            };
            for first in FIRSTS {
                let params = format!("k={k} n={n} first={first}");
                let result = solver.solve(first);
                match (&formula, result) {
                    (_, Err(e)) => rows.push(unsolved(suite, "formula", params, &e)),
                    (TreeScore::Exact(v), Ok(r)) => rows.push(Row::new(
                        suite,
                        "formula",
                        params,
                        r.score == *v,
                        format!("score {} formula {v}", r.score),
                    )),
                    (TreeScore::Interval(lo, hi), Ok(r)) => {
                        let x = q(r.score);
                        let inside = *lo <= x && x <= *hi;
                        rows.push(Row {
                            suite,
                            check: "interval".into(),
                            params: params.clone(),
                            verdict: if inside { Verdict::Pass } else { Verdict::Deviation },
                            detail: format!("score {} printed interval [{lo}, {hi}]", r.score),
                        });
                        let (flo, fhi) = tree_score_interval_floored(n, k);
                        rows.push(Row::new(
                            suite,
                            "interval-floored",
                            params,
                            flo <= r.score && r.score <= fhi,
                            format!("score {} in [{flo}, {fhi}]", r.score),
                        ));
                    }
                }
            }
        }
        // Saturated graphs: cliques below k, any two together at least k.
        for n in 1..=top {
            let sats = analysis::saturated_graphs(n, &family).expect("within cap");
            let bad = sats.iter().filter(|g| !tree_saturated_shape(g, k)).count();
            rows.push(Row::new(
                suite,
                "saturated-structure",
                format!("k={k} n={n}"),
                bad == 0,
                format!("{} saturated classes, {bad} off-structure", sats.len()),
            ));
        }
    }
    rows
}

fn tree_saturated_shape(g: &Graph, k: usize) -> bool {
    let comps = g.components();
    let sizes = comps.sizes();
    let cliques = comps.iter().all(|c| g.edges_within(c.members) == c.size() * (c.size() - 1) / 2);
    let small = sizes.iter().all(|&s| s < k);
    let pairs = sizes
        .iter()
        .enumerate()
        .all(|(i, &a)| sizes[i + 1..].iter().all(|&b| a + b >= k));
    cliques && small && pairs
}

fn pass_suite(opts: &VerifyOptions) -> Vec<Row> {
    let suite = Suite::Pass;
    let mut rows = Vec::new();
    let top = opts.n_max(7);
    for (n, k) in [(5, 4), (6, 4), (7, 4), (6, 5), (7, 5)] {
        if n > top {
            continue;
        }
        let (lo, hi) = theorem_window(Theorem::PassPath, n, Some(k));
        let family = ForbiddenFamily::Path(k);
        let solver = match opts.solver(n, family, Variant::ProlongerMayPass) {
            Ok(s) => s,
            Err(e) => {
                rows.push(unsolved(suite, "vs-traceable", format!("n={n} k={k}"), &e));
                continue;
            }
        };
        for first in FIRSTS {
            let params = format!("n={n} k={k} first={first}");
            let r = solver.best_response(&ProlongerTraceable, Player::Prolonger, first);
            rows.push(window_row(suite, "vs-traceable", params.clone(), r, Some(lo), None));
            rows.push(window_row(suite, "solve-window", params, solver.solve(first), Some(lo), Some(hi)));
        }
    }
    rows
}

fn star_suite(opts: &VerifyOptions) -> Vec<Row> {
    let suite = Suite::Star;
    let mut rows = Vec::new();
    let top = opts.n_max(8);
    for k in 1..=3usize {
        let family = ForbiddenFamily::Star(k + 1);
        for n in 2..=top {
            if (n as i64) < (3 * k as i64 + 1) * (k as i64 - 2) {
                continue;
            }
            let (lo, hi) = theorem_window(Theorem::Star, n, Some(k));
            let solver = match opts.solver(n, family.clone(), Variant::Standard) {
                Ok(s) => s,
                Err(e) => {
                    rows.push(unsolved(suite, "solve-window", format!("k={k} n={n}"), &e));
                    continue;
                }
            };
            for first in FIRSTS {
                let params = format!("k={k} n={n} first={first}");
                let r = solver.solve(first);
                rows.push(matching_parity(k, n, window_row(suite, "solve-window", params.clone(), r, Some(lo), Some(hi))));
                let r = solver.best_response(&ProlongerStarLex, Player::Prolonger, first);
                rows.push(matching_parity(k, n, window_row(suite, "vs-p-star", params, r, Some(lo), None)));
            }
        }
        // Low-degree vertices of a saturated graph form a clique.
        for n in 1..=top {
            let sats = analysis::saturated_graphs(n, &family).expect("within cap");
            let bad = sats
                .iter()
                .filter(|g| {
                    let low: Vec<usize> = (0..n).filter(|&v| g.degree(v) < k).collect();
                    low.iter().enumerate().any(|(i, &a)| low[i + 1..].iter().any(|&b| !g.has_edge(a, b)))
                })
                .count();
            rows.push(Row::new(
                suite,
                "low-degree-clique",
                format!("k={k} n={n}"),
                bad == 0,
                format!("{} saturated classes, {bad} violations", sats.len()),
            ));
        }
    }
    rows
}

/// At `k = 1` the game builds a matching, so for odd `n` the score is
/// `(n-1)/2`, half an edge under the printed lower bound `n/2`.
fn matching_parity(k: usize, n: usize, mut row: Row) -> Row {
    if k == 1 && n % 2 == 1 && row.verdict == Verdict::Fail {
        row.verdict = Verdict::Deviation;
        row.detail.push_str("; odd n matching");
    }
    row
}

fn algebra_suite(_: &VerifyOptions) -> Vec<Row> {
    let suite = Suite::Algebra;
    let mut rows = Vec::new();
    for n in [10usize, 100, 1000] {
        let mut bad = 0;
        let mut checked = 0;
        for k in 2..=50 {
            for (i, fi) in f_sequence(n, k).iter().enumerate() {
                checked += 1;
                if *fi != f_closed(n, k, i) {
                    bad += 1;
                }
            }
        }
        rows.push(Row::new(
            suite,
            "f-closed-form",
            format!("n={n} k=2..50"),
            bad == 0,
            format!("{checked} values, {bad} mismatches"),
        ));
    }
    let mut bad_identity = 0;
    let mut bad_min = 0;
    let mut bad_floor = 0;
    for k in 2..=20 {
        for n in k..=60 {
            let values: Vec<Q> = (0..n).map(|d| degree_sum_bound(n, k, d)).collect();
            bad_identity += (0..n).filter(|&d| values[d] != degree_sum_bound_two_sided(n, k, d)).count();
            let min = *values.iter().min().unwrap();
            if values[degree_sum_minimizer(k)] != min {
                bad_min += 1;
            }
            if min < Q::new((n * (k - 2)) as i128, 4) {
                bad_floor += 1;
            }
        }
    }
    rows.push(Row::new(suite, "degree-sum-identity", "k=2..20 n=k..60", bad_identity == 0, format!("{bad_identity} mismatches")));
    rows.push(Row::new(suite, "degree-sum-minimizer", "k=2..20 n=k..60", bad_min == 0, format!("{bad_min} mismatches")));
    rows.push(Row::new(suite, "degree-sum-floor", "k=2..20 n=k..60", bad_floor == 0, format!("{bad_floor} below n(k-2)/4")));
    rows
}

/// One fuzzed game: size, first mover, and an opponent from the pool.
struct Fuzz {
    n: usize,
    first: Player,
    opponent: Box<dyn Strategy>,
    rng: ChaCha8Rng,
}

fn fuzz(opts: &VerifyOptions, claim: u64, game: usize, n_min: usize, counterpart: fn() -> Box<dyn Strategy>) -> Fuzz {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ claim.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ (game as u64) << 20);
    let n = rng.random_range(n_min..=opts.fuzz_n_max.max(n_min));
    let first = if rng.random_bool(0.5) { Player::Prolonger } else { Player::Shortener };
    let opponent: Box<dyn Strategy> = match rng.random_range(0..8) {
        0 => Box::new(Baseline::GreedyMinComponent),
        1 => Box::new(Baseline::GreedyMaxComponent),
        2 => Box::new(LeastEdge),
        3 => counterpart(),
        _ => Box::new(Baseline::Random(rng.random())),
    };
    Fuzz { n, first, opponent, rng }
}

/// Play `opts.games` fuzzed games and apply `check` to each record.
fn claim_row(
    opts: &VerifyOptions,
    claim: &str,
    game: impl Fn(usize) -> Result<GameRecord, String> + Sync,
    check: impl Fn(&GameRecord) -> Result<(), ClaimViolation> + Sync,
) -> Row {
    let outcomes: Vec<Option<String>> = (0..opts.games)
        .into_par_iter()
        .map(|j| match game(j) {
            Err(e) => Some(format!("game {j}: {e}")),
            Ok(rec) => check(&rec).err().map(|v| format!("game {j}: {} at G_{} {}", v.claim, v.at, v.graph)),
        })
        .collect();
    let failures: Vec<&String> = outcomes.iter().flatten().collect();
    Row::new(
        Suite::Claims,
        claim,
        format!("games={} n<={} seed={}", opts.games, opts.fuzz_n_max, opts.seed),
        failures.is_empty(),
        match failures.first() {
            None => "0 violations".to_string(),
            Some(f) => format!("{} violations; first {f}", failures.len()),
        },
    )
}

fn claims_suite(opts: &VerifyOptions) -> Vec<Row> {
    let mut rows = Vec::new();
    let std = Variant::Standard;
    let err = |e: crate::game::PlayError| e.to_string();

    rows.push(claim_row(
        opts,
        "traceable",
        |j| {
            let mut f = fuzz(opts, 1, j, 3, || Box::new(ShortenerP4));
            let k = f.rng.random_range(3..=8);
            play(f.n, ForbiddenFamily::Path(k), Variant::ProlongerMayPass, f.first, &ProlongerTraceable, &*f.opponent).map_err(err)
        },
        check_traceable,
    ));
    rows.push(claim_row(
        opts,
        "single-cherry",
        |j| {
            let f = fuzz(opts, 2, j, 3, || Box::new(ProlongerP4));
            play(f.n, ForbiddenFamily::Path(4), std, f.first, &*f.opponent, &ShortenerP4).map_err(err)
        },
        check_single_cherry,
    ));
    rows.push(claim_row(
        opts,
        "new-vertices",
        |j| {
            let f = fuzz(opts, 3, j, 3, || Box::new(ShortenerP4));
            play(f.n, ForbiddenFamily::Path(4), std, f.first, &ProlongerP4, &*f.opponent).map_err(err)
        },
        check_new_vertices,
    ));
    rows.push(claim_row(
        opts,
        "four-vertex",
        |j| {
            let f = fuzz(opts, 4, j, 3, || Box::new(ProlongerP5));
            play(f.n, ForbiddenFamily::Path(5), std, f.first, &*f.opponent, &ShortenerP5).map_err(err)
        },
        check_four_vertex_components,
    ));
    rows.push(claim_row(
        opts,
        "standalone-triangle",
        |j| {
            let f = fuzz(opts, 5, j, 3, || Box::new(ShortenerP5));
            play(f.n, ForbiddenFamily::Path(5), std, f.first, &ProlongerP5, &*f.opponent).map_err(err)
        },
        check_standalone_triangles,
    ));
    let star_game = |id: u64, j: usize| {
        let mut f = fuzz(opts, id, j, 2, || Box::new(Baseline::GreedyMaxComponent));
        let k: usize = f.rng.random_range(2..=3);
        let n = if k == 3 { f.n.max(10) } else { f.n };
        play(n, ForbiddenFamily::Star(k + 1), std, f.first, &ProlongerStarLex, &*f.opponent).map_err(err)
    };
    rows.push(claim_row(opts, "star-min-degree", |j| star_game(6, j), check_star_min_degree));
    rows.push(claim_row(opts, "star-trace", |j| star_game(7, j), check_star_trace));
    rows
}

/// `lambda_i >= g_i / (k - i)` and `g_i <= f_i` along a star-game record.
pub fn check_star_trace(rec: &GameRecord) -> Result<(), ClaimViolation> {
    let ForbiddenFamily::Star(s) = rec.family else {
        return Ok(());
    };
    let k = s - 1;
    let fail = |claim: &'static str, at: usize| ClaimViolation {
        claim,
        at,
        graph: rec.terminal.to_edge_list(),
    };
    let stats = trace_stats(rec, k).map_err(|_| fail("replay", 0))?;
    if !stats.lambda_bound_holds() {
        return Err(fail("lambda-bound", 0));
    }
    if k >= 2 {
        let f = f_sequence(rec.n, k);
        for st in &stats.thresholds {
            if st.i < k && st.t.is_some() && q(st.g) > f[st.i] {
                return Err(fail("g-below-f", st.t.unwrap()));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyOptions {
        VerifyOptions {
            n_max: Some(5),
            games: 40,
            fuzz_n_max: 12,
            ..VerifyOptions::default()
        }
    }

    #[test]
    fn small_suites_pass() {
        for suite in Suite::ALL {
            for row in run(suite, &quick()) {
                assert!(matches!(row.verdict, Verdict::Pass | Verdict::Deviation), "{row:?}");
            }
        }
    }

    #[test]
    fn reports_are_repeatable() {
        let a = run(Suite::Claims, &quick());
        let b = run(Suite::Claims, &quick());
        assert_eq!(a, b);
        assert_eq!("algebra".parse::<Suite>().unwrap(), Suite::Algebra);
    }
}
