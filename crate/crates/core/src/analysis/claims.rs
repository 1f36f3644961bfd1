//! Invariants that the strategies are supposed to maintain, checked on a
//! finished game record. Each check returns the first violation.

use serde::Serialize;

use crate::family::ForbiddenFamily;
use crate::game::{GameError, GameRecord, Player};
use crate::graph::Graph;
use crate::shape::{has_triangle, is_standalone, shapes, Shape};
use crate::strategy::all_traceable;

use super::trace::isolated_consumption;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimViolation {
    pub claim: &'static str,
    /// Index into `G_0, G_1, ...` where it failed.
    pub at: usize,
    pub graph: String,
}

fn violation(claim: &'static str, at: usize, g: &Graph) -> ClaimViolation {
    ClaimViolation {
        claim,
        at,
        graph: g.to_edge_list(),
    }
}

/// Graphs right after each turn by `player`, with their sequence index.
fn after(rec: &GameRecord, graphs: &[Graph], player: Player) -> Vec<usize> {
    rec.turns
        .iter()
        .enumerate()
        .filter(|(_, t)| t.player == player)
        .map(|(i, _)| i + 1)
        .filter(|&i| i < graphs.len())
        .collect()
}

fn first_failure(
    claim: &'static str,
    graphs: &[Graph],
    at: impl IntoIterator<Item = usize>,
    ok: impl Fn(&Graph) -> bool,
) -> Result<(), ClaimViolation> {
    for i in at {
        if !ok(&graphs[i]) {
            return Err(violation(claim, i, &graphs[i]));
        }
    }
    Ok(())
}

fn graphs(rec: &GameRecord) -> Result<Vec<Graph>, ClaimViolation> {
    rec.graphs().map_err(|e: GameError| ClaimViolation {
        claim: "replay",
        at: 0,
        graph: e.to_string(),
    })
}

/// After each Prolonger turn every component is everywhere traceable.
pub fn check_traceable(rec: &GameRecord) -> Result<(), ClaimViolation> {
    let gs = graphs(rec)?;
    first_failure("traceable", &gs, after(rec, &gs, Player::Prolonger), all_traceable)
}

/// After each Prolonger turn there is at most one `K_{1,2}` component.
pub fn check_single_cherry(rec: &GameRecord) -> Result<(), ClaimViolation> {
    let gs = graphs(rec)?;
    first_failure("single-cherry", &gs, after(rec, &gs, Player::Prolonger), |g| {
        shapes(g).iter().filter(|(_, s)| s.is_cherry()).count() <= 1
    })
}

/// Over each Shortener turn followed by a Prolonger turn, at most three
/// isolated vertices are used, and two such consecutive pairs never both use
/// exactly three.
pub fn check_new_vertices(rec: &GameRecord) -> Result<(), ClaimViolation> {
    let gs = graphs(rec)?;
    let used = isolated_consumption(&gs);
    let mut previous_three = false;
    for i in 0..rec.turns.len().saturating_sub(1) {
        if rec.turns[i].player != Player::Shortener || rec.turns[i + 1].player != Player::Prolonger {
            continue;
        }
        let pair = used[i] + used[i + 1];
        if pair >= 4 || (pair == 3 && previous_three) {
            return Err(violation("new-vertices", i + 2, &gs[i + 2]));
        }
        previous_three = pair == 3;
    }
    Ok(())
}

/// In every position: at most one component on four vertices together with
/// at most one isolated edge, or no such component and at most two isolated
/// edges.
pub fn check_four_vertex_components(rec: &GameRecord) -> Result<(), ClaimViolation> {
    let gs = graphs(rec)?;
    first_failure("four-vertex", &gs, 0..gs.len(), |g| {
        let parts = shapes(g);
        let fours = parts.iter().filter(|(c, _)| c.size() == 4).count();
        let edges = parts.iter().filter(|(_, s)| *s == Shape::Edge).count();
        (fours <= 1 && edges <= 1) || (fours == 0 && edges <= 2)
    })
}

/// In the final graph every standalone component contains a triangle.
pub fn check_standalone_triangles(rec: &GameRecord) -> Result<(), ClaimViolation> {
    let g = rec.terminal;
    let ok = g
        .components()
        .iter()
        .all(|c| !is_standalone(&g, c) || has_triangle(&g, c.members));
    if ok {
        Ok(())
    } else {
        Err(violation("standalone-triangle", rec.turns.len(), &g))
    }
}

/// For the star `K_{1,k+1}` with `n >= (3k+1)(k-2)`: the final minimum degree
/// is at least `k - 2`. Records outside that range pass vacuously.
pub fn check_star_min_degree(rec: &GameRecord) -> Result<(), ClaimViolation> {
    let ForbiddenFamily::Star(s) = rec.family else {
        return Ok(());
    };
    let k = s as i64 - 1;
    let n = rec.n as i64;
    if n < (3 * k + 1) * (k - 2) {
        return Ok(());
    }
    if rec.terminal.min_degree() as i64 >= k - 2 {
        Ok(())
    } else {
        Err(violation("star-min-degree", rec.turns.len(), &rec.terminal))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{play, Variant};
    use crate::strategy::{Baseline, ProlongerP4, ProlongerP5, ProlongerTraceable, ShortenerP4, ShortenerP5};

    #[test]
    fn claims_on_sample_games() {
        for seed in 0..20 {
            let r = Baseline::Random(seed);
            for first in [Player::Prolonger, Player::Shortener] {
                let rec = play(12, ForbiddenFamily::Path(6), Variant::ProlongerMayPass, first, &ProlongerTraceable, &r).unwrap();
                check_traceable(&rec).unwrap();
                let rec = play(12, ForbiddenFamily::Path(4), Variant::Standard, first, &r, &ShortenerP4).unwrap();
                check_single_cherry(&rec).unwrap();
                let rec = play(12, ForbiddenFamily::Path(4), Variant::Standard, first, &ProlongerP4, &r).unwrap();
                check_new_vertices(&rec).unwrap();
                let rec = play(12, ForbiddenFamily::Path(5), Variant::Standard, first, &r, &ShortenerP5).unwrap();
                check_four_vertex_components(&rec).unwrap();
                let rec = play(12, ForbiddenFamily::Path(5), Variant::Standard, first, &ProlongerP5, &r).unwrap();
                check_standalone_triangles(&rec).unwrap();
            }
        }
    }

    fn scripted(n: usize, family: ForbiddenFamily, variant: Variant, actions: &[&str]) -> GameRecord {
        let mut state = crate::game::GameState::new(n, family.clone(), variant, Player::Prolonger).unwrap();
        let mut turns = Vec::new();
        for a in actions {
            let action: crate::game::Action = a.parse().unwrap();
            turns.push(crate::game::Turn { player: state.to_move(), action });
            state = state.apply(action).unwrap();
        }
        let terminal = *state.graph();
        GameRecord {
            n,
            family,
            variant,
            first_mover: Player::Prolonger,
            turns,
            score: terminal.edge_count(),
            terminal,
        }
    }

    #[test]
    fn detects_violations() {
        let p4 = ForbiddenFamily::Path(4);
        let rec = scripted(8, p4.clone(), Variant::Standard, &["0-1", "3-4", "1-2", "6-7", "4-5"]);
        assert_eq!(check_single_cherry(&rec).unwrap_err().at, 5);
        let rec = scripted(6, p4, Variant::ProlongerMayPass, &["pass", "0-1", "pass", "1-2", "pass"]);
        assert_eq!(check_traceable(&rec).unwrap_err().at, 5);
        let p5 = ForbiddenFamily::Path(5);
        let rec = scripted(9, p5, Variant::Standard, &["0-1", "2-3", "4-5", "6-7"]);
        assert_eq!(check_four_vertex_components(&rec).unwrap_err().at, 3);
    }
}
