//! Rule lists for the `P_4` and `P_5` games. Each rule offers a candidate set
//! and the least legal candidate is played; the first rule with a legal
//! candidate wins.

use std::ops::RangeBounds;

use super::{Strategy, View};
use crate::game::{Action, GameState, Player};
use crate::graph::{bit, members, VertexSet};
use crate::shape::{has_triangle, Shape};

fn first(view: &View, rules: impl IntoIterator<Item = Vec<(usize, usize)>>) -> Action {
    rules
        .into_iter()
        .find_map(|cands| view.pick(cands))
        .unwrap_or_else(|| view.fallback())
}

/// Centres of the stars `K_{1,m}` with `m` in `leaves`.
fn star_centres(view: &View, leaves: impl RangeBounds<usize>) -> Vec<usize> {
    view.sets_where(|s| matches!(s, Shape::Star { leaves: m, .. } if leaves.contains(&m)))
        .into_iter()
        .map(|(_, s)| match s {
            Shape::Star { center, .. } => center,
            _ => unreachable!(),
        })
        .collect()
}

fn edge_sets(view: &View) -> Vec<VertexSet> {
    view.sets_where(|s| s == Shape::Edge).into_iter().map(|(m, _)| m).collect()
}

fn edge_ends(view: &View) -> Vec<usize> {
    edge_sets(view).into_iter().flat_map(members).collect()
}

/// Closing edges of every `K_{1,2}`.
fn close_cherries(view: &View) -> Vec<(usize, usize)> {
    view.sets_where(Shape::is_cherry)
        .into_iter()
        .map(|(set, s)| {
            let Shape::Star { center, .. } = s else { unreachable!() };
            let mut leaves = members(set & !bit(center));
            (leaves.next().unwrap(), leaves.next().unwrap())
        })
        .collect()
}

/// Shortener in the `P_4` game: grow a `K_{1,2}` into `K_{1,3}`, draw an
/// isolated edge, grow a star, close a `K_{1,2}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ShortenerP4;

impl Strategy for ShortenerP4 {
    fn name(&self) -> String {
        "s-p4".into()
    }

    fn side(&self) -> Option<Player> {
        Some(Player::Shortener)
    }

    fn act(&self, state: &GameState) -> Action {
        let v = View::new(state);
        let mut centres = star_centres(&v, 2..);
        centres.extend(edge_ends(&v));
        first(
            &v,
            [
                v.to_isolated(star_centres(&v, 2..=2)),
                v.isolated_pairs(),
                v.to_isolated(centres),
                close_cherries(&v),
            ],
        )
    }
}

/// Prolonger in the `P_4` game: close a `K_{1,2}`, build a `K_{1,2}` from an
/// isolated edge, grow a star at its centre, draw an isolated edge.
#[derive(Clone, Copy, Debug, Default)]
pub struct ProlongerP4;

impl Strategy for ProlongerP4 {
    fn name(&self) -> String {
        "p-p4".into()
    }

    fn side(&self) -> Option<Player> {
        Some(Player::Prolonger)
    }

    fn act(&self, state: &GameState) -> Action {
        let v = View::new(state);
        first(
            &v,
            [
                close_cherries(&v),
                v.to_isolated(edge_ends(&v)),
                v.to_isolated(star_centres(&v, 2..)),
                v.isolated_pairs(),
            ],
        )
    }
}

/// Shortener in the `P_5` game.
#[derive(Clone, Copy, Debug, Default)]
pub struct ShortenerP5;

impl Strategy for ShortenerP5 {
    fn name(&self) -> String {
        "s-p5".into()
    }

    fn side(&self) -> Option<Player> {
        Some(Player::Shortener)
    }

    fn act(&self, state: &GameState) -> Action {
        let v = View::new(state);
        let edges = edge_sets(&v);
        // Vertices where an isolated vertex turns P4, K_{1,3} or T_1 into
        // D_{1,2} or T_2.
        let mut growth = Vec::new();
        for (set, s) in v.comps.iter().map(|c| c.members).zip(&v.shapes) {
            match *s {
                Shape::DoubleStar { a, b, k: 1, l: 1 } => growth.extend([a, b]),
                Shape::Star { center, leaves: 3 } => growth.extend(members(set & !bit(center))),
                Shape::PendantTriangle { hub, pendants: 1 } => growth.push(hub),
                _ => {}
            }
        }
        let big: Vec<usize> = v
            .comps
            .iter()
            .filter(|c| c.size() >= 5)
            .flat_map(|c| c.vertices())
            .collect();
        let cherries: Vec<VertexSet> = star_centres(&v, 2..=2)
            .into_iter()
            .map(bit)
            .collect();
        first(
            &v,
            [
                if v.isolated.is_empty() { v.between(&edges) } else { Vec::new() },
                v.to_isolated(growth),
                v.to_isolated(edge_ends(&v)),
                v.to_isolated(big),
                v.isolated_pairs(),
                v.between(&cherries),
            ],
        )
    }
}

/// Prolonger in the `P_5` game.
#[derive(Clone, Copy, Debug, Default)]
pub struct ProlongerP5;

impl Strategy for ProlongerP5 {
    fn name(&self) -> String {
        "p-p5".into()
    }

    fn side(&self) -> Option<Player> {
        Some(Player::Prolonger)
    }

    fn act(&self, state: &GameState) -> Action {
        let v = View::new(state);
        let g = v.g;
        let mut pendant_close = Vec::new();
        let mut triangle_free = Vec::new();
        for (set, s) in v.comps.iter().map(|c| c.members).zip(&v.shapes) {
            match *s {
                Shape::DoubleStar { a, b, k: 1, l: 2 } => {
                    let leaf = members(g.neighbors(a) & !bit(b)).next().unwrap();
                    pendant_close.push((leaf, b));
                }
                Shape::Star { center, leaves: 3 } => {
                    let leaves: Vec<usize> = members(set & !bit(center)).collect();
                    for (i, &x) in leaves.iter().enumerate() {
                        for &y in &leaves[i + 1..] {
                            pendant_close.push((x, y));
                        }
                    }
                }
                _ => {}
            }
            if set.count_ones() >= 3 && !has_triangle(g, set) {
                for x in members(set) {
                    for y in members(set & !bit(x)) {
                        if x < y && !g.has_edge(x, y) && g.neighbors(x) & g.neighbors(y) != 0 {
                            triangle_free.push((x, y));
                        }
                    }
                }
            }
        }
        let edges = edge_sets(&v);
        let rule = [
            pendant_close,
            triangle_free,
            v.between(&edges),
            v.to_isolated(edge_ends(&v)),
            v.isolated_pairs(),
        ];
        if let Some(a) = rule.into_iter().find_map(|c| v.pick(c)) {
            return a;
        }
        // Anything but hanging a new leaf on a star.
        let mut centres = star_centres(&v, 2..);
        centres.extend(edge_ends(&v));
        let grows_star = |x: usize, y: usize| {
            let iso = g.degree(x) == 0 || g.degree(y) == 0;
            iso && (centres.contains(&x) || centres.contains(&y))
        };
        v.pick(g.non_edges().filter(|&(x, y)| !grows_star(x, y)))
            .unwrap_or_else(|| v.fallback())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::ForbiddenFamily;
    use crate::strategy::test_util::state;

    fn p4(n: usize, edges: &[(usize, usize)], to_move: Player) -> GameState {
        state(n, edges, ForbiddenFamily::Path(4), to_move)
    }

    fn p5(n: usize, edges: &[(usize, usize)], to_move: Player) -> GameState {
        state(n, edges, ForbiddenFamily::Path(5), to_move)
    }

    #[test]
    fn shortener_p4_rules() {
        let s = Player::Shortener;
        // Cherry 0-1-2 with two isolated vertices: hang one on the centre.
        assert_eq!(ShortenerP4.act(&p4(5, &[(0, 1), (1, 2)], s)), Action::edge(1, 3));
        // No cherry, two isolated vertices: isolated edge.
        assert_eq!(ShortenerP4.act(&p4(6, &[(0, 1), (0, 2), (0, 3)], s)), Action::edge(4, 5));
        // Claw and one isolated vertex: grow the claw.
        assert_eq!(ShortenerP4.act(&p4(5, &[(0, 1), (0, 2), (0, 3)], s)), Action::edge(0, 4));
        // One isolated vertex and an isolated edge: attach to the edge.
        assert_eq!(ShortenerP4.act(&p4(3, &[(1, 2)], s)), Action::edge(0, 1));
        // Cherry next to a claw, nothing isolated: close the cherry.
        let g = [(0, 1), (1, 2), (3, 4), (3, 5), (3, 6)];
        assert_eq!(ShortenerP4.act(&p4(7, &g, s)), Action::edge(0, 2));
    }

    #[test]
    fn prolonger_p4_rules() {
        let p = Player::Prolonger;
        assert_eq!(ProlongerP4.act(&p4(6, &[(0, 1), (1, 2), (3, 4)], p)), Action::edge(0, 2));
        assert_eq!(ProlongerP4.act(&p4(4, &[(2, 3)], p)), Action::edge(0, 2));
        // Claw plus isolated vertex: grow the claw at its centre.
        assert_eq!(ProlongerP4.act(&p4(5, &[(4, 1), (4, 2), (4, 3)], p)), Action::edge(0, 4));
        assert_eq!(ProlongerP4.act(&p4(5, &[(0, 1), (1, 2), (0, 2)], p)), Action::edge(3, 4));
        assert_eq!(ProlongerP4.act(&p4(4, &[], p)), Action::edge(0, 1));
    }

    #[test]
    fn shortener_p5_rules() {
        let s = Player::Shortener;
        // P4 0-1-2-3 and an isolated vertex: attach at an inner vertex.
        assert_eq!(ShortenerP5.act(&p5(5, &[(0, 1), (1, 2), (2, 3)], s)), Action::edge(1, 4));
        // Claw: attach at a leaf.
        assert_eq!(ShortenerP5.act(&p5(5, &[(0, 1), (0, 2), (0, 3)], s)), Action::edge(1, 4));
        // T_1 with hub 2.
        let t1 = [(0, 1), (1, 2), (0, 2), (2, 3)];
        assert_eq!(ShortenerP5.act(&p5(5, &t1, s)), Action::edge(2, 4));
        // Isolated edge plus two isolated vertices.
        assert_eq!(ShortenerP5.act(&p5(4, &[(0, 1)], s)), Action::edge(0, 2));
        // T_2 (hub 0) and an isolated vertex: attach at the least legal vertex.
        let t2 = [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)];
        assert_eq!(ShortenerP5.act(&p5(6, &t2, s)), Action::edge(0, 5));
        // No isolated vertices: join two isolated edges.
        assert_eq!(ShortenerP5.act(&p5(4, &[(0, 1), (2, 3)], s)), Action::edge(0, 2));
        // Two cherries and nothing else: join the centres.
        let cherries = [(0, 1), (1, 2), (3, 4), (4, 5)];
        assert_eq!(ShortenerP5.act(&p5(6, &cherries, s)), Action::edge(1, 4));
    }

    #[test]
    fn prolonger_p5_rules() {
        let p = Player::Prolonger;
        assert_eq!(ProlongerP5.act(&p5(4, &[(0, 1), (0, 2), (0, 3)], p)), Action::edge(1, 2));
        // D_{1,2}: centre 1 with leaf 0, centre 2 with leaves 3, 4.
        let d12 = [(0, 1), (1, 2), (2, 3), (2, 4)];
        assert_eq!(ProlongerP5.act(&p5(5, &d12, p)), Action::edge(0, 2));
        assert_eq!(ProlongerP5.act(&p5(4, &[(0, 1), (1, 2), (2, 3)], p)), Action::edge(0, 2));
        assert_eq!(ProlongerP5.act(&p5(5, &[(0, 1), (3, 4)], p)), Action::edge(0, 3));
        assert_eq!(ProlongerP5.act(&p5(3, &[(1, 2)], p)), Action::edge(0, 1));
        assert_eq!(ProlongerP5.act(&p5(4, &[], p)), Action::edge(0, 1));
    }

    #[test]
    fn prolonger_p5_last_resort() {
        // K_4 and a triangle with one isolated vertex: the vertex can only go
        // on the triangle.
        let g = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 5), (5, 6), (4, 6)];
        assert_eq!(ProlongerP5.act(&p5(8, &g, Player::Prolonger)), Action::edge(4, 7));
    }
}
