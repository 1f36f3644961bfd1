//! Deterministic move rules for both players.
//!
//! Every strategy is a pure function of the position (plus a seed for the
//! random baseline), so a fixed strategy can be plugged into the solver as a
//! scripted side. Unless a rule says otherwise, ties go to the
//! lexicographically least edge.

mod baseline;
mod optimal;
mod paths;
mod star;
mod traceable;
mod trees;

use thiserror::Error;

use crate::family::{ForbiddenFamily, Move};
use crate::game::{Action, GameState, Player};
use crate::graph::{members, ComponentView, Graph, VertexSet};
use crate::shape::{shape_of, Shape};

pub use baseline::Baseline;
pub use optimal::Optimal;
pub use paths::{ProlongerP4, ProlongerP5, ShortenerP4, ShortenerP5};
pub use star::ProlongerStarLex;
pub use traceable::ProlongerTraceable;
pub(crate) use traceable::all_traceable;
pub use trees::ProlongerTrees;

pub trait Strategy: Send + Sync {
    fn name(&self) -> String;

    /// The side the rule was written for, if any.
    fn side(&self) -> Option<Player> {
        None
    }

    /// The action to take; always legal when the position is not terminal.
    fn act(&self, state: &GameState) -> Action;
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrategyError {
    #[error("unknown strategy {0:?}")]
    Unknown(String),
}

/// Resolve a command-line strategy name.
pub fn by_name(name: &str) -> Result<Box<dyn Strategy>, StrategyError> {
    let name = name.trim();
    if let Some(seed) = name.strip_prefix("random:") {
        let seed = seed
            .parse()
            .map_err(|_| StrategyError::Unknown(name.to_string()))?;
        return Ok(Box::new(Baseline::Random(seed)));
    }
    Ok(match name {
        "random" => Box::new(Baseline::Random(0)),
        "traceable" => Box::new(ProlongerTraceable),
        "s-p4" => Box::new(ShortenerP4),
        "p-p4" => Box::new(ProlongerP4),
        "s-p5" => Box::new(ShortenerP5),
        "p-p5" => Box::new(ProlongerP5),
        "p-trees" => Box::new(ProlongerTrees),
        "p-star" => Box::new(ProlongerStarLex),
        "greedy-min" => Box::new(Baseline::GreedyMinComponent),
        "greedy-max" => Box::new(Baseline::GreedyMaxComponent),
        "least" => Box::new(LeastEdge),
        "optimal" => Box::new(Optimal::new()),
        _ => return Err(StrategyError::Unknown(name.to_string())),
    })
}

/// Always the least legal edge.
#[derive(Clone, Copy, Debug, Default)]
pub struct LeastEdge;

impl Strategy for LeastEdge {
    fn name(&self) -> String {
        "least".into()
    }

    fn act(&self, state: &GameState) -> Action {
        View::new(state).fallback()
    }
}

/// A position with its components, shapes and isolated vertices computed
/// once, and helpers to pick the least legal edge from a candidate set.
pub(crate) struct View<'a> {
    pub g: &'a Graph,
    pub family: &'a ForbiddenFamily,
    pub comps: ComponentView,
    pub shapes: Vec<Shape>,
    pub isolated: Vec<usize>,
    may_pass: bool,
}

impl<'a> View<'a> {
    pub fn new(state: &'a GameState) -> Self {
        let g = state.graph();
        let comps = g.components();
        let shapes = comps.iter().map(|c| shape_of(g, c)).collect();
        View {
            g,
            family: state.family(),
            comps,
            shapes,
            isolated: members(g.isolated()).collect(),
            may_pass: state.may_pass(),
        }
    }

    pub fn legal(&self, u: usize, v: usize) -> bool {
        u != v && !self.g.has_edge(u, v) && !self.family.creates_with(self.g, &self.comps, u, v)
    }

    /// Least legal edge among `candidates`.
    pub fn pick<I: IntoIterator<Item = (usize, usize)>>(&self, candidates: I) -> Option<Action> {
        candidates
            .into_iter()
            .filter(|&(u, v)| self.legal(u, v))
            .map(|(u, v)| Move::new(u, v))
            .min()
            .map(Action::Edge)
    }

    pub fn least_legal(&self) -> Option<Action> {
        self.g
            .non_edges()
            .find(|&(u, v)| !self.family.creates_with(self.g, &self.comps, u, v))
            .map(|(u, v)| Action::edge(u, v))
    }

    /// Least legal edge, or a pass when nothing is legal.
    pub fn fallback(&self) -> Action {
        self.least_legal().unwrap_or(Action::Pass)
    }

    pub fn may_pass(&self) -> bool {
        self.may_pass
    }

    /// Components (as vertex sets) whose shape satisfies `pred`.
    pub fn sets_where(&self, pred: impl Fn(Shape) -> bool) -> Vec<(VertexSet, Shape)> {
        self.comps
            .iter()
            .zip(&self.shapes)
            .filter(|(_, s)| pred(**s))
            .map(|(c, s)| (c.members, *s))
            .collect()
    }

    /// Pairs of distinct isolated vertices.
    pub fn isolated_pairs(&self) -> Vec<(usize, usize)> {
        let iso = &self.isolated;
        let mut out = Vec::new();
        for (i, &a) in iso.iter().enumerate() {
            for &b in &iso[i + 1..] {
                out.push((a, b));
            }
        }
        out
    }

    /// Every vertex of `targets` paired with every isolated vertex.
    pub fn to_isolated(&self, targets: impl IntoIterator<Item = usize>) -> Vec<(usize, usize)> {
        let targets: Vec<usize> = targets.into_iter().collect();
        let mut out = Vec::new();
        for &t in &targets {
            for &w in &self.isolated {
                if w != t {
                    out.push((t, w));
                }
            }
        }
        out
    }

    /// Cross pairs between two different sets of `sets`.
    pub fn between(&self, sets: &[VertexSet]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &a) in sets.iter().enumerate() {
            for &b in &sets[i + 1..] {
                for x in members(a) {
                    for y in members(b) {
                        out.push((x, y));
                    }
                }
            }
        }
        out
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names() {
        for name in [
            "traceable", "s-p4", "p-p4", "s-p5", "p-p5", "p-trees", "p-star", "random:3", "greedy-min",
            "greedy-max", "optimal",
        ] {
            assert!(by_name(name).is_ok(), "{name}");
        }
        assert_eq!(by_name("random:x").err(), Some(StrategyError::Unknown("random:x".into())));
        assert!(by_name("minimax").is_err());
    }
}
