//! The alternating edge-addition process and its records.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::family::{FamilyError, ForbiddenFamily, Move};
use crate::graph::{Graph, GraphError};
use crate::strategy::Strategy;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Prolonger,
    Shortener,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Prolonger => Player::Shortener,
            Player::Shortener => Player::Prolonger,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Player::Prolonger => "P",
            Player::Shortener => "S",
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Player {
    type Err = GameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "p" | "prolonger" => Ok(Player::Prolonger),
            "s" | "shortener" => Ok(Player::Shortener),
            _ => Err(GameError::Parse(format!("player {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Standard,
    /// Prolonger may decline to add an edge; Shortener must always move.
    ProlongerMayPass,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Standard => "standard",
            Variant::ProlongerMayPass => "pass",
        })
    }
}

impl FromStr for Variant {
    type Err = GameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "standard" => Ok(Variant::Standard),
            "pass" => Ok(Variant::ProlongerMayPass),
            _ => Err(GameError::Parse(format!("variant {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Action {
    Edge(Move),
    Pass,
}

impl Action {
    pub fn edge(u: usize, v: usize) -> Action {
        Action::Edge(Move::new(u, v))
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::Edge(m) => write!(f, "{m}"),
            Action::Pass => f.write_str("pass"),
        }
    }
}

impl FromStr for Action {
    type Err = GameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "pass" {
            return Ok(Action::Pass);
        }
        s.parse::<Move>()
            .map(Action::Edge)
            .map_err(|_| GameError::Parse(format!("action {s:?}")))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("position is not free of the forbidden family")]
    NotFree,
    #[error("the game is over")]
    GameOver,
    #[error("edge {0} would create a forbidden subgraph")]
    IllegalEdge(Move),
    #[error("Shortener may not pass")]
    ShortenerPass,
    #[error("passing is not allowed in the standard game")]
    PassNotAllowed,
    #[error("cannot parse {0}")]
    Parse(String),
}

/// A position: the current graph plus whose turn it is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameState {
    graph: Graph,
    to_move: Player,
    family: ForbiddenFamily,
    variant: Variant,
    first_mover: Player,
}

impl GameState {
    /// The opening position on `E_n`.
    pub fn new(
        n: usize,
        family: ForbiddenFamily,
        variant: Variant,
        first_mover: Player,
    ) -> Result<Self, GameError> {
        GameState::at(Graph::new_empty(n)?, first_mover, family, variant, first_mover)
    }

    /// An arbitrary position; the graph must be free of `family`.
    pub fn at(
        graph: Graph,
        to_move: Player,
        family: ForbiddenFamily,
        variant: Variant,
        first_mover: Player,
    ) -> Result<Self, GameError> {
        if !family.is_free(&graph) {
            return Err(GameError::NotFree);
        }
        Ok(GameState {
            graph,
            to_move,
            family,
            variant,
            first_mover,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn to_move(&self) -> Player {
        self.to_move
    }

    pub fn family(&self) -> &ForbiddenFamily {
        &self.family
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn first_mover(&self) -> Player {
        self.first_mover
    }

    /// The graph is saturated: no edge can be added.
    pub fn is_terminal(&self) -> bool {
        !self.family.has_legal_move(&self.graph)
    }

    pub fn may_pass(&self) -> bool {
        self.variant == Variant::ProlongerMayPass && self.to_move == Player::Prolonger
    }

    pub fn legal_moves(&self) -> Vec<Move> {
        self.family.legal_moves(&self.graph)
    }

    /// Legal edges in lexicographic order, then `Pass` where allowed.
    /// Empty exactly when the position is terminal.
    pub fn legal_actions(&self) -> Vec<Action> {
        let mut actions: Vec<Action> = self.legal_moves().into_iter().map(Action::Edge).collect();
        if !actions.is_empty() && self.may_pass() {
            actions.push(Action::Pass);
        }
        actions
    }

    /// Position after `action`, or why it is illegal.
    pub fn apply(&self, action: Action) -> Result<GameState, GameError> {
        if self.is_terminal() {
            return Err(GameError::GameOver);
        }
        let graph = match action {
            Action::Pass => {
                if self.variant == Variant::Standard {
                    return Err(GameError::PassNotAllowed);
                }
                if self.to_move == Player::Shortener {
                    return Err(GameError::ShortenerPass);
                }
                self.graph
            }
            Action::Edge(mv) => {
                if self.family.creates_forbidden(&self.graph, mv)? {
                    return Err(GameError::IllegalEdge(mv));
                }
                self.graph.with_edge(mv.u(), mv.v())
            }
        };
        Ok(GameState {
            graph,
            to_move: self.to_move.other(),
            family: self.family.clone(),
            variant: self.variant,
            first_mover: self.first_mover,
        })
    }

    /// Like [`apply`](Self::apply) but trusts the caller that `mv` is legal.
    pub(crate) fn apply_unchecked(&self, action: Action) -> GameState {
        let graph = match action {
            Action::Pass => self.graph,
            Action::Edge(mv) => self.graph.with_edge(mv.u(), mv.v()),
        };
        GameState {
            graph,
            to_move: self.to_move.other(),
            family: self.family.clone(),
            variant: self.variant,
            first_mover: self.first_mover,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Turn {
    pub player: Player,
    pub action: Action,
}

/// A finished game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameRecord {
    pub n: usize,
    pub family: ForbiddenFamily,
    pub variant: Variant,
    pub first_mover: Player,
    pub turns: Vec<Turn>,
    pub terminal: Graph,
    /// Edge count of the terminal graph.
    pub score: usize,
}

#[derive(Debug, Error)]
pub enum PlayError {
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("strategy {strategy} ({player}) chose illegal action {action} at {graph}: {reason}")]
    IllegalAction {
        strategy: String,
        player: Player,
        action: Action,
        graph: String,
        reason: GameError,
    },
}

/// Play one game from `E_n` until the graph is saturated.
pub fn play(
    n: usize,
    family: ForbiddenFamily,
    variant: Variant,
    first_mover: Player,
    prolonger: &dyn Strategy,
    shortener: &dyn Strategy,
) -> Result<GameRecord, PlayError> {
    let mut state = GameState::new(n, family.clone(), variant, first_mover)?;
    let mut turns = Vec::new();
    while !state.is_terminal() {
        let player = state.to_move();
        let strategy = match player {
            Player::Prolonger => prolonger,
            Player::Shortener => shortener,
        };
        let action = strategy.act(&state);
        state = state.apply(action).map_err(|reason| PlayError::IllegalAction {
            strategy: strategy.name(),
            player,
            action,
            graph: state.graph().to_edge_list(),
            reason,
        })?;
        turns.push(Turn { player, action });
    }
    let terminal = *state.graph();
    Ok(GameRecord {
        n,
        family,
        variant,
        first_mover,
        turns,
        score: terminal.edge_count(),
        terminal,
    })
}

#[derive(Serialize, Deserialize)]
struct WireTurn {
    player: String,
    #[serde(rename = "move")]
    action: String,
}

#[derive(Serialize, Deserialize)]
struct WireRecord {
    n: usize,
    family: ForbiddenFamily,
    variant: String,
    first: String,
    actions: Vec<WireTurn>,
    score: usize,
    terminal_graph6: String,
}

impl GameRecord {
    /// Graphs `G_0, G_1, ...` after each turn, starting from `E_n`.
    pub fn graphs(&self) -> Result<Vec<Graph>, GameError> {
        let mut state = GameState::new(self.n, self.family.clone(), self.variant, self.first_mover)?;
        let mut out = vec![*state.graph()];
        for turn in &self.turns {
            if turn.player != state.to_move() {
                return Err(GameError::Parse(format!("turn order broken at {}", turn.action)));
            }
            state = state.apply(turn.action)?;
            out.push(*state.graph());
        }
        Ok(out)
    }

    /// Replays the turns and checks the stored terminal graph and score.
    pub fn verify(&self) -> Result<(), GameError> {
        let graphs = self.graphs()?;
        let last = graphs.last().expect("at least the opening graph");
        if *last != self.terminal || self.score != last.edge_count() {
            return Err(GameError::Parse("terminal graph does not match the turns".into()));
        }
        if !self.family.is_saturated(last) {
            return Err(GameError::Parse("terminal graph is not saturated".into()));
        }
        Ok(())
    }

    pub fn to_json_line(&self) -> String {
        let wire = WireRecord {
            n: self.n,
            family: self.family.clone(),
            variant: self.variant.to_string(),
            first: self.first_mover.to_string(),
            actions: self
                .turns
                .iter()
                .map(|t| WireTurn {
                    player: t.player.to_string(),
                    action: t.action.to_string(),
                })
                .collect(),
            score: self.score,
            terminal_graph6: self.terminal.to_graph6(),
        };
        serde_json::to_string(&wire).expect("record serializes")
    }

    pub fn from_json_line(line: &str) -> Result<GameRecord, GameError> {
        let wire: WireRecord =
            serde_json::from_str(line).map_err(|e| GameError::Parse(e.to_string()))?;
        let turns = wire
            .actions
            .iter()
            .map(|t| {
                Ok(Turn {
                    player: t.player.parse()?,
                    action: t.action.parse()?,
                })
            })
            .collect::<Result<Vec<_>, GameError>>()?;
        Ok(GameRecord {
            n: wire.n,
            family: wire.family,
            variant: wire.variant.parse()?,
            first_mover: wire.first.parse()?,
            turns,
            terminal: Graph::from_graph6(&wire.terminal_graph6)?,
            score: wire.score,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strategy::{Baseline, LeastEdge};

    fn p4() -> ForbiddenFamily {
        ForbiddenFamily::Path(4)
    }

    #[test]
    fn terminal_positions() {
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let s = GameState::at(two_edges, Player::Prolonger, p4(), Variant::Standard, Player::Prolonger)
            .unwrap();
        assert!(s.is_terminal());
        let s = GameState::new(2, p4(), Variant::Standard, Player::Prolonger).unwrap();
        assert!(!s.is_terminal());
        // Two claws under P5: closing two leaves of a claw is still legal.
        let claws = Graph::from_edges(8, &[(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)]).unwrap();
        let s = GameState::at(
            claws,
            Player::Prolonger,
            ForbiddenFamily::Path(5),
            Variant::Standard,
            Player::Prolonger,
        )
        .unwrap();
        assert!(!s.is_terminal());
    }

    #[test]
    fn passing_rules() {
        let s = GameState::new(4, p4(), Variant::ProlongerMayPass, Player::Prolonger).unwrap();
        let t = s.apply(Action::Pass).unwrap();
        assert_eq!(t.graph(), s.graph());
        assert_eq!(t.to_move(), Player::Shortener);
        assert_eq!(t.apply(Action::Pass), Err(GameError::ShortenerPass));
        let std = GameState::new(4, p4(), Variant::Standard, Player::Prolonger).unwrap();
        assert_eq!(std.apply(Action::Pass), Err(GameError::PassNotAllowed));
    }

    #[test]
    fn illegal_edges() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        // Build a non-terminal state that still has the P4-closing edge.
        let g = g.disjoint_union(&Graph::new_empty(1).unwrap()).unwrap();
        let s = GameState::at(g, Player::Prolonger, p4(), Variant::Standard, Player::Prolonger).unwrap();
        assert_eq!(s.apply(Action::edge(1, 2)), Err(GameError::IllegalEdge(Move::new(1, 2))));
        assert!(matches!(s.apply(Action::edge(0, 1)), Err(GameError::Family(_))));
        let not_free = GameState::at(Graph::path(4).unwrap(), Player::Prolonger, p4(), Variant::Standard, Player::Prolonger);
        assert_eq!(not_free, Err(GameError::NotFree));
    }

    #[test]
    fn forced_games() {
        let fixed = LeastEdge;
        let rec = play(3, p4(), Variant::Standard, Player::Prolonger, &fixed, &fixed).unwrap();
        assert_eq!(rec.score, 3);
        let rec = play(4, ForbiddenFamily::TreeFamily(3), Variant::Standard, Player::Shortener, &fixed, &fixed)
            .unwrap();
        assert_eq!(rec.score, 2);
        let a = Baseline::Random(1);
        let rec = play(5, p4(), Variant::Standard, Player::Prolonger, &a, &a).unwrap();
        assert_eq!(rec.score, 4);
        rec.verify().unwrap();
        assert_eq!(rec.score, rec.turns.len());
    }

    #[test]
    fn json_line_round_trip() {
        let r = Baseline::Random(9);
        let rec = play(7, ForbiddenFamily::Path(5), Variant::ProlongerMayPass, Player::Shortener, &r, &r).unwrap();
        let line = rec.to_json_line();
        assert!(line.starts_with("{\"n\":7,\"family\":\"P5\",\"variant\":\"pass\",\"first\":\"S\""));
        assert_eq!(GameRecord::from_json_line(&line).unwrap(), rec);
    }
}
