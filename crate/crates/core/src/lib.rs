pub mod analysis;
pub mod family;
pub mod game;
pub mod graph;
pub mod shape;
pub mod solver;
pub mod strategy;
pub mod verify;

pub use family::{contains_subgraph, FamilyError, ForbiddenFamily, Move};
pub use game::{play, Action, GameError, GameRecord, GameState, PlayError, Player, Turn, Variant};
pub use graph::{CanonKey, Component, ComponentView, Graph, GraphError, VertexSet};
pub use shape::{labels, ComponentLabel, Shape};
pub use solver::{best_response, solve, PositionTable, SolveError, SolveResult, Solver, SolverConfig};
pub use strategy::{
    by_name, Baseline, LeastEdge, Optimal, ProlongerP4, ProlongerP5, ProlongerStarLex, ProlongerTraceable, ProlongerTrees,
    ShortenerP4, ShortenerP5, Strategy, StrategyError,
};
