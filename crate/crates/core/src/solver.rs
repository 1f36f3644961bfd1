//! Exact game values by memoized minimax.
//!
//! Positions are graded by edge count, so the game graph is acyclic and every
//! table entry is the exact final score from that position. Pruning only
//! stops a node once its value has reached the best any child could give
//! (the edge maximum for Prolonger, one more edge for Shortener), so stored
//! values stay exact.

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use dashmap::DashMap;
use rayon::prelude::*;
use thiserror::Error;

use crate::family::ForbiddenFamily;
use crate::game::{Action, GameError, GameState, Player, Variant};
use crate::graph::Graph;
use crate::strategy::Strategy;

/// Largest `n` the solver accepts under any configuration; keys are 120-bit
/// adjacency triangles.
pub const HARD_MAX_N: usize = 16;

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Refuse larger games; clamped to [`HARD_MAX_N`].
    pub max_n: usize,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    /// Evaluate the root's children on the rayon pool.
    pub parallel: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_n: 10,
            node_limit: None,
            time_limit: None,
            parallel: true,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("n = {n} exceeds the solver cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("time limit of {0:?} reached")]
    Timeout(Duration),
    #[error("node limit of {0} reached")]
    NodeLimit(u64),
    #[error("strategy {strategy} chose {action} at {graph}: {reason}")]
    IllegalStrategyAction {
        strategy: String,
        action: Action,
        graph: String,
        reason: GameError,
    },
    #[error(transparent)]
    Game(#[from] GameError),
}

impl SolveError {
    /// A resource limit rather than a fault.
    pub fn is_limit(&self) -> bool {
        matches!(self, SolveError::CapExceeded { .. } | SolveError::Timeout(_) | SolveError::NodeLimit(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub score: usize,
    /// One optimal line from the opening position; it ends in a saturated
    /// graph with `score` edges.
    pub principal_variation: Vec<Action>,
    pub positions_expanded: u64,
    pub elapsed: Duration,
}

impl SolveResult {
    /// Replay the principal variation and return the terminal graph.
    pub fn replay(&self, start: &GameState) -> Result<Graph, GameError> {
        let mut s = start.clone();
        for &a in &self.principal_variation {
            s = s.apply(a)?;
        }
        Ok(*s.graph())
    }
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("not a position table")]
    BadMagic,
    #[error("unsupported table version {0}")]
    Version(u16),
    #[error("table is for {found}, expected {expected}")]
    Mismatch { found: String, expected: String },
    #[error("truncated or corrupt table")]
    Corrupt,
}

const MAGIC: &[u8; 8] = b"SATGPTBL";
const VERSION: u16 = 1;

/// Exact values of canonical positions for one `(family, variant, n)`.
pub struct PositionTable {
    family: String,
    variant: Variant,
    n: usize,
    map: DashMap<(u128, Player), u8>,
}

impl PositionTable {
    pub fn new(n: usize, family: &ForbiddenFamily, variant: Variant) -> Self {
        PositionTable {
            family: family.to_string(),
            variant,
            n,
            map: DashMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn clear(&self) {
        self.map.clear();
    }

    fn describe(&self) -> String {
        format!("{} {} n={}", self.family, self.variant, self.n)
    }

    /// Write the table, entries sorted so equal tables give equal files.
    pub fn save(&self, path: &Path) -> Result<(), TableError> {
        let mut entries: Vec<((u128, Player), u8)> = self.map.iter().map(|e| (*e.key(), *e.value())).collect();
        entries.sort_unstable();
        let mut buf = Vec::with_capacity(32 + entries.len() * 18);
        buf.extend_from_slice(MAGIC);
        buf.extend_from_slice(&VERSION.to_le_bytes());
        buf.extend_from_slice(&(self.family.len() as u16).to_le_bytes());
        buf.extend_from_slice(self.family.as_bytes());
        buf.push(matches!(self.variant, Variant::ProlongerMayPass) as u8);
        buf.push(self.n as u8);
        buf.extend_from_slice(&(entries.len() as u64).to_le_bytes());
        for ((key, player), value) in entries {
            buf.extend_from_slice(&key.to_le_bytes());
            buf.push((player == Player::Shortener) as u8);
            buf.push(value);
        }
        let mut file = fs::File::create(path)?;
        file.write_all(&buf)?;
        Ok(())
    }

    /// Load a saved table; a missing file gives an empty one.
    pub fn load(path: &Path, n: usize, family: &ForbiddenFamily, variant: Variant) -> Result<Self, TableError> {
        let table = PositionTable::new(n, family, variant);
        let mut bytes = Vec::new();
        match fs::File::open(path) {
            Ok(mut f) => f.read_to_end(&mut bytes)?,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(table),
            Err(e) => return Err(e.into()),
        };
        let mut r = Reader(&bytes);
        if r.take(8)? != MAGIC {
            return Err(TableError::BadMagic);
        }
        let version = u16::from_le_bytes(r.take(2)?.try_into().unwrap());
        if version != VERSION {
            return Err(TableError::Version(version));
        }
        let flen = u16::from_le_bytes(r.take(2)?.try_into().unwrap()) as usize;
        let fam = String::from_utf8(r.take(flen)?.to_vec()).map_err(|_| TableError::Corrupt)?;
        let header = r.take(2)?;
        let found = PositionTable {
            family: fam,
            variant: if header[0] == 1 { Variant::ProlongerMayPass } else { Variant::Standard },
            n: header[1] as usize,
            map: DashMap::new(),
        };
        if (found.family.as_str(), found.variant, found.n) != (table.family.as_str(), table.variant, table.n) {
            return Err(TableError::Mismatch {
                found: found.describe(),
                expected: table.describe(),
            });
        }
        let count = u64::from_le_bytes(r.take(8)?.try_into().unwrap());
        for _ in 0..count {
            let key = u128::from_le_bytes(r.take(16)?.try_into().unwrap());
            let rest = r.take(2)?;
            let player = if rest[0] == 1 { Player::Shortener } else { Player::Prolonger };
            table.map.insert((key, player), rest[1]);
        }
        if !r.0.is_empty() {
            return Err(TableError::Corrupt);
        }
        Ok(table)
    }
}

struct Reader<'a>(&'a [u8]);

impl<'a> Reader<'a> {
    fn take(&mut self, k: usize) -> Result<&'a [u8], TableError> {
        if self.0.len() < k {
            return Err(TableError::Corrupt);
        }
        let (head, tail) = self.0.split_at(k);
        self.0 = tail;
        Ok(head)
    }
}

/// Who chooses at a node.
#[derive(Clone, Copy)]
enum Mode<'a> {
    Minimax,
    /// `side` follows `strategy`; the other side optimizes.
    Scripted { strategy: &'a dyn Strategy, side: Player },
}

struct Search<'a> {
    table: &'a DashMap<(u128, Player), u8>,
    mode: Mode<'a>,
    ceiling: usize,
    expanded: AtomicU64,
    node_limit: Option<u64>,
    deadline: Option<(Instant, Duration)>,
}

impl Search<'_> {
    fn key(&self, g: &Graph) -> u128 {
        match self.mode {
            Mode::Minimax => g.canonical_bits(),
            Mode::Scripted { .. } => g.triangle_bits(),
        }
    }

    fn tick(&self) -> Result<(), SolveError> {
        let count = self.expanded.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(limit) = self.node_limit {
            if count > limit {
                return Err(SolveError::NodeLimit(limit));
            }
        }
        if let Some((deadline, budget)) = self.deadline {
            if count % 256 == 0 && Instant::now() > deadline {
                return Err(SolveError::Timeout(budget));
            }
        }
        Ok(())
    }

    /// The scripted action at `state`, checked for legality.
    fn scripted(&self, strategy: &dyn Strategy, state: &GameState) -> Result<Action, SolveError> {
        let action = strategy.act(state);
        state
            .apply(action)
            .map_err(|reason| SolveError::IllegalStrategyAction {
                strategy: strategy.name(),
                action,
                graph: state.graph().to_edge_list(),
                reason,
            })?;
        Ok(action)
    }

    /// Candidate actions in search order: Prolonger tries joining moves
    /// first, Shortener tries moves inside a component first. Passing comes
    /// last.
    fn ordered_actions(&self, state: &GameState) -> Vec<Action> {
        let g = state.graph();
        let moves = state.legal_moves();
        if moves.is_empty() {
            return Vec::new();
        }
        let comps = g.components();
        let prolonger = state.to_move() == Player::Prolonger;
        let (mut first, second): (Vec<_>, Vec<_>) = moves
            .into_iter()
            .partition(|m| comps.same(m.u(), m.v()) != prolonger);
        first.extend(second);
        let mut actions: Vec<Action> = first.into_iter().map(Action::Edge).collect();
        if state.may_pass() {
            actions.push(Action::Pass);
        }
        actions
    }

    /// Actions the player to move actually considers.
    fn choices(&self, state: &GameState) -> Result<Vec<Action>, SolveError> {
        match self.mode {
            Mode::Scripted { strategy, side } if side == state.to_move() => {
                if state.is_terminal() {
                    Ok(Vec::new())
                } else {
                    Ok(vec![self.scripted(strategy, state)?])
                }
            }
            _ => Ok(self.ordered_actions(state)),
        }
    }

    fn value(&self, state: &GameState) -> Result<usize, SolveError> {
        self.node(state, false)
    }

    fn node(&self, state: &GameState, parallel: bool) -> Result<usize, SolveError> {
        let key = (self.key(state.graph()), state.to_move());
        if let Some(v) = self.table.get(&key) {
            return Ok(*v as usize);
        }
        self.tick()?;
        let actions = self.choices(state)?;
        let value = if actions.is_empty() {
            state.graph().edge_count()
        } else {
            self.combine(state, &actions, parallel)?
        };
        self.table.insert(key, value as u8);
        Ok(value)
    }

    /// Best child value for the player to move; `parallel` evaluates every
    /// child on the rayon pool without cutoffs.
    fn combine(&self, state: &GameState, actions: &[Action], parallel: bool) -> Result<usize, SolveError> {
        let maximize = state.to_move() == Player::Prolonger;
        let target = if maximize { self.ceiling } else { state.graph().edge_count() + 1 };
        let better = |a: usize, b: usize| if maximize { a > b } else { a < b };
        if parallel && actions.len() > 1 {
            let values: Result<Vec<usize>, SolveError> = actions
                .par_iter()
                .map(|&a| self.value(&state.apply_unchecked(a)))
                .collect();
            let values = values?;
            let best = if maximize { values.iter().max() } else { values.iter().min() };
            return Ok(*best.unwrap());
        }
        let mut best: Option<usize> = None;
        for &a in actions {
            let v = self.value(&state.apply_unchecked(a))?;
            if best.is_none_or(|b| better(v, b)) {
                best = Some(v);
            }
            if best == Some(target) {
                break;
            }
        }
        Ok(best.unwrap())
    }

    /// One optimal line: at each step the first action (in lexicographic
    /// order, pass last) whose child keeps the value.
    fn principal_variation(&self, start: &GameState, score: usize) -> Result<Vec<Action>, SolveError> {
        let mut pv = Vec::new();
        let mut state = start.clone();
        loop {
            let actions = match self.mode {
                Mode::Scripted { side, .. } if side == state.to_move() => self.choices(&state)?,
                _ => state.legal_actions(),
            };
            if actions.is_empty() {
                return Ok(pv);
            }
            let mut next = None;
            for a in actions {
                let child = state.apply_unchecked(a);
                if self.value(&child)? == score {
                    next = Some((a, child));
                    break;
                }
            }
            let (a, child) = next.expect("some child attains the node value");
            pv.push(a);
            state = child;
        }
    }
}

/// Solver for one game size, family and variant, with its position table.
pub struct Solver {
    n: usize,
    family: ForbiddenFamily,
    variant: Variant,
    config: SolverConfig,
    table: Arc<PositionTable>,
}

impl Solver {
    pub fn new(n: usize, family: ForbiddenFamily, variant: Variant, config: SolverConfig) -> Result<Self, SolveError> {
        let table = Arc::new(PositionTable::new(n, &family, variant));
        Solver::with_table(n, family, variant, config, table)
    }

    /// Reuse `table`, e.g. one loaded from disk.
    pub fn with_table(
        n: usize,
        family: ForbiddenFamily,
        variant: Variant,
        config: SolverConfig,
        table: Arc<PositionTable>,
    ) -> Result<Self, SolveError> {
        let cap = config.max_n.min(HARD_MAX_N);
        if n == 0 || n > cap {
            return Err(SolveError::CapExceeded { n, cap });
        }
        Ok(Solver {
            n,
            family,
            variant,
            config,
            table,
        })
    }

    pub fn table(&self) -> &Arc<PositionTable> {
        &self.table
    }

    pub fn config(&self) -> &SolverConfig {
        &self.config
    }

    fn search<'a>(&'a self, table: &'a DashMap<(u128, Player), u8>, mode: Mode<'a>) -> Search<'a> {
        let all = self.n * (self.n - 1) / 2;
        Search {
            table,
            mode,
            ceiling: self.family.max_edges(self.n).min(all),
            expanded: AtomicU64::new(0),
            node_limit: self.config.node_limit,
            deadline: self.config.time_limit.map(|t| (Instant::now() + t, t)),
        }
    }

    fn opening(&self, first: Player) -> Result<GameState, SolveError> {
        Ok(GameState::new(self.n, self.family.clone(), self.variant, first)?)
    }

    /// The exact score under optimal play by both sides.
    pub fn solve(&self, first: Player) -> Result<SolveResult, SolveError> {
        let started = Instant::now();
        let search = self.search(&self.table.map, Mode::Minimax);
        let start = self.opening(first)?;
        let score = search.node(&start, self.config.parallel)?;
        let principal_variation = search.principal_variation(&start, score)?;
        Ok(SolveResult {
            score,
            principal_variation,
            positions_expanded: search.expanded.load(Ordering::Relaxed),
            elapsed: started.elapsed(),
        })
    }

    /// Exact value of an arbitrary free position on `n` vertices.
    pub fn value(&self, g: &Graph, to_move: Player) -> Result<usize, SolveError> {
        if g.n() != self.n {
            return Err(SolveError::Game(GameError::Parse(format!("graph on {} vertices, solver for {}", g.n(), self.n))));
        }
        let state = GameState::at(*g, to_move, self.family.clone(), self.variant, to_move)?;
        let search = self.search(&self.table.map, Mode::Minimax);
        search.node(&state, false)
    }

    /// The score when `side` follows `fixed` and the opponent plays
    /// optimally against it.
    pub fn best_response(&self, fixed: &dyn Strategy, side: Player, first: Player) -> Result<SolveResult, SolveError> {
        let started = Instant::now();
        let table = DashMap::new();
        let search = self.search(&table, Mode::Scripted { strategy: fixed, side });
        let start = self.opening(first)?;
        let score = search.node(&start, self.config.parallel)?;
        let principal_variation = search.principal_variation(&start, score)?;
        Ok(SolveResult {
            score,
            principal_variation,
            positions_expanded: search.expanded.load(Ordering::Relaxed),
            elapsed: started.elapsed(),
        })
    }
}

/// [`Solver::solve`] with the default configuration.
pub fn solve(n: usize, family: ForbiddenFamily, variant: Variant, first: Player) -> Result<SolveResult, SolveError> {
    Solver::new(n, family, variant, SolverConfig::default())?.solve(first)
}

/// [`Solver::best_response`] with the default configuration.
pub fn best_response(
    n: usize,
    family: ForbiddenFamily,
    variant: Variant,
    fixed: &dyn Strategy,
    side: Player,
    first: Player,
) -> Result<SolveResult, SolveError> {
    Solver::new(n, family, variant, SolverConfig::default())?.best_response(fixed, side, first)
}
