//! Forbidden families and the legality of edge additions.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{bit, members, ComponentView, Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{kind} parameter must be at least 2, got {value}")]
    Parameter { kind: &'static str, value: usize },
    #[error("forbidden graphs must be connected and non-empty")]
    DisconnectedMember,
    #[error("explicit family is empty")]
    EmptyList,
    #[error("cannot parse family {0:?}")]
    Parse(String),
    #[error("edge {0} is already present")]
    EdgePresent(Move),
    #[error("edge {0} is out of range for a graph on {1} vertices")]
    EdgeOutOfRange(Move, usize),
}

/// A family `F` of forbidden subgraphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ForbiddenFamily {
    /// The path on `k` vertices.
    Path(usize),
    /// Every tree on `k` vertices.
    TreeFamily(usize),
    /// The star `K_{1,s}`.
    Star(usize),
    ExplicitList(Arc<[Graph]>),
}

/// An edge `u-v`, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    u: u8,
    v: u8,
}

impl Move {
    pub fn new(a: usize, b: usize) -> Move {
        assert!(a != b && a < 64 && b < 64, "invalid move {a}-{b}");
        Move {
            u: a.min(b) as u8,
            v: a.max(b) as u8,
        }
    }

    #[inline]
    pub fn u(self) -> usize {
        self.u as usize
    }

    #[inline]
    pub fn v(self) -> usize {
        self.v as usize
    }

    #[inline]
    pub fn ends(self) -> (usize, usize) {
        (self.u(), self.v())
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl FromStr for Move {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::Parse(s.to_string());
        let (a, b) = s.split_once('-').ok_or_else(bad)?;
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if a == b || a >= 64 || b >= 64 {
            return Err(bad());
        }
        Ok(Move::new(a, b))
    }
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Is there a simple path on `need` vertices that starts at `v` and then
/// continues through `allowed` only? `v` itself must not be in `allowed`.
fn path_from(g: &Graph, v: usize, allowed: VertexSet, need: usize) -> bool {
    if need <= 1 {
        return true;
    }
    if (allowed.count_ones() as usize) + 1 < need {
        return false;
    }
    members(g.neighbors(v) & allowed).any(|w| path_from(g, w, allowed & !bit(w), need - 1))
}

/// Number of vertices on the longest path starting at `v` inside `allowed`
/// (which excludes `v`), stopping early once `cap` is reached.
fn longest_from(g: &Graph, v: usize, allowed: VertexSet, cap: usize) -> usize {
    if cap <= 1 {
        return 1;
    }
    let mut best = 1;
    for w in members(g.neighbors(v) & allowed) {
        best = best.max(1 + longest_from(g, w, allowed & !bit(w), cap - 1));
        if best >= cap {
            break;
        }
    }
    best
}

/// Extends the `u`-side of a path through the new edge `uv` and asks whether
/// the `v`-side can supply the remaining vertices.
fn through_edge(g: &Graph, end: usize, used: VertexSet, v: usize, within: VertexSet, k: usize) -> bool {
    let have = used.count_ones() as usize;
    if path_from(g, v, within & !used & !bit(v), k - have) {
        return true;
    }
    if have + 1 >= k {
        return false;
    }
    members(g.neighbors(end) & within & !used & !bit(v))
        .any(|w| through_edge(g, w, used | bit(w), v, within, k))
}

fn has_path(g: &Graph, set: VertexSet, k: usize) -> bool {
    members(set).any(|v| path_from(g, v, set & !bit(v), k))
}

/// Order `h`'s vertices so that each one after the first has as many
/// already-placed neighbours as possible.
fn embedding_order(h: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(h.n());
    let mut placed: VertexSet = 0;
    while order.len() < h.n() {
        let next = (0..h.n())
            .filter(|&x| placed & bit(x) == 0)
            .max_by_key(|&x| ((h.neighbors(x) & placed).count_ones(), h.degree(x), usize::MAX - x))
            .expect("unplaced vertex exists");
        placed |= bit(next);
        order.push(next);
    }
    order
}

fn extend_embedding(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    let mut cand = g.vertices() & !used;
    for y in members(h.neighbors(x)) {
        if image[y] != usize::MAX {
            cand &= g.neighbors(image[y]);
        }
    }
    let need = h.degree(x);
    for c in members(cand) {
        if g.degree(c) < need {
            continue;
        }
        image[x] = c;
        if extend_embedding(g, h, order, depth + 1, image, used | bit(c)) {
            return true;
        }
    }
    image[x] = usize::MAX;
    false
}

/// True iff `h` is isomorphic to a (not necessarily induced) subgraph of `g`.
pub fn contains_subgraph(g: &Graph, h: &Graph) -> bool {
    if h.n() > g.n() || h.edge_count() > g.edge_count() || h.max_degree() > g.max_degree() {
        return false;
    }
    let order = embedding_order(h);
    let mut image = vec![usize::MAX; h.n()];
    extend_embedding(g, h, &order, 0, &mut image, 0)
}

impl ForbiddenFamily {
    pub fn path(k: usize) -> Result<Self, FamilyError> {
        if k < 2 {
            return Err(FamilyError::Parameter { kind: "path", value: k });
        }
        Ok(ForbiddenFamily::Path(k))
    }

    pub fn trees(k: usize) -> Result<Self, FamilyError> {
        if k < 2 {
            return Err(FamilyError::Parameter { kind: "tree", value: k });
        }
        Ok(ForbiddenFamily::TreeFamily(k))
    }

    /// Forbid `K_{1,s}`, i.e. require maximum degree below `s`.
    pub fn star(s: usize) -> Result<Self, FamilyError> {
        if s < 2 {
            return Err(FamilyError::Parameter { kind: "star", value: s });
        }
        Ok(ForbiddenFamily::Star(s))
    }

    pub fn list(graphs: Vec<Graph>) -> Result<Self, FamilyError> {
        if graphs.is_empty() {
            return Err(FamilyError::EmptyList);
        }
        if graphs.iter().any(|h| !h.is_connected_set(h.vertices())) {
            return Err(FamilyError::DisconnectedMember);
        }
        Ok(ForbiddenFamily::ExplicitList(graphs.into()))
    }

    pub fn is_free(&self, g: &Graph) -> bool {
        match self {
            ForbiddenFamily::Path(k) => g
                .components()
                .iter()
                .filter(|c| c.size() >= *k)
                .all(|c| !has_path(g, c.members, *k)),
            ForbiddenFamily::TreeFamily(k) => g.components().iter().all(|c| c.size() < *k),
            ForbiddenFamily::Star(s) => g.max_degree() < *s,
            ForbiddenFamily::ExplicitList(list) => list.iter().all(|h| !contains_subgraph(g, h)),
        }
    }

    /// Would adding `mv` to the `F`-free graph `g` create a member of `F`?
    pub fn creates_forbidden(&self, g: &Graph, mv: Move) -> Result<bool, FamilyError> {
        let (u, v) = mv.ends();
        if v >= g.n() {
            return Err(FamilyError::EdgeOutOfRange(mv, g.n()));
        }
        if g.has_edge(u, v) {
            return Err(FamilyError::EdgePresent(mv));
        }
        Ok(self.creates_with(g, &g.components(), u, v))
    }

    /// `creates_forbidden` with precomputed components; `uv` must be absent.
    pub(crate) fn creates_with(&self, g: &Graph, comps: &ComponentView, u: usize, v: usize) -> bool {
        match self {
            ForbiddenFamily::Path(k) => {
                let k = *k;
                let cu = comps.of(u);
                if comps.same(u, v) {
                    if cu.size() < k {
                        return false;
                    }
                    through_edge(g, u, bit(u), v, cu.members, k)
                } else {
                    let cv = comps.of(v);
                    if cu.size() + cv.size() < k {
                        return false;
                    }
                    let a = longest_from(g, u, cu.members & !bit(u), k);
                    let b = longest_from(g, v, cv.members & !bit(v), k);
                    a + b >= k
                }
            }
            ForbiddenFamily::TreeFamily(k) => {
                !comps.same(u, v) && comps.of(u).size() + comps.of(v).size() >= *k
            }
            ForbiddenFamily::Star(s) => g.degree(u) + 1 >= *s || g.degree(v) + 1 >= *s,
            ForbiddenFamily::ExplicitList(_) => !self.is_free(&g.with_edge(u, v)),
        }
    }

    /// Every absent edge whose addition keeps `g` free, in lexicographic order.
    pub fn legal_moves(&self, g: &Graph) -> Vec<Move> {
        let comps = g.components();
        g.non_edges()
            .filter(|&(u, v)| !self.creates_with(g, &comps, u, v))
            .map(|(u, v)| Move::new(u, v))
            .collect()
    }

    pub fn has_legal_move(&self, g: &Graph) -> bool {
        let comps = g.components();
        g.non_edges().any(|(u, v)| !self.creates_with(g, &comps, u, v))
    }

    /// Free and maximal: no legal edge remains.
    pub fn is_saturated(&self, g: &Graph) -> bool {
        self.is_free(g) && !self.has_legal_move(g)
    }

    /// An upper bound on the edge count of any free graph on `n` vertices.
    pub fn max_edges(&self, n: usize) -> usize {
        let all = choose2(n);
        match self {
            ForbiddenFamily::Path(k) => all.min(n * (k - 1) / 2),
            ForbiddenFamily::TreeFamily(k) => {
                let q = n / (k - 1);
                q * choose2(k - 1) + choose2(n - q * (k - 1))
            }
            ForbiddenFamily::Star(s) => all.min(n * (s - 1) / 2),
            ForbiddenFamily::ExplicitList(_) => all,
        }
    }
}

impl fmt::Display for ForbiddenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForbiddenFamily::Path(k @ (4 | 5)) => write!(f, "P{k}"),
            ForbiddenFamily::Path(k) => write!(f, "Pk:{k}"),
            ForbiddenFamily::TreeFamily(k) => write!(f, "Trees:{k}"),
            ForbiddenFamily::Star(s) => write!(f, "Star:{s}"),
            ForbiddenFamily::ExplicitList(list) => {
                let g6: Vec<String> = list.iter().map(Graph::to_graph6).collect();
                write!(f, "List:{}", g6.join(","))
            }
        }
    }
}

impl FromStr for ForbiddenFamily {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::Parse(s.to_string());
        let number = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("Pk:") {
            return ForbiddenFamily::path(number(rest)?);
        }
        if let Some(rest) = s.strip_prefix("Trees:") {
            return ForbiddenFamily::trees(number(rest)?);
        }
        if let Some(rest) = s.strip_prefix("Star:") {
            return ForbiddenFamily::star(number(rest)?);
        }
        if let Some(rest) = s.strip_prefix("List:") {
            let graphs = rest
                .split(',')
                .map(|t| Graph::from_graph6(t.trim()).map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            return ForbiddenFamily::list(graphs);
        }
        if let Some(rest) = s.strip_prefix('P') {
            return ForbiddenFamily::path(number(rest)?);
        }
        Err(bad())
    }
}

impl Serialize for ForbiddenFamily {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ForbiddenFamily {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
