//! Small simple graphs stored as one adjacency bitset per vertex.
//!
//! A [`Graph`] is a value: every mutating operation returns a new graph and
//! leaves its input untouched, which is what the game-tree search wants when
//! it branches on candidate edges.

mod canon;
mod components;
mod format;
mod traceable;

use std::fmt;

use thiserror::Error;

pub use canon::CanonKey;
pub use components::{Component, ComponentView};

/// Largest supported vertex count; one `u64` word holds a neighbourhood.
pub const MAX_VERTICES: usize = 64;

/// Bitset over vertices `0..64`.
pub type VertexSet = u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} is outside 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} is already present")]
    DuplicateEdge(usize, usize),
    #[error("vertex set is empty or not connected")]
    NotConnected,
    #[error("invalid graph6 string: {0}")]
    Graph6(String),
    #[error("invalid edge list: {0}")]
    EdgeList(String),
}

/// Iterate the members of a vertex set in increasing order.
pub fn members(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn bit(v: usize) -> VertexSet {
    1u64 << v
}

/// Vertices strictly greater than `v`.
#[inline]
pub(crate) fn above(v: usize) -> VertexSet {
    if v >= 63 {
        0
    } else {
        u64::MAX << (v + 1)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    m: u16,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph `E_n`.
    pub fn new_empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        Ok(Graph {
            n: n as u8,
            m: 0,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new_empty(n)?;
        for &(u, v) in edges {
            g = g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::new_empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        Ok(g)
    }

    /// Path on `n` vertices `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::VertexCount(n));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges)
    }

    /// The star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m as usize
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        if self.n as usize == MAX_VERTICES {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u] & bit(v) != 0
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Vertices of degree zero.
    pub fn isolated(&self) -> VertexSet {
        (0..self.n())
            .filter(|&v| self.adj[v] == 0)
            .fold(0, |acc, v| acc | bit(v))
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n() {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    /// Returns a copy of the graph with `uv` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut g = *self;
        g.insert(u, v);
        Ok(g)
    }

    /// Unchecked insertion; callers guarantee `u != v`, both in range, edge absent.
    #[inline]
    pub(crate) fn with_edge(&self, u: usize, v: usize) -> Graph {
        debug_assert!(u != v && !self.has_edge(u, v));
        let mut g = *self;
        g.insert(u, v);
        g
    }

    #[inline]
    fn insert(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        self.m += 1;
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            members(self.adj[u] & above(u)).map(move |v| (u, v))
        })
    }

    /// Absent vertex pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = self.vertices();
        (0..self.n()).flat_map(move |u| {
            members(all & above(u) & !self.adj[u]).map(move |v| (u, v))
        })
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length mismatch");
        let mut g = Graph {
            n: self.n,
            m: self.m,
            adj: [0; MAX_VERTICES],
        };
        for u in 0..self.n() {
            let mut row = 0;
            for w in members(self.adj[u]) {
                row |= bit(perm[w]);
            }
            g.adj[perm[u]] = row;
        }
        g
    }

    /// Induced subgraph on `set`, relabelled to `0..|set|` in increasing vertex order.
    pub fn induced(&self, set: VertexSet) -> Result<Graph, GraphError> {
        let verts: Vec<usize> = members(set & self.vertices()).collect();
        let mut g = Graph::new_empty(verts.len())?;
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        for (i, &v) in verts.iter().enumerate() {
            let mut row = 0;
            for w in members(self.adj[v] & set) {
                row |= bit(index[w]);
            }
            g.adj[i] = row;
        }
        g.m = (g.adj.iter().map(|r| r.count_ones()).sum::<u32>() / 2) as u16;
        Ok(g)
    }

    /// Disjoint union, `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n() + other.n();
        let mut g = Graph::new_empty(n)?;
        g.adj[..self.n()].copy_from_slice(&self.adj[..self.n()]);
        let shift = self.n();
        for v in 0..other.n() {
            g.adj[v + shift] = other.adj[v] << shift;
        }
        g.m = self.m + other.m;
        Ok(g)
    }

    /// The upper triangle of the adjacency matrix packed column by column,
    /// the bit order graph6 uses. Only valid for `n <= 16`.
    pub(crate) fn triangle_bits(&self) -> u128 {
        debug_assert!(self.n() <= 16);
        let mut bits = 0u128;
        let mut k = 0;
        for v in 1..self.n() {
            let col = self.adj[v] & ((1u64 << v) - 1);
            bits |= (col as u128) << k;
            k += v;
        }
        bits
    }

    /// Checks the structural invariants; used by tests and debug assertions.
    pub fn is_consistent(&self) -> bool {
        let all = self.vertices();
        let mut deg_sum = 0;
        for u in 0..MAX_VERTICES {
            let row = self.adj[u];
            if u >= self.n() {
                if row != 0 {
                    return false;
                }
                continue;
            }
            if row & !all != 0 || row & bit(u) != 0 {
                return false;
            }
            if members(row).any(|w| self.adj[w] & bit(u) == 0) {
                return false;
            }
            deg_sum += row.count_ones() as usize;
        }
        deg_sum == 2 * self.edge_count()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_edge_list())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_bounds() {
        let g = Graph::new_empty(3).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.isolated(), 0b111);
        assert!(Graph::new_empty(64).is_ok());
        assert_eq!(Graph::new_empty(65), Err(GraphError::VertexCount(65)));
        assert_eq!(Graph::new_empty(0), Err(GraphError::VertexCount(0)));
        let one = Graph::new_empty(1).unwrap();
        assert_eq!(one.components().sizes(), vec![1]);
    }

    #[test]
    fn add_edge_is_a_copy() {
        let g = Graph::new_empty(3).unwrap();
        let h = g.add_edge(0, 1).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(h.edge_count(), 1);
        assert!(h.has_edge(1, 0));
        assert_eq!(h.components().sizes(), vec![2, 1]);
    }

    #[test]
    fn add_edge_errors() {
        let g = Graph::new_empty(2).unwrap();
        assert_eq!(g.add_edge(0, 0), Err(GraphError::SelfLoop(0)));
        let h = g.add_edge(0, 1).unwrap();
        assert_eq!(h.add_edge(1, 0), Err(GraphError::DuplicateEdge(0, 1)));
        assert!(matches!(
            g.add_edge(0, 2),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn full_width_graph() {
        let g = Graph::complete(64).unwrap();
        assert_eq!(g.edge_count(), 64 * 63 / 2);
        assert!(g.is_consistent());
        assert_eq!(g.non_edges().count(), 0);
        assert_eq!(g.min_degree(), 63);
    }

    #[test]
    fn edge_iteration_order() {
        let g = Graph::from_edges(4, &[(2, 3), (0, 2), (1, 0)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (2, 3)]);
        assert_eq!(
            g.non_edges().collect::<Vec<_>>(),
            vec![(0, 3), (1, 2), (1, 3)]
        );
    }

    #[test]
    fn induced_and_union() {
        let g = Graph::cycle(5).unwrap();
        let h = g.induced(0b00111).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let u = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::new_empty(1).unwrap())
            .unwrap();
        assert_eq!(u.n(), 4);
        assert_eq!(u.edge_count(), 3);
        assert!(u.is_consistent());
    }

    #[test]
    fn permute_preserves_structure() {
        let g = Graph::path(4).unwrap();
        let p = g.permute(&[3, 1, 0, 2]);
        assert!(p.is_consistent());
        assert_eq!(p.degrees().iter().filter(|&&d| d == 1).count(), 2);
        assert!(p.has_edge(3, 1) && p.has_edge(1, 0) && p.has_edge(0, 2));
    }
}
