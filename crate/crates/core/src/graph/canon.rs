//! Canonical labelling.
//!
//! Each connected component is labelled on its own: vertices are split into
//! an ordered equitable partition by neighbour counts, then the search
//! individualizes one vertex of the first smallest non-trivial cell at a time
//! until every cell is a singleton. Every leaf is an ordering of the
//! component; the lexicographically largest adjacency encoding wins.
//!
//! Two vertices with the same neighbourhood apart from each other (twins)
//! are exchanged by an automorphism that fixes every cell, so only one
//! vertex per twin class is tried in a cell. Components are then laid out in
//! increasing order of their encodings, which makes the whole relabelled
//! graph a function of the isomorphism class only.

use std::cmp::Ordering;
use std::fmt;

use super::{bit, members, Graph};

/// Isomorphism-invariant key: the graph6 bytes of the canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey(Box<[u8]>);

impl CanonKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical representative in graph6.
    pub fn graph6(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

impl fmt::Debug for CanonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonKey({})", self.graph6())
    }
}

type Cells = Vec<Vec<usize>>;

fn cell_mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |acc, &v| acc | bit(v))
}

/// Refine to the coarsest equitable partition below `cells`. Fragments of a
/// split cell are ordered by their neighbour count into the splitter.
fn refine(adj: &[u64], cells: &mut Cells) {
    'restart: loop {
        for w in 0..cells.len() {
            let splitter = cell_mask(&cells[w]);
            let mut next: Cells = Vec::with_capacity(cells.len() + 1);
            let mut split = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&x| ((adj[x] & splitter).count_ones(), x))
                    .collect();
                keyed.sort_unstable();
                let first = keyed[0].0;
                if keyed.iter().all(|&(c, _)| c == first) {
                    next.push(cell.clone());
                    continue;
                }
                split = true;
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, x)| x).collect());
                        start = i;
                    }
                }
            }
            if split {
                *cells = next;
                continue 'restart;
            }
        }
        return;
    }
}

struct Search<'a> {
    adj: &'a [u64],
    twins: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn leaf(&mut self, cells: &Cells) {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut label = vec![0usize; order.len()];
        for (i, &v) in order.iter().enumerate() {
            label[v] = i;
        }
        let rows: Vec<u64> = order
            .iter()
            .map(|&v| members(self.adj[v]).fold(0, |acc, w| acc | bit(label[w])))
            .collect();
        let better = match &self.best {
            None => true,
            Some((best, _)) => rows.cmp(best) == Ordering::Greater,
        };
        if better {
            self.best = Some((rows, order));
        }
    }

    fn run(&mut self, mut cells: Cells) {
        refine(self.adj, &mut cells);
        if cells.iter().all(|c| c.len() == 1) {
            self.leaf(&cells);
            return;
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a non-singleton cell");
        let mut tried = 0u64;
        for &x in &cells[target] {
            if self.twins[x] & tried != 0 {
                continue;
            }
            tried |= bit(x);
            let rest: Vec<usize> = cells[target].iter().copied().filter(|&y| y != x).collect();
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![x]);
            child.push(rest);
            child.extend_from_slice(&cells[target + 1..]);
            self.run(child);
        }
    }
}

/// Canonical ordering of a connected graph given as local adjacency rows.
/// Returns the winning encoding and the vertex order that produced it.
fn canonical_component(adj: &[u64]) -> (Vec<u64>, Vec<usize>) {
    let s = adj.len();
    if s == 1 {
        return (vec![0], vec![0]);
    }
    let twins = (0..s)
        .map(|x| {
            (0..s)
                .filter(|&y| y != x && adj[x] & !bit(y) == adj[y] & !bit(x))
                .fold(0, |acc, y| acc | bit(y))
        })
        .collect();
    let mut by_degree: Vec<(u32, usize)> = (0..s).map(|v| (adj[v].count_ones(), v)).collect();
    by_degree.sort_unstable();
    let mut cells: Cells = Vec::new();
    for (d, v) in by_degree {
        match cells.last_mut() {
            Some(cell) if adj[cell[0]].count_ones() == d => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut search = Search {
        adj,
        twins,
        best: None,
    };
    search.run(cells);
    search.best.expect("search visits at least one leaf")
}

impl Graph {
    /// A canonical relabelling: returns the canonical graph and the map
    /// `perm` with `canonical = self.permute(&perm)`.
    pub fn canonical_form(&self) -> (Graph, Vec<usize>) {
        let mut blocks: Vec<(usize, Vec<u64>, Vec<usize>)> = Vec::new();
        for comp in self.components().iter() {
            let verts: Vec<usize> = comp.vertices().collect();
            let mut index = [0usize; 64];
            for (i, &v) in verts.iter().enumerate() {
                index[v] = i;
            }
            let local: Vec<u64> = verts
                .iter()
                .map(|&v| members(self.adj[v]).fold(0, |acc, w| acc | bit(index[w])))
                .collect();
            let (rows, order) = canonical_component(&local);
            let global = order.into_iter().map(|i| verts[i]).collect();
            blocks.push((verts.len(), rows, global));
        }
        blocks.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        let mut perm = vec![0usize; self.n()];
        let mut next = 0;
        for (_, _, order) in &blocks {
            for &v in order {
                perm[v] = next;
                next += 1;
            }
        }
        (self.permute(&perm), perm)
    }

    pub fn canonical_key(&self) -> CanonKey {
        CanonKey(self.canonical_form().0.to_graph6().into_bytes().into_boxed_slice())
    }

    /// Packed canonical form for `n <= 16`, the solver's table key.
    pub(crate) fn canonical_bits(&self) -> u128 {
        self.canonical_form().0.triangle_bits()
    }
}
