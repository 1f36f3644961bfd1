//! Hamiltonian paths inside a connected vertex set.
//!
//! Sets of up to [`DP_LIMIT`] vertices use the subset dynamic programme
//! `ends[S] = { w in S : some Hamiltonian path of G[S] ends at w }`; larger
//! sets fall back to an ordered depth-first search with connectivity pruning.

use super::{bit, members, Graph, GraphError, VertexSet};

const DP_LIMIT: usize = 22;

/// Local view of an induced subgraph on `verts`, relabelled `0..s`.
struct Local {
    verts: Vec<usize>,
    adj: Vec<u32>,
}

impl Local {
    fn new(g: &Graph, set: VertexSet) -> Self {
        let verts: Vec<usize> = members(set).collect();
        let mut index = [0usize; 64];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| {
                members(g.neighbors(v) & set).fold(0u32, |acc, w| acc | (1 << index[w]))
            })
            .collect();
        Local { verts, adj }
    }

    /// `ends[S]` for every subset `S`.
    fn endpoint_table(&self) -> Vec<u32> {
        let s = self.verts.len();
        let mut ends = vec![0u32; 1 << s];
        for v in 0..s {
            ends[1 << v] = 1 << v;
        }
        for mask in 1u32..(1 << s) {
            if mask.count_ones() < 2 {
                continue;
            }
            let mut e = 0;
            let mut rest = mask;
            while rest != 0 {
                let w = rest.trailing_zeros();
                rest &= rest - 1;
                if ends[(mask & !(1 << w)) as usize] & self.adj[w as usize] != 0 {
                    e |= 1 << w;
                }
            }
            ends[mask as usize] = e;
        }
        ends
    }
}

fn dfs_path(g: &Graph, cur: usize, remaining: VertexSet, path: &mut Vec<usize>) -> bool {
    if remaining == 0 {
        return true;
    }
    // Every remaining vertex must still be reachable through `cur`.
    if g.reach(g.neighbors(cur) & remaining, remaining) != remaining {
        return false;
    }
    for w in members(g.neighbors(cur) & remaining) {
        path.push(w);
        if dfs_path(g, w, remaining & !bit(w), path) {
            return true;
        }
        path.pop();
    }
    false
}

impl Graph {
    /// Vertices of `set` at which some Hamiltonian path of `G[set]` starts.
    pub fn hamiltonian_starts(&self, set: VertexSet) -> VertexSet {
        let set = set & self.vertices();
        let s = set.count_ones() as usize;
        if s == 0 {
            return 0;
        }
        if s <= DP_LIMIT {
            let local = Local::new(self, set);
            let ends = local.endpoint_table();
            let full = ends[(1usize << s) - 1];
            return (0..s)
                .filter(|&i| full & (1 << i) != 0)
                .fold(0, |acc, i| acc | bit(local.verts[i]));
        }
        if !self.is_connected_set(set) {
            return 0;
        }
        let leaves = members(set)
            .filter(|&v| (self.neighbors(v) & set).count_ones() <= 1)
            .count();
        if leaves > 2 {
            return 0;
        }
        let mut starts = 0;
        for v in members(set) {
            let mut path = vec![v];
            if dfs_path(self, v, set & !bit(v), &mut path) {
                starts |= bit(v);
            }
        }
        starts
    }

    /// True iff every vertex of the connected set `comp` starts a Hamiltonian
    /// path of `G[comp]`.
    pub fn everywhere_traceable(&self, comp: VertexSet) -> Result<bool, GraphError> {
        if !self.is_connected_set(comp) {
            return Err(GraphError::NotConnected);
        }
        Ok(self.hamiltonian_starts(comp) == comp)
    }

    /// The lexicographically least Hamiltonian path of `G[comp]`, if any.
    pub fn hamiltonian_path(&self, comp: VertexSet) -> Option<Vec<usize>> {
        if !self.is_connected_set(comp) {
            return None;
        }
        let s = comp.count_ones() as usize;
        if s <= DP_LIMIT {
            let local = Local::new(self, comp);
            let ends = local.endpoint_table();
            let mut remaining: u32 = ((1u64 << s) - 1) as u32;
            let first = ends[remaining as usize];
            if first == 0 {
                return None;
            }
            let mut cur = first.trailing_zeros();
            let mut path = vec![local.verts[cur as usize]];
            remaining &= !(1 << cur);
            while remaining != 0 {
                // Local labels are in increasing global order, so the least
                // feasible local index is the least global vertex.
                let options = local.adj[cur as usize] & ends[remaining as usize];
                cur = options.trailing_zeros();
                path.push(local.verts[cur as usize]);
                remaining &= !(1 << cur);
            }
            return Some(path);
        }
        for v in members(self.hamiltonian_starts(comp)) {
            let mut path = vec![v];
            if dfs_path(self, v, comp & !bit(v), &mut path) {
                return Some(path);
            }
        }
        None
    }
}
