use super::{bit, members, Graph, VertexSet};

/// One connected component, identified by its smallest vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    pub id: usize,
    pub members: VertexSet,
}

impl Component {
    #[inline]
    pub fn size(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        members(self.members)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.members & bit(v) != 0
    }
}

/// Connected components of a graph, ordered by id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentView {
    labels: Vec<usize>,
    components: Vec<Component>,
}

impl ComponentView {
    /// Component id (smallest member) of `v`.
    #[inline]
    pub fn label(&self, v: usize) -> usize {
        self.components[self.labels[v]].id
    }

    /// The component containing `v`.
    #[inline]
    pub fn of(&self, v: usize) -> &Component {
        &self.components[self.labels[v]]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Component> {
        self.components.iter()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(Component::size).collect()
    }

    #[inline]
    pub fn same(&self, u: usize, v: usize) -> bool {
        self.labels[u] == self.labels[v]
    }
}

impl Graph {
    /// Vertex set of the component containing `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        self.reach(bit(v), self.vertices())
    }

    /// Everything reachable from `seed` without leaving `within`.
    pub(crate) fn reach(&self, seed: VertexSet, within: VertexSet) -> VertexSet {
        let mut seen = seed & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// True if `set` is non-empty and induces a connected subgraph.
    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        if set == 0 || set & !self.vertices() != 0 {
            return false;
        }
        let start = set & set.wrapping_neg();
        self.reach(start, set) == set
    }

    pub fn components(&self) -> ComponentView {
        let mut labels = vec![usize::MAX; self.n()];
        let mut components = Vec::new();
        let mut unseen = self.vertices();
        while unseen != 0 {
            let v = unseen.trailing_zeros() as usize;
            let comp = self.component_of(v);
            for w in members(comp) {
                labels[w] = components.len();
            }
            components.push(Component {
                id: v,
                members: comp,
            });
            unseen &= !comp;
        }
        ComponentView { labels, components }
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: VertexSet) -> usize {
        members(set)
            .map(|v| (self.adj[v] & set).count_ones() as usize)
            .sum::<usize>()
            / 2
    }
}
