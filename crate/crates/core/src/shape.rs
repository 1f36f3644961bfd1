//! Recognition of the small component types the path and star games produce.

use std::fmt;

use serde::Serialize;

use crate::graph::{above, bit, members, Component, Graph, VertexSet};

/// The isomorphism type of a connected component, for the types that matter
/// in the games; anything else is `Other`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Isolated,
    Edge,
    /// `K_{1,leaves}` with `leaves >= 2`.
    Star { center: usize, leaves: usize },
    Triangle,
    /// Triangle with `pendants >= 1` pendant edges at `hub`.
    PendantTriangle { hub: usize, pendants: usize },
    /// Double star `D_{k,l}` with `1 <= k <= l`: centre `a` carries `k`
    /// leaves, centre `b` carries `l`.
    DoubleStar { a: usize, b: usize, k: usize, l: usize },
    K4,
    /// Complete graph on at least five vertices.
    Clique(usize),
    Other,
}

impl Shape {
    /// `K_2` or `K_{1,m}`.
    pub fn is_star(self) -> bool {
        matches!(self, Shape::Edge | Shape::Star { .. })
    }

    pub fn is_cherry(self) -> bool {
        matches!(self, Shape::Star { leaves: 2, .. })
    }
}

/// Component label reported by the saturated-graph classifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ComponentLabel {
    IsolatedVertex,
    IsolatedEdge,
    Triangle,
    Star(usize),
    K4,
    T(usize),
    D(usize, usize),
    Clique(usize),
    Other,
}

impl fmt::Display for ComponentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentLabel::IsolatedVertex => f.write_str("K1"),
            ComponentLabel::IsolatedEdge => f.write_str("K2"),
            ComponentLabel::Triangle => f.write_str("K3"),
            ComponentLabel::Star(m) => write!(f, "K1,{m}"),
            ComponentLabel::K4 => f.write_str("K4"),
            ComponentLabel::T(j) => write!(f, "T{j}"),
            ComponentLabel::D(k, l) => write!(f, "D{k},{l}"),
            ComponentLabel::Clique(j) => write!(f, "K{j}"),
            ComponentLabel::Other => f.write_str("other"),
        }
    }
}

impl From<Shape> for ComponentLabel {
    fn from(shape: Shape) -> Self {
        match shape {
            Shape::Isolated => ComponentLabel::IsolatedVertex,
            Shape::Edge => ComponentLabel::IsolatedEdge,
            Shape::Star { leaves, .. } => ComponentLabel::Star(leaves),
            Shape::Triangle => ComponentLabel::Triangle,
            Shape::PendantTriangle { pendants, .. } => ComponentLabel::T(pendants),
            Shape::DoubleStar { k, l, .. } => ComponentLabel::D(k, l),
            Shape::K4 => ComponentLabel::K4,
            Shape::Clique(j) => ComponentLabel::Clique(j),
            Shape::Other => ComponentLabel::Other,
        }
    }
}

pub fn shape_of(g: &Graph, comp: &Component) -> Shape {
    let s = comp.size();
    let set = comp.members;
    let e = g.edges_within(set);
    let deg = |v: usize| (g.neighbors(v) & set).count_ones() as usize;
    match s {
        1 => return Shape::Isolated,
        2 => return Shape::Edge,
        _ => {}
    }
    if e == s * (s - 1) / 2 {
        return match s {
            3 => Shape::Triangle,
            4 => Shape::K4,
            _ => Shape::Clique(s),
        };
    }
    let hub = members(set).find(|&v| deg(v) == s - 1);
    if e == s - 1 {
        if let Some(center) = hub {
            return Shape::Star { center, leaves: s - 1 };
        }
        let inner: Vec<usize> = members(set).filter(|&v| deg(v) >= 2).collect();
        if let [x, y] = inner[..] {
            if g.has_edge(x, y) {
                let (kx, ky) = (deg(x) - 1, deg(y) - 1);
                let (a, b, k, l) = if kx <= ky { (x, y, kx, ky) } else { (y, x, ky, kx) };
                return Shape::DoubleStar { a, b, k, l };
            }
        }
        return Shape::Other;
    }
    if e == s {
        if let Some(hub) = hub {
            return Shape::PendantTriangle { hub, pendants: s - 3 };
        }
    }
    Shape::Other
}

/// Every component with its shape, in component-id order.
pub fn shapes(g: &Graph) -> Vec<(Component, Shape)> {
    g.components().iter().map(|c| (*c, shape_of(g, c))).collect()
}

/// Component labels in component-id order.
pub fn labels(g: &Graph) -> Vec<ComponentLabel> {
    shapes(g).into_iter().map(|(_, s)| s.into()).collect()
}

pub fn has_triangle(g: &Graph, set: VertexSet) -> bool {
    members(set).any(|x| {
        members(g.neighbors(x) & set & above(x))
            .any(|y| g.neighbors(x) & g.neighbors(y) & set != 0)
    })
}

/// Every vertex of the component is the end of some path on three vertices
/// inside it. Among `P_5`-free components these are exactly the non-stars,
/// the ones that cannot be joined to another non-trivial component.
pub fn is_standalone(g: &Graph, comp: &Component) -> bool {
    let set = comp.members;
    comp.size() >= 2
        && members(set).all(|v| {
            members(g.neighbors(v) & set).any(|w| g.neighbors(w) & set & !bit(v) != 0)
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn only(g: &Graph) -> Shape {
        let s = shapes(g);
        assert_eq!(s.len(), 1);
        s[0].1
    }

    #[test]
    fn recognises_named_components() {
        assert_eq!(only(&Graph::new_empty(1).unwrap()), Shape::Isolated);
        assert_eq!(only(&Graph::path(2).unwrap()), Shape::Edge);
        assert_eq!(only(&Graph::path(3).unwrap()), Shape::Star { center: 1, leaves: 2 });
        assert_eq!(only(&Graph::star(4).unwrap()), Shape::Star { center: 0, leaves: 4 });
        assert_eq!(only(&Graph::complete(3).unwrap()), Shape::Triangle);
        assert_eq!(only(&Graph::complete(4).unwrap()), Shape::K4);
        assert_eq!(only(&Graph::complete(6).unwrap()), Shape::Clique(6));
        assert_eq!(
            only(&Graph::path(4).unwrap()),
            Shape::DoubleStar { a: 1, b: 2, k: 1, l: 1 }
        );
        // Triangle 0-1-2 with pendants 3, 4 at vertex 0.
        let t2 = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(only(&t2), Shape::PendantTriangle { hub: 0, pendants: 2 });
        // D_{1,2}: centres 0 (leaf 2) and 1 (leaves 3, 4).
        let d12 = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(only(&d12), Shape::DoubleStar { a: 0, b: 1, k: 1, l: 2 });
        assert_eq!(only(&Graph::cycle(4).unwrap()), Shape::Other);
        assert_eq!(only(&Graph::path(5).unwrap()), Shape::Other);
    }

    #[test]
    fn standalone_means_not_a_star() {
        let g = Graph::from_edges(9, &[(0, 1), (2, 3), (2, 4), (5, 6), (6, 7), (5, 7)]).unwrap();
        let flags: Vec<bool> = g.components().iter().map(|c| is_standalone(&g, c)).collect();
        assert_eq!(flags, vec![false, false, true, false]);
        assert!(has_triangle(&g, g.vertices()));
        assert!(!has_triangle(&g, 0b11111));
    }
}
