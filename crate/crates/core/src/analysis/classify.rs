use std::fmt;

use serde::Serialize;

use crate::graph::Graph;
use crate::shape::{shapes, ComponentLabel, Shape};

/// Component labels of an accepted graph, in component-id order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturatedClass {
    pub labels: Vec<ComponentLabel>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Rejection {
    /// A component outside the grammar.
    Component(ComponentLabel),
    /// Isolated vertices next to something other than the allowed cliques.
    IsolatedWith(ComponentLabel),
    IsolatedVertices(usize),
    IsolatedEdges(usize),
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::Component(l) => write!(f, "component {l:?} not allowed"),
            Rejection::IsolatedWith(l) => write!(f, "isolated vertex next to {l:?}"),
            Rejection::IsolatedVertices(c) => write!(f, "{c} isolated vertices"),
            Rejection::IsolatedEdges(c) => write!(f, "{c} isolated edges"),
        }
    }
}

/// Shared shape of both characterizations: either every component passes
/// `main` with at most `max_edges` isolated edges, or a single isolated
/// vertex sits next to components passing `with_vertex`.
fn grammar(
    g: &Graph,
    main: impl Fn(Shape) -> bool,
    max_edges: usize,
    with_vertex: impl Fn(Shape) -> bool,
) -> Result<SaturatedClass, Rejection> {
    let parts: Vec<Shape> = shapes(g).into_iter().map(|(_, s)| s).collect();
    let labels: Vec<ComponentLabel> = parts.iter().map(|&s| s.into()).collect();
    let isolated = parts.iter().filter(|&&s| s == Shape::Isolated).count();
    if isolated > 1 {
        return Err(Rejection::IsolatedVertices(isolated));
    }
    if isolated == 1 {
        if let Some(&bad) = parts.iter().find(|&&s| s != Shape::Isolated && !with_vertex(s)) {
            return Err(Rejection::IsolatedWith(bad.into()));
        }
        return Ok(SaturatedClass { labels });
    }
    if let Some(&bad) = parts.iter().find(|&&s| s != Shape::Edge && !main(s)) {
        return Err(Rejection::Component(bad.into()));
    }
    let edges = parts.iter().filter(|&&s| s == Shape::Edge).count();
    if edges > max_edges {
        return Err(Rejection::IsolatedEdges(edges));
    }
    Ok(SaturatedClass { labels })
}

/// `P_4`-saturated graphs: triangles and stars `K_2`, `K_{1,m}` with
/// `m >= 3`, or triangles and one isolated vertex. `K_{1,2}` is never
/// saturated since closing it gives a triangle.
pub fn classify_p4_saturated(g: &Graph) -> Result<SaturatedClass, Rejection> {
    grammar(
        g,
        |s| matches!(s, Shape::Triangle | Shape::Star { leaves: 3.., .. }),
        usize::MAX,
        |s| s == Shape::Triangle,
    )
}

/// `P_5`-saturated graphs: copies of `K_4`, `T_j` (`j = 0` or `j >= 2`) and
/// `D_{k,l}` with `k, l >= 2`, plus at most one isolated edge; or `K_4`s and
/// one isolated vertex. Stars and `D_{1,l}` are excluded since a triangle can
/// still be closed in them, and `T_1` since it completes to `K_4` minus an
/// edge.
pub fn classify_p5_saturated(g: &Graph) -> Result<SaturatedClass, Rejection> {
    grammar(
        g,
        |s| match s {
            Shape::K4 | Shape::Triangle => true,
            Shape::PendantTriangle { pendants, .. } => pendants >= 2,
            Shape::DoubleStar { k, .. } => k >= 2,
            _ => false,
        },
        1,
        |s| s == Shape::K4,
    )
}

/// The `P_4` characterization read word for word: any star on at least two
/// vertices is allowed, `K_{1,2}` included.
pub fn literal_p4_reading(g: &Graph) -> bool {
    grammar(g, |s| s == Shape::Triangle || s.is_star(), usize::MAX, |s| s == Shape::Triangle).is_ok()
}

/// The `P_5` characterization read word for word: every `T_j` including
/// `T_1`, and `D_{k,l}` with `max(k, l) > 0`, which covers every star
/// `K_{1,m}` (`m >= 2`) and every double star.
pub fn literal_p5_reading(g: &Graph) -> bool {
    grammar(
        g,
        |s| {
            matches!(
                s,
                Shape::K4
                    | Shape::Triangle
                    | Shape::PendantTriangle { .. }
                    | Shape::DoubleStar { .. }
                    | Shape::Star { .. }
            )
        },
        1,
        |s| s == Shape::K4,
    )
    .is_ok()
}
