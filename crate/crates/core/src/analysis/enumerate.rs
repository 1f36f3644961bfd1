use rayon::prelude::*;

use super::AnalysisError;
use crate::family::ForbiddenFamily;
use crate::graph::{CanonKey, Graph};

/// Largest `n` for family-restricted enumeration.
pub const SATURATED_CAP: usize = 9;
/// Largest `n` for enumerating every graph.
pub const ALL_GRAPHS_CAP: usize = 8;

/// Breadth-first over edge counts: every class of one level is extended by
/// each allowed edge, and the children are canonicalized and deduplicated.
/// Output is in (edge count, canonical bits) order.
fn levels(n: usize, allowed: impl Fn(&Graph, usize, usize) -> bool + Sync) -> Vec<Graph> {
    let mut level = vec![Graph::new_empty(n).expect("n checked by caller")];
    let mut out = Vec::new();
    while !level.is_empty() {
        let mut next: Vec<(u128, Graph)> = level
            .par_iter()
            .flat_map_iter(|g| {
                g.non_edges()
                    .filter(|&(u, v)| allowed(g, u, v))
                    .map(|(u, v)| {
                        let c = g.with_edge(u, v).canonical_form().0;
                        (c.triangle_bits(), c)
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        next.par_sort_unstable_by_key(|&(k, _)| k);
        next.dedup_by_key(|&mut (k, _)| k);
        out.append(&mut level);
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    out
}

fn check(n: usize, cap: usize) -> Result<(), AnalysisError> {
    if n == 0 || n > cap {
        return Err(AnalysisError::CapExceeded { n, cap });
    }
    Ok(())
}

/// Every graph on `n` vertices up to isomorphism, as canonical forms.
pub fn all_graphs_up_to_iso(n: usize) -> Result<Vec<Graph>, AnalysisError> {
    check(n, ALL_GRAPHS_CAP)?;
    Ok(levels(n, |_, _, _| true))
}

/// Every `family`-free graph on `n` vertices up to isomorphism.
pub fn enumerate_free(n: usize, family: &ForbiddenFamily) -> Result<Vec<Graph>, AnalysisError> {
    check(n, SATURATED_CAP)?;
    Ok(levels(n, |g, u, v| !family.creates_with(g, &g.components(), u, v)))
}

/// Canonical forms of the `family`-saturated graphs on `n` vertices.
pub fn saturated_graphs(n: usize, family: &ForbiddenFamily) -> Result<Vec<Graph>, AnalysisError> {
    Ok(enumerate_free(n, family)?
        .into_iter()
        .filter(|g| !family.has_legal_move(g))
        .collect())
}

/// Keys of the `family`-saturated graphs on `n` vertices.
pub fn enumerate_saturated(n: usize, family: &ForbiddenFamily) -> Result<Vec<CanonKey>, AnalysisError> {
    Ok(saturated_graphs(n, family)?.iter().map(Graph::canonical_key).collect())
}
