use serde::Serialize;

use crate::game::{GameError, GameRecord, Player};
use crate::graph::Graph;

/// Degree statistics at the first moment the minimum degree reaches `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdStat {
    pub i: usize,
    /// Index into the graph sequence `G_0, G_1, ...`; candidates are the
    /// start and the positions right after a Shortener move.
    pub t: Option<usize>,
    /// `sum_v max(d(v) - i, 0)` at `t`, zero when `t` does not exist.
    pub g: usize,
    /// Vertices of degree above `i` at `t`.
    pub lambda: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStats {
    pub k: usize,
    pub thresholds: Vec<ThresholdStat>,
    /// Isolated vertices used up by each turn.
    pub consumption: Vec<usize>,
}

impl TraceStats {
    /// `lambda_i >= g_i / (k - i)` wherever `t_i` exists and `i < k`.
    pub fn lambda_bound_holds(&self) -> bool {
        self.thresholds.iter().all(|s| match s.lambda {
            Some(l) if s.i < self.k => l * (self.k - s.i) >= s.g,
            _ => true,
        })
    }
}

/// Isolated vertices used by each turn of `graphs`.
pub fn isolated_consumption(graphs: &[Graph]) -> Vec<usize> {
    graphs
        .windows(2)
        .map(|w| (w[0].isolated().count_ones() - w[1].isolated().count_ones()) as usize)
        .collect()
}

/// Threshold statistics for `i = 0..=k` plus per-turn isolated-vertex use.
pub fn trace_stats(rec: &GameRecord, k: usize) -> Result<TraceStats, GameError> {
    let graphs = rec.graphs()?;
    let candidates: Vec<usize> = std::iter::once(0)
        .chain(
            rec.turns
                .iter()
                .enumerate()
                .filter(|(_, t)| t.player == Player::Shortener)
                .map(|(idx, _)| idx + 1),
        )
        .collect();
    let thresholds = (0..=k)
        .map(|i| {
            let t = candidates.iter().copied().find(|&t| graphs[t].min_degree() >= i);
            match t {
                Some(t) => {
                    let degs = graphs[t].degrees();
                    ThresholdStat {
                        i,
                        t: Some(t),
                        g: degs.iter().map(|&d| d.saturating_sub(i)).sum(),
                        lambda: Some(degs.iter().filter(|&&d| d > i).count()),
                    }
                }
                None => ThresholdStat {
                    i,
                    t: None,
                    g: 0,
                    lambda: None,
                },
            }
        })
        .collect();
    Ok(TraceStats {
        k,
        thresholds,
        consumption: isolated_consumption(&graphs),
    })
}
