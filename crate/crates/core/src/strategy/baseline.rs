use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Strategy;
use crate::game::{Action, GameState, Player};
use crate::graph::Graph;

/// Opponents for simulations. None of them ever passes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Baseline {
    /// Uniform over the legal edges. The draw depends only on the seed and
    /// the position, so replaying a position repeats the choice.
    Random(u64),
    /// Keep the largest component as small as possible.
    GreedyMinComponent,
    /// Make the largest component as large as possible.
    GreedyMaxComponent,
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn fingerprint(g: &Graph, to_move: Player) -> u64 {
    let mut h = splitmix(g.n() as u64 ^ ((to_move == Player::Shortener) as u64) << 7);
    for (u, v) in g.edges() {
        h = splitmix(h ^ ((u as u64) << 8 | v as u64));
    }
    h
}

fn largest_after(g: &Graph, u: usize, v: usize) -> usize {
    let comps = g.components();
    let joined = if comps.same(u, v) {
        comps.of(u).size()
    } else {
        comps.of(u).size() + comps.of(v).size()
    };
    comps.iter().map(|c| c.size()).max().unwrap_or(0).max(joined)
}

impl Strategy for Baseline {
    fn name(&self) -> String {
        match self {
            Baseline::Random(seed) => format!("random:{seed}"),
            Baseline::GreedyMinComponent => "greedy-min".into(),
            Baseline::GreedyMaxComponent => "greedy-max".into(),
        }
    }

    fn act(&self, state: &GameState) -> Action {
        let moves = state.legal_moves();
        if moves.is_empty() {
            return Action::Pass;
        }
        let g = state.graph();
        let mv = match self {
            Baseline::Random(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(splitmix(*seed) ^ fingerprint(g, state.to_move()));
                moves[rng.random_range(0..moves.len())]
            }
            Baseline::GreedyMinComponent => *moves
                .iter()
                .min_by_key(|m| largest_after(g, m.u(), m.v()))
                .unwrap(),
            Baseline::GreedyMaxComponent => *moves
                .iter()
                .rev()
                .max_by_key(|m| largest_after(g, m.u(), m.v()))
                .unwrap(),
        };
        Action::Edge(mv)
    }
}
