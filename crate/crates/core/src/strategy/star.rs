use super::{Strategy, View};
use crate::game::{Action, GameState, Player};

/// Prolonger for the star game: the legal edge whose ends have the smallest
/// degrees, compared by the smaller degree first, then the larger.
#[derive(Clone, Copy, Debug, Default)]
pub struct ProlongerStarLex;

impl Strategy for ProlongerStarLex {
    fn name(&self) -> String {
        "p-star".into()
    }

    fn side(&self) -> Option<Player> {
        Some(Player::Prolonger)
    }

    fn act(&self, state: &GameState) -> Action {
        let v = View::new(state);
        let g = v.g;
        g.non_edges()
            .filter(|&(x, y)| v.legal(x, y))
            .min_by_key(|&(x, y)| {
                let (dx, dy) = (g.degree(x), g.degree(y));
                (dx.min(dy), dx.max(dy), x, y)
            })
            .map(|(x, y)| Action::edge(x, y))
            .unwrap_or(Action::Pass)
    }
}
