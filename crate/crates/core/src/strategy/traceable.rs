use super::{Strategy, View};
use crate::game::{Action, GameState, Player};

/// Prolonger, for the game where he may pass: close a Hamiltonian path of a
/// component that is not everywhere traceable into a cycle, otherwise pass.
/// Where passing is not allowed it plays the least legal edge instead.
#[derive(Clone, Copy, Debug, Default)]
pub struct ProlongerTraceable;

impl Strategy for ProlongerTraceable {
    fn name(&self) -> String {
        "traceable".into()
    }

    fn side(&self) -> Option<Player> {
        Some(Player::Prolonger)
    }

    fn act(&self, state: &GameState) -> Action {
        let view = View::new(state);
        let g = view.g;
        for comp in view.comps.iter() {
            if comp.size() < 3 || g.everywhere_traceable(comp.members) == Ok(true) {
                continue;
            }
            if let Some(path) = g.hamiltonian_path(comp.members) {
                let (a, b) = (path[0], path[path.len() - 1]);
                if view.legal(a, b) {
                    return Action::edge(a, b);
                }
            }
        }
        if view.may_pass() && view.least_legal().is_some() {
            Action::Pass
        } else {
            view.fallback()
        }
    }
}

/// Every component of `g` is everywhere traceable.
pub(crate) fn all_traceable(g: &crate::graph::Graph) -> bool {
    g.components()
        .iter()
        .all(|c| c.size() < 3 || g.everywhere_traceable(c.members) == Ok(true))
}
