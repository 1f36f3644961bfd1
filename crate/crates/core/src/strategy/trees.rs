use super::{Strategy, View};
use crate::family::ForbiddenFamily;
use crate::game::{Action, GameState, Player};

/// Prolonger for the tree family on `k` vertices: join the two components
/// of largest total size that stays below `k`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ProlongerTrees;

impl Strategy for ProlongerTrees {
    fn name(&self) -> String {
        "p-trees".into()
    }

    fn side(&self) -> Option<Player> {
        Some(Player::Prolonger)
    }

    fn act(&self, state: &GameState) -> Action {
        let v = View::new(state);
        let limit = match state.family() {
            ForbiddenFamily::TreeFamily(k) => k - 1,
            _ => return v.fallback(),
        };
        let comps: Vec<(usize, usize)> = v.comps.iter().map(|c| (c.id, c.size())).collect();
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, &(a, sa)) in comps.iter().enumerate() {
            for &(b, sb) in &comps[i + 1..] {
                let total = sa + sb;
                if total <= limit && best.is_none_or(|(t, _, _)| total > t) {
                    best = Some((total, a, b));
                }
            }
        }
        match best {
            Some((_, a, b)) => Action::edge(a, b),
            None => v.fallback(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strategy::test_util::state;

    fn trees(k: usize, n: usize, edges: &[(usize, usize)]) -> GameState {
        state(n, edges, ForbiddenFamily::TreeFamily(k), Player::Prolonger)
    }

    #[test]
    fn joins_largest_fitting_pair() {
        // Sizes 3 {0,1,2}, 2 {3,4}, 2 {5,6}, 1, 1.
        let g = [(0, 1), (1, 2), (3, 4), (5, 6)];
        assert_eq!(ProlongerTrees.act(&trees(6, 9, &g)), Action::edge(0, 3));
        // Two full components and two singletons.
        let g = [(0, 1), (1, 2), (3, 4), (4, 5)];
        assert_eq!(ProlongerTrees.act(&trees(4, 8, &g)), Action::edge(6, 7));
        // Nothing fits; fill in a component.
        assert_eq!(ProlongerTrees.act(&trees(4, 6, &g)), Action::edge(0, 2));
    }
}
