use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::{Strategy, View};
use crate::game::{Action, GameState, Variant};
use crate::solver::{Solver, SolverConfig};

/// Plays a value-preserving action found by the exact solver; the first such
/// action in lexicographic order, passing last. Positions beyond the solver
/// cap fall back to the least legal edge.
#[derive(Default)]
pub struct Optimal {
    config: SolverConfig,
    solvers: Mutex<HashMap<(String, Variant, usize), Arc<Solver>>>,
}

impl Optimal {
    pub fn new() -> Self {
        Optimal::with_config(SolverConfig::default())
    }

    pub fn with_config(config: SolverConfig) -> Self {
        Optimal {
            config,
            solvers: Mutex::new(HashMap::new()),
        }
    }

    fn solver(&self, state: &GameState) -> Option<Arc<Solver>> {
        let n = state.graph().n();
        let key = (state.family().to_string(), state.variant(), n);
        let mut solvers = self.solvers.lock().unwrap();
        if let Some(s) = solvers.get(&key) {
            return Some(s.clone());
        }
        let s = Arc::new(Solver::new(n, state.family().clone(), state.variant(), self.config.clone()).ok()?);
        solvers.insert(key, s.clone());
        Some(s)
    }
}

impl Strategy for Optimal {
    fn name(&self) -> String {
        "optimal".into()
    }

    fn act(&self, state: &GameState) -> Action {
        let fallback = || View::new(state).fallback();
        let Some(solver) = self.solver(state) else {
            return fallback();
        };
        let Ok(target) = solver.value(state.graph(), state.to_move()) else {
            return fallback();
        };
        let next = state.to_move().other();
        for a in state.legal_actions() {
            let child = state.apply_unchecked(a);
            if solver.value(child.graph(), next) == Ok(target) {
                return a;
            }
        }
        fallback()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::ForbiddenFamily;
    use crate::game::{play, Player};

    #[test]
    fn self_play_reaches_game_value() {
        let fam = ForbiddenFamily::Path(4);
        let opt = Optimal::new();
        for (first, value) in [(Player::Prolonger, 2), (Player::Shortener, 3)] {
            let rec = play(4, fam.clone(), Variant::Standard, first, &opt, &opt).unwrap();
            assert_eq!(rec.score, value);
        }
    }
}
