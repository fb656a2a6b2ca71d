//! Exact-image reachability: does some word map the full state set onto a
//! given target set exactly?

use automata_core::{Dfa, StateSet};

use crate::bfs::bfs_first;
use crate::budget::{Budget, EngineError};
use crate::result::ReachResult;

pub fn is_subset_reachable(
    a: &Dfa,
    target: &StateSet,
    budget: &Budget,
) -> Result<ReachResult, EngineError> {
    if target.universe() != a.n_states() {
        return Err(EngineError::input(format!(
            "target universe {} does not match automaton with {} states",
            target.universe(),
            a.n_states()
        )));
    }
    budget.check_states(a.n_states(), "reachability image search")?;
    let start = StateSet::full(a.n_states());
    let (hit, explored) = bfs_first(
        start,
        a.n_letters(),
        budget.max_visited,
        "reachability image search",
        |set, letter| Some(a.image_letter(set, letter)),
        |set| set == target,
    )?;
    Ok(match hit {
        Some((word, _)) => ReachResult {
            reachable: true,
            witness: Some(word),
            explored,
        },
        None => ReachResult {
            reachable: false,
            witness: None,
            explored,
        },
    })
}
