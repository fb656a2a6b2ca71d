//! Shortest synchronizing words by BFS over distinct image sets.

use automata_core::{Dfa, StateSet};

use crate::bfs::bfs_first;
use crate::budget::{Budget, EngineError};
use crate::result::SyncResult;

/// Shortest (length-then-lexicographic) synchronizing word for the whole
/// automaton, or a definite "not synchronizing" after exhausting the image
/// space of Q. Requires `n_states <= budget.max_states`.
pub fn shortest_sync_word(a: &Dfa, budget: &Budget) -> Result<SyncResult, EngineError> {
    budget.check_states(a.n_states(), "whole-state-set image search")?;
    subset_bfs(a, StateSet::full(a.n_states()), budget)
}

/// Shortest word synchronizing the designated subset, deciding the
/// synchronizing-set question along the way.
pub fn subset_shortest_sync_word(
    a: &Dfa,
    set: &StateSet,
    budget: &Budget,
) -> Result<SyncResult, EngineError> {
    if set.universe() != a.n_states() {
        return Err(EngineError::input(format!(
            "subset universe {} does not match automaton with {} states",
            set.universe(),
            a.n_states()
        )));
    }
    if set.is_empty() {
        return Err(EngineError::input("subset must be non-empty"));
    }
    subset_bfs(a, set.clone(), budget)
}

fn subset_bfs(a: &Dfa, start: StateSet, budget: &Budget) -> Result<SyncResult, EngineError> {
    let (hit, explored) = bfs_first(
        start,
        a.n_letters(),
        budget.max_visited,
        "image-set search",
        |set, letter| Some(a.image_letter(set, letter)),
        |set| set.len() == 1,
    )?;
    Ok(match hit {
        Some((word, image)) => {
            let target = image.sole_member().expect("accepted image is a singleton");
            SyncResult::positive(word, target, explored)
        }
        None => SyncResult::negative(explored),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use automata_core::Word;

    #[test]
    fn single_state_needs_empty_word() {
        let a = Dfa::identity(1, 1);
        let result = shortest_sync_word(&a, &Budget::default()).unwrap();
        assert!(result.synchronizing);
        assert_eq!(result.witness, Some(Word::empty()));
    }

    #[test]
    fn chain_takes_length_n_minus_1() {
        // 0 -> 1 -> 2 -> 3, 3 self-loops: every state funnels into 3.
        let a = Dfa::new(4, 1, vec![1, 2, 3, 3]).unwrap();
        let result = shortest_sync_word(&a, &Budget::default()).unwrap();
        assert_eq!(result.witness.unwrap().len(), 3);
        assert_eq!(result.target, Some(3));
    }

    #[test]
    fn identity_not_synchronizing() {
        let a = Dfa::identity(3, 2);
        let result = shortest_sync_word(&a, &Budget::default()).unwrap();
        assert!(!result.synchronizing);
    }

    #[test]
    fn singleton_subset_synchronizes_immediately() {
        let a = Dfa::identity(3, 2);
        let s = StateSet::singleton(3, 1);
        let result = subset_shortest_sync_word(&a, &s, &Budget::default()).unwrap();
        assert!(result.synchronizing);
        assert_eq!(result.witness, Some(Word::empty()));
        assert_eq!(result.target, Some(1));
    }

    #[test]
    fn empty_subset_rejected() {
        let a = Dfa::identity(3, 2);
        let err = subset_shortest_sync_word(&a, &StateSet::empty(3), &Budget::default());
        assert!(matches!(err, Err(EngineError::Input(_))));
    }

    #[test]
    fn state_cap_enforced() {
        let a = Dfa::identity(5, 1);
        let tight = Budget {
            max_states: 4,
            ..Budget::default()
        };
        assert!(matches!(
            shortest_sync_word(&a, &tight),
            Err(EngineError::Budget { cap: 4, .. })
        ));
    }

    #[test]
    fn witness_is_length_lex_minimal() {
        // Letter 1 merges immediately; letter 0 permutes. "1" beats "0...".
        let a = Dfa::new(3, 2, vec![1, 0, 2, 0, 0, 0]).unwrap();
        let result = shortest_sync_word(&a, &Budget::default()).unwrap();
        assert_eq!(result.witness.unwrap().letters(), &[1]);
    }
}
