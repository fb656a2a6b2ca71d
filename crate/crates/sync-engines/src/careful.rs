//! Careful synchronization of partial automata.
//!
//! A word carefully synchronizes when it maps all states to one state and
//! every prefix is defined on every state it is applied to. The search walks
//! images of the full state set, taking a letter only when it is defined on
//! every member of the running image.

use automata_core::{PartialDfa, StateSet};

use crate::bfs::bfs_first;
use crate::budget::{Budget, EngineError};
use crate::result::SyncResult;

/// Shortest carefully synchronizing word, or a definite negative after
/// exhausting the reachable image space.
pub fn careful_shortest_word(a: &PartialDfa, budget: &Budget) -> Result<SyncResult, EngineError> {
    budget.check_states(a.n_states(), "careful whole-state-set search")?;
    let start = StateSet::full(a.n_states());
    let (hit, explored) = bfs_first(
        start,
        a.n_letters(),
        budget.max_visited,
        "careful image search",
        |set, letter| {
            let mut next = StateSet::empty(a.n_states());
            for q in set.iter() {
                next.insert(a.step(q, letter)?);
            }
            Some(next)
        },
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
    use automata_core::{Dfa, Word};

    #[test]
    fn total_partial_behaves_like_complete() {
        let a = Dfa::new(3, 1, vec![1, 2, 2]).unwrap();
        let careful = careful_shortest_word(&a.to_partial(), &Budget::default()).unwrap();
        let plain = crate::shortest_sync_word(&a, &Budget::default()).unwrap();
        assert_eq!(careful.synchronizing, plain.synchronizing);
        assert_eq!(careful.witness, plain.witness);
    }

    #[test]
    fn undefined_letters_are_avoided() {
        // Letter 0 merges but is undefined on state 1; letter 1 moves 1 -> 0.
        // The careful word must route around the hole: "10".
        let a = PartialDfa::from_fn(2, 2, |q, x| match (q, x) {
            (0, 0) => Some(0),
            (0, 1) => Some(0),
            (1, 0) => None,
            (1, 1) => Some(0),
            _ => unreachable!(),
        })
        .unwrap();
        let result = careful_shortest_word(&a, &Budget::default()).unwrap();
        assert!(result.synchronizing);
        assert_eq!(result.witness, Some(Word::from_letters(vec![1])));
    }

    #[test]
    fn dead_end_is_a_definite_negative() {
        // No letter is defined everywhere, so no careful word exists.
        let a = PartialDfa::from_fn(2, 1, |q, _| (q == 0).then_some(1)).unwrap();
        let result = careful_shortest_word(&a, &Budget::default()).unwrap();
        assert!(!result.synchronizing);
        assert_eq!(result.witness, None);
    }
}
