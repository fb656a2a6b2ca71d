//! Nonemptiness of the intersection of acceptor languages via BFS on the
//! product of initial states.

use automata_core::{Dfa, StateSet};

use crate::bfs::bfs_first;
use crate::budget::{Budget, EngineError};
use crate::result::IntersectionResult;

/// A complete automaton with an initial state and accepting set.
#[derive(Clone, Debug)]
pub struct Acceptor {
    pub dfa: Dfa,
    pub initial: usize,
    pub accepting: StateSet,
}

impl Acceptor {
    pub fn new(dfa: Dfa, initial: usize, accepting: StateSet) -> Result<Self, EngineError> {
        if initial >= dfa.n_states() {
            return Err(EngineError::input(format!(
                "initial state {initial} out of range for {} states",
                dfa.n_states()
            )));
        }
        if accepting.universe() != dfa.n_states() {
            return Err(EngineError::input(
                "accepting-set universe does not match the automaton",
            ));
        }
        Ok(Acceptor {
            dfa,
            initial,
            accepting,
        })
    }
}

/// Shortest word accepted by every acceptor, or emptiness after exhausting
/// the reachable product space. All acceptors must share an alphabet size;
/// the visited cap bounds the number of product tuples.
pub fn intersection_nonempty(
    acceptors: &[Acceptor],
    budget: &Budget,
) -> Result<IntersectionResult, EngineError> {
    if acceptors.is_empty() {
        return Err(EngineError::input("need at least one acceptor"));
    }
    let n_letters = acceptors[0].dfa.n_letters();
    if acceptors.iter().any(|acc| acc.dfa.n_letters() != n_letters) {
        return Err(EngineError::input(
            "acceptors must share the same alphabet size",
        ));
    }

    let start: Vec<usize> = acceptors.iter().map(|acc| acc.initial).collect();
    let (hit, explored) = bfs_first(
        start,
        n_letters,
        budget.max_visited,
        "acceptor product search",
        |tuple, letter| {
            Some(
                tuple
                    .iter()
                    .zip(acceptors)
                    .map(|(&q, acc)| acc.dfa.step(q, letter))
                    .collect::<Vec<usize>>(),
            )
        },
        |tuple| {
            tuple
                .iter()
                .zip(acceptors)
                .all(|(&q, acc)| acc.accepting.contains(q))
        },
    )?;
    Ok(match hit {
        Some((word, _)) => IntersectionResult {
            nonempty: true,
            witness: Some(word),
            explored,
        },
        None => IntersectionResult {
            nonempty: false,
            witness: None,
            explored,
        },
    })
}
