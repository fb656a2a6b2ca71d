//! Rank computation: the minimum image size achievable by any word.
//!
//! Weakly acyclic automata admit a linear fast path: the rank equals the
//! number of sink states, and a short witness falls out of a greedy sweep
//! along a topological sort. The general case explores the image space of Q.

use automata_core::{Dfa, StateSet, TopoOrder, Word};

use crate::bfs::bfs_min;
use crate::budget::{Budget, EngineError};
use crate::result::RankResult;

/// Greedy witness for weakly acyclic automata.
///
/// While the image of Q contains a non-sink state, the non-sink member with
/// the smallest topological position is moved by the smallest letter that
/// moves it. Every step strictly raises the smallest non-sink position in the
/// image, so the word has length at most `n - r` where `r` is the number of
/// sinks, and the final image is exactly the sink set.
pub fn greedy_rank_word_wa(a: &Dfa, order: &TopoOrder) -> Result<RankResult, EngineError> {
    if !order.is_valid_for(a) {
        return Err(EngineError::input(
            "topological order does not fit the automaton (is it weakly acyclic?)",
        ));
    }
    let n = a.n_states();
    let sinks = a.sink_states();
    let mut image = StateSet::full(n);
    let mut witness = Word::empty();
    loop {
        let mover = image
            .iter()
            .filter(|&q| !sinks.contains(q))
            .min_by_key(|&q| order.position_of(q));
        let Some(p) = mover else { break };
        let letter = (0..a.n_letters())
            .find(|&x| a.step(p, x) != p)
            .expect("non-sink states move under some letter");
        witness.push(letter);
        image = a.image_letter(&image, letter);
    }
    Ok(RankResult {
        rank: image.len(),
        witness,
        final_image: image,
        explored: 0,
    })
}

/// Exact rank of the automaton by exhausting the image space of Q. The
/// witness is the length-then-lexicographic first word reaching an image of
/// minimum size, i.e. also a shortest word of that rank.
pub fn rank_of_automaton_exact(a: &Dfa, budget: &Budget) -> Result<RankResult, EngineError> {
    budget.check_states(a.n_states(), "whole-state-set rank search")?;
    rank_bfs(a, StateSet::full(a.n_states()), budget)
}

/// Rank of the automaton: the weakly acyclic fast path when applicable,
/// otherwise the exact image search.
pub fn rank_of_automaton(a: &Dfa, budget: &Budget) -> Result<RankResult, EngineError> {
    match a.topological_sort() {
        Ok(order) => greedy_rank_word_wa(a, &order),
        Err(_) => rank_of_automaton_exact(a, budget),
    }
}

/// Exact rank of a subset of states.
pub fn rank_of_subset(a: &Dfa, set: &StateSet, budget: &Budget) -> Result<RankResult, EngineError> {
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
    rank_bfs(a, set.clone(), budget)
}

fn rank_bfs(a: &Dfa, start: StateSet, budget: &Budget) -> Result<RankResult, EngineError> {
    let (witness, final_image, rank, explored) = bfs_min(
        start,
        a.n_letters(),
        budget.max_visited,
        "image-set rank search",
        1,
        |set, letter| Some(a.image_letter(set, letter)),
        StateSet::len,
    )?;
    Ok(RankResult {
        rank,
        witness,
        final_image,
        explored,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_full_rank() {
        let a = Dfa::identity(3, 2);
        let r = rank_of_automaton(&a, &Budget::default()).unwrap();
        assert_eq!(r.rank, 3);
        assert!(r.witness.is_empty());
        assert_eq!(r.final_image, StateSet::full(3));
    }

    #[test]
    fn all_sinks_yield_empty_greedy_word() {
        let a = Dfa::identity(4, 1);
        let order = a.topological_sort().unwrap();
        let r = greedy_rank_word_wa(&a, &order).unwrap();
        assert_eq!(r.rank, 4);
        assert!(r.witness.is_empty());
    }

    #[test]
    fn greedy_matches_exact_on_a_funnel() {
        // 0 -> 1 -> 2, 2 and 3 are sinks.
        let a = Dfa::new(4, 1, vec![1, 2, 2, 3]).unwrap();
        let order = a.topological_sort().unwrap();
        let greedy = greedy_rank_word_wa(&a, &order).unwrap();
        let exact = rank_of_automaton_exact(&a, &Budget::default()).unwrap();
        assert_eq!(greedy.rank, 2);
        assert_eq!(exact.rank, 2);
        assert_eq!(greedy.final_image, a.sink_states());
        assert!(greedy.witness.len() <= 4 - 2);
    }

    #[test]
    fn greedy_rejects_bad_order() {
        let a = Dfa::new(2, 1, vec![1, 0]).unwrap(); // swap: not weakly acyclic
        let order = Dfa::identity(2, 1).topological_sort().unwrap();
        assert!(greedy_rank_word_wa(&a, &order).is_err());
    }

    #[test]
    fn subset_rank_of_singleton_is_one() {
        let a = Dfa::identity(3, 1);
        let r = rank_of_subset(&a, &StateSet::singleton(3, 2), &Budget::default()).unwrap();
        assert_eq!(r.rank, 1);
        assert!(r.witness.is_empty());
    }

    #[test]
    fn subset_rank_on_identity_is_cardinality() {
        let a = Dfa::identity(4, 2);
        let s = StateSet::from_indices(4, [0, 2, 3]).unwrap();
        let r = rank_of_subset(&a, &s, &Budget::default()).unwrap();
        assert_eq!(r.rank, 3);
    }

    #[test]
    fn rank_witness_is_shortest_for_its_rank() {
        // Rank 1 via the merging letter 1; letter 0 shuffles.
        let a = Dfa::new(3, 2, vec![1, 0, 2, 0, 0, 0]).unwrap();
        let r = rank_of_automaton(&a, &Budget::default()).unwrap();
        assert_eq!(r.rank, 1);
        assert_eq!(r.witness.letters(), &[1]);
    }
}
