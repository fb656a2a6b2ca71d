//! Polynomial synchronizability test via the pair automaton.
//!
//! A complete automaton is synchronizing iff every pair of states can be
//! mapped to a single state. Merging words per pair come from one backward
//! multi-source BFS over unordered pairs; a full witness is assembled by
//! repeatedly merging the two smallest states of the running image, which
//! bounds the witness length by n^3.

use automata_core::{Dfa, StateSet, Word};

use crate::result::SyncResult;

const UNREACHED: u32 = u32::MAX;

/// Shortest merging distances for unordered state pairs.
pub(crate) struct PairTable {
    n: usize,
    dist: Vec<u32>,
    via: Vec<u16>,
}

impl PairTable {
    pub(crate) fn build(a: &Dfa) -> PairTable {
        let n = a.n_states();
        let k = a.n_letters();
        let idx = |p: usize, q: usize| p * n + q; // requires p < q
        let mut dist = vec![UNREACHED; n * n];
        let mut via = vec![0u16; n * n];
        let mut rev: Vec<Vec<(u32, u16)>> = vec![Vec::new(); n * n];
        let mut queue = std::collections::VecDeque::new();

        for p in 0..n {
            for q in (p + 1)..n {
                let source = idx(p, q);
                for x in 0..k {
                    let (tp, tq) = (a.step(p, x), a.step(q, x));
                    if tp == tq {
                        if dist[source] == UNREACHED {
                            dist[source] = 1;
                            via[source] = x as u16;
                            queue.push_back(source as u32);
                        }
                    } else {
                        let target = idx(tp.min(tq), tp.max(tq));
                        rev[target].push((source as u32, x as u16));
                    }
                }
            }
        }

        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &(source, x) in &rev[u as usize] {
                let source = source as usize;
                if dist[source] == UNREACHED {
                    dist[source] = du + 1;
                    via[source] = x;
                    queue.push_back(source as u32);
                }
            }
        }

        PairTable { n, dist, via }
    }

    pub(crate) fn mergeable(&self, p: usize, q: usize) -> bool {
        p == q || self.dist[p.min(q) * self.n + p.max(q)] != UNREACHED
    }

    fn via(&self, p: usize, q: usize) -> usize {
        self.via[p.min(q) * self.n + p.max(q)] as usize
    }

    /// Number of pairs with a known merging word.
    fn mergeable_count(&self) -> usize {
        self.dist.iter().filter(|&&d| d != UNREACHED).count()
    }
}

/// Pair-based synchronizability test with a polynomially sized witness.
///
/// `explored` reports the number of mergeable pairs the backward BFS labeled.
/// The witness is deterministic but not necessarily shortest.
pub fn is_synchronizing(a: &Dfa) -> SyncResult {
    let n = a.n_states();
    if n == 1 {
        return SyncResult::positive(Word::empty(), 0, 1);
    }
    let table = PairTable::build(a);
    let explored = table.mergeable_count();
    for p in 0..n {
        for q in (p + 1)..n {
            if !table.mergeable(p, q) {
                return SyncResult::negative(explored);
            }
        }
    }

    let mut image = StateSet::full(n);
    let mut witness = Word::empty();
    while image.len() > 1 {
        let (mut p, mut q) = {
            let mut members = image.iter();
            (
                members.next().expect("image is non-empty"),
                members.next().expect("image has two members"),
            )
        };
        while p != q {
            let x = table.via(p, q);
            witness.push(x);
            image = a.image_letter(&image, x);
            p = a.step(p, x);
            q = a.step(q, x);
        }
    }
    let target = image.sole_member().expect("image is a singleton");
    SyncResult::positive(witness, target, explored)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_merging_letter() {
        let a = Dfa::new(2, 1, vec![0, 0]).unwrap();
        let result = is_synchronizing(&a);
        assert!(result.synchronizing);
        assert_eq!(result.witness.as_ref().unwrap().len(), 1);
        assert_eq!(result.target, Some(0));
    }

    #[test]
    fn identity_is_not_synchronizing() {
        let a = Dfa::identity(2, 1);
        let result = is_synchronizing(&a);
        assert!(!result.synchronizing);
        assert_eq!(result.witness, None);
        assert_eq!(result.target, None);
    }

    #[test]
    fn witness_actually_synchronizes() {
        // Cyclic shift plus a merging letter.
        let a = Dfa::new(4, 2, vec![1, 0, 2, 0, 3, 2, 0, 3]).unwrap();
        let result = is_synchronizing(&a);
        if result.synchronizing {
            let w = result.witness.unwrap();
            let img = a.image(&StateSet::full(4), &w).unwrap();
            assert_eq!(img.sole_member(), result.target);
        }
    }

    #[test]
    fn one_state_synchronizes_with_empty_word() {
        let a = Dfa::identity(1, 2);
        let result = is_synchronizing(&a);
        assert!(result.synchronizing);
        assert_eq!(result.witness, Some(Word::empty()));
    }
}
