//! Empirical check of the partition structure of maximal synchronizing sets
//! in Eulerian automata (every state hit by exactly alphabet-size table
//! entries, transition digraph strongly connected — the Euler-circuit
//! setting): the fibers of any minimum-rank word form a partition of the
//! states into inclusion-maximal synchronizing sets, and every
//! inclusion-maximal synchronizing set has size n/rank.
//!
//! The verifier computes the exact rank with a witness word, takes the
//! witness's fibers, and checks each is an inclusion-maximal synchronizing
//! set against a full subset-lattice enumeration (a set is synchronizing iff
//! it is a singleton or some one-letter image is). Enumerating the lattice
//! bounds this to small n by construction. The check is honest: on automata
//! where the property does not apply (e.g. disconnected in-degree-balanced
//! ones) the report simply records that it fails.

use automata_core::{Dfa, StateSet};

use crate::budget::{Budget, EngineError};
use crate::rank::rank_of_automaton_exact;

/// Subset enumeration is 2^n; refuse anything bigger than this.
pub const EULERIAN_ENUM_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianPartitionReport {
    pub rank: usize,
    /// Fibers of the minimum-rank witness word, ordered by smallest member.
    /// As preimage classes of a total function they always partition Q into
    /// exactly `rank` nonempty classes.
    pub classes: Vec<StateSet>,
    /// Every fiber is an inclusion-maximal synchronizing set.
    pub fibers_are_maximal: bool,
    /// Every inclusion-maximal synchronizing set has size n / rank.
    pub maximal_sets_equal_size: bool,
    /// Number of inclusion-maximal synchronizing sets found by enumeration.
    pub maximal_set_count: usize,
}

impl EulerianPartitionReport {
    pub fn holds(&self) -> bool {
        self.fibers_are_maximal && self.maximal_sets_equal_size
    }
}

pub fn verify_eulerian_partition(
    a: &Dfa,
    budget: &Budget,
) -> Result<EulerianPartitionReport, EngineError> {
    if !a.is_eulerian() {
        return Err(EngineError::input(
            "automaton is not Eulerian (some state has in-degree != alphabet size)",
        ));
    }
    let n = a.n_states();
    if n > EULERIAN_ENUM_CAP {
        return Err(EngineError::Budget {
            what: format!("Eulerian partition check enumerates all subsets of {n} states"),
            cap: EULERIAN_ENUM_CAP,
        });
    }

    let rank_result = rank_of_automaton_exact(a, budget)?;
    let rank = rank_result.rank;

    // Fibers of the witness word.
    let mut fiber_of = vec![usize::MAX; n];
    let mut classes: Vec<StateSet> = Vec::new();
    for q in 0..n {
        let target = a
            .apply(q, &rank_result.witness)
            .expect("witness letters are valid");
        if fiber_of[target] == usize::MAX {
            fiber_of[target] = classes.len();
            classes.push(StateSet::empty(n));
        }
        classes[fiber_of[target]].insert(q);
    }
    classes.sort_by_key(StateSet::min_member);

    // Synchronizing-subset table over the whole lattice: backward closure
    // from the singletons along one-letter image edges.
    let k = a.n_letters();
    let full = (1u32 << n) - 1;
    let step_masks: Vec<u32> = (0..n * k)
        .map(|i| 1u32 << a.step(i / k, i % k))
        .collect();
    let mut image = vec![0u32; (full as usize + 1) * k];
    for mask in 1..=full {
        for x in 0..k {
            let mut img = 0u32;
            let mut bits = mask;
            while bits != 0 {
                let q = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                img |= step_masks[q * k + x];
            }
            image[mask as usize * k + x] = img;
        }
    }
    let mut preimages: Vec<Vec<u32>> = vec![Vec::new(); full as usize + 1];
    for mask in 1..=full {
        for x in 0..k {
            preimages[image[mask as usize * k + x] as usize].push(mask);
        }
    }
    let mut synchronizing = vec![false; full as usize + 1];
    let mut queue = std::collections::VecDeque::new();
    for q in 0..n {
        let mask = 1u32 << q;
        synchronizing[mask as usize] = true;
        queue.push_back(mask);
    }
    while let Some(t) = queue.pop_front() {
        for &source in &preimages[t as usize] {
            if !synchronizing[source as usize] {
                synchronizing[source as usize] = true;
                queue.push_back(source);
            }
        }
    }
    let is_maximal = |mask: u32| {
        synchronizing[mask as usize]
            && (0..n).all(|q| {
                let bit = 1u32 << q;
                mask & bit != 0 || !synchronizing[(mask | bit) as usize]
            })
    };

    let fibers_are_maximal = classes.iter().all(|class| {
        let mask = class.iter().fold(0u32, |m, q| m | 1 << q);
        is_maximal(mask)
    });

    let mut maximal_set_count = 0usize;
    // rank >= 1 always; the equal-size claim needs rank | n in the first place.
    let mut maximal_sets_equal_size = n.is_multiple_of(rank);
    let class_size = n / rank;
    for mask in 1..=full {
        if is_maximal(mask) {
            maximal_set_count += 1;
            if mask.count_ones() as usize != class_size {
                maximal_sets_equal_size = false;
            }
        }
    }

    Ok(EulerianPartitionReport {
        rank,
        classes,
        fibers_are_maximal,
        maximal_sets_equal_size,
        maximal_set_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_partitions_into_singletons() {
        let a = Dfa::identity(4, 2);
        let report = verify_eulerian_partition(&a, &Budget::default()).unwrap();
        assert_eq!(report.rank, 4);
        assert_eq!(report.classes.len(), 4);
        assert_eq!(report.maximal_set_count, 4);
        assert!(report.holds());
    }

    #[test]
    fn synchronizing_eulerian_has_one_class() {
        // letter 0: 0->1, 1->2, 2->1; letter 1: 0->0, 1->0, 2->2.
        // In-degree 2 everywhere and the automaton synchronizes.
        let a = Dfa::new(3, 2, vec![1, 0, 2, 0, 1, 2]).unwrap();
        assert!(a.is_eulerian());
        let report = verify_eulerian_partition(&a, &Budget::default()).unwrap();
        if report.rank == 1 {
            assert_eq!(report.classes.len(), 1);
            assert_eq!(report.classes[0], StateSet::full(3));
        }
        assert!(report.holds());
    }

    #[test]
    fn overlapping_maximal_sets_still_satisfy_the_property() {
        // Rank 2; the maximal synchronizing sets {0,1}, {0,2}, {1,3}, {2,3}
        // overlap, but any minimum-rank word's fibers pick out a partition
        // and all maximal sets have size n/rank = 2.
        let a = Dfa::new(4, 2, vec![1, 0, 1, 3, 2, 0, 2, 3]).unwrap();
        assert!(a.is_eulerian());
        let report = verify_eulerian_partition(&a, &Budget::default()).unwrap();
        assert_eq!(report.rank, 2);
        assert_eq!(report.classes.len(), 2);
        assert_eq!(report.maximal_set_count, 4);
        assert!(report.holds());
    }

    #[test]
    fn disconnected_balanced_automaton_fails_honestly() {
        // State 0 is an unreachable sink; the other five states synchronize.
        // In-degrees are all 2, but there is no Euler circuit and the
        // equal-size claim fails.
        let a = Dfa::new(6, 2, vec![0, 0, 2, 1, 3, 1, 4, 3, 5, 4, 2, 5]).unwrap();
        assert!(a.is_eulerian());
        let report = verify_eulerian_partition(&a, &Budget::default()).unwrap();
        assert!(!report.holds());
        assert!(!report.maximal_sets_equal_size);
    }

    #[test]
    fn non_eulerian_rejected() {
        let a = Dfa::new(2, 1, vec![0, 0]).unwrap();
        assert!(matches!(
            verify_eulerian_partition(&a, &Budget::default()),
            Err(EngineError::Input(_))
        ));
    }

    #[test]
    fn enumeration_cap_enforced() {
        let a = Dfa::identity(17, 1);
        assert!(matches!(
            verify_eulerian_partition(&a, &Budget::default()),
            Err(EngineError::Budget { .. })
        ));
    }
}
