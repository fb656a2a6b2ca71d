//! Maximum synchronizing sets.
//!
//! Every subset of a synchronizing set is synchronizing, which makes the
//! top-down cardinality descent sound: the first success while testing all
//! c-subsets for c = n, n-1, ... is a maximum synchronizing set. Subsets
//! containing a pair of states with no merging word can be skipped outright,
//! so candidates are enumerated as cliques of the pairwise-mergeable graph
//! and each candidate is confirmed by an image BFS (pairwise mergeability
//! does not imply joint synchronizability).

use std::collections::HashMap;

use automata_core::{Dfa, StateSet, Word};

use crate::budget::{Budget, EngineError};
use crate::pairs::PairTable;
use crate::result::MaxSyncSetResult;
use crate::shortest::subset_shortest_sync_word;

/// How hard to try: `Exact` proves maximality, `WitnessOnly` grows a
/// maximal-by-inclusion set greedily without any size claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaxSyncMode {
    Exact,
    WitnessOnly,
}

pub fn max_sync_set(
    a: &Dfa,
    mode: MaxSyncMode,
    budget: &Budget,
) -> Result<MaxSyncSetResult, EngineError> {
    match mode {
        MaxSyncMode::Exact => max_sync_set_exact(a, budget),
        MaxSyncMode::WitnessOnly => max_sync_set_witness_only(a, budget),
    }
}

fn verify_certificate(a: &Dfa, result: &MaxSyncSetResult) -> Result<(), EngineError> {
    let image = a
        .image(&result.set, &result.witness)
        .map_err(EngineError::Automata)?;
    if image.sole_member() != Some(result.target) {
        return Err(EngineError::input(
            "internal error: witness does not synchronize the reported set",
        ));
    }
    Ok(())
}

fn max_sync_set_exact(a: &Dfa, budget: &Budget) -> Result<MaxSyncSetResult, EngineError> {
    let n = a.n_states();
    let pairs = PairTable::build(a);
    let mut capped_above = false;

    for size in (1..=n).rev() {
        let mut found: Option<MaxSyncSetResult> = None;
        let mut capped_here = false;
        for_each_clique(n, &|p, q| pairs.mergeable(p, q), size, &mut |members| {
            let set = StateSet::from_indices(n, members.iter().copied())
                .expect("members are in range");
            match subset_shortest_sync_word(a, &set, budget) {
                Ok(result) if result.synchronizing => {
                    found = Some(MaxSyncSetResult {
                        set,
                        witness: result.witness.expect("synchronizing result has witness"),
                        target: result.target.expect("synchronizing result has target"),
                    });
                    true
                }
                Ok(_) => false,
                Err(err) if err.is_budget() => {
                    capped_here = true;
                    false
                }
                Err(_) => false,
            }
        });
        if let Some(result) = found {
            if capped_above {
                return Err(EngineError::Budget {
                    what: format!(
                        "exact maximum synchronizing set: candidates above size {size} \
                         were capped, result is a lower bound only"
                    ),
                    cap: budget.max_visited,
                });
            }
            verify_certificate(a, &result)?;
            return Ok(result);
        }
        capped_above |= capped_here;
    }
    unreachable!("singletons are always synchronizing")
}

fn max_sync_set_witness_only(a: &Dfa, budget: &Budget) -> Result<MaxSyncSetResult, EngineError> {
    let n = a.n_states();
    let mut set = StateSet::empty(n);
    let mut best: Option<MaxSyncSetResult> = None;
    for q in 0..n {
        let mut candidate = set.clone();
        candidate.insert(q);
        let result = subset_shortest_sync_word(a, &candidate, budget)?;
        if result.synchronizing {
            set = candidate;
            best = Some(MaxSyncSetResult {
                set: set.clone(),
                witness: result.witness.expect("synchronizing result has witness"),
                target: result.target.expect("synchronizing result has target"),
            });
        }
    }
    let result = best.expect("a singleton always synchronizes");
    verify_certificate(a, &result)?;
    Ok(result)
}

/// Calls `visit` for every `size`-subset whose members are pairwise related,
/// in lexicographic order of member lists; stops early when `visit` returns
/// true. Returns whether a visit succeeded.
fn for_each_clique(
    n: usize,
    related: &dyn Fn(usize, usize) -> bool,
    size: usize,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    fn recurse(
        n: usize,
        related: &dyn Fn(usize, usize) -> bool,
        size: usize,
        chosen: &mut Vec<usize>,
        next: usize,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if chosen.len() == size {
            return visit(chosen);
        }
        let needed = size - chosen.len();
        if n - next < needed {
            return false;
        }
        for candidate in next..=(n - needed) {
            if chosen.iter().all(|&q| related(q, candidate)) {
                chosen.push(candidate);
                if recurse(n, related, size, chosen, candidate + 1, visit) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if size == 0 || size > n {
        return false;
    }
    let mut chosen = Vec::with_capacity(size);
    recurse(n, related, size, &mut chosen, 0, visit)
}

/// Exact maximum synchronizing set by enumerating the transition monoid:
/// a set is synchronizing iff it lies inside one fiber of some reachable
/// transformation, so the answer is the largest fiber over the monoid.
/// `element_cap` bounds the number of distinct transformations enumerated.
pub fn max_sync_set_via_monoid(
    a: &Dfa,
    element_cap: usize,
) -> Result<MaxSyncSetResult, EngineError> {
    let n = a.n_states();
    let identity: Vec<usize> = (0..n).collect();
    let mut visited: HashMap<Vec<usize>, u32> = HashMap::new();
    let mut parents: Vec<(u32, u16)> = Vec::new();
    let mut queue = std::collections::VecDeque::new();

    // best = (fiber size, node, fiber, target)
    let mut best: Option<(usize, u32, StateSet, usize)> = None;
    let consider = |node: u32, table: &[usize], best: &mut Option<(usize, u32, StateSet, usize)>| {
        let mut fibers: Vec<StateSet> = vec![StateSet::empty(n); n];
        for (q, &t) in table.iter().enumerate() {
            fibers[t].insert(q);
        }
        for (target, fiber) in fibers.into_iter().enumerate() {
            let size = fiber.len();
            if size > best.as_ref().map_or(0, |b| b.0) {
                *best = Some((size, node, fiber, target));
            }
        }
    };

    parents.push((u32::MAX, 0));
    consider(0, &identity, &mut best);
    visited.insert(identity.clone(), 0);
    queue.push_back((0u32, identity));

    while let Some((node, table)) = queue.pop_front() {
        for letter in 0..a.n_letters() {
            let composed: Vec<usize> = table.iter().map(|&q| a.step(q, letter)).collect();
            if visited.contains_key(&composed) {
                continue;
            }
            if visited.len() >= element_cap {
                return Err(EngineError::Budget {
                    what: "transition monoid enumeration".into(),
                    cap: element_cap,
                });
            }
            let id = parents.len() as u32;
            parents.push((node, letter as u16));
            consider(id, &composed, &mut best);
            visited.insert(composed.clone(), id);
            queue.push_back((id, composed));
        }
    }

    let (_, node, set, target) = best.expect("the identity yields singleton fibers");
    let mut letters = Vec::new();
    let mut at = node;
    while at != 0 {
        let (parent, letter) = parents[at as usize];
        letters.push(letter as usize);
        at = parent;
    }
    letters.reverse();
    let result = MaxSyncSetResult {
        set,
        witness: Word::from_letters(letters),
        target,
    };
    verify_certificate(a, &result)?;
    Ok(result)
}

/// Maximum synchronizing set for unary automata in polynomial time: after n
/// applications of the single letter every state sits on a cycle and no two
/// states merge later, so the largest fiber of the n-fold composition is the
/// answer and the witness is the letter repeated n times.
pub fn max_sync_set_unary(a: &Dfa) -> Result<MaxSyncSetResult, EngineError> {
    if a.n_letters() != 1 {
        return Err(EngineError::input(format!(
            "unary engine requires a 1-letter alphabet, got {}",
            a.n_letters()
        )));
    }
    let n = a.n_states();
    let mut table: Vec<usize> = (0..n).collect();
    for _ in 0..n {
        for entry in table.iter_mut() {
            *entry = a.step(*entry, 0);
        }
    }
    let mut fibers: Vec<StateSet> = vec![StateSet::empty(n); n];
    for (q, &t) in table.iter().enumerate() {
        fibers[t].insert(q);
    }
    let (target, set) = fibers
        .into_iter()
        .enumerate()
        .max_by(|(ta, a_), (tb, b_)| a_.len().cmp(&b_.len()).then(tb.cmp(ta)))
        .expect("at least one state");
    let result = MaxSyncSetResult {
        set,
        witness: Word::repeated(0, n),
        target,
    };
    verify_certificate(a, &result)?;
    Ok(result)
}
