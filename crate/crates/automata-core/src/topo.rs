use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::dfa::{Dfa, PartialDfa};

/// A topological sort of the states of a weakly acyclic automaton.
///
/// `position[q]` is the index of state `q` in the sort; for every transition
/// `q -> q'` with `q != q'` the invariant `position[q] < position[q']` holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopoOrder {
    position: Vec<usize>,
}

impl TopoOrder {
    pub fn n_states(&self) -> usize {
        self.position.len()
    }

    pub fn position_of(&self, state: usize) -> usize {
        self.position[state]
    }

    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    /// States listed in sort order.
    pub fn order(&self) -> Vec<usize> {
        let mut order = vec![0; self.position.len()];
        for (state, &pos) in self.position.iter().enumerate() {
            order[pos] = state;
        }
        order
    }

    /// Checks the defining invariant against an automaton's table.
    pub fn is_valid_for(&self, a: &Dfa) -> bool {
        if self.position.len() != a.n_states() {
            return false;
        }
        (0..a.n_states()).all(|q| {
            (0..a.n_letters()).all(|x| {
                let t = a.step(q, x);
                t == q || self.position[q] < self.position[t]
            })
        })
    }
}

/// Kahn's algorithm over the non-self-loop transition digraph, popping the
/// smallest ready state index first so the order is reproducible. On failure
/// returns one simple cycle of length >= 2 as witness.
fn kahn(n: usize, edges: &[(usize, usize)]) -> Result<TopoOrder, Vec<usize>> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut in_deg = vec![0usize; n];
    let mut seen = std::collections::HashSet::new();
    for &(from, to) in edges {
        if from != to && seen.insert((from, to)) {
            adj[from].push(to);
            in_deg[to] += 1;
        }
    }

    let mut ready: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&q| in_deg[q] == 0)
        .map(Reverse)
        .collect();
    let mut position = vec![usize::MAX; n];
    let mut next_pos = 0;
    while let Some(Reverse(q)) = ready.pop() {
        position[q] = next_pos;
        next_pos += 1;
        for &t in &adj[q] {
            in_deg[t] -= 1;
            if in_deg[t] == 0 {
                ready.push(Reverse(t));
            }
        }
    }
    if next_pos == n {
        return Ok(TopoOrder { position });
    }

    // Leftover states all have an unresolved (leftover) predecessor, so
    // walking predecessors from any of them must revisit a state; the
    // revisited segment is a simple cycle, reported in forward edge order
    // rotated to start at its smallest state.
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (from, to) in seen {
        if position[from] == usize::MAX && position[to] == usize::MAX {
            preds[to].push(from);
        }
    }
    let start = (0..n)
        .find(|&q| position[q] == usize::MAX)
        .expect("some state is leftover");
    let mut trail = Vec::new();
    let mut index_on_trail = vec![usize::MAX; n];
    let mut at = start;
    loop {
        if index_on_trail[at] != usize::MAX {
            let mut cycle = trail[index_on_trail[at]..].to_vec();
            cycle.reverse();
            let min_pos = cycle
                .iter()
                .enumerate()
                .min_by_key(|(_, &q)| q)
                .map(|(i, _)| i)
                .unwrap();
            cycle.rotate_left(min_pos);
            return Err(cycle);
        }
        index_on_trail[at] = trail.len();
        trail.push(at);
        at = *preds[at]
            .iter()
            .min()
            .expect("leftover state has a leftover predecessor");
    }
}

fn complete_edges(a: &Dfa) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(a.n_states() * a.n_letters());
    for q in 0..a.n_states() {
        for x in 0..a.n_letters() {
            edges.push((q, a.step(q, x)));
        }
    }
    edges
}

fn partial_edges(a: &PartialDfa) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for q in 0..a.n_states() {
        for x in 0..a.n_letters() {
            if let Some(t) = a.step(q, x) {
                edges.push((q, t));
            }
        }
    }
    edges
}

impl Dfa {
    /// Topological sort of the states, or a witness cycle when some simple
    /// cycle is not a self-loop.
    pub fn topological_sort(&self) -> Result<TopoOrder, Vec<usize>> {
        kahn(self.n_states(), &complete_edges(self))
    }

    pub fn is_weakly_acyclic(&self) -> bool {
        self.topological_sort().is_ok()
    }
}

impl PartialDfa {
    pub fn topological_sort(&self) -> Result<TopoOrder, Vec<usize>> {
        kahn(self.n_states(), &partial_edges(self))
    }

    pub fn is_weakly_acyclic(&self) -> bool {
        self.topological_sort().is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_weakly_acyclic() {
        let a = Dfa::identity(4, 2);
        let order = a.topological_sort().unwrap();
        assert!(order.is_valid_for(&a));
        // All-self-loop automaton sorts states in index order.
        assert_eq!(order.order(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn swap_automaton_yields_cycle_witness() {
        let a = Dfa::new(2, 1, vec![1, 0]).unwrap();
        let cycle = a.topological_sort().unwrap_err();
        assert_eq!(cycle, vec![0, 1]);
    }

    #[test]
    fn chain_sorts_in_flow_order() {
        // 2 -> 0 -> 1, 1 self-loops.
        let a = Dfa::new(3, 1, vec![1, 1, 0]).unwrap();
        let order = a.topological_sort().unwrap();
        assert!(order.is_valid_for(&a));
        assert_eq!(order.order(), vec![2, 0, 1]);
    }

    #[test]
    fn partial_tables_sort_over_defined_entries() {
        let a = PartialDfa::from_fn(3, 1, |q, _| match q {
            0 => Some(1),
            1 => None,
            _ => Some(2),
        })
        .unwrap();
        assert!(a.is_weakly_acyclic());
    }

    #[test]
    fn longer_cycle_is_reported() {
        // 0 -> 1 -> 2 -> 0
        let a = Dfa::new(3, 1, vec![1, 2, 0]).unwrap();
        let cycle = a.topological_sort().unwrap_err();
        assert_eq!(cycle, vec![0, 1, 2]);
    }
}
