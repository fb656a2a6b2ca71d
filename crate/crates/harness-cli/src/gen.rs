//! Seeded instance generators. Everything is driven by a ChaCha stream, so
//! identical (parameters, seed) pairs reproduce identical instances.

use automata_core::{Dfa, StateSet};
use oracles::{CnfFormula, Graph};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform transition table.
pub fn gen_random_dfa(n: usize, k: usize, seed: u64) -> Dfa {
    let mut rng = rng_from_seed(seed);
    random_dfa_with(n, k, &mut rng)
}

pub fn random_dfa_with(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Dfa {
    Dfa::from_fn(n, k, |_, _| rng.gen_range(0..n)).expect("table is valid")
}

/// Weakly acyclic by construction: a random topological order is sampled
/// first and every transition targets a state at the same or a later
/// position (self-loops allowed).
pub fn gen_random_weakly_acyclic(n: usize, k: usize, seed: u64) -> Dfa {
    let mut rng = rng_from_seed(seed);
    random_weakly_acyclic_with(n, k, &mut rng)
}

pub fn random_weakly_acyclic_with(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Dfa {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        order.swap(i, j);
    }
    let mut position = vec![0usize; n];
    for (pos, &state) in order.iter().enumerate() {
        position[state] = pos;
    }
    Dfa::from_fn(n, k, |q, _| order[rng.gen_range(position[q]..n)]).expect("table is valid")
}

/// Eulerian by construction: the n*k outgoing slots receive a random
/// permutation of the multiset holding every state k times, so each state
/// ends up with in-degree exactly k.
pub fn gen_random_eulerian(n: usize, k: usize, seed: u64) -> Dfa {
    let mut rng = rng_from_seed(seed);
    random_eulerian_with(n, k, &mut rng)
}

pub fn random_eulerian_with(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Dfa {
    let mut targets: Vec<usize> = (0..n * k).map(|slot| slot / k).collect();
    for i in (1..targets.len()).rev() {
        let j = rng.gen_range(0..=i);
        targets.swap(i, j);
    }
    Dfa::new(n, k, targets).expect("table is valid")
}

/// Whether every state reaches every other state.
pub fn strongly_connected(a: &Dfa) -> bool {
    let n = a.n_states();
    let forward: Vec<Vec<usize>> = (0..n)
        .map(|q| (0..a.n_letters()).map(|x| a.step(q, x)).collect())
        .collect();
    let mut backward: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (q, targets) in forward.iter().enumerate() {
        for &t in targets {
            backward[t].push(q);
        }
    }
    let reaches_all = |adj: &[Vec<usize>]| {
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(q) = stack.pop() {
            for &t in &adj[q] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen.into_iter().all(|s| s)
    };
    reaches_all(&forward) && reaches_all(&backward)
}

/// Random Eulerian automaton whose transition digraph is strongly connected,
/// i.e. carries an Euler circuit. This is the setting of the maximal-
/// synchronizing-set partition property; in-degree balance alone admits
/// disconnected automata where that property fails.
pub fn random_connected_eulerian_with(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Dfa {
    loop {
        let a = random_eulerian_with(n, k, rng);
        if strongly_connected(&a) {
            return a;
        }
    }
}

/// Uniform random subset of exactly `size` states.
pub fn random_subset_with(n: usize, size: usize, rng: &mut ChaCha8Rng) -> StateSet {
    assert!(size <= n);
    let mut states: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        states.swap(i, j);
    }
    StateSet::from_indices(n, states.into_iter().take(size)).expect("states in range")
}

/// Every labeled graph on `p` vertices, ordered by edge bitmask.
pub fn all_graphs(p: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..p)
        .flat_map(|u| ((u + 1)..p).map(move |v| (u, v)))
        .collect();
    (0u64..(1 << pairs.len()))
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::new(p, edges).expect("edges are valid")
        })
        .collect()
}

/// Each possible edge kept with probability 1/2.
pub fn random_graph_with(p: usize, rng: &mut ChaCha8Rng) -> Graph {
    let edges = (0..p)
        .flat_map(|u| ((u + 1)..p).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(0.5))
        .collect::<Vec<_>>();
    Graph::new(p, edges).expect("edges are valid")
}

/// Random CNF with `m` clauses of 1..=max_len distinct variables each.
pub fn random_cnf_with(
    n_vars: usize,
    m: usize,
    max_len: usize,
    rng: &mut ChaCha8Rng,
) -> CnfFormula {
    let max_len = max_len.min(n_vars).max(1);
    let clauses: Vec<Vec<i32>> = (0..m)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            let mut vars: Vec<usize> = (1..=n_vars).collect();
            for i in (1..vars.len()).rev() {
                let j = rng.gen_range(0..=i);
                vars.swap(i, j);
            }
            vars.into_iter()
                .take(len)
                .map(|v| {
                    let sign: bool = rng.gen_bool(0.5);
                    if sign {
                        v as i32
                    } else {
                        -(v as i32)
                    }
                })
                .collect()
        })
        .collect();
    CnfFormula::new(n_vars, clauses).expect("literals are valid")
}

/// Random CNF whose clauses hold exactly min(3, n_vars) distinct variables.
pub fn random_3cnf_with(n_vars: usize, m: usize, rng: &mut ChaCha8Rng) -> CnfFormula {
    let len = n_vars.min(3);
    let clauses: Vec<Vec<i32>> = (0..m)
        .map(|_| {
            let mut vars: Vec<usize> = (1..=n_vars).collect();
            for i in (1..vars.len()).rev() {
                let j = rng.gen_range(0..=i);
                vars.swap(i, j);
            }
            vars.into_iter()
                .take(len)
                .map(|v| {
                    if rng.gen_bool(0.5) {
                        v as i32
                    } else {
                        -(v as i32)
                    }
                })
                .collect()
        })
        .collect();
    CnfFormula::new(n_vars, clauses).expect("literals are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weakly_acyclic_outputs_pass_toposort() {
        for seed in 0..50 {
            let a = gen_random_weakly_acyclic(8, 2, seed);
            assert!(a.is_weakly_acyclic(), "seed {seed}");
        }
    }

    #[test]
    fn eulerian_outputs_pass_in_degree_check() {
        for seed in 0..50 {
            let a = gen_random_eulerian(6, 2, seed);
            assert!(a.is_eulerian(), "seed {seed}");
        }
    }

    #[test]
    fn generators_are_seed_stable() {
        assert_eq!(gen_random_dfa(8, 2, 1), gen_random_dfa(8, 2, 1));
        assert_eq!(
            gen_random_weakly_acyclic(8, 2, 1),
            gen_random_weakly_acyclic(8, 2, 1)
        );
        assert_eq!(gen_random_eulerian(8, 2, 1), gen_random_eulerian(8, 2, 1));
        assert_ne!(gen_random_dfa(8, 2, 1), gen_random_dfa(8, 2, 2));
    }

    #[test]
    fn general_generator_covers_cyclic_cases() {
        let cyclic = (0..100).any(|seed| !gen_random_dfa(6, 2, seed).is_weakly_acyclic());
        assert!(cyclic);
    }

    #[test]
    fn weakly_acyclic_rank_equals_sink_count() {
        let a = gen_random_weakly_acyclic(8, 2, 1);
        let sinks = a.sink_states().len();
        let exact = sync_engines::rank_of_automaton_exact(&a, &sync_engines::Budget::default())
            .unwrap();
        assert_eq!(exact.rank, sinks);
    }

    #[test]
    fn all_graphs_counts() {
        assert_eq!(all_graphs(1).len(), 1);
        assert_eq!(all_graphs(2).len(), 2);
        assert_eq!(all_graphs(3).len(), 8);
        assert_eq!(all_graphs(4).len(), 64);
    }

    #[test]
    fn cnf_generators_respect_shapes() {
        let mut rng = rng_from_seed(7);
        let f = random_3cnf_with(5, 6, &mut rng);
        assert_eq!(f.n_clauses(), 6);
        for clause in f.clauses() {
            assert_eq!(clause.len(), 3);
            let mut vars: Vec<i32> = clause.iter().map(|l| l.abs()).collect();
            vars.sort_unstable();
            vars.dedup();
            assert_eq!(vars.len(), 3);
        }
    }
}
