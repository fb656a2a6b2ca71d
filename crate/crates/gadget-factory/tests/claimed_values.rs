//! End-to-end checks of the constructions' claimed values against the exact
//! engines, on hand-picked instances. The seeded campaigns in the harness
//! cover the same ground at scale.

use automata_core::{StateSet, Word};
use gadget_factory::*;
use matrix_semigroup::{positive_product_search, ProductSearchOutcome};
use sync_engines::{
    careful_shortest_word, intersection_nonempty, is_subset_reachable, max_sync_set,
    rank_of_automaton_exact, rank_of_subset, subset_shortest_sync_word, Acceptor, Budget,
    MaxSyncMode,
};

fn budget() -> Budget {
    Budget::with_max_states(4096)
}

fn formula(n: usize, clauses: &[&[i32]]) -> CnfFormula {
    CnfFormula::new(n, clauses.iter().map(|c| c.to_vec()).collect()).unwrap()
}

fn path3() -> Graph {
    Graph::new(3, [(0, 1), (1, 2)]).unwrap()
}

fn triangle() -> Graph {
    Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
}

#[test]
fn tight_rank_family_lengths() {
    for n in 1..=8 {
        for r in 1..=n {
            let bundle = tight_rank_family(n, r).unwrap();
            let a = bundle.automaton.as_complete().unwrap();
            let exact = rank_of_automaton_exact(a, &budget()).unwrap();
            assert_eq!(exact.rank, r);
            assert_eq!(exact.witness.len(), n - r);
        }
    }
}

#[test]
fn subset_binary_family_lengths() {
    for n in 4..=9 {
        for k in 2..n {
            let bundle = subset_binary_family(n, k).unwrap();
            let a = bundle.automaton.as_complete().unwrap();
            let s = bundle.subset.as_ref().unwrap();
            let result = subset_shortest_sync_word(a, s, &budget()).unwrap();
            assert!(result.synchronizing);
            assert_eq!(result.witness.unwrap().len(), (k - 1) * (n - k));
        }
    }
}

#[test]
fn subset_binary_fig_example_word() {
    let bundle = subset_binary_family(5, 3).unwrap();
    let a = bundle.automaton.as_complete().unwrap();
    let s = bundle.subset.as_ref().unwrap();
    let result = subset_shortest_sync_word(a, s, &budget()).unwrap();
    let word = result.witness.unwrap();
    assert_eq!(a.render_word(&word), "1010");
    assert_eq!(word.len(), 4);
}

#[test]
fn tight_family_witness_words() {
    // Rank 1 at n=4: the only letter repeated n-1 times.
    let bundle = tight_rank_family(4, 1).unwrap();
    let a = bundle.automaton.as_complete().unwrap();
    let result = sync_engines::shortest_sync_word(a, &budget()).unwrap();
    assert_eq!(a.render_word(&result.witness.unwrap()), "xxx");
    // Two sinks at r=2: not synchronizing, and the pair test agrees.
    let bundle = tight_rank_family(4, 2).unwrap();
    let a = bundle.automaton.as_complete().unwrap();
    assert!(!sync_engines::is_synchronizing(a).synchronizing);
    let order = a.topological_sort().unwrap();
    let greedy = sync_engines::greedy_rank_word_wa(a, &order).unwrap();
    assert_eq!(a.render_word(&greedy.witness), "xx");
    assert_eq!(greedy.final_image, a.sink_states());
}

#[test]
fn reviewer_family_witness_word() {
    let bundle = subset_large_alphabet_family(4, 3).unwrap();
    let a = bundle.automaton.as_complete().unwrap();
    let s = bundle.subset.as_ref().unwrap();
    let result = subset_shortest_sync_word(a, s, &budget()).unwrap();
    assert_eq!(a.render_word(&result.witness.unwrap()), "a1 a2 a1");
}

#[test]
fn independent_set_gadget_exact_witness_set() {
    let bundle = independent_set_maxsync_gadget(&path3()).unwrap();
    let a = bundle.automaton.as_complete().unwrap();
    let exact = max_sync_set(a, MaxSyncMode::Exact, &budget()).unwrap();
    // {s1, s3, f}
    assert_eq!(exact.set, StateSet::from_indices(7, [0, 2, 6]).unwrap());
}

#[test]
fn subset_large_alphabet_family_lengths() {
    for n in 4..=8 {
        for k in 2..n {
            let bundle = subset_large_alphabet_family(n, k).unwrap();
            let a = bundle.automaton.as_complete().unwrap();
            let s = bundle.subset.as_ref().unwrap();
            let result = subset_shortest_sync_word(a, s, &budget()).unwrap();
            assert!(result.synchronizing);
            assert_eq!(result.witness.unwrap().len(), (k - 1) * (2 * n - k - 2) / 2);
        }
    }
}

#[test]
fn padding_gadget_identity_base_stays_below_threshold() {
    let base = automata_core::Dfa::identity(2, 2);
    let s = StateSet::full(2);
    let bundle = padding_maxsync_gadget(&base, &s).unwrap();
    let a = bundle.automaton.as_complete().unwrap();
    let exact = max_sync_set(a, MaxSyncMode::Exact, &budget()).unwrap();
    assert_eq!(exact.set.len(), 4);
    assert!(exact.set.len() < bundle.threshold.unwrap());
}

#[test]
fn padding_gadget_merging_base_reaches_threshold() {
    // Letter 1 merges the two base states.
    let base = automata_core::Dfa::new(2, 2, vec![0, 0, 1, 0]).unwrap();
    let s = StateSet::full(2);
    let bundle = padding_maxsync_gadget(&base, &s).unwrap();
    let a = bundle.automaton.as_complete().unwrap();
    let exact = max_sync_set(a, MaxSyncMode::Exact, &budget()).unwrap();
    assert!(exact.set.len() >= bundle.threshold.unwrap());
}

#[test]
fn independent_set_gadget_values() {
    for (g, expected) in [
        (path3(), 3),
        (triangle(), 2),
        (Graph::edgeless(3), 4),
    ] {
        let bundle = independent_set_maxsync_gadget(&g).unwrap();
        let a = bundle.automaton.as_complete().unwrap();
        let exact = max_sync_set(a, MaxSyncMode::Exact, &budget()).unwrap();
        assert_eq!(exact.set.len(), expected);
    }
}

#[test]
fn binary_is_gadget_exact_value_p2() {
    let g = Graph::edgeless(2);
    let bundle = independent_set_maxsync_binary_gadget(&g).unwrap();
    let a = bundle.automaton.as_complete().unwrap();
    assert_eq!(a.n_states(), 14);
    let exact = max_sync_set(a, MaxSyncMode::Exact, &budget()).unwrap();
    assert_eq!(exact.set.len(), 5); // p * alpha + 1
}

#[test]
fn binary_wa_gadget_exact_value_p2() {
    for (edges, alpha) in [(vec![], 2usize), (vec![(0, 1)], 1)] {
        let g = Graph::new(2, edges).unwrap();
        let bundle = independent_set_maxsync_binary_wa_gadget(&g).unwrap();
        let a = bundle.automaton.as_complete().unwrap();
        assert_eq!(a.n_states(), 21);
        let exact = max_sync_set(a, MaxSyncMode::Exact, &budget()).unwrap();
        let lower = 4 * alpha;
        let upper = 4 * alpha + 2 + 1;
        assert!(
            (lower..=upper).contains(&exact.set.len()),
            "size {} outside [{lower}, {upper}]",
            exact.set.len()
        );
    }
}

#[test]
fn chromatic_gadget_ranks() {
    for (g, chi) in [(path3(), 2), (triangle(), 3), (Graph::edgeless(3), 1)] {
        let bundle = chromatic_rank_gadget(&g).unwrap();
        let a = bundle.automaton.as_complete().unwrap();
        let s = bundle.subset.as_ref().unwrap();
        let rank = rank_of_subset(a, s, &budget()).unwrap();
        assert_eq!(rank.rank, chi, "graph with chi={chi}");
    }
}

#[test]
fn chromatic_binary_gadget_ranks() {
    for (g, chi) in [(path3(), 2), (triangle(), 3), (Graph::edgeless(2), 1)] {
        let bundle = chromatic_rank_binary_gadget(&g).unwrap();
        let a = bundle.automaton.as_complete().unwrap();
        let s = bundle.subset.as_ref().unwrap();
        let rank = rank_of_subset(a, s, &budget()).unwrap();
        assert_eq!(rank.rank, chi, "graph with chi={chi}");
    }
}

#[test]
fn sat_reductions_agree_on_sat_and_unsat() {
    let satisfiable = formula(2, &[&[1, -2], &[2]]);
    let unsatisfiable = formula(1, &[&[1], &[-1]]);
    for (f, expect) in [(&satisfiable, true), (&unsatisfiable, false)] {
        let b = sat_subset_sync_gadget(f).unwrap();
        let a = b.automaton.as_complete().unwrap();
        let sync = subset_shortest_sync_word(a, b.subset.as_ref().unwrap(), &budget()).unwrap();
        assert_eq!(sync.synchronizing, expect, "subset-sync");

        let b = sat_careful_gadget(f).unwrap();
        let p = b.automaton.as_partial().unwrap();
        let careful = careful_shortest_word(p, &budget()).unwrap();
        assert_eq!(careful.synchronizing, expect, "careful");
        if expect {
            // Any careful word must start with the reset letter.
            assert_eq!(careful.witness.as_ref().unwrap().letters()[0], 2);
        }

        let gadget = sat_intersection_gadget(f).unwrap();
        let acceptors: Vec<Acceptor> = gadget
            .acceptors
            .iter()
            .map(|spec| {
                Acceptor::new(spec.dfa.clone(), spec.initial, spec.accepting.clone()).unwrap()
            })
            .collect();
        let inter = intersection_nonempty(&acceptors, &budget()).unwrap();
        assert_eq!(inter.nonempty, expect, "intersection");

        let b = sat_reachability_gadget(f).unwrap();
        let a = b.automaton.as_complete().unwrap();
        let reach = is_subset_reachable(a, b.target_set.as_ref().unwrap(), &budget()).unwrap();
        assert_eq!(reach.reachable, expect, "reachability");

        let set = sat_matrix_set(f).unwrap();
        let outcome = positive_product_search(&set.matrices, 1 << 20).unwrap();
        match (expect, outcome) {
            (true, ProductSearchOutcome::Found(_)) => {}
            (false, ProductSearchOutcome::NoneExhausted { .. }) => {}
            (e, o) => panic!("positive-matrix mismatch: sat={e}, outcome={o:?}"),
        }
    }
}

#[test]
fn careful_gadget_word_from_assignment() {
    let f = formula(2, &[&[1, -2], &[2]]);
    let bundle = sat_careful_gadget(&f).unwrap();
    let p = bundle.automaton.as_partial().unwrap();
    let word: Vec<usize> = bundle.expected["careful_word"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap() as usize)
        .collect();
    let image = p
        .partial_image(&StateSet::full(p.n_states()), &Word::from_letters(word))
        .unwrap();
    match image {
        automata_core::PartialImage::Image(set) => assert_eq!(set.len(), 1),
        other => panic!("careful word blocked: {other:?}"),
    }
}

#[test]
fn layered_gadget_matches_base_shortest_word() {
    // Base with a length-2 shortest synchronizing word.
    let base = automata_core::Dfa::new(3, 2, vec![1, 0, 2, 0, 2, 2]).unwrap();
    let base_result = sync_engines::shortest_sync_word(&base, &budget()).unwrap();
    assert!(base_result.synchronizing);
    let base_len = base_result.witness.as_ref().unwrap().len();
    assert!(base_len <= 3);

    let bundle = layered_subset_gadget(&base).unwrap();
    let a = bundle.automaton.as_complete().unwrap();
    let s = bundle.subset.as_ref().unwrap();
    let result = subset_shortest_sync_word(a, s, &budget()).unwrap();
    assert!(result.synchronizing);
    assert_eq!(result.witness.unwrap().len(), base_len);
}
