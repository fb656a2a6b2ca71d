//! Constructions whose maximum synchronizing set encodes a source problem:
//! a padding gadget lifting subset synchronization to the maximum-set
//! question, and three independent-set reductions (one letter per vertex,
//! binary with a cycle, binary weakly acyclic).

use std::collections::BTreeMap;

use automata_core::{Automaton, Dfa, StateSet};
use oracles::{max_independent_set_brute, Graph};
use serde_json::json;

use crate::bundle::{GadgetBundle, GadgetError, GadgetSource};

/// Copies the automaton and, for every designated state, adds n+1 fresh
/// states that map to it under every letter. A synchronizing set of size at
/// least the threshold c = (n+1)|S| exists iff the designated subset was
/// synchronizing: any set that size must contain all fresh states, and the
/// fresh states funnel onto the subset after one letter.
pub fn padding_maxsync_gadget(base: &Dfa, subset: &StateSet) -> Result<GadgetBundle, GadgetError> {
    if subset.universe() != base.n_states() {
        return Err(GadgetError::param(format!(
            "subset universe {} does not match automaton with {} states",
            subset.universe(),
            base.n_states()
        )));
    }
    let n = base.n_states();
    let k = base.n_letters();
    let members: Vec<usize> = subset.iter().collect();
    let total = n + (n + 1) * members.len();

    let dfa = Dfa::from_fn(total, k, |q, x| {
        if q < n {
            base.step(q, x)
        } else {
            members[(q - n) / (n + 1)] // fresh block b points at member b
        }
    })?;
    let mut names: Vec<String> = (0..n).map(|q| base.state_label(q)).collect();
    for &m in &members {
        for t in 0..=n {
            names.push(format!("p{m}_{t}"));
        }
    }
    let mut dfa = dfa.with_state_names(names)?;
    if let Some(letters) = base.letter_names() {
        dfa = dfa.with_letter_names(letters.to_vec())?;
    }

    let fresh = StateSet::from_indices(total, n..total).expect("fresh states in range");
    let threshold = (n + 1) * members.len();
    let mut expected = BTreeMap::new();
    expected.insert("threshold".to_string(), json!(threshold));
    expected.insert("state_count".to_string(), json!(total));
    Ok(GadgetBundle {
        automaton: Automaton::Complete(dfa),
        subset: Some(fresh),
        target_set: None,
        threshold: Some(threshold),
        expected,
        source: GadgetSource::new(
            "padding-maxsync",
            &[("n", n.to_string()), ("subset_size", members.len().to_string())],
            &format!(
                "{}|subset={:?}",
                automata_core::serialize_dfa(base),
                members
            ),
        ),
    })
}

/// One letter per vertex: letter i sends s_i to the sink f and deflects the
/// s-state of every neighbor of v_i into its dead t-state. The maximum
/// synchronizing set has size alpha(G) + 1 (a maximum independent set's
/// s-states plus f).
pub fn independent_set_maxsync_gadget(g: &Graph) -> Result<GadgetBundle, GadgetError> {
    let p = g.n_vertices();
    if p == 0 {
        return Err(GadgetError::param("graph must have at least one vertex"));
    }
    let n = 2 * p + 1;
    let f = 2 * p;
    let dfa = Dfa::from_fn(n, p, |q, x| {
        if q < p {
            if q == x {
                f
            } else if g.has_edge(x, q) {
                p + q // t_q
            } else {
                q
            }
        } else {
            q // t-states and f are sinks
        }
    })?;
    let mut names: Vec<String> = (1..=p).map(|i| format!("s{i}")).collect();
    names.extend((1..=p).map(|i| format!("t{i}")));
    names.push("f".to_string());
    let dfa = dfa
        .with_state_names(names)?
        .with_letter_names((1..=p).map(|i| format!("v~{i}")).collect())?;

    let (alpha, independent) = max_independent_set_brute(g)?;
    let witness_set: Vec<usize> = independent.iter().copied().chain([f]).collect();
    let mut expected = BTreeMap::new();
    expected.insert("alpha".to_string(), json!(alpha));
    expected.insert("max_sync_set".to_string(), json!(alpha + 1));
    expected.insert("weakly_acyclic".to_string(), json!(true));
    expected.insert("witness_set".to_string(), json!(witness_set));
    expected.insert("witness_word".to_string(), json!(independent));
    Ok(GadgetBundle {
        automaton: Automaton::Complete(dfa),
        subset: None,
        target_set: None,
        threshold: None,
        expected,
        source: GadgetSource::new(
            "maxsync-alphabet",
            &[("p", p.to_string())],
            &g.to_dimacs(),
        ),
    })
}

/// Shared skeleton of the two binary independent-set gadgets: `copies`
/// replicas of the first layer, layers 2..p, and optionally a p-cycle on f.
/// Layer i reads the choice for vertex v_i: on 1 the tracks of v_i's
/// neighbors deflect into their waiting states, on 0 track i itself
/// deflects; surviving tracks advance and reach f after layer p.
fn binary_is_gadget(
    g: &Graph,
    copies: usize,
    with_cycle: bool,
) -> Result<(Dfa, usize), GadgetError> {
    let p = g.n_vertices();
    if p == 0 {
        return Err(GadgetError::param("graph must have at least one vertex"));
    }
    let first_layer = 2 * p * copies;
    let middle = 2 * p * (p.saturating_sub(1));
    let f = first_layer + middle;
    let total = f + if with_cycle { p } else { 1 };

    // v/u of copy c (0-based) track j (0-based): first_layer block.
    let u1 = |c: usize, j: usize| 2 * (c * p + j) + 1;
    // v/u of layer i (2..=p, 0-based li = i-2) track j.
    let vm = |li: usize, j: usize| first_layer + 2 * (li * p + j);
    let um = |li: usize, j: usize| first_layer + 2 * (li * p + j) + 1;
    // Successor of a surviving track at layer i (1-based), track j (0-based).
    let v_next = |i: usize, j: usize| if i == p { f } else { vm(i - 1, j) };

    let deflects = |i: usize, j: usize, x: usize| {
        if x == 0 {
            i - 1 == j
        } else {
            g.has_edge(i - 1, j)
        }
    };

    let dfa = Dfa::from_fn(total, 2, |q, x| {
        if q < first_layer {
            let slot = q / 2;
            let (c, j) = (slot / p, slot % p);
            if q % 2 == 1 {
                q // waiting state of the first layer: self-loop
            } else if deflects(1, j, x) {
                u1(c, j)
            } else {
                v_next(1, j)
            }
        } else if q < f {
            let slot = (q - first_layer) / 2;
            let (li, j) = (slot / p, slot % p);
            if q % 2 == 1 {
                q // waiting state: self-loop
            } else if deflects(li + 2, j, x) {
                um(li, j)
            } else {
                v_next(li + 2, j)
            }
        } else if with_cycle {
            // f = c_1 -> c_2 -> ... -> c_p -> f under both letters.
            if q + 1 < total {
                q + 1
            } else {
                f
            }
        } else {
            q // f is a sink
        }
    })?;

    let mut names = Vec::with_capacity(total);
    for c in 1..=copies {
        for j in 1..=p {
            names.push(format!("v{j}^(1,{c})"));
            names.push(format!("u{j}^(1,{c})"));
        }
    }
    for i in 2..=p {
        for j in 1..=p {
            names.push(format!("v{j}^({i})"));
            names.push(format!("u{j}^({i})"));
        }
    }
    names.push("f".to_string());
    if with_cycle {
        names.extend((2..=p).map(|i| format!("c{i}")));
    }
    let dfa = dfa.with_state_names(names)?;
    Ok((dfa, f))
}

/// Binary reduction with a p-cycle attached to f and the first layer
/// replicated p times; when alpha(G) > 1 the maximum synchronizing set has
/// size exactly p*alpha(G) + 1.
pub fn independent_set_maxsync_binary_gadget(g: &Graph) -> Result<GadgetBundle, GadgetError> {
    let p = g.n_vertices();
    let (dfa, f) = binary_is_gadget(g, p, true)?;
    let (alpha, independent) = max_independent_set_brute(g)?;

    let mut witness_set: Vec<usize> = Vec::new();
    for c in 0..p {
        for &j in &independent {
            witness_set.push(2 * (c * p + j));
        }
    }
    witness_set.push(f);
    witness_set.sort_unstable();
    let witness_word: Vec<usize> = (0..p)
        .map(|i| usize::from(independent.contains(&i)))
        .collect();

    let mut expected = BTreeMap::new();
    expected.insert("alpha".to_string(), json!(alpha));
    expected.insert("state_count".to_string(), json!(4 * p * p - p));
    if alpha > 1 {
        expected.insert("max_sync_set".to_string(), json!(p * alpha + 1));
    }
    expected.insert("witness_set".to_string(), json!(witness_set));
    expected.insert("witness_word".to_string(), json!(witness_word));
    Ok(GadgetBundle {
        automaton: Automaton::Complete(dfa),
        subset: None,
        target_set: None,
        threshold: None,
        expected,
        source: GadgetSource::new("maxsync-binary", &[("p", p.to_string())], &g.to_dimacs()),
    })
}

/// Cycle-free binary variant with the first layer replicated p^2 times; the
/// automaton is weakly acyclic and the maximum synchronizing set lies in
/// [p^2 alpha(G), p^2 alpha(G) + p(p-1) + 1].
pub fn independent_set_maxsync_binary_wa_gadget(g: &Graph) -> Result<GadgetBundle, GadgetError> {
    let p = g.n_vertices();
    let (dfa, f) = binary_is_gadget(g, p * p, false)?;
    let (alpha, independent) = max_independent_set_brute(g)?;

    let mut witness_set: Vec<usize> = Vec::new();
    for c in 0..p * p {
        for &j in &independent {
            witness_set.push(2 * (c * p + j));
        }
    }
    witness_set.push(f);
    witness_set.sort_unstable();
    let witness_word: Vec<usize> = (0..p)
        .map(|i| usize::from(independent.contains(&i)))
        .collect();

    let lower = p * p * alpha;
    let upper = p * p * alpha + p * (p - 1) + 1;
    let mut expected = BTreeMap::new();
    expected.insert("alpha".to_string(), json!(alpha));
    expected.insert("max_sync_set_min".to_string(), json!(lower));
    expected.insert("max_sync_set_max".to_string(), json!(upper));
    expected.insert("weakly_acyclic".to_string(), json!(true));
    expected.insert("witness_set".to_string(), json!(witness_set));
    expected.insert("witness_word".to_string(), json!(witness_word));
    Ok(GadgetBundle {
        automaton: Automaton::Complete(dfa),
        subset: None,
        target_set: None,
        threshold: None,
        expected,
        source: GadgetSource::new("maxsync-binary-wa", &[("p", p.to_string())], &g.to_dimacs()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use automata_core::Word;

    fn path3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn padding_on_identity() {
        let base = Dfa::identity(2, 1);
        let s = StateSet::full(2);
        let bundle = padding_maxsync_gadget(&base, &s).unwrap();
        assert_eq!(bundle.automaton.n_states(), 8);
        assert_eq!(bundle.threshold, Some(6));
        let a = bundle.automaton.as_complete().unwrap();
        // Fresh block 0 targets state 0, block 1 targets state 1.
        assert_eq!(a.step(2, 0), 0);
        assert_eq!(a.step(5, 0), 1);
        assert_eq!(a.step(7, 0), 1);
    }

    #[test]
    fn padding_with_empty_subset() {
        let base = Dfa::identity(2, 1);
        let bundle = padding_maxsync_gadget(&base, &StateSet::empty(2)).unwrap();
        assert_eq!(bundle.threshold, Some(0));
        assert_eq!(bundle.automaton.n_states(), 2);
    }

    #[test]
    fn alphabet_gadget_on_path3() {
        let bundle = independent_set_maxsync_gadget(&path3()).unwrap();
        let a = bundle.automaton.as_complete().unwrap();
        assert_eq!(a.n_states(), 7);
        assert_eq!(a.n_letters(), 3);
        assert!(a.is_weakly_acyclic());
        assert_eq!(bundle.expected["max_sync_set"], json!(3));
        // The witness set {s1, s3, f} collapses under v~1 v~3.
        let witness = StateSet::from_indices(7, [0, 2, 6]).unwrap();
        let image = a.image(&witness, &Word::from_letters(vec![0, 2])).unwrap();
        assert_eq!(image, StateSet::singleton(7, 6));
    }

    #[test]
    fn alphabet_gadget_edge_deflections() {
        let bundle = independent_set_maxsync_gadget(&path3()).unwrap();
        let a = bundle.automaton.as_complete().unwrap();
        // v~2 deflects s1 (neighbor of v2) to t1.
        assert_eq!(a.step(0, 1), 3);
        // v~1 sends s1 to f.
        assert_eq!(a.step(0, 0), 6);
        // v~3 leaves s1 alone.
        assert_eq!(a.step(0, 2), 0);
    }

    #[test]
    fn binary_gadget_state_counts() {
        for p in 2..=4 {
            let g = Graph::edgeless(p);
            let bundle = independent_set_maxsync_binary_gadget(&g).unwrap();
            assert_eq!(bundle.automaton.n_states(), 4 * p * p - p);
        }
    }

    #[test]
    fn binary_gadget_witness_synchronizes() {
        let g = Graph::edgeless(2);
        let bundle = independent_set_maxsync_binary_gadget(&g).unwrap();
        let a = bundle.automaton.as_complete().unwrap();
        let witness: Vec<usize> = bundle.expected["witness_set"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_u64().unwrap() as usize)
            .collect();
        let word: Vec<usize> = bundle.expected["witness_word"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_u64().unwrap() as usize)
            .collect();
        assert_eq!(witness.len(), 2 * 2 + 1); // p*alpha + 1 = 5
        let set = StateSet::from_indices(a.n_states(), witness).unwrap();
        let image = a.image(&set, &Word::from_letters(word)).unwrap();
        assert_eq!(image.len(), 1);
    }

    #[test]
    fn wa_gadget_is_weakly_acyclic_with_formula_size() {
        for p in 2..=4 {
            let g = Graph::edgeless(p);
            let bundle = independent_set_maxsync_binary_wa_gadget(&g).unwrap();
            let a = bundle.automaton.as_complete().unwrap();
            assert_eq!(a.n_states(), 2 * p * p * p + 2 * p * p - 2 * p + 1);
            assert!(a.is_weakly_acyclic());
        }
    }

    #[test]
    fn wa_gadget_witness_synchronizes() {
        let g = path3();
        let bundle = independent_set_maxsync_binary_wa_gadget(&g).unwrap();
        let a = bundle.automaton.as_complete().unwrap();
        let witness: Vec<usize> = bundle.expected["witness_set"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_u64().unwrap() as usize)
            .collect();
        assert_eq!(witness.len(), 9 * 2 + 1); // p^2 alpha + 1
        let word: Vec<usize> = bundle.expected["witness_word"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_u64().unwrap() as usize)
            .collect();
        let set = StateSet::from_indices(a.n_states(), witness).unwrap();
        let image = a.image(&set, &Word::from_letters(word)).unwrap();
        assert_eq!(image.len(), 1);
    }
}
