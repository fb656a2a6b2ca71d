//! Constructions whose subset rank equals the chromatic number: a chain of
//! p synchronizing gadgets switched by an extra letter, and a binary variant
//! where waiting gadgets replace the switching letter.

use std::collections::BTreeMap;

use automata_core::{Automaton, Dfa, StateSet};
use oracles::{chromatic_number_brute, Graph};
use serde_json::json;

use crate::bundle::{GadgetBundle, GadgetError, GadgetSource};

/// Alphabet: one letter per vertex plus a switching letter nu. Each of the p
/// identical gadgets merges the s-states of an independent set into its own
/// sink f^(k); nu forwards leftover s/t-states to the next gadget. The rank
/// of the first gadget's s-states is the minimum number of independent sets
/// covering the vertices, i.e. chi(G).
pub fn chromatic_rank_gadget(g: &Graph) -> Result<GadgetBundle, GadgetError> {
    let p = g.n_vertices();
    if p == 0 {
        return Err(GadgetError::param("graph must have at least one vertex"));
    }
    let block = 2 * p + 1;
    let n = p * block;
    let nu = p; // letter index of the switching letter
    let s_of = |k: usize, i: usize| k * block + i; // gadget k (0-based), track i (0-based)
    let t_of = |k: usize, i: usize| k * block + p + i;
    let f_of = |k: usize| k * block + 2 * p;

    let dfa = Dfa::from_fn(n, p + 1, |q, x| {
        let k = q / block;
        let offset = q % block;
        if x == nu {
            if k + 1 == p {
                return q; // last gadget: nu fixes everything
            }
            return if offset < 2 * p {
                s_of(k + 1, offset % p) // s_i and t_i both advance to s_i
            } else {
                q // f^(k) stays
            };
        }
        if offset < p {
            // s-track i: letter i merges into f, neighbors deflect to t.
            let i = offset;
            if i == x {
                f_of(k)
            } else if g.has_edge(x, i) {
                t_of(k, i)
            } else {
                q
            }
        } else {
            q // t-states and f ignore vertex letters
        }
    })?;

    let mut names = Vec::with_capacity(n);
    for k in 1..=p {
        for i in 1..=p {
            names.push(format!("s{i}^({k})"));
        }
        for i in 1..=p {
            names.push(format!("t{i}^({k})"));
        }
        names.push(format!("f^({k})"));
    }
    let mut letters: Vec<String> = (1..=p).map(|i| format!("v~{i}")).collect();
    letters.push("nu".to_string());
    let dfa = dfa.with_state_names(names)?.with_letter_names(letters)?;

    let subset = StateSet::from_indices(n, 0..p).expect("first gadget s-states in range");
    let (chi, _) = chromatic_number_brute(g)?;
    let mut expected = BTreeMap::new();
    expected.insert("chi".to_string(), json!(chi));
    expected.insert("rank_of_subset".to_string(), json!(chi));
    expected.insert("state_count".to_string(), json!(p * (2 * p + 1)));
    expected.insert("weakly_acyclic".to_string(), json!(true));
    Ok(GadgetBundle {
        automaton: Automaton::Complete(dfa),
        subset: Some(subset),
        target_set: None,
        threshold: None,
        expected,
        source: GadgetSource::new("chromatic-rank", &[("p", p.to_string())], &g.to_dimacs()),
    })
}

/// Binary variant: each synchronizing gadget is a p-row grid of tracks
/// (row i reads the choice for vertex v_i, as in the binary independent-set
/// gadget) and deflected tracks wait out the remaining rows in a waiting
/// gadget before entering the next synchronizing gadget. The last waiting
/// gadget is made of sinks. The rank of the p first-row tracks is chi(G).
pub fn chromatic_rank_binary_gadget(g: &Graph) -> Result<GadgetBundle, GadgetError> {
    let p = g.n_vertices();
    if p == 0 {
        return Err(GadgetError::param("graph must have at least one vertex"));
    }
    let block = 2 * p * p + 1; // T gadget (p^2 + 1) + R gadget (p^2)
    let n = p * block;
    let v_of = |k: usize, i: usize, j: usize| k * block + i * p + j; // 0-based i, j
    let f_of = |k: usize| k * block + p * p;
    let u_of = |k: usize, i: usize, j: usize| k * block + p * p + 1 + i * p + j;

    let dfa = Dfa::from_fn(n, 2, |q, x| {
        let k = q / block;
        let offset = q % block;
        if offset < p * p {
            // v^{(k)}_{i+1, j+1}
            let (i, j) = (offset / p, offset % p);
            let deflect = if x == 0 { i == j } else { g.has_edge(i, j) };
            if deflect {
                u_of(k, i, j)
            } else if i + 1 == p {
                f_of(k)
            } else {
                v_of(k, i + 1, j)
            }
        } else if offset == p * p {
            q // f^(k) is fixed by both letters
        } else {
            // u^{(k)}_{i+1, j+1}
            let (i, j) = ((offset - p * p - 1) / p, (offset - p * p - 1) % p);
            if k + 1 == p {
                q // last waiting gadget: sinks
            } else if i + 1 == p {
                v_of(k + 1, 0, j)
            } else {
                u_of(k, i + 1, j)
            }
        }
    })?;

    let mut names = Vec::with_capacity(n);
    for k in 1..=p {
        for i in 1..=p {
            for j in 1..=p {
                names.push(format!("v{i},{j}^({k})"));
            }
        }
        names.push(format!("f^({k})"));
        for i in 1..=p {
            for j in 1..=p {
                names.push(format!("u{i},{j}^({k})"));
            }
        }
    }
    let dfa = dfa.with_state_names(names)?;

    let subset = StateSet::from_indices(n, 0..p).expect("first-row tracks in range");
    let (chi, _) = chromatic_number_brute(g)?;
    let mut expected = BTreeMap::new();
    expected.insert("chi".to_string(), json!(chi));
    expected.insert("rank_of_subset".to_string(), json!(chi));
    expected.insert("state_count".to_string(), json!(p * (2 * p * p + 1)));
    expected.insert("weakly_acyclic".to_string(), json!(true));
    Ok(GadgetBundle {
        automaton: Automaton::Complete(dfa),
        subset: Some(subset),
        target_set: None,
        threshold: None,
        expected,
        source: GadgetSource::new(
            "chromatic-rank-binary",
            &[("p", p.to_string())],
            &g.to_dimacs(),
        ),
    })
}
