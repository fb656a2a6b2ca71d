//! Parameterized extremal families with closed-form expected values.

use automata_core::{Automaton, Dfa, StateSet};
use serde_json::json;

use crate::bundle::{GadgetBundle, GadgetError, GadgetSource};

/// Unary family of rank `r` whose shortest rank-`r` words have length
/// exactly `n - r`: a chain `q1 -> q2 -> ... -> q_{n-r+1}` feeding the first
/// of `r` self-looping states, everything past the chain fixed.
pub fn tight_rank_family(n: usize, r: usize) -> Result<GadgetBundle, GadgetError> {
    if !(1..=n).contains(&r) {
        return Err(GadgetError::param(format!(
            "need 1 <= r <= n, got n={n}, r={r}"
        )));
    }
    let dfa = Dfa::from_fn(n, 1, |q, _| if q < n - r { q + 1 } else { q })?
        .with_state_names((1..=n).map(|i| format!("q{i}")).collect())?
        .with_letter_names(vec!["x".to_string()])?;
    let mut expected = std::collections::BTreeMap::new();
    expected.insert("rank".to_string(), json!(r));
    expected.insert("shortest_rank_word_len".to_string(), json!(n - r));
    Ok(GadgetBundle {
        automaton: Automaton::Complete(dfa),
        subset: None,
        target_set: None,
        threshold: None,
        expected,
        source: GadgetSource::new(
            "tight-rank",
            &[("n", n.to_string()), ("r", r.to_string())],
            &format!("tight-rank(n={n},r={r})"),
        ),
    })
}

/// Binary weakly acyclic family where the designated k-subset needs a word
/// of length exactly (k-1)(n-k): states q1..q_{k-1} advance on 1 and wait on
/// 0, a tail s1..s_l advances on 0 and falls into the sink t on 1, and the
/// subset is the q-states plus the tail end s_l.
pub fn subset_binary_family(n: usize, k: usize) -> Result<GadgetBundle, GadgetError> {
    if !(2..n).contains(&k) {
        return Err(GadgetError::param(format!(
            "need 2 <= k < n, got n={n}, k={k}"
        )));
    }
    let l = n - k; // tail length; q-states occupy 0..k-1 (exclusive), tail k-1..n-1
    let t = n - 1;
    let s_last = n - 2;
    let dfa = Dfa::from_fn(n, 2, |q, x| {
        if q < k - 1 {
            // q-chain: hold on 0, advance on 1 (q_{k-1} enters the tail).
            if x == 0 {
                q
            } else {
                q + 1
            }
        } else if q < s_last {
            // tail s_i, i < l: advance on 0, fall to t on 1.
            if x == 0 {
                q + 1
            } else {
                t
            }
        } else {
            q // s_l and t are sinks
        }
    })?;
    let mut names: Vec<String> = (1..k).map(|i| format!("q{i}")).collect();
    names.extend((1..=l).map(|i| format!("s{i}")));
    names.push("t".to_string());
    let dfa = dfa.with_state_names(names)?;

    let subset = StateSet::from_indices(n, (0..k - 1).chain([s_last]))
        .expect("subset indices are in range");
    let mut expected = std::collections::BTreeMap::new();
    expected.insert(
        "shortest_subset_sync_len".to_string(),
        json!((k - 1) * (n - k)),
    );
    expected.insert("rank".to_string(), json!(2));
    expected.insert("weakly_acyclic".to_string(), json!(true));
    Ok(GadgetBundle {
        automaton: Automaton::Complete(dfa),
        subset: Some(subset),
        target_set: None,
        threshold: None,
        expected,
        source: GadgetSource::new(
            "subset-binary",
            &[("n", n.to_string()), ("k", k.to_string())],
            &format!("subset-binary(n={n},k={k})"),
        ),
    })
}

/// Family over an (n-2)-letter alphabet pushing the shortest subset word to
/// (k-1)(2n-k-2)/2. States carry labels -1..n-2 (stored shifted by one);
/// letter a_i decrements state i, resets states strictly between 0 and i to
/// -1, and fixes everything else.
pub fn subset_large_alphabet_family(n: usize, k: usize) -> Result<GadgetBundle, GadgetError> {
    if n < 3 {
        return Err(GadgetError::param(format!(
            "need n >= 3 for a non-empty alphabet, got n={n}"
        )));
    }
    if !(2..n).contains(&k) {
        return Err(GadgetError::param(format!(
            "need 2 <= k < n, got n={n}, k={k}"
        )));
    }
    let n_letters = n - 2;
    let dfa = Dfa::from_fn(n, n_letters, |state, letter| {
        let v = state as isize - 1; // label in -1..n-2
        let i = letter as isize + 1; // a_i
        let w = if v > i {
            v
        } else if v == i {
            v - 1
        } else if v > 0 {
            -1
        } else {
            v // labels -1 and 0 are fixed
        };
        (w + 1) as usize
    })?
    .with_state_names((0..n).map(|idx| (idx as isize - 1).to_string()).collect())?
    .with_letter_names((1..=n_letters).map(|i| format!("a{i}")).collect())?;

    // Labels {0} u {n-k, ..., n-2}, shifted by one into indices.
    let subset = StateSet::from_indices(n, [1].into_iter().chain((n - k + 1)..n))
        .expect("subset indices are in range");
    let mut expected = std::collections::BTreeMap::new();
    expected.insert(
        "shortest_subset_sync_len".to_string(),
        json!((k - 1) * (2 * n - k - 2) / 2),
    );
    Ok(GadgetBundle {
        automaton: Automaton::Complete(dfa),
        subset: Some(subset),
        target_set: None,
        threshold: None,
        expected,
        source: GadgetSource::new(
            "subset-large-alphabet",
            &[("n", n.to_string()), ("k", k.to_string())],
            &format!("subset-large-alphabet(n={n},k={k})"),
        ),
    })
}
