//! Layered product of a binary automaton: p+1 copies of the state set where
//! every transition advances one layer (mirroring the base table) and the
//! last layer is frozen. A word synchronizes the first layer iff its first
//! p letters synchronize the base automaton, so the designated subset is
//! synchronizing exactly when the base has a synchronizing word of length at
//! most p, and shortest lengths agree in that case.

use automata_core::{Automaton, Dfa, StateSet};
use serde_json::json;

use crate::bundle::{GadgetBundle, GadgetError, GadgetSource};

pub fn layered_subset_gadget(base: &Dfa) -> Result<GadgetBundle, GadgetError> {
    if base.n_letters() != 2 {
        return Err(GadgetError::param(format!(
            "layered construction needs a binary automaton, got {} letters",
            base.n_letters()
        )));
    }
    let p = base.n_states();
    let n = p * (p + 1);
    // State (i, j) = copy of base state i-1 in layer j, index (j-1)p + (i-1).
    let dfa = Dfa::from_fn(n, 2, |idx, x| {
        let layer = idx / p; // 0-based layer
        let i = idx % p;
        if layer == p {
            idx // frozen last layer
        } else {
            (layer + 1) * p + base.step(i, x)
        }
    })?;
    let mut names = Vec::with_capacity(n);
    for layer in 1..=p + 1 {
        for i in 1..=p {
            names.push(format!("q{i}^({layer})"));
        }
    }
    let dfa = dfa.with_state_names(names)?;

    let subset = StateSet::from_indices(n, 0..p).expect("first layer in range");
    let mut expected = std::collections::BTreeMap::new();
    expected.insert("state_count".to_string(), json!(p * (p + 1)));
    Ok(GadgetBundle {
        automaton: Automaton::Complete(dfa),
        subset: Some(subset),
        target_set: None,
        threshold: None,
        expected,
        source: GadgetSource::new(
            "layered-subset",
            &[("p", p.to_string())],
            &automata_core::serialize_dfa(base),
        ),
    })
}
