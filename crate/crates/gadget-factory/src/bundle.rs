use std::collections::BTreeMap;

use automata_core::{serialize_automaton, Automaton, StateSet};
use oracles::OracleError;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("invalid parameter: {0}")]
    Param(String),

    #[error(transparent)]
    Oracle(#[from] OracleError),

    #[error(transparent)]
    Automata(#[from] automata_core::AutomataError),
}

impl GadgetError {
    pub fn param(message: impl Into<String>) -> Self {
        GadgetError::Param(message.into())
    }
}

/// Where a bundle came from: the construction name, its parameters and a
/// digest of the source instance, all deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetSource {
    pub gadget: String,
    pub parameters: BTreeMap<String, String>,
    pub instance_digest: String,
}

impl GadgetSource {
    pub fn new(gadget: &str, parameters: &[(&str, String)], instance_text: &str) -> Self {
        GadgetSource {
            gadget: gadget.to_string(),
            parameters: parameters
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            instance_digest: crate::digest::digest_hex(instance_text.as_bytes()),
        }
    }
}

/// A generated automaton with its designated subset, decision threshold,
/// reachability target and named expected values. Serializes as an
/// interchange-format automaton plus a JSON sidecar; both are byte-stable
/// for identical inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetBundle {
    pub automaton: Automaton,
    pub subset: Option<StateSet>,
    pub target_set: Option<StateSet>,
    pub threshold: Option<usize>,
    pub expected: BTreeMap<String, Value>,
    pub source: GadgetSource,
}

fn set_to_json(set: &StateSet) -> Value {
    Value::Array(set.iter().map(|q| json!(q)).collect())
}

impl GadgetBundle {
    pub fn dfa_text(&self) -> String {
        serialize_automaton(&self.automaton)
    }

    pub fn sidecar_json(&self) -> Value {
        let expected: serde_json::Map<String, Value> = self
            .expected
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        let parameters: serde_json::Map<String, Value> = self
            .source
            .parameters
            .iter()
            .map(|(k, v)| (k.clone(), json!(v)))
            .collect();
        json!({
            "gadget": self.source.gadget,
            "parameters": parameters,
            "subset": self.subset.as_ref().map(set_to_json),
            "target_set": self.target_set.as_ref().map(set_to_json),
            "threshold": self.threshold,
            "expected": expected,
            "instance_digest": self.source.instance_digest,
        })
    }

    pub fn sidecar_text(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.sidecar_json())
            .expect("sidecar is valid JSON");
        text.push('\n');
        text
    }

    /// Designated subset resolved against the automaton, for engines.
    pub fn subset_or_err(&self) -> Result<&StateSet, GadgetError> {
        self.subset
            .as_ref()
            .ok_or_else(|| GadgetError::param("bundle carries no designated subset"))
    }
}
