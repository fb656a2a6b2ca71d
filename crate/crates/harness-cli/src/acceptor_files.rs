//! Acceptor files: the DFA interchange format extended with two metadata
//! lines, `initial: <state>` and `accepting: <states...>`, where states are
//! names or indices. The extra lines are stripped before the core parser
//! runs.

use anyhow::{anyhow, bail, Context, Result};
use automata_core::{parse_dfa, serialize_dfa, Automaton, Dfa, StateSet};
use sync_engines::Acceptor;

pub fn render_acceptor(dfa: &Dfa, initial: usize, accepting: &StateSet) -> String {
    let mut text = serialize_dfa(dfa);
    text.push_str(&format!("initial: {}\n", dfa.state_label(initial)));
    let names: Vec<String> = accepting.iter().map(|q| dfa.state_label(q)).collect();
    text.push_str(&format!("accepting: {}\n", names.join(" ")));
    text
}

pub fn parse_acceptor(text: &str) -> Result<Acceptor> {
    let mut core_lines = Vec::new();
    let mut initial_token: Option<String> = None;
    let mut accepting_tokens: Option<Vec<String>> = None;
    for line in text.lines() {
        let trimmed = line.trim();
        if let Some(rest) = trimmed.strip_prefix("initial:") {
            initial_token = Some(rest.trim().to_string());
        } else if let Some(rest) = trimmed.strip_prefix("accepting:") {
            accepting_tokens = Some(rest.split_whitespace().map(str::to_string).collect());
        } else {
            core_lines.push(line);
        }
    }
    let automaton = parse_dfa(&core_lines.join("\n")).context("bad automaton table")?;
    let Automaton::Complete(dfa) = automaton else {
        bail!("acceptors must be complete automata");
    };
    let initial_token = initial_token.ok_or_else(|| anyhow!("missing `initial:` line"))?;
    let initial = dfa
        .resolve_state(&initial_token)
        .ok_or_else(|| anyhow!("unknown initial state {initial_token:?}"))?;
    let accepting_tokens =
        accepting_tokens.ok_or_else(|| anyhow!("missing `accepting:` line"))?;
    let mut accepting = StateSet::empty(dfa.n_states());
    for token in accepting_tokens {
        let state = dfa
            .resolve_state(&token)
            .ok_or_else(|| anyhow!("unknown accepting state {token:?}"))?;
        accepting.insert(state);
    }
    Acceptor::new(dfa, initial, accepting).map_err(|e| anyhow!(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let dfa = Dfa::new(2, 2, vec![1, 0, 1, 1])
            .unwrap()
            .with_state_names(vec!["a".into(), "b".into()])
            .unwrap();
        let accepting = StateSet::singleton(2, 1);
        let text = render_acceptor(&dfa, 0, &accepting);
        let acceptor = parse_acceptor(&text).unwrap();
        assert_eq!(acceptor.initial, 0);
        assert_eq!(acceptor.accepting, accepting);
        assert_eq!(&acceptor.dfa, &dfa);
    }

    #[test]
    fn missing_metadata_rejected() {
        let dfa = Dfa::identity(2, 1);
        let text = serialize_dfa(&dfa);
        assert!(parse_acceptor(&text).is_err());
    }
}
