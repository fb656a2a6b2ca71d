//! Text interchange format for automata.
//!
//! ```text
//! dfa <n> <k> [partial]
//! <k tokens per row, n rows; entry j of row i is the target of (state i, letter j)>
//! states: name0 name1 ...      (optional)
//! letters: name0 name1 ...     (optional)
//! ```
//!
//! Entries are non-negative state indices; `-` marks an undefined entry and
//! is only allowed when the header says `partial`. Lines starting with `#`
//! and blank lines are ignored.

use crate::dfa::{Automaton, Dfa, PartialDfa, UNDEFINED};
use crate::error::AutomataError;

pub fn parse_dfa(text: &str) -> Result<Automaton, AutomataError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| AutomataError::parse(1, "empty input"))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("dfa") {
        return Err(AutomataError::parse(header_no, "expected `dfa <n> <k>` header"));
    }
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| AutomataError::parse(header_no, "bad state count in header"))?;
    let k: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| AutomataError::parse(header_no, "bad letter count in header"))?;
    let partial = match parts.next() {
        None => false,
        Some("partial") => true,
        Some(other) => {
            return Err(AutomataError::parse(
                header_no,
                format!("unexpected header token {other:?}"),
            ))
        }
    };
    if n == 0 || k == 0 {
        return Err(AutomataError::parse(header_no, "state and letter counts must be positive"));
    }

    let mut delta = Vec::with_capacity(n * k);
    let mut rows_read = 0;
    let mut state_names: Option<Vec<String>> = None;
    let mut letter_names: Option<Vec<String>> = None;
    for (line_no, line) in lines {
        if let Some(rest) = line.strip_prefix("states:") {
            if rows_read < n {
                return Err(AutomataError::parse(
                    line_no,
                    format!("expected {n} transition rows, got {rows_read}"),
                ));
            }
            if state_names.is_some() {
                return Err(AutomataError::parse(line_no, "duplicate states: line"));
            }
            state_names = Some(rest.split_whitespace().map(str::to_string).collect());
            continue;
        }
        if let Some(rest) = line.strip_prefix("letters:") {
            if rows_read < n {
                return Err(AutomataError::parse(
                    line_no,
                    format!("expected {n} transition rows, got {rows_read}"),
                ));
            }
            if letter_names.is_some() {
                return Err(AutomataError::parse(line_no, "duplicate letters: line"));
            }
            letter_names = Some(rest.split_whitespace().map(str::to_string).collect());
            continue;
        }
        if rows_read == n {
            return Err(AutomataError::parse(
                line_no,
                format!("unexpected content after {n} transition rows"),
            ));
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != k {
            return Err(AutomataError::parse(
                line_no,
                format!("expected {k} entries in row, got {}", tokens.len()),
            ));
        }
        for token in tokens {
            if token == "-" {
                if !partial {
                    return Err(AutomataError::parse(
                        line_no,
                        "`-` entry in a non-partial automaton",
                    ));
                }
                delta.push(UNDEFINED);
            } else {
                let target: usize = token.parse().map_err(|_| {
                    AutomataError::parse(line_no, format!("bad table entry {token:?}"))
                })?;
                if target >= n {
                    return Err(AutomataError::parse(
                        line_no,
                        format!("state index {target} out of range (n = {n})"),
                    ));
                }
                delta.push(target);
            }
        }
        rows_read += 1;
    }
    if rows_read < n {
        return Err(AutomataError::parse(
            0,
            format!("expected {n} transition rows, got {rows_read}"),
        ));
    }

    if partial {
        let mut a = PartialDfa::new(n, k, delta)?;
        if let Some(names) = state_names {
            a = a.with_state_names(names)?;
        }
        if let Some(names) = letter_names {
            a = a.with_letter_names(names)?;
        }
        Ok(Automaton::Partial(a))
    } else {
        let mut a = Dfa::new(n, k, delta)?;
        if let Some(names) = state_names {
            a = a.with_state_names(names)?;
        }
        if let Some(names) = letter_names {
            a = a.with_letter_names(names)?;
        }
        Ok(Automaton::Complete(a))
    }
}

fn serialize_table(
    out: &mut String,
    n: usize,
    k: usize,
    entry: impl Fn(usize, usize) -> Option<usize>,
    state_names: Option<&[String]>,
    letter_names: Option<&[String]>,
) {
    for q in 0..n {
        let row: Vec<String> = (0..k)
            .map(|x| match entry(q, x) {
                Some(t) => t.to_string(),
                None => "-".to_string(),
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if let Some(names) = state_names {
        out.push_str("states: ");
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    if let Some(names) = letter_names {
        out.push_str("letters: ");
        out.push_str(&names.join(" "));
        out.push('\n');
    }
}

pub fn serialize_dfa(a: &Dfa) -> String {
    let mut out = format!("dfa {} {}\n", a.n_states(), a.n_letters());
    serialize_table(
        &mut out,
        a.n_states(),
        a.n_letters(),
        |q, x| Some(a.step(q, x)),
        a.state_names(),
        a.letter_names(),
    );
    out
}

pub fn serialize_partial_dfa(a: &PartialDfa) -> String {
    let mut out = format!("dfa {} {} partial\n", a.n_states(), a.n_letters());
    serialize_table(
        &mut out,
        a.n_states(),
        a.n_letters(),
        |q, x| a.step(q, x),
        a.state_names(),
        a.letter_names(),
    );
    out
}

pub fn serialize_automaton(a: &Automaton) -> String {
    match a {
        Automaton::Complete(a) => serialize_dfa(a),
        Automaton::Partial(a) => serialize_partial_dfa(a),
    }
}
