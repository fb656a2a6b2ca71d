use thiserror::Error;

/// Errors raised by constructors, operations and the interchange parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomataError {
    #[error("state index {state} out of range for {n_states} states")]
    StateOutOfRange { state: usize, n_states: usize },

    #[error("letter index {letter} out of range for {n_letters} letters")]
    LetterOutOfRange { letter: usize, n_letters: usize },

    #[error("transition table has {got} entries, expected {expected}")]
    TableSize { got: usize, expected: usize },

    #[error("automaton must have at least one state and one letter")]
    EmptyAutomaton,

    #[error("expected {expected} names, got {got}")]
    NameCount { expected: usize, got: usize },

    #[error("duplicate name {name:?}")]
    DuplicateName { name: String },

    #[error("state set universe {set_universe} does not match automaton with {n_states} states")]
    UniverseMismatch { set_universe: usize, n_states: usize },

    #[error("automaton has undefined transitions and is not convertible to a complete one")]
    NotComplete,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl AutomataError {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        AutomataError::Parse {
            line,
            message: message.into(),
        }
    }
}
