use thiserror::Error;

/// Resource limits for the exact search engines.
///
/// `max_states` caps the automaton size for whole-state-set searches (the
/// image space of Q can be exponential); searches that start from a small
/// designated subset ignore it. `max_visited` caps the number of distinct
/// search nodes (image sets, product tuples) any single search may visit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_states: usize,
    pub max_visited: usize,
}

pub const DEFAULT_MAX_STATES: usize = 64;
pub const DEFAULT_MAX_VISITED: usize = 1 << 24;

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_states: DEFAULT_MAX_STATES,
            max_visited: DEFAULT_MAX_VISITED,
        }
    }
}

impl Budget {
    /// A budget sized for a specific automaton, keeping the visited cap.
    pub fn with_max_states(max_states: usize) -> Self {
        Budget {
            max_states,
            ..Budget::default()
        }
    }

    pub(crate) fn check_states(&self, n_states: usize, what: &str) -> Result<(), EngineError> {
        if n_states > self.max_states {
            return Err(EngineError::Budget {
                what: format!("{what} on {n_states} states"),
                cap: self.max_states,
            });
        }
        Ok(())
    }
}

/// Engine failures. A budget error is an inconclusive outcome, never a
/// "no" answer; callers must keep the two apart.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("{what} exceeds the configured cap of {cap}")]
    Budget { what: String, cap: usize },

    #[error(transparent)]
    Automata(#[from] automata_core::AutomataError),
}

impl EngineError {
    pub fn input(message: impl Into<String>) -> Self {
        EngineError::Input(message.into())
    }

    /// True when the failure is a resource cap rather than a bad input.
    pub fn is_budget(&self) -> bool {
        matches!(self, EngineError::Budget { .. })
    }
}
