use crate::error::AutomataError;
use crate::state_set::StateSet;
use crate::word::Word;

/// Sentinel for a missing transition in a [`PartialDfa`] table.
pub const UNDEFINED: usize = usize::MAX;

fn validate_names(names: &[String], expected: usize) -> Result<(), AutomataError> {
    if names.len() != expected {
        return Err(AutomataError::NameCount {
            expected,
            got: names.len(),
        });
    }
    let mut seen = std::collections::HashSet::new();
    for name in names {
        if !seen.insert(name.as_str()) {
            return Err(AutomataError::DuplicateName { name: name.clone() });
        }
    }
    Ok(())
}

/// A complete deterministic finite automaton over indexed states and letters.
///
/// The transition table is row-major: entry `state * n_letters + letter`.
/// Instances are immutable after construction and cheap to share.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dfa {
    n_states: usize,
    n_letters: usize,
    delta: Vec<usize>,
    state_names: Option<Vec<String>>,
    letter_names: Option<Vec<String>>,
}

impl Dfa {
    pub fn new(n_states: usize, n_letters: usize, delta: Vec<usize>) -> Result<Self, AutomataError> {
        if n_states == 0 || n_letters == 0 {
            return Err(AutomataError::EmptyAutomaton);
        }
        if delta.len() != n_states * n_letters {
            return Err(AutomataError::TableSize {
                got: delta.len(),
                expected: n_states * n_letters,
            });
        }
        if let Some(&bad) = delta.iter().find(|&&t| t >= n_states) {
            return Err(AutomataError::StateOutOfRange {
                state: bad,
                n_states,
            });
        }
        Ok(Dfa {
            n_states,
            n_letters,
            delta,
            state_names: None,
            letter_names: None,
        })
    }

    /// Builds the table by evaluating `f(state, letter)` for every entry.
    pub fn from_fn(
        n_states: usize,
        n_letters: usize,
        mut f: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self, AutomataError> {
        let mut delta = Vec::with_capacity(n_states * n_letters);
        for q in 0..n_states {
            for x in 0..n_letters {
                delta.push(f(q, x));
            }
        }
        Dfa::new(n_states, n_letters, delta)
    }

    /// The identity automaton: every letter fixes every state.
    pub fn identity(n_states: usize, n_letters: usize) -> Self {
        Dfa::from_fn(n_states, n_letters, |q, _| q).expect("identity table is valid")
    }

    pub fn with_state_names(mut self, names: Vec<String>) -> Result<Self, AutomataError> {
        validate_names(&names, self.n_states)?;
        self.state_names = Some(names);
        Ok(self)
    }

    pub fn with_letter_names(mut self, names: Vec<String>) -> Result<Self, AutomataError> {
        validate_names(&names, self.n_letters)?;
        self.letter_names = Some(names);
        Ok(self)
    }

    pub fn n_states(&self) -> usize {
        self.n_states
    }

    pub fn n_letters(&self) -> usize {
        self.n_letters
    }

    pub fn state_names(&self) -> Option<&[String]> {
        self.state_names.as_deref()
    }

    pub fn letter_names(&self) -> Option<&[String]> {
        self.letter_names.as_deref()
    }

    /// Resolves a state given either its display name or its decimal index.
    pub fn resolve_state(&self, token: &str) -> Option<usize> {
        if let Some(names) = &self.state_names {
            if let Some(idx) = names.iter().position(|n| n == token) {
                return Some(idx);
            }
        }
        token
            .parse::<usize>()
            .ok()
            .filter(|&q| q < self.n_states)
    }

    pub fn state_label(&self, state: usize) -> String {
        match &self.state_names {
            Some(names) => names[state].clone(),
            None => state.to_string(),
        }
    }

    pub fn render_word(&self, word: &Word) -> String {
        word.render(self.n_letters, self.letter_names.as_deref())
    }

    /// Single-letter transition; both arguments must be in range.
    #[inline]
    pub fn step(&self, state: usize, letter: usize) -> usize {
        self.delta[state * self.n_letters + letter]
    }

    fn check_letter(&self, letter: usize) -> Result<(), AutomataError> {
        if letter >= self.n_letters {
            return Err(AutomataError::LetterOutOfRange {
                letter,
                n_letters: self.n_letters,
            });
        }
        Ok(())
    }

    fn check_state(&self, state: usize) -> Result<(), AutomataError> {
        if state >= self.n_states {
            return Err(AutomataError::StateOutOfRange {
                state,
                n_states: self.n_states,
            });
        }
        Ok(())
    }

    fn check_universe(&self, set: &StateSet) -> Result<(), AutomataError> {
        if set.universe() != self.n_states {
            return Err(AutomataError::UniverseMismatch {
                set_universe: set.universe(),
                n_states: self.n_states,
            });
        }
        Ok(())
    }

    /// Extended transition: folds the word left to right from `state`.
    pub fn apply(&self, state: usize, word: &Word) -> Result<usize, AutomataError> {
        self.check_state(state)?;
        let mut q = state;
        for letter in word.iter() {
            self.check_letter(letter)?;
            q = self.step(q, letter);
        }
        Ok(q)
    }

    /// Image of a set of states under a word.
    pub fn image(&self, set: &StateSet, word: &Word) -> Result<StateSet, AutomataError> {
        self.check_universe(set)?;
        let mut current = set.clone();
        for letter in word.iter() {
            self.check_letter(letter)?;
            current = self.image_letter(&current, letter);
        }
        Ok(current)
    }

    /// One-letter image; the letter must be in range.
    pub fn image_letter(&self, set: &StateSet, letter: usize) -> StateSet {
        debug_assert!(letter < self.n_letters);
        let mut out = StateSet::empty(self.n_states);
        for q in set.iter() {
            out.insert(self.step(q, letter));
        }
        out
    }

    /// States fixed by every letter.
    pub fn sink_states(&self) -> StateSet {
        let mut sinks = StateSet::empty(self.n_states);
        for q in 0..self.n_states {
            if (0..self.n_letters).all(|x| self.step(q, x) == q) {
                sinks.insert(q);
            }
        }
        sinks
    }

    pub fn is_sink(&self, state: usize) -> bool {
        (0..self.n_letters).all(|x| self.step(state, x) == state)
    }

    /// In-degree census: an automaton is Eulerian when every state is hit by
    /// exactly `n_letters` table entries.
    pub fn eulerian_report(&self) -> EulerianReport {
        let mut in_degrees = vec![0usize; self.n_states];
        for &target in &self.delta {
            in_degrees[target] += 1;
        }
        let eulerian = in_degrees.iter().all(|&d| d == self.n_letters);
        EulerianReport {
            eulerian,
            in_degrees,
        }
    }

    pub fn is_eulerian(&self) -> bool {
        self.eulerian_report().eulerian
    }

    pub fn to_partial(&self) -> PartialDfa {
        PartialDfa {
            n_states: self.n_states,
            n_letters: self.n_letters,
            delta: self.delta.clone(),
            state_names: self.state_names.clone(),
            letter_names: self.letter_names.clone(),
        }
    }
}

/// Per-state in-degree report produced by [`Dfa::eulerian_report`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianReport {
    pub eulerian: bool,
    pub in_degrees: Vec<usize>,
}

/// Outcome of applying a word to a set of states of a partial automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartialImage {
    Image(StateSet),
    /// Some prefix of the word hit a missing transition: `state` has no
    /// `letter`-transition at word position `position` (0-based).
    Undefined {
        state: usize,
        letter: usize,
        position: usize,
    },
}

/// A deterministic automaton whose transition function may be undefined.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialDfa {
    n_states: usize,
    n_letters: usize,
    delta: Vec<usize>,
    state_names: Option<Vec<String>>,
    letter_names: Option<Vec<String>>,
}

impl PartialDfa {
    /// `delta` entries are state indices or [`UNDEFINED`].
    pub fn new(n_states: usize, n_letters: usize, delta: Vec<usize>) -> Result<Self, AutomataError> {
        if n_states == 0 || n_letters == 0 {
            return Err(AutomataError::EmptyAutomaton);
        }
        if delta.len() != n_states * n_letters {
            return Err(AutomataError::TableSize {
                got: delta.len(),
                expected: n_states * n_letters,
            });
        }
        if let Some(&bad) = delta.iter().find(|&&t| t != UNDEFINED && t >= n_states) {
            return Err(AutomataError::StateOutOfRange {
                state: bad,
                n_states,
            });
        }
        Ok(PartialDfa {
            n_states,
            n_letters,
            delta,
            state_names: None,
            letter_names: None,
        })
    }

    pub fn from_fn(
        n_states: usize,
        n_letters: usize,
        mut f: impl FnMut(usize, usize) -> Option<usize>,
    ) -> Result<Self, AutomataError> {
        let mut delta = Vec::with_capacity(n_states * n_letters);
        for q in 0..n_states {
            for x in 0..n_letters {
                delta.push(f(q, x).unwrap_or(UNDEFINED));
            }
        }
        PartialDfa::new(n_states, n_letters, delta)
    }

    pub fn with_state_names(mut self, names: Vec<String>) -> Result<Self, AutomataError> {
        validate_names(&names, self.n_states)?;
        self.state_names = Some(names);
        Ok(self)
    }

    pub fn with_letter_names(mut self, names: Vec<String>) -> Result<Self, AutomataError> {
        validate_names(&names, self.n_letters)?;
        self.letter_names = Some(names);
        Ok(self)
    }

    pub fn n_states(&self) -> usize {
        self.n_states
    }

    pub fn n_letters(&self) -> usize {
        self.n_letters
    }

    pub fn state_names(&self) -> Option<&[String]> {
        self.state_names.as_deref()
    }

    pub fn letter_names(&self) -> Option<&[String]> {
        self.letter_names.as_deref()
    }

    pub fn state_label(&self, state: usize) -> String {
        match &self.state_names {
            Some(names) => names[state].clone(),
            None => state.to_string(),
        }
    }

    pub fn render_word(&self, word: &Word) -> String {
        word.render(self.n_letters, self.letter_names.as_deref())
    }

    /// The transition for `(state, letter)`, or `None` when undefined.
    #[inline]
    pub fn step(&self, state: usize, letter: usize) -> Option<usize> {
        let t = self.delta[state * self.n_letters + letter];
        (t != UNDEFINED).then_some(t)
    }

    pub fn is_total(&self) -> bool {
        self.delta.iter().all(|&t| t != UNDEFINED)
    }

    /// Lossless conversion to a complete automaton.
    pub fn to_complete(&self) -> Result<Dfa, AutomataError> {
        if !self.is_total() {
            return Err(AutomataError::NotComplete);
        }
        let mut dfa = Dfa::new(self.n_states, self.n_letters, self.delta.clone())?;
        if let Some(names) = &self.state_names {
            dfa = dfa.with_state_names(names.clone())?;
        }
        if let Some(names) = &self.letter_names {
            dfa = dfa.with_letter_names(names.clone())?;
        }
        Ok(dfa)
    }

    /// Whether `letter` is defined on every member of `set`.
    pub fn letter_defined_on(&self, set: &StateSet, letter: usize) -> bool {
        set.iter().all(|q| self.step(q, letter).is_some())
    }

    /// Image of `set` under `word`, requiring every prefix to be defined on
    /// the running image. A missing transition is reported as an outcome, not
    /// an error.
    pub fn partial_image(
        &self,
        set: &StateSet,
        word: &Word,
    ) -> Result<PartialImage, AutomataError> {
        if set.universe() != self.n_states {
            return Err(AutomataError::UniverseMismatch {
                set_universe: set.universe(),
                n_states: self.n_states,
            });
        }
        let mut current = set.clone();
        for (position, letter) in word.iter().enumerate() {
            if letter >= self.n_letters {
                return Err(AutomataError::LetterOutOfRange {
                    letter,
                    n_letters: self.n_letters,
                });
            }
            let mut next = StateSet::empty(self.n_states);
            for q in current.iter() {
                match self.step(q, letter) {
                    Some(t) => next.insert(t),
                    None => {
                        return Ok(PartialImage::Undefined {
                            state: q,
                            letter,
                            position,
                        })
                    }
                }
            }
            current = next;
        }
        Ok(PartialImage::Image(current))
    }
}

/// Either flavor of automaton, as read from an interchange file or emitted by
/// a construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Automaton {
    Complete(Dfa),
    Partial(PartialDfa),
}

impl Automaton {
    pub fn n_states(&self) -> usize {
        match self {
            Automaton::Complete(a) => a.n_states(),
            Automaton::Partial(a) => a.n_states(),
        }
    }

    pub fn n_letters(&self) -> usize {
        match self {
            Automaton::Complete(a) => a.n_letters(),
            Automaton::Partial(a) => a.n_letters(),
        }
    }

    pub fn as_complete(&self) -> Option<&Dfa> {
        match self {
            Automaton::Complete(a) => Some(a),
            Automaton::Partial(_) => None,
        }
    }

    pub fn as_partial(&self) -> Option<&PartialDfa> {
        match self {
            Automaton::Partial(a) => Some(a),
            Automaton::Complete(_) => None,
        }
    }
}
