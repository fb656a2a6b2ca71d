//! Data model for synchronization problems in finite automata: complete and
//! partial deterministic transition tables, state sets, words, structural
//! predicates (weak acyclicity, sinks, Eulerian in-degree) and the text
//! interchange format.
//!
//! All types are immutable after construction; operations are pure functions
//! and safe to call concurrently.

mod dfa;
mod error;
pub mod format;
mod state_set;
mod topo;
mod word;

pub use dfa::{Automaton, Dfa, EulerianReport, PartialDfa, PartialImage, UNDEFINED};
pub use error::AutomataError;
pub use format::{parse_dfa, serialize_automaton, serialize_dfa, serialize_partial_dfa};
pub use state_set::StateSet;
pub use topo::TopoOrder;
pub use word::Word;
