//! Synchronization engines for complete and partial automata.
//!
//! The polynomial tests (pair-based synchronizability, the weakly acyclic
//! rank fast path, the unary maximum-set engine) run on any size; the exact
//! engines search image sets or product tuples breadth-first with explicit
//! [`Budget`] caps and report budget exhaustion as a distinct outcome, never
//! as a negative answer.
//!
//! All BFS engines return the length-then-lexicographic minimal witness
//! (letters compared by index), so outputs are deterministic.

mod bfs;
mod budget;
mod careful;
mod eulerian;
mod intersect;
mod maxset;
mod pairs;
mod rank;
mod reach;
mod result;
mod shortest;

pub use budget::{Budget, EngineError, DEFAULT_MAX_STATES, DEFAULT_MAX_VISITED};
pub use careful::careful_shortest_word;
pub use eulerian::{verify_eulerian_partition, EulerianPartitionReport, EULERIAN_ENUM_CAP};
pub use intersect::{intersection_nonempty, Acceptor};
pub use maxset::{
    max_sync_set, max_sync_set_unary, max_sync_set_via_monoid, MaxSyncMode,
};
pub use pairs::is_synchronizing;
pub use rank::{greedy_rank_word_wa, rank_of_automaton, rank_of_automaton_exact, rank_of_subset};
pub use reach::is_subset_reachable;
pub use result::{IntersectionResult, MaxSyncSetResult, RankResult, ReachResult, SyncResult};
pub use shortest::{shortest_sync_word, subset_shortest_sync_word};
