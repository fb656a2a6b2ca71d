//! Deterministic compilers from SAT formulas, graphs and size parameters to
//! synchronization-problem instances: automata, designated subsets,
//! reachability targets, decision thresholds and boolean matrix sets, each
//! bundled with named expected values from the brute-force oracles.
//!
//! Identical inputs produce byte-identical serialized bundles.

mod bundle;
mod chromatic;
mod digest;
mod families;
mod layered;
mod maxsync;
mod sat;

pub use bundle::{GadgetBundle, GadgetError, GadgetSource};
pub use chromatic::{chromatic_rank_binary_gadget, chromatic_rank_gadget};
pub use digest::digest_hex;
pub use families::{subset_binary_family, subset_large_alphabet_family, tight_rank_family};
pub use layered::layered_subset_gadget;
pub use maxsync::{
    independent_set_maxsync_binary_gadget, independent_set_maxsync_binary_wa_gadget,
    independent_set_maxsync_gadget, padding_maxsync_gadget,
};
pub use sat::{
    sat_base_automaton, sat_careful_gadget, sat_intersection_gadget, sat_matrix_set,
    sat_reachability_gadget, sat_subset_sync_gadget, AcceptorSpec, SatIntersectionGadget,
    SatMatrixSet,
};

// Reduction inputs live next to their brute-force solvers; re-export them so
// gadget callers see one coherent surface.
pub use oracles::{CnfFormula, Graph};
