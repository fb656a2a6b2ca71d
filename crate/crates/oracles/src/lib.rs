//! Brute-force reference solvers for the reduction source problems.
//!
//! These are deliberately exhaustive: they never sample or approximate, and
//! they fail with an explicit budget error instead of degrading. Witnesses
//! are chosen deterministically so cross-run diffs stay meaningful.

mod cnf;
mod dimacs;
mod error;
mod graph;

pub use cnf::{sat_solve_brute, Assignment, CnfFormula, SAT_VAR_BUDGET};
pub use dimacs::{parse_dimacs_cnf, parse_dimacs_graph};
pub use error::OracleError;
pub use graph::{
    chromatic_number_brute, max_independent_set_brute, Graph, CHROMATIC_BUDGET,
    INDEPENDENT_SET_BUDGET,
};
