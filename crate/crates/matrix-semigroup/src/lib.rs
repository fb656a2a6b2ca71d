//! Boolean (OR-of-ANDs) matrix algebra over bit-packed rows, transition
//! matrices of automata, triangularity checks, the `mat` text format and an
//! exhaustive breadth-first search for a positive (all-ones) product.

mod format;
mod matrix;
mod search;

pub use format::{parse_mat_file, render_mat_file};
pub use matrix::{
    bool_mul, is_triangular, transition_matrix, transition_matrix_complete, BoolMatrix,
    MatrixError, Orientation,
};
pub use search::{positive_product_search, ProductSearchOutcome, DEFAULT_ELEMENT_CAP};
