use std::fmt;

use automata_core::{Dfa, PartialDfa};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("letter index {letter} out of range for {n_letters} letters")]
    LetterOutOfRange { letter: usize, n_letters: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("empty generator list")]
    EmptyGenerators,
}

/// A square boolean matrix with bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    n: usize,
    blocks_per_row: usize,
    bits: Vec<u64>,
}

impl BoolMatrix {
    pub fn zero(n: usize) -> Self {
        let blocks_per_row = n.div_ceil(64).max(1);
        BoolMatrix {
            n,
            blocks_per_row,
            bits: vec![0; n * blocks_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BoolMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn ones(n: usize) -> Self {
        let mut m = BoolMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, true);
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        debug_assert!(row < self.n && col < self.n);
        self.bits[row * self.blocks_per_row + col / 64] >> (col % 64) & 1 == 1
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        debug_assert!(row < self.n && col < self.n);
        let idx = row * self.blocks_per_row + col / 64;
        if value {
            self.bits[idx] |= 1 << (col % 64);
        } else {
            self.bits[idx] &= !(1 << (col % 64));
        }
    }

    fn row(&self, row: usize) -> &[u64] {
        &self.bits[row * self.blocks_per_row..(row + 1) * self.blocks_per_row]
    }

    pub fn is_all_ones(&self) -> bool {
        (0..self.n).all(|i| {
            let row = self.row(i);
            let mut count = 0usize;
            for &block in row {
                count += block.count_ones() as usize;
            }
            count == self.n
        })
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BoolMatrix({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, "{}", if self.get(i, j) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Boolean matrix product: entry (i, j) is 1 iff some k has a(i,k) and b(k,j).
pub fn bool_mul(a: &BoolMatrix, b: &BoolMatrix) -> Result<BoolMatrix, MatrixError> {
    if a.n != b.n {
        return Err(MatrixError::DimensionMismatch {
            left: a.n,
            right: b.n,
        });
    }
    let mut out = BoolMatrix::zero(a.n);
    for i in 0..a.n {
        let row_a = a.row(i);
        let out_start = i * out.blocks_per_row;
        for (block_idx, &block) in row_a.iter().enumerate() {
            let mut bits = block;
            while bits != 0 {
                let k = block_idx * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let row_b = b.row(k);
                for (w, &v) in row_b.iter().enumerate() {
                    out.bits[out_start + w] |= v;
                }
            }
        }
    }
    Ok(out)
}

/// Transition matrix of a letter: entry (q, q') is 1 iff the letter maps q to
/// q'. Rows of states where the letter is undefined are all-zero.
pub fn transition_matrix(a: &PartialDfa, letter: usize) -> Result<BoolMatrix, MatrixError> {
    if letter >= a.n_letters() {
        return Err(MatrixError::LetterOutOfRange {
            letter,
            n_letters: a.n_letters(),
        });
    }
    let mut m = BoolMatrix::zero(a.n_states());
    for q in 0..a.n_states() {
        if let Some(t) = a.step(q, letter) {
            m.set(q, t, true);
        }
    }
    Ok(m)
}

/// Transition matrix of a complete automaton's letter: one 1 per row.
pub fn transition_matrix_complete(a: &Dfa, letter: usize) -> Result<BoolMatrix, MatrixError> {
    transition_matrix(&a.to_partial(), letter)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Upper,
    Lower,
}

/// Whether all 1-entries lie on or above (`Upper`) / on or below (`Lower`)
/// the main diagonal.
pub fn is_triangular(m: &BoolMatrix, orientation: Orientation) -> bool {
    for i in 0..m.n() {
        for j in 0..m.n() {
            if m.get(i, j) {
                let ok = match orientation {
                    Orientation::Upper => j >= i,
                    Orientation::Lower => j <= i,
                };
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}
