use std::fmt;

use crate::error::AutomataError;

/// A subset of the states `0..universe`, stored as a bit vector.
///
/// The number of blocks is always `ceil(universe / 64)` and unused high bits
/// of the last block are kept zero, so equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet {
    universe: usize,
    blocks: Vec<u64>,
}

impl StateSet {
    pub fn empty(universe: usize) -> Self {
        StateSet {
            universe,
            blocks: vec![0; universe.div_ceil(64)],
        }
    }

    /// The set containing every state of the universe.
    pub fn full(universe: usize) -> Self {
        let mut set = StateSet::empty(universe);
        for block in set.blocks.iter_mut() {
            *block = u64::MAX;
        }
        set.mask_tail();
        set
    }

    pub fn singleton(universe: usize, state: usize) -> Self {
        let mut set = StateSet::empty(universe);
        set.insert(state);
        set
    }

    /// Builds a set from explicit indices, rejecting out-of-range members.
    pub fn from_indices<I>(universe: usize, indices: I) -> Result<Self, AutomataError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = StateSet::empty(universe);
        for state in indices {
            if state >= universe {
                return Err(AutomataError::StateOutOfRange {
                    state,
                    n_states: universe,
                });
            }
            set.insert(state);
        }
        Ok(set)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn contains(&self, state: usize) -> bool {
        state < self.universe && self.blocks[state / 64] >> (state % 64) & 1 == 1
    }

    /// Inserts a state. Panics if the state is outside the universe; callers
    /// validate externally supplied indices with [`StateSet::from_indices`].
    pub fn insert(&mut self, state: usize) {
        assert!(state < self.universe, "state {state} outside universe");
        self.blocks[state / 64] |= 1 << (state % 64);
    }

    pub fn remove(&mut self, state: usize) {
        if state < self.universe {
            self.blocks[state / 64] &= !(1 << (state % 64));
        }
    }

    pub fn is_subset_of(&self, other: &StateSet) -> bool {
        self.universe == other.universe
            && self
                .blocks
                .iter()
                .zip(&other.blocks)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &StateSet) {
        assert_eq!(self.universe, other.universe);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersects(&self, other: &StateSet) -> bool {
        self.blocks.iter().zip(&other.blocks).any(|(a, b)| a & b != 0)
    }

    /// Iterates members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            let mut bits = block;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let low = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i * 64 + low)
            })
        })
    }

    /// The sole member of a singleton set.
    pub fn sole_member(&self) -> Option<usize> {
        if self.len() == 1 {
            self.iter().next()
        } else {
            None
        }
    }

    pub fn min_member(&self) -> Option<usize> {
        self.iter().next()
    }

    fn mask_tail(&mut self) {
        let tail = self.universe % 64;
        if tail != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, state) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{state}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
