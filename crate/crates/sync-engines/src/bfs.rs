//! Breadth-first search over words, deduplicated by search node.
//!
//! Nodes are expanded in FIFO order with letters tried in index order, so the
//! first word reaching any node — and in particular the first word satisfying
//! the goal — is the length-then-lexicographic minimal one. Pruning revisited
//! nodes preserves that minimality: a later word reaching the same node can
//! only have length-lex larger continuations.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::hash::Hash;

use automata_core::Word;

use crate::budget::EngineError;

struct Arena {
    parents: Vec<(u32, u16)>,
}

const ROOT: u32 = u32::MAX;

impl Arena {
    fn new() -> Self {
        Arena {
            parents: Vec::new(),
        }
    }

    fn push(&mut self, parent: u32, letter: usize) -> u32 {
        let id = self.parents.len() as u32;
        self.parents.push((parent, letter as u16));
        id
    }

    fn word_of(&self, mut node: u32) -> Word {
        let mut letters = Vec::new();
        loop {
            let (parent, letter) = self.parents[node as usize];
            if parent == ROOT {
                break; // the start node carries no letter
            }
            letters.push(letter as usize);
            node = parent;
        }
        letters.reverse();
        Word::from_letters(letters)
    }
}

fn budget_err(cap_name: &str, cap: usize) -> EngineError {
    EngineError::Budget {
        what: format!("{cap_name} visited-node budget"),
        cap,
    }
}

/// Searches for the first node satisfying `accept`, starting from `start`.
///
/// Returns `(Some((word, node)), visited)` on a hit, `(None, visited)` when
/// the reachable node space was exhausted without one, and a budget error if
/// the visited cap was hit first. `expand` may return `None` for an
/// inapplicable letter.
pub(crate) fn bfs_first<T, E, A>(
    start: T,
    n_letters: usize,
    max_visited: usize,
    cap_name: &str,
    mut expand: E,
    mut accept: A,
) -> Result<(Option<(Word, T)>, usize), EngineError>
where
    T: Clone + Eq + Hash,
    E: FnMut(&T, usize) -> Option<T>,
    A: FnMut(&T) -> bool,
{
    if accept(&start) {
        return Ok((Some((Word::empty(), start)), 1));
    }
    let mut arena = Arena::new();
    let root = arena.push(ROOT, 0);

    let mut visited: HashMap<T, u32> = HashMap::new();
    visited.insert(start.clone(), root);
    let mut queue: VecDeque<(u32, T)> = VecDeque::new();
    queue.push_back((root, start));

    while let Some((node, value)) = queue.pop_front() {
        for letter in 0..n_letters {
            let Some(next) = expand(&value, letter) else {
                continue;
            };
            if visited.contains_key(&next) {
                continue;
            }
            let id = arena.push(node, letter);
            if accept(&next) {
                return Ok((Some((arena.word_of(id), next)), visited.len() + 1));
            }
            if visited.len() >= max_visited {
                return Err(budget_err(cap_name, max_visited));
            }
            visited.insert(next.clone(), id);
            queue.push_back((id, next));
        }
    }
    Ok((None, visited.len()))
}

/// Exhaustively explores the reachable node space and returns the first node
/// (in BFS order) minimizing `score`, stopping early once `floor` is reached.
pub(crate) fn bfs_min<T, E, S>(
    start: T,
    n_letters: usize,
    max_visited: usize,
    cap_name: &str,
    floor: usize,
    mut expand: E,
    mut score: S,
) -> Result<(Word, T, usize, usize), EngineError>
where
    T: Clone + Eq + Hash,
    E: FnMut(&T, usize) -> Option<T>,
    S: FnMut(&T) -> usize,
{
    let mut arena = Arena::new();
    let root = arena.push(ROOT, 0);

    let mut best_node = root;
    let mut best_value = start.clone();
    let mut best_score = score(&start);

    let mut visited: HashMap<T, u32> = HashMap::new();
    visited.insert(start.clone(), root);
    let mut queue: VecDeque<(u32, T)> = VecDeque::new();
    queue.push_back((root, start));

    while best_score > floor {
        let Some((node, value)) = queue.pop_front() else {
            break;
        };
        for letter in 0..n_letters {
            let Some(next) = expand(&value, letter) else {
                continue;
            };
            if visited.contains_key(&next) {
                continue;
            }
            if visited.len() >= max_visited {
                return Err(budget_err(cap_name, max_visited));
            }
            let id = arena.push(node, letter);
            let s = score(&next);
            if s < best_score {
                best_score = s;
                best_node = id;
                best_value = next.clone();
                if best_score <= floor {
                    visited.insert(next, id);
                    break;
                }
            }
            visited.insert(next.clone(), id);
            queue.push_back((id, next));
        }
    }
    let visited_count = visited.len();
    Ok((arena.word_of(best_node), best_value, best_score, visited_count))
}
