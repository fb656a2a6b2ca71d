// Shared between test binaries; each uses a different subset.
#![allow(dead_code)]

use automata_core::{Dfa, StateSet, Word};
pub use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_dfa(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Dfa {
    Dfa::from_fn(n, k, |_, _| rng.gen_range(0..n)).unwrap()
}

/// Weakly acyclic by construction: transitions only move forward along a
/// random topological order (self-loops allowed).
pub fn random_weakly_acyclic(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Dfa {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        order.swap(i, j);
    }
    let mut position = vec![0; n];
    for (pos, &state) in order.iter().enumerate() {
        position[state] = pos;
    }
    let mut delta = Vec::with_capacity(n * k);
    for &from in &position {
        for _ in 0..k {
            let slot = rng.gen_range(from..n);
            delta.push(order[slot]);
        }
    }
    Dfa::new(n, k, delta).unwrap()
}

pub fn random_subset(n: usize, rng: &mut ChaCha8Rng) -> StateSet {
    let mut set = StateSet::empty(n);
    for q in 0..n {
        if rng.gen_bool(0.5) {
            set.insert(q);
        }
    }
    if set.is_empty() {
        set.insert(rng.gen_range(0..n));
    }
    set
}

/// Plain enumeration of all words in length-then-lexicographic order up to
/// `max_len`, returning the first one whose image of `start` is a singleton.
/// No image deduplication: this is the independent route the BFS engines are
/// checked against.
pub fn enumerate_first_sync_word(a: &Dfa, start: &StateSet, max_len: usize) -> Option<Word> {
    for len in 0..=max_len {
        let mut prefix = Vec::new();
        if let Some(word) = dfs_exact(a, start, &mut prefix, len) {
            return Some(Word::from_letters(word));
        }
    }
    None
}

fn dfs_exact(
    a: &Dfa,
    image: &StateSet,
    prefix: &mut Vec<usize>,
    remaining: usize,
) -> Option<Vec<usize>> {
    if remaining == 0 {
        return (image.len() == 1).then(|| prefix.clone());
    }
    for x in 0..a.n_letters() {
        let next = a.image_letter(image, x);
        prefix.push(x);
        if let Some(word) = dfs_exact(a, &next, prefix, remaining - 1) {
            return Some(word);
        }
        prefix.pop();
    }
    None
}

/// Enumerates the full transition monoid (compositions of letters) and
/// returns the minimum image size of `set` over all elements.
pub fn monoid_min_image(a: &Dfa, set: &StateSet) -> usize {
    use std::collections::HashSet;
    let n = a.n_states();
    let identity: Vec<usize> = (0..n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = std::collections::VecDeque::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    let mut best = set.len();
    while let Some(table) = queue.pop_front() {
        let image_size = {
            let mut img = StateSet::empty(n);
            for q in set.iter() {
                img.insert(table[q]);
            }
            img.len()
        };
        best = best.min(image_size);
        for x in 0..a.n_letters() {
            let next: Vec<usize> = table.iter().map(|&q| a.step(q, x)).collect();
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    best
}
