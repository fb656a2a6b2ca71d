use automata_core::{parse_dfa, serialize_automaton, Automaton, Dfa, StateSet, Word};
use proptest::prelude::*;

fn arb_dfa() -> impl Strategy<Value = Dfa> {
    (1usize..8, 1usize..4).prop_flat_map(|(n, k)| {
        proptest::collection::vec(0..n, n * k)
            .prop_map(move |delta| Dfa::new(n, k, delta).unwrap())
    })
}

/// Independent cycle check over the non-self-loop digraph, used to
/// cross-validate the Kahn-based sort on small instances.
fn has_real_cycle_dfs(a: &Dfa) -> bool {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        White,
        Grey,
        Black,
    }
    fn visit(a: &Dfa, q: usize, marks: &mut [Mark]) -> bool {
        marks[q] = Mark::Grey;
        for x in 0..a.n_letters() {
            let t = a.step(q, x);
            if t == q {
                continue;
            }
            match marks[t] {
                Mark::Grey => return true,
                Mark::White => {
                    if visit(a, t, marks) {
                        return true;
                    }
                }
                Mark::Black => {}
            }
        }
        marks[q] = Mark::Black;
        false
    }
    let mut marks = vec![Mark::White; a.n_states()];
    (0..a.n_states()).any(|q| marks[q] == Mark::White && visit(a, q, &mut marks))
}

proptest! {
    #[test]
    fn apply_fold_coherence(a in arb_dfa(), q_pick in 0usize..8, split in 0usize..12,
                            letters in proptest::collection::vec(0usize..4, 0..12)) {
        let q = q_pick % a.n_states();
        let letters: Vec<usize> = letters.into_iter().map(|x| x % a.n_letters()).collect();
        let cut = split.min(letters.len());
        let u = Word::from_letters(letters[..cut].to_vec());
        let v = Word::from_letters(letters[cut..].to_vec());
        let uv = u.concat(&v);
        let direct = a.apply(q, &uv).unwrap();
        let staged = a.apply(a.apply(q, &u).unwrap(), &v).unwrap();
        prop_assert_eq!(direct, staged);
    }

    #[test]
    fn image_shrinks_and_is_monotone(a in arb_dfa(), seed_bits in proptest::collection::vec(proptest::bool::ANY, 8),
                                     letters in proptest::collection::vec(0usize..4, 0..10)) {
        let n = a.n_states();
        let mut s = StateSet::empty(n);
        for (q, take) in seed_bits.iter().take(n).enumerate() {
            if *take {
                s.insert(q);
            }
        }
        let w = Word::from_letters(letters.into_iter().map(|x| x % a.n_letters()).collect());
        let img_s = a.image(&s, &w).unwrap();
        let img_q = a.image(&StateSet::full(n), &w).unwrap();
        prop_assert!(img_s.len() <= s.len());
        prop_assert!(img_s.is_subset_of(&img_q));
    }

    #[test]
    fn toposort_agrees_with_dfs_cycle_check(a in arb_dfa()) {
        match a.topological_sort() {
            Ok(order) => {
                prop_assert!(!has_real_cycle_dfs(&a));
                prop_assert!(order.is_valid_for(&a));
            }
            Err(cycle) => {
                prop_assert!(has_real_cycle_dfs(&a));
                // The witness is a genuine cycle of length >= 2.
                prop_assert!(cycle.len() >= 2);
                for pair in cycle.windows(2) {
                    prop_assert!((0..a.n_letters()).any(|x| a.step(pair[0], x) == pair[1]));
                }
                let last = *cycle.last().unwrap();
                prop_assert!((0..a.n_letters()).any(|x| a.step(last, x) == cycle[0]));
            }
        }
    }

    #[test]
    fn serialize_parse_roundtrip(a in arb_dfa()) {
        let text = serialize_automaton(&Automaton::Complete(a.clone()));
        let back = parse_dfa(&text).unwrap();
        prop_assert_eq!(back.as_complete().unwrap(), &a);
    }

    #[test]
    fn partial_roundtrip(a in arb_dfa(), holes in proptest::collection::vec(proptest::bool::ANY, 32)) {
        let p = automata_core::PartialDfa::from_fn(a.n_states(), a.n_letters(), |q, x| {
            let idx = q * a.n_letters() + x;
            if holes.get(idx).copied().unwrap_or(false) {
                None
            } else {
                Some(a.step(q, x))
            }
        }).unwrap();
        let text = serialize_automaton(&Automaton::Partial(p.clone()));
        let back = parse_dfa(&text).unwrap();
        prop_assert_eq!(back.as_partial().unwrap(), &p);
    }

    #[test]
    fn empty_word_image_is_identity(a in arb_dfa(), seed_bits in proptest::collection::vec(proptest::bool::ANY, 8)) {
        let n = a.n_states();
        let mut s = StateSet::empty(n);
        for (q, take) in seed_bits.iter().take(n).enumerate() {
            if *take {
                s.insert(q);
            }
        }
        prop_assert_eq!(a.image(&s, &Word::empty()).unwrap(), s);
    }
}

#[test]
fn golden_serialization_is_canonical() {
    // Spacing and comments normalize away; a second round trip is stable.
    let messy = "# comment\ndfa 3 2\n1   2\n2 2\n# trailing\n0 1\n";
    let parsed = parse_dfa(messy).unwrap();
    let canonical = serialize_automaton(&parsed);
    assert_eq!(canonical, "dfa 3 2\n1 2\n2 2\n0 1\n");
    assert_eq!(serialize_automaton(&parse_dfa(&canonical).unwrap()), canonical);
}

#[test]
fn subset_image_example() {
    let a = Dfa::identity(3, 2);
    let s = StateSet::from_indices(3, [0, 2]).unwrap();
    let w = Word::from_letters(vec![0, 1, 0]);
    assert_eq!(a.image(&s, &w).unwrap(), s);
}
