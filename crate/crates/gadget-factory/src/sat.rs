//! SAT reductions: subset synchronization, acceptor intersection, careful
//! synchronization, exact-image reachability and the positive-matrix set.
//!
//! The clause-track skeleton is shared. For clause j over variables
//! x_1..x_n, a y-track advances one row per input bit; a bit satisfying the
//! clause diverts the track onto a z-track (when the construction has one)
//! or straight to the sink f. Canonical state order is clause-major with
//! y/z rows interleaved (y_1, [s], y_2, z_2, y_3, z_3, ...) and f last;
//! under this order the 0/1 transition matrices are upper-triangular and
//! the reset/spread matrices are lower-triangular.

use std::collections::BTreeMap;

use automata_core::{Automaton, Dfa, PartialDfa, StateSet};
use matrix_semigroup::{transition_matrix, BoolMatrix};
use oracles::{sat_solve_brute, Assignment, CnfFormula};
use serde_json::json;

use crate::bundle::{GadgetBundle, GadgetError, GadgetSource};

fn require_clauses(formula: &CnfFormula) -> Result<(), GadgetError> {
    if formula.n_clauses() == 0 {
        return Err(GadgetError::param(
            "SAT constructions need at least one clause",
        ));
    }
    Ok(())
}

fn sat_expected(formula: &CnfFormula) -> Result<(Option<Assignment>, BTreeMap<String, serde_json::Value>), GadgetError> {
    let assignment = sat_solve_brute(formula)?;
    let mut expected = BTreeMap::new();
    expected.insert("sat".to_string(), json!(assignment.is_some()));
    if let Some(a) = &assignment {
        expected.insert("assignment".to_string(), json!(a.bits()));
    }
    Ok((assignment, expected))
}

/// Per-clause y-chains of length n+1 plus a shared sink f; the bit read at
/// row i is the value of x_i, and a bit satisfying clause j sends its track
/// to f. The y-track heads form the designated subset: the assignment word
/// w_1..w_n synchronizes it iff the assignment satisfies every clause.
pub fn sat_subset_sync_gadget(formula: &CnfFormula) -> Result<GadgetBundle, GadgetError> {
    require_clauses(formula)?;
    let n = formula.n_vars();
    let m = formula.n_clauses();
    let total = m * (n + 1) + 1;
    let f = total - 1;
    let y = |j: usize, i: usize| j * (n + 1) + (i - 1); // clause j (0-based), row i (1-based)

    let dfa = Dfa::from_fn(total, 2, |q, x| {
        if q == f {
            return f;
        }
        let j = q / (n + 1);
        let i = q % (n + 1) + 1;
        if i == n + 1 {
            q // exhausted track: self-loop
        } else if formula.clause_satisfied_by(j, i, x == 1) {
            f
        } else {
            y(j, i + 1)
        }
    })?;
    let mut names = Vec::with_capacity(total);
    for j in 1..=m {
        for i in 1..=n + 1 {
            names.push(format!("y{i}^({j})"));
        }
    }
    names.push("f".to_string());
    let dfa = dfa.with_state_names(names)?;

    let subset = StateSet::from_indices(total, (0..m).map(|j| y(j, 1)))
        .expect("track heads in range");
    let (_, mut expected) = sat_expected(formula)?;
    expected.insert("state_count".to_string(), json!(m * (n + 1) + 1));
    expected.insert("weakly_acyclic".to_string(), json!(true));
    Ok(GadgetBundle {
        automaton: Automaton::Complete(dfa),
        subset: Some(subset),
        target_set: None,
        threshold: None,
        expected,
        source: GadgetSource::new(
            "sat-subset-sync",
            &[("n", n.to_string()), ("m", m.to_string())],
            &formula.to_dimacs(),
        ),
    })
}

/// One acceptor per clause: the clause's y-chain plus f, initial state the
/// track head, accepting state f. A word is accepted by all acceptors iff
/// its first n bits satisfy every clause.
#[derive(Clone, Debug)]
pub struct AcceptorSpec {
    pub dfa: Dfa,
    pub initial: usize,
    pub accepting: StateSet,
}

#[derive(Clone, Debug)]
pub struct SatIntersectionGadget {
    pub acceptors: Vec<AcceptorSpec>,
    pub expected: BTreeMap<String, serde_json::Value>,
    pub source: GadgetSource,
}

pub fn sat_intersection_gadget(
    formula: &CnfFormula,
) -> Result<SatIntersectionGadget, GadgetError> {
    require_clauses(formula)?;
    let n = formula.n_vars();
    let m = formula.n_clauses();
    let mut acceptors = Vec::with_capacity(m);
    for j in 0..m {
        let total = n + 2;
        let f = total - 1;
        let dfa = Dfa::from_fn(total, 2, |q, x| {
            if q == f {
                f
            } else if q == n {
                q // y_{n+1} self-loops
            } else if formula.clause_satisfied_by(j, q + 1, x == 1) {
                f
            } else {
                q + 1
            }
        })?;
        let mut names: Vec<String> = (1..=n + 1).map(|i| format!("y{i}^({})", j + 1)).collect();
        names.push("f".to_string());
        let dfa = dfa.with_state_names(names)?;
        acceptors.push(AcceptorSpec {
            dfa,
            initial: 0,
            accepting: StateSet::singleton(total, f),
        });
    }
    let (_, expected) = sat_expected(formula)?;
    Ok(SatIntersectionGadget {
        acceptors,
        expected,
        source: GadgetSource::new(
            "sat-intersection",
            &[("n", n.to_string()), ("m", m.to_string())],
            &formula.to_dimacs(),
        ),
    })
}

/// Role of a state in the z-track layouts, for O(1) transition lookups.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Role {
    /// y-row `row` (1-based) of clause `clause` (0-based).
    Y { clause: usize, row: usize },
    Z { clause: usize, row: usize },
    Reset { clause: usize },
    Sink,
}

/// Canonical layout of the z-track constructions. Clause j has z-states for
/// rows h_j+1 ..= n+1 only, where h_j is the smallest variable index
/// occurring in the clause.
struct SatLayout {
    n: usize,
    m: usize,
    /// y[j][i-1] = index of y-row i of clause j.
    y: Vec<Vec<usize>>,
    /// z[j][i-1] = index of z-row i of clause j, when present.
    z: Vec<Vec<Option<usize>>>,
    role: Vec<Role>,
    f: usize,
    names: Vec<String>,
    total: usize,
}

fn sat_layout(formula: &CnfFormula, with_reset_states: bool) -> SatLayout {
    let n = formula.n_vars();
    let m = formula.n_clauses();
    let mut y = vec![vec![usize::MAX; n + 1]; m];
    let mut z = vec![vec![None; n + 1]; m];
    let mut role = Vec::new();
    let mut names = Vec::new();
    for j in 0..m {
        let h = formula.min_var_of_clause(j);
        y[j][0] = role.len();
        role.push(Role::Y { clause: j, row: 1 });
        names.push(format!("y1^({})", j + 1));
        if with_reset_states {
            role.push(Role::Reset { clause: j });
            names.push(format!("s^({})", j + 1));
        }
        for i in 2..=n + 1 {
            y[j][i - 1] = role.len();
            role.push(Role::Y { clause: j, row: i });
            names.push(format!("y{i}^({})", j + 1));
            if i > h {
                z[j][i - 1] = Some(role.len());
                role.push(Role::Z { clause: j, row: i });
                names.push(format!("z{i}^({})", j + 1));
            }
        }
    }
    let f = role.len();
    role.push(Role::Sink);
    names.push("f".to_string());
    let total = role.len();
    SatLayout {
        n,
        m,
        y,
        z,
        role,
        f,
        names,
        total,
    }
}

enum BitStep {
    To(usize),
    /// y_{n+1}: undefined in the partial constructions, completed to f in
    /// the reachability construction.
    ExhaustedRow,
}

impl SatLayout {
    /// 0/1 transition of the shared skeleton; `None` where the base
    /// construction leaves the table undefined (reset states on bits).
    fn bit_step(&self, formula: &CnfFormula, q: usize, x: usize) -> Option<BitStep> {
        match self.role[q] {
            Role::Sink => Some(BitStep::To(self.f)),
            Role::Reset { .. } => None,
            Role::Y { clause, row } => {
                if row == self.n + 1 {
                    Some(BitStep::ExhaustedRow)
                } else if formula.clause_satisfied_by(clause, row, x == 1) {
                    Some(BitStep::To(
                        self.z[clause][row].expect("satisfying row has a z successor"),
                    ))
                } else {
                    Some(BitStep::To(self.y[clause][row]))
                }
            }
            Role::Z { clause, row } => Some(BitStep::To(if row == self.n + 1 {
                self.f
            } else {
                self.z[clause][row].expect("z-track is contiguous")
            })),
        }
    }

    /// Clause owning a state, if any (f belongs to none).
    fn clause_of(&self, q: usize) -> Option<usize> {
        match self.role[q] {
            Role::Sink => None,
            Role::Y { clause, .. } | Role::Z { clause, .. } | Role::Reset { clause } => {
                Some(clause)
            }
        }
    }
}

fn base_params(formula: &CnfFormula) -> [(&'static str, String); 2] {
    [
        ("n", formula.n_vars().to_string()),
        ("m", formula.n_clauses().to_string()),
    ]
}

/// The partial clause-track automaton: bits advance y-tracks, a satisfying
/// bit diverts onto the z-track, z-tracks drain into f, and the exhausted
/// y-row has no transitions.
pub fn sat_base_automaton(formula: &CnfFormula) -> Result<GadgetBundle, GadgetError> {
    require_clauses(formula)?;
    let layout = sat_layout(formula, false);
    let dfa = PartialDfa::from_fn(layout.total, 2, |q, x| {
        match layout.bit_step(formula, q, x) {
            Some(BitStep::To(t)) => Some(t),
            Some(BitStep::ExhaustedRow) | None => None,
        }
    })?
    .with_state_names(layout.names.clone())?;

    let h: Vec<usize> = (0..layout.m)
        .map(|j| formula.min_var_of_clause(j))
        .collect();
    let (_, mut expected) = sat_expected(formula)?;
    expected.insert("h".to_string(), json!(h));
    expected.insert("state_count".to_string(), json!(layout.total));
    Ok(GadgetBundle {
        automaton: Automaton::Partial(dfa),
        subset: None,
        target_set: None,
        threshold: None,
        expected,
        source: GadgetSource::new("a-base", &base_params(formula), &formula.to_dimacs()),
    })
}

/// The careful-synchronization instance: the base automaton plus one reset
/// state per clause and a third letter r that sends every state of clause j
/// to its track head and fixes f. r is the only everywhere-defined letter,
/// and `r w_1..w_n 0` carefully synchronizes iff the bits satisfy the
/// formula.
pub fn sat_careful_gadget(formula: &CnfFormula) -> Result<GadgetBundle, GadgetError> {
    require_clauses(formula)?;
    let layout = sat_layout(formula, true);
    let dfa = PartialDfa::from_fn(layout.total, 3, |q, x| {
        if x == 2 {
            return Some(match layout.clause_of(q) {
                Some(j) => layout.y[j][0],
                None => layout.f,
            });
        }
        match layout.bit_step(formula, q, x) {
            Some(BitStep::To(t)) => Some(t),
            Some(BitStep::ExhaustedRow) | None => None,
        }
    })?
    .with_state_names(layout.names.clone())?
    .with_letter_names(vec!["0".to_string(), "1".to_string(), "r".to_string()])?;

    let (assignment, mut expected) = sat_expected(formula)?;
    if let Some(a) = &assignment {
        let mut word: Vec<usize> = vec![2];
        word.extend(a.values().iter().map(|&v| usize::from(v)));
        word.push(0);
        expected.insert("careful_word".to_string(), json!(word));
    }
    expected.insert("state_count".to_string(), json!(layout.total));
    Ok(GadgetBundle {
        automaton: Automaton::Partial(dfa),
        subset: None,
        target_set: None,
        threshold: None,
        expected,
        source: GadgetSource::new("sat-careful", &base_params(formula), &formula.to_dimacs()),
    })
}

/// The base automaton completed by sending the exhausted y-rows to f; the
/// target image {z-track ends} + {f} is reachable from the full state set
/// iff the formula is satisfiable.
pub fn sat_reachability_gadget(formula: &CnfFormula) -> Result<GadgetBundle, GadgetError> {
    require_clauses(formula)?;
    let layout = sat_layout(formula, false);
    let dfa = Dfa::from_fn(layout.total, 2, |q, x| {
        match layout.bit_step(formula, q, x) {
            Some(BitStep::To(t)) => t,
            Some(BitStep::ExhaustedRow) => layout.f,
            None => unreachable!("base layout has no reset states"),
        }
    })?
    .with_state_names(layout.names.clone())?;

    let target = StateSet::from_indices(
        layout.total,
        (0..layout.m)
            .map(|j| layout.z[j][layout.n].expect("z-track reaches the last row"))
            .chain([layout.f]),
    )
    .expect("target states in range");
    let (_, mut expected) = sat_expected(formula)?;
    let reachable = expected["sat"].clone();
    expected.insert("target_reachable".to_string(), reachable);
    expected.insert("weakly_acyclic".to_string(), json!(true));
    Ok(GadgetBundle {
        automaton: Automaton::Complete(dfa),
        subset: None,
        target_set: Some(target),
        threshold: None,
        expected,
        source: GadgetSource::new(
            "sat-reachability",
            &base_params(formula),
            &formula.to_dimacs(),
        ),
    })
}

/// The four positive-matrix generators: transition matrices of the careful
/// instance's letters 0, 1, r (undefined rows all-zero) plus the spread
/// matrix sending f everywhere. Under the canonical state order the first
/// two are upper-triangular and the last two lower-triangular, and a
/// positive product exists iff the formula is satisfiable.
#[derive(Clone, Debug)]
pub struct SatMatrixSet {
    pub matrices: Vec<BoolMatrix>,
    pub labels: Vec<String>,
    pub state_names: Vec<String>,
    pub expected: BTreeMap<String, serde_json::Value>,
    pub source: GadgetSource,
}

pub fn sat_matrix_set(formula: &CnfFormula) -> Result<SatMatrixSet, GadgetError> {
    let careful = sat_careful_gadget(formula)?;
    let partial = careful
        .automaton
        .as_partial()
        .expect("careful gadget is partial");
    let n = partial.n_states();
    let mut matrices: Vec<BoolMatrix> = (0..3)
        .map(|x| transition_matrix(partial, x).expect("letters 0..3 exist"))
        .collect();
    let mut spread = BoolMatrix::zero(n);
    for col in 0..n {
        spread.set(n - 1, col, true); // f is the last state in canonical order
    }
    matrices.push(spread);

    let mut expected = careful.expected.clone();
    expected.remove("careful_word");
    expected.remove("state_count");
    expected.insert("dimension".to_string(), json!(n));
    Ok(SatMatrixSet {
        matrices,
        labels: vec![
            "0".to_string(),
            "1".to_string(),
            "r".to_string(),
            "spread".to_string(),
        ],
        state_names: partial
            .state_names()
            .expect("careful gadget names its states")
            .to_vec(),
        expected,
        source: GadgetSource::new(
            "sat-matrices",
            &base_params(formula),
            &formula.to_dimacs(),
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use automata_core::{PartialImage, Word};
    use matrix_semigroup::{bool_mul, is_triangular, Orientation};

    fn formula(n: usize, clauses: &[&[i32]]) -> CnfFormula {
        CnfFormula::new(n, clauses.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn subset_sync_two_clause_trace() {
        // (x1 | !x2) & (x2): "11" drives both track heads to f.
        let f = formula(2, &[&[1, -2], &[2]]);
        let bundle = sat_subset_sync_gadget(&f).unwrap();
        let a = bundle.automaton.as_complete().unwrap();
        assert_eq!(a.n_states(), 7);
        let s = bundle.subset.clone().unwrap();
        assert_eq!(s, StateSet::from_indices(7, [0, 3]).unwrap());
        let image = a.image(&s, &Word::from_letters(vec![1, 1])).unwrap();
        assert_eq!(image, StateSet::singleton(7, 6));
        assert!(a.is_weakly_acyclic());
    }

    #[test]
    fn base_automaton_single_clause_structure() {
        // Clause (x1): states y1, y2, z2, f in canonical order.
        let f = formula(1, &[&[1]]);
        let bundle = sat_base_automaton(&f).unwrap();
        let a = bundle.automaton.as_partial().unwrap();
        assert_eq!(a.n_states(), 4);
        let names = a.state_names().unwrap();
        assert_eq!(names, ["y1^(1)", "y2^(1)", "z2^(1)", "f"]);
        assert_eq!(a.step(0, 1), Some(2)); // y1 --1--> z2
        assert_eq!(a.step(0, 0), Some(1)); // y1 --0--> y2
        assert_eq!(a.step(2, 0), Some(3)); // z2 --0--> f
        assert_eq!(a.step(2, 1), Some(3));
        assert_eq!(a.step(1, 0), None); // y2 is the exhausted row
        assert_eq!(a.step(1, 1), None);
    }

    #[test]
    fn careful_gadget_word_trace() {
        let f = formula(1, &[&[1]]);
        let bundle = sat_careful_gadget(&f).unwrap();
        let a = bundle.automaton.as_partial().unwrap();
        assert_eq!(a.n_states(), 5); // y1, s, y2, z2, f
        let all = StateSet::full(5);
        // r 1 0 carefully synchronizes onto f.
        let image = a
            .partial_image(&all, &Word::from_letters(vec![2, 1, 0]))
            .unwrap();
        assert_eq!(image, PartialImage::Image(StateSet::singleton(5, 4)));
        // Letter 0 alone is undefined on the reset state.
        let blocked = a.partial_image(&all, &Word::from_letters(vec![0])).unwrap();
        assert_eq!(
            blocked,
            PartialImage::Undefined {
                state: 1,
                letter: 0,
                position: 0
            }
        );
        assert_eq!(
            bundle.expected["careful_word"],
            serde_json::json!([2, 1, 0])
        );
    }

    #[test]
    fn reachability_gadget_trace() {
        let f = formula(1, &[&[1]]);
        let bundle = sat_reachability_gadget(&f).unwrap();
        let a = bundle.automaton.as_complete().unwrap();
        assert!(a.is_weakly_acyclic());
        let target = bundle.target_set.clone().unwrap();
        assert_eq!(target, StateSet::from_indices(4, [2, 3]).unwrap());
        let image = a
            .image(&StateSet::full(4), &Word::from_letters(vec![1]))
            .unwrap();
        assert_eq!(image, target);
    }

    #[test]
    fn matrices_triangular_and_product_positive() {
        let f = formula(1, &[&[1]]);
        let set = sat_matrix_set(&f).unwrap();
        assert_eq!(set.matrices.len(), 4);
        assert!(is_triangular(&set.matrices[0], Orientation::Upper));
        assert!(is_triangular(&set.matrices[1], Orientation::Upper));
        assert!(is_triangular(&set.matrices[2], Orientation::Lower));
        assert!(is_triangular(&set.matrices[3], Orientation::Lower));
        // r * 1 * 0 * spread is all-ones.
        let product = [2usize, 1, 0, 3]
            .iter()
            .map(|&i| set.matrices[i].clone())
            .reduce(|acc, m| bool_mul(&acc, &m).unwrap())
            .unwrap();
        assert!(product.is_all_ones());
    }

    #[test]
    fn intersection_acceptors_stay_inside_their_clause() {
        let f = formula(2, &[&[1, -2], &[2]]);
        let gadget = sat_intersection_gadget(&f).unwrap();
        assert_eq!(gadget.acceptors.len(), 2);
        for acc in &gadget.acceptors {
            assert!(acc.dfa.is_weakly_acyclic());
            assert_eq!(acc.dfa.n_states(), 4);
            assert_eq!(acc.initial, 0);
        }
    }

    #[test]
    fn h_is_per_clause_minimum_variable() {
        let f = formula(3, &[&[2, 3], &[-3]]);
        let bundle = sat_base_automaton(&f).unwrap();
        assert_eq!(bundle.expected["h"], serde_json::json!([2, 3]));
    }

    #[test]
    fn zero_clause_formula_rejected() {
        let f = CnfFormula::new(1, vec![]).unwrap();
        assert!(sat_subset_sync_gadget(&f).is_err());
        assert!(sat_careful_gadget(&f).is_err());
    }
}
