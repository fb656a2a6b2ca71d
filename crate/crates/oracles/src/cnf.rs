use crate::error::OracleError;

/// Variables are fully enumerated, so cap the exponent.
pub const SAT_VAR_BUDGET: usize = 24;

/// A CNF formula over variables `1..=n_vars`; literals are signed DIMACS-style
/// indices (`3` for x3, `-3` for its negation). Clauses are non-empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    n_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(n_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self, OracleError> {
        for clause in &clauses {
            if clause.is_empty() {
                return Err(OracleError::Invalid("empty clause".into()));
            }
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > n_vars {
                    return Err(OracleError::Invalid(format!(
                        "literal {lit} out of range for {n_vars} variables"
                    )));
                }
            }
        }
        Ok(CnfFormula { n_vars, clauses })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn n_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Whether the literal "variable `var` (1-based) = `value`" appears in
    /// clause `clause_idx`, i.e. whether that assignment satisfies it.
    pub fn clause_satisfied_by(&self, clause_idx: usize, var: usize, value: bool) -> bool {
        let wanted = if value { var as i32 } else { -(var as i32) };
        self.clauses[clause_idx].contains(&wanted)
    }

    /// Smallest variable index occurring in clause `clause_idx` (1-based).
    pub fn min_var_of_clause(&self, clause_idx: usize) -> usize {
        self.clauses[clause_idx]
            .iter()
            .map(|lit| lit.unsigned_abs() as usize)
            .min()
            .expect("clauses are non-empty")
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.n_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                out.push_str(&lit.to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

/// A total assignment of truth values, indexed by variable - 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn value_of(&self, var: usize) -> bool {
        self.values[var - 1]
    }

    pub fn satisfies(&self, formula: &CnfFormula) -> bool {
        formula.clauses().iter().all(|clause| {
            clause.iter().any(|&lit| {
                let var = lit.unsigned_abs() as usize;
                self.values[var - 1] == (lit > 0)
            })
        })
    }

    /// Renders as a bit string, variable 1 first.
    pub fn bits(&self) -> String {
        self.values
            .iter()
            .map(|&v| if v { '1' } else { '0' })
            .collect()
    }
}

/// Exhaustive SAT check returning the lexicographically first satisfying
/// assignment (variable 1 most significant, false < true), or `None`.
pub fn sat_solve_brute(formula: &CnfFormula) -> Result<Option<Assignment>, OracleError> {
    let n = formula.n_vars();
    if n > SAT_VAR_BUDGET {
        return Err(OracleError::Budget {
            what: format!("SAT instance with {n} variables"),
            cap: SAT_VAR_BUDGET,
        });
    }
    for code in 0u64..(1u64 << n) {
        let values: Vec<bool> = (0..n).map(|i| code >> (n - 1 - i) & 1 == 1).collect();
        let assignment = Assignment::new(values);
        if assignment.satisfies(formula) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}
