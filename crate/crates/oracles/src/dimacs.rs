//! DIMACS readers: `p cnf <vars> <clauses>` with 0-terminated clauses, and
//! `p edge <vertices> <edges>` with 1-based `e u v` lines. `c` lines are
//! comments. Duplicate edges collapse; self-loops are rejected.

use crate::cnf::CnfFormula;
use crate::error::OracleError;
use crate::graph::Graph;

pub fn parse_dimacs_cnf(text: &str) -> Result<CnfFormula, OracleError> {
    let mut n_vars = None;
    let mut n_clauses = 0usize;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    for (line_no, raw) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            if n_vars.is_some() {
                return Err(OracleError::parse(line_no, "duplicate problem line"));
            }
            let mut parts = rest.split_whitespace();
            if parts.next() != Some("cnf") {
                return Err(OracleError::parse(line_no, "expected `p cnf <vars> <clauses>`"));
            }
            n_vars = Some(
                parts
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| OracleError::parse(line_no, "bad variable count"))?,
            );
            n_clauses = parts
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| OracleError::parse(line_no, "bad clause count"))?;
            continue;
        }
        let vars = n_vars
            .ok_or_else(|| OracleError::parse(line_no, "clause before `p cnf` header"))?;
        for token in line.split_whitespace() {
            let lit: i32 = token
                .parse()
                .map_err(|_| OracleError::parse(line_no, format!("bad literal {token:?}")))?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(OracleError::parse(line_no, "empty clause"));
                }
                clauses.push(std::mem::take(&mut current));
            } else {
                if lit.unsigned_abs() as usize > vars {
                    return Err(OracleError::parse(
                        line_no,
                        format!("literal {lit} out of range for {vars} variables"),
                    ));
                }
                current.push(lit);
            }
        }
    }
    let n_vars = n_vars.ok_or_else(|| OracleError::parse(1, "missing `p cnf` header"))?;
    if !current.is_empty() {
        return Err(OracleError::parse(0, "unterminated clause at end of input"));
    }
    if clauses.len() != n_clauses {
        return Err(OracleError::parse(
            0,
            format!("header declares {n_clauses} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(n_vars, clauses)
}

pub fn parse_dimacs_graph(text: &str) -> Result<Graph, OracleError> {
    let mut n_vertices = None;
    let mut edges = Vec::new();
    for (line_no, raw) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            if n_vertices.is_some() {
                return Err(OracleError::parse(line_no, "duplicate problem line"));
            }
            let mut parts = rest.split_whitespace();
            if parts.next() != Some("edge") {
                return Err(OracleError::parse(line_no, "expected `p edge <n> <m>`"));
            }
            n_vertices = Some(
                parts
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| OracleError::parse(line_no, "bad vertex count"))?,
            );
            // The declared edge count is not enforced: duplicates collapse.
            continue;
        }
        if let Some(rest) = line.strip_prefix('e') {
            let n = n_vertices
                .ok_or_else(|| OracleError::parse(line_no, "edge before `p edge` header"))?;
            let mut parts = rest.split_whitespace();
            let u: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| OracleError::parse(line_no, "bad edge endpoint"))?;
            let v: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| OracleError::parse(line_no, "bad edge endpoint"))?;
            if parts.next().is_some() {
                return Err(OracleError::parse(line_no, "trailing tokens on edge line"));
            }
            if u == 0 || v == 0 || u > n || v > n {
                return Err(OracleError::parse(
                    line_no,
                    format!("edge ({u}, {v}) out of range for {n} vertices"),
                ));
            }
            if u == v {
                return Err(OracleError::parse(line_no, format!("self-loop on vertex {u}")));
            }
            edges.push((u - 1, v - 1));
            continue;
        }
        return Err(OracleError::parse(
            line_no,
            format!("unrecognized line {line:?}"),
        ));
    }
    let n = n_vertices.ok_or_else(|| OracleError::parse(1, "missing `p edge` header"))?;
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cnf() {
        let f = parse_dimacs_cnf("p cnf 2 2\n1 -2 0\n2 0\n").unwrap();
        assert_eq!(f.n_vars(), 2);
        assert_eq!(f.clauses(), &[vec![1, -2], vec![2]]);
    }

    #[test]
    fn parses_graph() {
        let g = parse_dimacs_graph("p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g.n_vertices(), 3);
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(1, 2));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn graph_self_loop_rejected() {
        let err = parse_dimacs_graph("p edge 2 1\ne 1 1\n").unwrap_err();
        assert!(matches!(err, OracleError::Parse { line: 2, .. }));
    }

    #[test]
    fn cnf_clause_count_checked() {
        assert!(parse_dimacs_cnf("p cnf 2 2\n1 0\n").is_err());
    }

    #[test]
    fn comments_skipped() {
        let f = parse_dimacs_cnf("c hi\np cnf 1 1\nc mid\n1 0\n").unwrap();
        assert_eq!(f.n_clauses(), 1);
    }

    #[test]
    fn multiline_clause() {
        let f = parse_dimacs_cnf("p cnf 3 1\n1 2\n3 0\n").unwrap();
        assert_eq!(f.clauses(), &[vec![1, 2, 3]]);
    }

    #[test]
    fn roundtrips_through_writers() {
        let f = parse_dimacs_cnf("p cnf 2 2\n1 -2 0\n2 0\n").unwrap();
        assert_eq!(parse_dimacs_cnf(&f.to_dimacs()).unwrap(), f);
        let g = parse_dimacs_graph("p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(parse_dimacs_graph(&g.to_dimacs()).unwrap(), g);
    }
}
