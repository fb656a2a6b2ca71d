use std::collections::BTreeSet;

use crate::error::OracleError;

pub const INDEPENDENT_SET_BUDGET: usize = 24;
pub const CHROMATIC_BUDGET: usize = 12;

/// A simple undirected graph on vertices `0..n_vertices`, no self-loops,
/// edges stored normalized as `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n_vertices: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new<I>(n_vertices: usize, edges: I) -> Result<Self, OracleError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut normalized = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(OracleError::Invalid(format!("self-loop on vertex {u}")));
            }
            if u >= n_vertices || v >= n_vertices {
                return Err(OracleError::Invalid(format!(
                    "edge ({u}, {v}) out of range for {n_vertices} vertices"
                )));
            }
            normalized.insert((u.min(v), u.max(v)));
        }
        Ok(Graph {
            n_vertices,
            edges: normalized,
        })
    }

    pub fn edgeless(n_vertices: usize) -> Self {
        Graph {
            n_vertices,
            edges: BTreeSet::new(),
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Per-vertex adjacency bit masks; only valid while `n_vertices <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n_vertices <= 64);
        let mut masks = vec![0u64; self.n_vertices];
        for &(u, v) in &self.edges {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        masks
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n_vertices, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }
}

/// Exact maximum independent set by branch and bound over vertex masks.
/// Returns the size and a witness; the witness is the first maximum set in
/// the include-lowest-vertex-first search order, so output is deterministic.
pub fn max_independent_set_brute(g: &Graph) -> Result<(usize, Vec<usize>), OracleError> {
    let p = g.n_vertices();
    if p > INDEPENDENT_SET_BUDGET {
        return Err(OracleError::Budget {
            what: format!("independent set on {p} vertices"),
            cap: INDEPENDENT_SET_BUDGET,
        });
    }
    if p == 0 {
        return Ok((0, Vec::new()));
    }
    let adj = g.adjacency_masks();
    let mut best_mask = 0u64;
    let mut best_size = 0usize;

    fn recurse(
        adj: &[u64],
        candidates: u64,
        chosen: u64,
        chosen_size: usize,
        best_mask: &mut u64,
        best_size: &mut usize,
    ) {
        if chosen_size + candidates.count_ones() as usize <= *best_size {
            return;
        }
        if candidates == 0 {
            if chosen_size > *best_size {
                *best_size = chosen_size;
                *best_mask = chosen;
            }
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        let v_bit = 1u64 << v;
        recurse(
            adj,
            candidates & !v_bit & !adj[v],
            chosen | v_bit,
            chosen_size + 1,
            best_mask,
            best_size,
        );
        recurse(adj, candidates & !v_bit, chosen, chosen_size, best_mask, best_size);
    }

    let all = if p == 64 { u64::MAX } else { (1u64 << p) - 1 };
    recurse(&adj, all, 0, 0, &mut best_mask, &mut best_size);
    let witness: Vec<usize> = (0..p).filter(|&v| best_mask >> v & 1 == 1).collect();
    Ok((best_size, witness))
}

/// Exact chromatic number by iterative deepening on the number of colors,
/// with a proper coloring witness (color of each vertex, colors `0..chi`).
/// Vertices are colored in index order and each may only open one fresh
/// color, which prunes color permutations.
pub fn chromatic_number_brute(g: &Graph) -> Result<(usize, Vec<usize>), OracleError> {
    let p = g.n_vertices();
    if p > CHROMATIC_BUDGET {
        return Err(OracleError::Budget {
            what: format!("chromatic number on {p} vertices"),
            cap: CHROMATIC_BUDGET,
        });
    }
    if p == 0 {
        return Ok((0, Vec::new()));
    }

    fn try_color(
        g: &Graph,
        colors: &mut Vec<usize>,
        vertex: usize,
        used: usize,
        limit: usize,
    ) -> bool {
        if vertex == g.n_vertices() {
            return true;
        }
        let max_color = (used + 1).min(limit);
        for color in 0..max_color {
            if (0..vertex).any(|u| colors[u] == color && g.has_edge(u, vertex)) {
                continue;
            }
            colors[vertex] = color;
            let next_used = used.max(color + 1);
            if try_color(g, colors, vertex + 1, next_used, limit) {
                return true;
            }
        }
        false
    }

    for limit in 1..=p {
        let mut colors = vec![0; p];
        if try_color(g, &mut colors, 0, 0, limit) {
            let chi = colors.iter().max().map_or(0, |&c| c + 1);
            return Ok((chi, colors));
        }
    }
    unreachable!("p colors always suffice")
}
