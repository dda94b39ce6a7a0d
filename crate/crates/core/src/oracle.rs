//! Exact acyclic chromatic index of small graphs by exhaustive search.

use std::collections::VecDeque;

use crate::coloring::{Color, PartialEdgeColoring};
use crate::error::VerifyError;
use crate::graph::{Edge, Graph, Vertex};

/// Largest edge count [`brute_force_aci`] accepts.
pub const DEFAULT_MAX_EDGES: usize = 24;

/// Result of an exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    /// The acyclic chromatic index.
    pub aci: Color,
    /// A total acyclic coloring using `aci` colors.
    pub witness: PartialEdgeColoring,
    /// Search nodes visited over all palettes tried.
    pub nodes_explored: u64,
}

/// Smallest palette, at most `k_max`, admitting an acyclic edge coloring of
/// `g`. Rejects graphs with more than [`DEFAULT_MAX_EDGES`] edges.
pub fn brute_force_aci(g: &Graph, k_max: Color) -> Result<OracleReport, VerifyError> {
    brute_force_aci_with_limit(g, k_max, DEFAULT_MAX_EDGES)
}

/// [`brute_force_aci`] with an explicit edge limit.
pub fn brute_force_aci_with_limit(
    g: &Graph,
    k_max: Color,
    max_edges: usize,
) -> Result<OracleReport, VerifyError> {
    if g.m() > max_edges {
        return Err(VerifyError::SearchSpaceTooLarge {
            m: g.m(),
            limit: max_edges,
        });
    }
    let k_max = k_max.min(g.m() as Color);
    let mut search = Search::new(g, k_max);
    for k in lower_bound(g)..=k_max {
        if let Some(colors) = search.run(k) {
            let mut witness = PartialEdgeColoring::new(k);
            for (e, c) in search.order.iter().zip(colors) {
                witness.assign(*e, c);
            }
            return Ok(OracleReport {
                aci: k,
                witness,
                nodes_explored: search.nodes,
            });
        }
    }
    if g.m() == 0 {
        return Ok(OracleReport {
            aci: 0,
            witness: PartialEdgeColoring::new(0),
            nodes_explored: 0,
        });
    }
    Err(VerifyError::NoColoringWithinKMax(k_max))
}

/// Maximum degree, plus one when a component is regular of that degree and
/// the degree is at least 2: there every color class would be a perfect
/// matching of the component, and two of them form cycles.
pub fn lower_bound(g: &Graph) -> Color {
    let delta = g.max_degree();
    let regular = delta >= 2
        && g.connected_components()
            .iter()
            .any(|c| c.iter().all(|v| g.degree(v) == delta));
    delta as Color + regular as Color
}

struct Search {
    n: usize,
    /// Edges in breadth-first discovery order.
    order: Vec<Edge>,
    k: usize,
    colors: Vec<Color>,
    /// `at[v * stride + c]` is the neighbor of `v` along its edge of color
    /// `c`, or `usize::MAX`.
    at: Vec<Vertex>,
    stride: usize,
    nodes: u64,
}

impl Search {
    fn new(g: &Graph, k_max: Color) -> Search {
        let stride = k_max as usize + 1;
        Search {
            n: g.n(),
            order: bfs_edge_order(g),
            k: 0,
            colors: Vec::new(),
            at: vec![usize::MAX; g.n() * stride],
            stride,
            nodes: 0,
        }
    }

    fn run(&mut self, k: Color) -> Option<Vec<Color>> {
        self.k = k as usize;
        self.colors.clear();
        self.at.fill(usize::MAX);
        debug_assert_eq!(self.at.len(), self.n * self.stride);
        if self.extend(0, 0) {
            Some(self.colors.clone())
        } else {
            None
        }
    }

    fn extend(&mut self, i: usize, used: usize) -> bool {
        self.nodes += 1;
        if i == self.order.len() {
            return true;
        }
        let (u, v) = self.order[i].endpoints();
        let top = self.k.min(used + 1);
        for c in 1..=top {
            if self.neighbor(u, c).is_some() || self.neighbor(v, c).is_some() {
                continue;
            }
            self.place(u, v, c, v, u);
            if !self.closes_cycle(u, v, c) {
                self.colors.push(c as Color);
                if self.extend(i + 1, used.max(c)) {
                    return true;
                }
                self.colors.pop();
            }
            self.place(u, v, c, usize::MAX, usize::MAX);
        }
        false
    }

    fn neighbor(&self, v: Vertex, c: usize) -> Option<Vertex> {
        let w = self.at[v * self.stride + c];
        (w != usize::MAX).then_some(w)
    }

    fn place(&mut self, u: Vertex, v: Vertex, c: usize, at_u: Vertex, at_v: Vertex) {
        self.at[u * self.stride + c] = at_u;
        self.at[v * self.stride + c] = at_v;
    }

    /// Whether the new edge `uv` of color `c` lies on a cycle colored `c`
    /// and some `d`: walk from `u` along `d, c, d, ...` and see if it ends
    /// at `v`.
    fn closes_cycle(&self, u: Vertex, v: Vertex, c: usize) -> bool {
        for d in 1..=self.k {
            if d == c || self.neighbor(u, d).is_none() || self.neighbor(v, d).is_none() {
                continue;
            }
            let mut at = u;
            let mut step = d;
            while let Some(next) = self.neighbor(at, step) {
                if next == v && step == d {
                    return true;
                }
                if next == u {
                    break;
                }
                at = next;
                step = if step == d { c } else { d };
            }
        }
        false
    }
}

/// Edges ordered by a breadth-first search from each component's smallest
/// vertex, so each new edge touches an earlier one where possible.
fn bfs_edge_order(g: &Graph) -> Vec<Edge> {
    let mut seen_vertex = vec![false; g.n()];
    let mut seen_edge = vec![false; g.m()];
    let mut order = Vec::with_capacity(g.m());
    for root in 0..g.n() {
        if seen_vertex[root] {
            continue;
        }
        seen_vertex[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for (y, id) in g.incident(x) {
                if !seen_edge[id] {
                    seen_edge[id] = true;
                    order.push(g.edge(id));
                }
                if !seen_vertex[y] {
                    seen_vertex[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    order
}
