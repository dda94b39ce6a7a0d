//! Checks for proper and acyclic edge colorings and linear forests.
//!
//! These verifiers share no code with the coloring engine.

use std::collections::HashMap;

use crate::coloring::{Color, PartialEdgeColoring};
use crate::error::VerifyError;
use crate::graph::{Edge, Graph, Vertex};

/// Fails with [`VerifyError::EdgeMismatch`] if `c` colors a non-edge and
/// with [`VerifyError::Unassigned`] if some edge of `g` has no color.
pub fn verify_total(g: &Graph, c: &PartialEdgeColoring) -> Result<(), VerifyError> {
    if let Some((e, _)) = c.iter().find(|(e, _)| !in_graph(g, *e)) {
        return Err(VerifyError::EdgeMismatch(e));
    }
    match g.edges().iter().find(|&&e| c.get(e).is_none()) {
        Some(&e) => Err(VerifyError::Unassigned(e)),
        None => Ok(()),
    }
}

fn in_graph(g: &Graph, e: Edge) -> bool {
    e.v() < g.n() && g.has_edge(e.u(), e.v())
}

/// Succeeds when no two colored edges sharing an endpoint have the same
/// color; otherwise names the lexicographically first such pair found.
pub fn verify_proper(g: &Graph, c: &PartialEdgeColoring) -> Result<(), VerifyError> {
    let mut seen: HashMap<(Vertex, Color), Edge> = HashMap::new();
    for (e, col) in c.iter() {
        if !in_graph(g, e) {
            return Err(VerifyError::EdgeMismatch(e));
        }
        for x in [e.u(), e.v()] {
            if let Some(&f) = seen.get(&(x, col)) {
                return Err(VerifyError::NotProper(f, e));
            }
            seen.insert((x, col), e);
        }
    }
    Ok(())
}

/// Succeeds when `c` is proper and no two color classes together contain a
/// cycle. Otherwise returns the offending pair or cycle.
pub fn verify_acyclic(g: &Graph, c: &PartialEdgeColoring) -> Result<(), VerifyError> {
    verify_proper(g, c)?;
    let mut classes: Vec<Vec<Edge>> = Vec::new();
    for (e, col) in c.iter() {
        let i = col as usize;
        if classes.len() <= i {
            classes.resize(i + 1, Vec::new());
        }
        classes[i].push(e);
    }
    let mut dsu = Dsu::new(g.n());
    for i in 1..classes.len() {
        for j in i + 1..classes.len() {
            if classes[i].is_empty() || classes[j].is_empty() {
                continue;
            }
            let both = || classes[i].iter().chain(&classes[j]);
            let mut closing = None;
            for &e in both() {
                if !dsu.union(e.u(), e.v()) {
                    closing = Some(e);
                    break;
                }
            }
            for &e in both() {
                dsu.reset(e.u());
                dsu.reset(e.v());
            }
            if let Some(e) = closing {
                return Err(VerifyError::BichromaticCycle {
                    first: i as Color,
                    second: j as Color,
                    cycle: trace_cycle(both(), e),
                });
            }
        }
    }
    Ok(())
}

/// The cycle through `closing` in a graph of maximum degree 2.
fn trace_cycle<'a>(edges: impl Iterator<Item = &'a Edge>, closing: Edge) -> Vec<Vertex> {
    let mut adj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    for e in edges {
        adj.entry(e.u()).or_default().push(e.v());
        adj.entry(e.v()).or_default().push(e.u());
    }
    let start = closing.u();
    let mut cycle = vec![start];
    let (mut prev, mut at) = (start, closing.v());
    while at != start {
        cycle.push(at);
        let next = adj[&at]
            .iter()
            .copied()
            .find(|&w| w != prev)
            .unwrap_or(start);
        (prev, at) = (at, next);
    }
    // Start at the smallest vertex, heading to its smaller neighbor.
    let low = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap_or(0);
    cycle.rotate_left(low);
    if cycle.len() > 2 && cycle[cycle.len() - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    cycle
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }

    fn reset(&mut self, x: usize) {
        self.parent[x] = x;
    }
}

/// Whether `edges` are edges of `g` forming a disjoint union of paths.
pub fn verify_linear_forest(g: &Graph, edges: &[Edge]) -> bool {
    let mut degree = vec![0u8; g.n()];
    let mut dsu = Dsu::new(g.n());
    for &e in edges {
        if !in_graph(g, e) {
            return false;
        }
        for x in [e.u(), e.v()] {
            degree[x] += 1;
            if degree[x] > 2 {
                return false;
            }
        }
        if !dsu.union(e.u(), e.v()) {
            return false;
        }
    }
    true
}

/// Edge classes that partition a graph's edges into linear forests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestPartition {
    pub classes: Vec<Vec<Edge>>,
}

impl ForestPartition {
    pub fn count(&self) -> usize {
        self.classes.len()
    }
}

/// Groups the colors of a total acyclic coloring as `{1, 2}, {3, 4}, ...`;
/// each group is a linear forest, giving `ceil(palette / 2)` classes.
pub fn extract_linear_forests(
    g: &Graph,
    c: &PartialEdgeColoring,
) -> Result<ForestPartition, VerifyError> {
    verify_total(g, c)?;
    verify_acyclic(g, c)?;
    let count = c.palette().div_ceil(2) as usize;
    let mut classes = vec![Vec::new(); count];
    for (e, col) in c.iter() {
        classes[(col as usize - 1) / 2].push(e);
    }
    debug_assert!(classes.iter().all(|class| verify_linear_forest(g, class)));
    Ok(ForestPartition { classes })
}
