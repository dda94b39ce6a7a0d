//! Chord detection and the structural predicates built on it.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::StructureError;
use crate::graph::{DisjointPaths, Edge, Graph, Vertex};

/// Everything the structural predicates can say about one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub chordless: bool,
    /// Smallest chord, when there is one.
    pub chord_witness: Option<Edge>,
    pub two_sparse: bool,
    /// Smallest edge with both endpoints of degree at least 3.
    pub two_sparse_witness: Option<Edge>,
    /// Peeling order when every subgraph has a vertex of degree at most 2.
    pub degeneracy_order: Option<Vec<Vertex>>,
}

pub fn analyze(g: &Graph) -> StructureReport {
    let chord_witness = find_chord(g);
    let two_sparse_witness = find_dense_edge(g);
    StructureReport {
        chordless: chord_witness.is_none(),
        chord_witness,
        two_sparse: two_sparse_witness.is_none(),
        two_sparse_witness,
        degeneracy_order: degeneracy_order_2(g),
    }
}

/// Whether `e` is a chord: its endpoints lie on a common cycle of `g - e`.
pub fn is_chord(g: &Graph, e: Edge) -> Result<bool, crate::error::GraphError> {
    let id = g.require_edge(e)?;
    Ok(chord_by_id(g, &mut DisjointPaths::new(g), id))
}

fn chord_by_id(g: &Graph, scratch: &mut DisjointPaths, id: usize) -> bool {
    let (u, v) = g.edge(id).endpoints();
    // Two disjoint u-v paths besides the edge itself need two more edges at
    // each endpoint.
    if g.degree(u) < 3 || g.degree(v) < 3 {
        return false;
    }
    g.two_disjoint_paths_without(scratch, u, v, id)
}

/// Smallest chord of `g`, if any.
pub fn find_chord(g: &Graph) -> Option<Edge> {
    let mut scratch = DisjointPaths::new(g);
    (0..g.m())
        .find(|&id| chord_by_id(g, &mut scratch, id))
        .map(|id| g.edge(id))
}

pub fn is_chordless(g: &Graph) -> bool {
    find_chord(g).is_none()
}

/// Smallest edge whose endpoints both have degree at least 3.
pub fn find_dense_edge(g: &Graph) -> Option<Edge> {
    g.edges()
        .iter()
        .copied()
        .find(|e| g.degree(e.u()) >= 3 && g.degree(e.v()) >= 3)
}

/// Every edge has an endpoint of degree at most 2.
pub fn is_two_sparse(g: &Graph) -> bool {
    find_dense_edge(g).is_none()
}

/// Repeatedly removes the smallest vertex of current degree at most 2.
/// Returns the removal order, or `None` if some subgraph has minimum
/// degree 3.
pub fn degeneracy_order_2(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut heap: BinaryHeap<Reverse<Vertex>> =
        (0..n).filter(|&v| degree[v] <= 2).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = heap.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
                if degree[w] == 2 {
                    heap.push(Reverse(w));
                }
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Checks `m <= 2n - 3` for a connected chordless graph on at least two
/// vertices.
pub fn chordless_edge_bound_holds(g: &Graph) -> Result<bool, StructureError> {
    if g.n() < 2 {
        return Err(StructureError::PreconditionViolated(
            "needs at least two vertices".into(),
        ));
    }
    if !g.is_connected() {
        return Err(StructureError::PreconditionViolated(
            "graph is disconnected".into(),
        ));
    }
    if let Some(chord) = find_chord(g) {
        return Err(StructureError::PreconditionViolated(format!(
            "{chord} is a chord"
        )));
    }
    Ok(g.m() <= 2 * g.n() - 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{complete, complete_bipartite, cycle, graph, h7, path};
    use proptest::prelude::*;

    /// Chord test by cycle enumeration: `uv` is a chord iff some simple path
    /// from `u` to `v` of length at least 2 in `g - uv` has another simple
    /// path from `u` to `v` internally disjoint from it.
    fn chord_by_paths(g: &Graph, e: Edge) -> bool {
        let (u, v) = e.endpoints();
        let mut paths: Vec<Vec<Vertex>> = Vec::new();
        let mut stack = vec![vec![u]];
        while let Some(p) = stack.pop() {
            let last = *p.last().unwrap();
            for &w in g.neighbors(last) {
                if p.contains(&w) || (last == u && w == v) {
                    continue;
                }
                let mut q = p.clone();
                q.push(w);
                if w == v {
                    paths.push(q);
                } else {
                    stack.push(q);
                }
            }
        }
        paths.iter().enumerate().any(|(i, p)| {
            paths[i + 1..].iter().any(|q| {
                p[1..p.len() - 1]
                    .iter()
                    .all(|x| !q[1..q.len() - 1].contains(x))
            })
        })
    }

    #[test]
    fn small_families() {
        assert!(is_chordless(&h7()));
        assert!(is_chordless(&cycle(5)));
        assert!(is_chordless(&complete_bipartite(2, 4)));
        assert_eq!(find_chord(&complete(4)), Some(Edge::new(0, 1)));
        assert_eq!(find_chord(&complete_bipartite(3, 3)), Some(Edge::new(0, 3)));
        // A 4-cycle with one diagonal.
        let diamond = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]);
        assert_eq!(find_chord(&diamond), Some(Edge::new(0, 2)));
        assert!(is_chord(&diamond, Edge::new(0, 2)).unwrap());
        assert!(!is_chord(&diamond, Edge::new(0, 1)).unwrap());
    }

    #[test]
    fn two_sparse_witnesses() {
        assert_eq!(find_dense_edge(&h7()), Some(Edge::new(0, 1)));
        assert!(is_two_sparse(&complete_bipartite(2, 5)));
        assert!(is_two_sparse(&cycle(9)));
        assert!(!is_two_sparse(&complete(4)));
    }

    #[test]
    fn degeneracy() {
        let order = degeneracy_order_2(&h7()).unwrap();
        assert_eq!(order.len(), 7);
        assert_eq!(order[0], 3);
        assert!(degeneracy_order_2(&complete(4)).is_none());
        assert!(degeneracy_order_2(&complete_bipartite(3, 3)).is_none());
    }

    #[test]
    fn report_for_h7() {
        let r = analyze(&h7());
        assert!(r.chordless && !r.two_sparse);
        assert_eq!(r.two_sparse_witness, Some(Edge::new(0, 1)));
        assert!(r.degeneracy_order.is_some());
    }

    #[test]
    fn edge_bound() {
        assert_eq!(chordless_edge_bound_holds(&h7()), Ok(true));
        // K_{2,t} attains the bound.
        let k = complete_bipartite(2, 6);
        assert_eq!(k.m(), 2 * k.n() - 4);
        assert_eq!(chordless_edge_bound_holds(&path(2)), Ok(true));
        assert!(chordless_edge_bound_holds(&complete(4)).is_err());
        assert!(chordless_edge_bound_holds(&graph(1, &[])).is_err());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (2..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
                let edges = pairs.iter().zip(mask).filter(|(_, b)| *b).map(|(p, _)| *p);
                Graph::from_edge_list(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn chord_test_matches_path_enumeration(g in arb_graph(7)) {
            for &e in g.edges() {
                prop_assert_eq!(is_chord(&g, e).unwrap(), chord_by_paths(&g, e));
            }
        }

        #[test]
        fn chordless_graphs_are_two_degenerate(g in arb_graph(8)) {
            if is_chordless(&g) {
                prop_assert!(degeneracy_order_2(&g).is_some());
            }
        }

        #[test]
        fn two_sparse_implies_chordless(g in arb_graph(8)) {
            if is_two_sparse(&g) {
                prop_assert!(is_chordless(&g));
            }
        }

        #[test]
        fn connected_chordless_edge_bound(g in arb_graph(8)) {
            if g.is_connected() && is_chordless(&g) {
                prop_assert_eq!(chordless_edge_bound_holds(&g), Ok(true));
            }
        }
    }
}
