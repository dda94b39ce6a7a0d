//! Small named graphs shared by unit tests.

use crate::graph::{Graph, Vertex};

pub(crate) fn graph(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
    Graph::from_edge_list(n, edges.iter().copied()).unwrap()
}

/// The 7-vertex 2-connected chordless graph used throughout the tests.
pub(crate) fn h7() -> Graph {
    graph(
        7,
        &[
            (0, 1),
            (0, 3),
            (0, 4),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
            (1, 5),
            (1, 6),
        ],
    )
}

pub(crate) fn cycle(n: usize) -> Graph {
    Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub(crate) fn path(n: usize) -> Graph {
    Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub(crate) fn complete(n: usize) -> Graph {
    Graph::from_edge_list(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
}

pub(crate) fn complete_bipartite(s: usize, t: usize) -> Graph {
    Graph::from_edge_list(s + t, (0..s).flat_map(|i| (s..s + t).map(move |j| (i, j)))).unwrap()
}
