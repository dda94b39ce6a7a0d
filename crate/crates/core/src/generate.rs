//! Seeded random chordless graphs.
//!
//! Growth starts from a cycle and applies moves that keep the graph
//! chordless:
//!
//! - subdividing an edge;
//! - adding a path between the two neighbors of a degree-2 vertex, when
//!   those neighbors are not adjacent;
//! - hanging a new cycle off an existing vertex;
//! - adding a path between two arbitrary vertices, kept only if the result
//!   is still chordless (small graphs only, as the check is global).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};
use crate::structure;

/// Free ears are only tried while the graph has at most this many edges.
const FREE_EAR_EDGE_LIMIT: usize = 200;

struct Builder {
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    fn n(&self) -> usize {
        self.adj.len()
    }

    fn vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    fn link(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.edges.push((u, v));
    }

    fn unlink(&mut self, i: usize) {
        let (u, v) = self.edges.swap_remove(i);
        self.adj[u].retain(|&w| w != v);
        self.adj[v].retain(|&w| w != u);
    }

    /// A path from `u` to `v` through `inner` new vertices.
    fn ear(&mut self, u: Vertex, v: Vertex, inner: usize) {
        let mut prev = u;
        for _ in 0..inner {
            let w = self.vertex();
            self.link(prev, w);
            prev = w;
        }
        self.link(prev, v);
    }

    fn truncate(&mut self, n: usize, m: usize) {
        while self.edges.len() > m {
            self.unlink(self.edges.len() - 1);
        }
        self.adj.truncate(n);
    }

    fn graph(&self) -> Graph {
        Graph::from_edge_list(self.n(), self.edges.iter().copied())
            .expect("generator produced a simple graph")
    }
}

/// A connected chordless graph on about `n_target` vertices (at least 4),
/// fully determined by `seed`.
pub fn generate_chordless(n_target: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = Builder {
        adj: Vec::new(),
        edges: Vec::new(),
    };
    let base = n_target.clamp(4, 4 + rng.gen_range(0..3));
    let first = b.vertex();
    let mut prev = first;
    for _ in 1..base {
        let w = b.vertex();
        b.link(prev, w);
        prev = w;
    }
    b.link(prev, first);

    while b.n() < n_target {
        let room = n_target - b.n();
        match rng.gen_range(0..6) {
            0..=3 => {
                let i = rng.gen_range(0..b.edges.len());
                let (u, v) = b.edges[i];
                b.unlink(i);
                b.ear(u, v, 1);
            }
            4 => {
                let d = rng.gen_range(0..b.n());
                if b.adj[d].len() != 2 {
                    continue;
                }
                let (x, y) = (b.adj[d][0], b.adj[d][1]);
                if b.adj[x].contains(&y) {
                    continue;
                }
                let inner = rng.gen_range(1..=3).min(room);
                b.ear(x, y, inner);
            }
            _ => {
                if rng.gen_bool(0.5) && b.edges.len() <= FREE_EAR_EDGE_LIMIT {
                    let x = rng.gen_range(0..b.n());
                    let y = rng.gen_range(0..b.n());
                    if x == y {
                        continue;
                    }
                    let (n, m) = (b.n(), b.edges.len());
                    let inner = rng.gen_range(1..=3).min(room);
                    b.ear(x, y, inner);
                    if !structure::is_chordless(&b.graph()) {
                        b.truncate(n, m);
                    }
                } else if room >= 3 {
                    let x = rng.gen_range(0..b.n());
                    let inner = rng.gen_range(3..=5).min(room);
                    b.ear(x, x, inner);
                }
            }
        }
    }
    b.graph()
}
