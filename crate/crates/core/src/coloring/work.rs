//! Mutable edge-colored graph used by the recursive engine.
//!
//! Vertex and edge ids are stable. Edges are killed and revived in place,
//! and extra vertices and edges are pushed and popped in stack order, so a
//! recursive call always hands back exactly the graph it was given.

use crate::graph::{Edge, Graph, Vertex};

use super::{Color, PartialEdgeColoring, NONE};

const DEAD: usize = usize::MAX;

#[derive(Clone, Debug)]
pub(crate) struct WorkGraph {
    ends: Vec<(Vertex, Vertex)>,
    color: Vec<Color>,
    /// Incident `(neighbor, edge)` pairs sorted by neighbor, dead ones included.
    adj: Vec<Vec<(Vertex, usize)>>,
    degree: Vec<usize>,
    alive: Vec<usize>,
    /// Position of each edge in `alive`, or `DEAD`.
    slot: Vec<usize>,
    /// Scratch for snapshots; `usize::MAX` outside of one.
    local: Vec<usize>,
}

/// What a bichromatic walk ran into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Walk {
    /// The walk stopped; vertices in order, starting at the start vertex.
    Path(Vec<Vertex>),
    /// The walk came back to its start.
    Cycle,
}

/// An immutable copy of the alive part, relabeled by rank of work id.
pub(crate) struct Snapshot {
    pub graph: Graph,
    /// Work vertex of each snapshot vertex (increasing).
    pub verts: Vec<Vertex>,
    /// Work edge of each snapshot edge.
    pub eids: Vec<usize>,
}

impl WorkGraph {
    pub fn new(g: &Graph) -> WorkGraph {
        let m = g.m();
        let adj = (0..g.n()).map(|v| g.incident(v).collect()).collect();
        WorkGraph {
            ends: g.edges().iter().map(|e| e.endpoints()).collect(),
            color: vec![NONE; m],
            adj,
            degree: (0..g.n()).map(|v| g.degree(v)).collect(),
            alive: (0..m).collect(),
            slot: (0..m).collect(),
            local: vec![usize::MAX; g.n()],
        }
    }

    pub fn with_coloring(g: &Graph, c: &PartialEdgeColoring) -> WorkGraph {
        let mut wg = WorkGraph::new(g);
        for (e, col) in c.iter() {
            if let Some(id) = g.edge_id(e.u(), e.v()) {
                wg.color[id] = col;
            }
        }
        wg
    }

    /// Exports colors of the first `g.m()` edges, which must be the edges of
    /// the graph this was built from.
    pub fn export(&self, g: &Graph, palette: Color) -> PartialEdgeColoring {
        let mut c = PartialEdgeColoring::new(palette);
        for (id, &e) in g.edges().iter().enumerate() {
            if self.color[id] != NONE {
                c.assign(e, self.color[id]);
            }
        }
        c
    }

    pub fn ends(&self, e: usize) -> (Vertex, Vertex) {
        self.ends[e]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.degree[v]
    }

    pub fn color(&self, e: usize) -> Color {
        self.color[e]
    }

    pub fn set_color(&mut self, e: usize, c: Color) {
        self.color[e] = c;
    }

    pub fn is_alive(&self, e: usize) -> bool {
        self.slot[e] != DEAD
    }

    pub fn alive_edges(&self) -> &[usize] {
        &self.alive
    }

    /// Alive `(neighbor, edge)` pairs at `v`.
    pub fn incident(&self, v: Vertex) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.adj[v]
            .iter()
            .copied()
            .filter(|&(_, e)| self.slot[e] != DEAD)
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let list = &self.adj[u];
        let i = list.partition_point(|&(w, _)| w < v);
        list[i..]
            .iter()
            .take_while(|&&(w, _)| w == v)
            .find(|&&(_, e)| self.slot[e] != DEAD)
            .map(|&(_, e)| e)
    }

    /// The alive edge at `v` colored `c`, with its far end.
    pub fn edge_colored(&self, v: Vertex, c: Color) -> Option<(Vertex, usize)> {
        self.incident(v).find(|&(_, e)| self.color[e] == c)
    }

    pub fn has_color(&self, v: Vertex, c: Color) -> bool {
        self.edge_colored(v, c).is_some()
    }

    /// Sorted colors on alive edges at `v`.
    pub fn colors_at(&self, v: Vertex) -> Vec<Color> {
        let mut out: Vec<Color> = self
            .incident(v)
            .map(|(_, e)| self.color[e])
            .filter(|&c| c != NONE)
            .collect();
        out.sort_unstable();
        out
    }

    pub fn kill(&mut self, e: usize) {
        let pos = self.slot[e];
        debug_assert_ne!(pos, DEAD, "edge {e} already dead");
        let last = self.alive.pop().expect("alive list is empty");
        if last != e {
            self.alive[pos] = last;
            self.slot[last] = pos;
        }
        self.slot[e] = DEAD;
        let (u, v) = self.ends[e];
        self.degree[u] -= 1;
        self.degree[v] -= 1;
    }

    pub fn revive(&mut self, e: usize) {
        debug_assert_eq!(self.slot[e], DEAD, "edge {e} already alive");
        self.slot[e] = self.alive.len();
        self.alive.push(e);
        let (u, v) = self.ends[e];
        self.degree[u] += 1;
        self.degree[v] += 1;
    }

    pub fn push_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        self.degree.push(0);
        self.local.push(usize::MAX);
        self.adj.len() - 1
    }

    /// Removes the newest vertex, which must have no edges left.
    pub fn pop_vertex(&mut self) {
        let list = self.adj.pop().expect("no vertex to pop");
        debug_assert!(list.is_empty());
        self.degree.pop();
        self.local.pop();
    }

    /// Adds an alive, uncolored edge between two non-adjacent vertices.
    pub fn push_edge(&mut self, u: Vertex, v: Vertex) -> usize {
        let e = self.ends.len();
        self.ends.push((u.min(v), u.max(v)));
        self.color.push(NONE);
        self.slot.push(DEAD);
        for (x, y) in [(u, v), (v, u)] {
            let list = &mut self.adj[x];
            let i = list.partition_point(|&(w, _)| w < y);
            list.insert(i, (y, e));
        }
        self.revive(e);
        e
    }

    /// Removes the newest edge.
    pub fn pop_edge(&mut self) {
        let e = self.ends.len() - 1;
        if self.is_alive(e) {
            self.kill(e);
        }
        let (u, v) = self.ends.pop().unwrap();
        for x in [u, v] {
            let list = &mut self.adj[x];
            let i = list.iter().position(|&(_, f)| f == e).unwrap();
            list.remove(i);
        }
        self.color.pop();
        self.slot.pop();
    }

    /// Follows edges colored `first`, `second`, `first`, ... from `start`.
    pub fn walk(&self, start: Vertex, first: Color, second: Color) -> Walk {
        let mut path = vec![start];
        let (mut at, mut want, mut other) = (start, first, second);
        let mut came = usize::MAX;
        while let Some((next, e)) = self
            .incident(at)
            .find(|&(_, e)| e != came && self.color[e] == want)
        {
            if next == start {
                return Walk::Cycle;
            }
            path.push(next);
            at = next;
            came = e;
            std::mem::swap(&mut want, &mut other);
            if path.len() > self.alive.len() + 1 {
                // Only reachable if the coloring is not proper.
                return Walk::Cycle;
            }
        }
        Walk::Path(path)
    }

    /// Colors in `1..=palette` missing at both `u` and `v`.
    pub fn candidates(&self, u: Vertex, v: Vertex, palette: Color) -> Vec<Color> {
        let mut used = vec![false; palette as usize + 1];
        for x in [u, v] {
            for (_, e) in self.incident(x) {
                let c = self.color[e] as usize;
                if c <= palette as usize {
                    used[c] = true;
                }
            }
        }
        (1..=palette).filter(|&c| !used[c as usize]).collect()
    }

    /// Whether coloring the uncolored edge `uv` with the candidate `c` closes
    /// no bichromatic cycle: no color present at both ends starts a walk
    /// from `u` that ends at `v`.
    pub fn is_valid(&self, u: Vertex, v: Vertex, c: Color) -> bool {
        let at_v = self.colors_at(v);
        self.colors_at(u)
            .into_iter()
            .filter(|col| at_v.binary_search(col).is_ok())
            .all(|alpha| match self.walk(u, alpha, c) {
                Walk::Path(p) => *p.last().unwrap() != v,
                Walk::Cycle => false,
            })
    }

    pub fn smallest_valid(&self, u: Vertex, v: Vertex, palette: Color) -> Option<Color> {
        self.candidates(u, v, palette)
            .into_iter()
            .find(|&c| self.is_valid(u, v, c))
    }

    /// A color `theta` such that the edge `e` lies on a bichromatic cycle
    /// colored with `theta` and the color of `e`.
    pub fn cycle_through(&self, e: usize) -> Option<Color> {
        let zeta = self.color[e];
        if zeta == NONE {
            return None;
        }
        let (_, q) = self.ends[e];
        self.colors_at(q)
            .into_iter()
            .filter(|&theta| theta != zeta)
            .find(|&theta| self.walk(q, theta, zeta) == Walk::Cycle)
    }

    /// Rebuilds the alive part as an immutable graph.
    pub fn snapshot(&mut self) -> Snapshot {
        let mut verts: Vec<Vertex> = Vec::with_capacity(self.alive.len());
        for &e in &self.alive {
            let (u, v) = self.ends[e];
            for x in [u, v] {
                if self.local[x] == usize::MAX {
                    self.local[x] = 0;
                    verts.push(x);
                }
            }
        }
        verts.sort_unstable();
        for (i, &v) in verts.iter().enumerate() {
            self.local[v] = i;
        }
        let mut pairs: Vec<(Edge, usize)> = self
            .alive
            .iter()
            .map(|&e| {
                let (u, v) = self.ends[e];
                (Edge::new(self.local[u], self.local[v]), e)
            })
            .collect();
        pairs.sort_unstable();
        for &v in &verts {
            self.local[v] = usize::MAX;
        }
        let (edges, eids) = pairs.into_iter().unzip();
        Snapshot {
            graph: Graph::from_sorted_unique(verts.len(), edges),
            verts,
            eids,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cycle, h7};

    #[test]
    fn kill_revive_and_stack_edges() {
        let g = h7();
        let mut wg = WorkGraph::new(&g);
        let e01 = g.edge_id(0, 1).unwrap();
        wg.kill(e01);
        assert_eq!(wg.degree(0), 2);
        assert_eq!(wg.edge_between(0, 1), None);
        let w = wg.push_vertex();
        let f = wg.push_edge(3, w);
        assert_eq!(wg.edge_between(w, 3), Some(f));
        assert_eq!(wg.snapshot().graph.m(), 9);
        wg.pop_edge();
        wg.pop_vertex();
        wg.revive(e01);
        let snap = wg.snapshot();
        assert_eq!(snap.graph, g);
        assert_eq!(snap.eids, (0..9).collect::<Vec<_>>());
    }

    #[test]
    fn walks_and_validity() {
        // 0-1-2-3-4-5-0 colored 1,2,1,2,1 with (0,5) open.
        let g = cycle(6);
        let mut wg = WorkGraph::new(&g);
        let col = |wg: &mut WorkGraph, a, b, c| {
            let e = g.edge_id(a, b).unwrap();
            wg.set_color(e, c);
        };
        col(&mut wg, 0, 1, 1);
        col(&mut wg, 1, 2, 2);
        col(&mut wg, 2, 3, 1);
        col(&mut wg, 3, 4, 2);
        col(&mut wg, 4, 5, 1);
        assert_eq!(wg.walk(0, 1, 2), Walk::Path(vec![0, 1, 2, 3, 4, 5]));
        assert_eq!(wg.candidates(0, 5, 3), vec![2, 3]);
        assert!(!wg.is_valid(0, 5, 2));
        assert!(wg.is_valid(0, 5, 3));
        assert_eq!(wg.smallest_valid(0, 5, 3), Some(3));
        col(&mut wg, 0, 5, 2);
        let e05 = g.edge_id(0, 5).unwrap();
        assert_eq!(wg.walk(0, 1, 2), Walk::Cycle);
        assert_eq!(wg.cycle_through(e05), Some(1));
    }
}
