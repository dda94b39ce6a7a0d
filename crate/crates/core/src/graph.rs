//! Simple undirected graphs in compressed adjacency form.
//!
//! Vertices are `0..n`. Edges are stored sorted lexicographically, so an
//! edge's id is its rank in [`Graph::edges`]. Every adjacency list is sorted
//! and carries the id of the edge it came from.

use std::collections::VecDeque;
use std::fmt;

use crate::error::GraphError;

pub type Vertex = usize;

/// An undirected edge with its endpoints normalized so that `u() < v()`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    /// Builds the edge between `a` and `b` in either order.
    pub fn new(a: Vertex, b: Vertex) -> Edge {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(self) -> Vertex {
        self.u
    }

    pub fn v(self) -> Vertex {
        self.v
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }

    pub fn contains(self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`. Panics if `x` is not an endpoint.
    pub fn other(self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else if x == self.v {
            self.u
        } else {
            panic!("{x} is not an endpoint of {self}")
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from((a, b): (Vertex, Vertex)) -> Edge {
        Edge::new(a, b)
    }
}

/// A sorted, duplicate-free set of vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    members: Vec<Vertex>,
}

impl VertexSet {
    pub fn new() -> VertexSet {
        VertexSet::default()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.members
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<Vertex> {
        self.members.first().copied()
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.members.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.members.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.members.binary_search(&v) {
            Ok(pos) => {
                self.members.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        !self.iter().any(|v| other.contains(v))
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> VertexSet {
        let mut members: Vec<Vertex> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(vs: [Vertex; N]) -> VertexSet {
        vs.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Finite, simple, undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
    edge_ids: Vec<usize>,
    edges: Vec<Edge>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated edges and endpoints
    /// outside `0..n`.
    pub fn from_edge_list<I, E>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut list: Vec<Edge> = Vec::new();
        for e in edges {
            let e = e.into();
            if e.u == e.v {
                return Err(GraphError::SelfLoop(e.u));
            }
            if e.v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: e.v, n });
            }
            list.push(e);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0]));
        }
        Ok(Graph::from_sorted_unique(n, list))
    }

    /// `edges` must be sorted, duplicate-free and in range.
    pub(crate) fn from_sorted_unique(n: usize, edges: Vec<Edge>) -> Graph {
        let mut degree = vec![0usize; n];
        for e in &edges {
            degree[e.u] += 1;
            degree[e.v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0; 2 * edges.len()];
        let mut edge_ids = vec![0; 2 * edges.len()];
        // Scanning edges in lexicographic order fills each list in sorted
        // order: for vertex w, neighbors below w arrive first (as `u` of edges
        // (u, w), ordered by u), then neighbors above w (ordered by v).
        for (id, e) in edges.iter().enumerate() {
            for (x, y) in [(e.u, e.v), (e.v, e.u)] {
                targets[fill[x]] = y;
                edge_ids[fill[x]] = id;
                fill[x] += 1;
            }
        }
        Graph {
            offsets,
            targets,
            edge_ids,
            edges,
        }
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted_unique(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// All edges in lexicographic order; an edge's index is its id.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    /// `(neighbor, edge id)` pairs at `v`, sorted by neighbor.
    pub fn incident(&self, v: Vertex) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        let range = self.offsets[v]..self.offsets[v + 1];
        self.targets[range.clone()]
            .iter()
            .copied()
            .zip(self.edge_ids[range].iter().copied())
    }

    /// Degree of `v`. Panics if `v` is out of range.
    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn checked_degree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.degree(v))
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Id of the edge `ab`, if present.
    pub fn edge_id(&self, a: Vertex, b: Vertex) -> Option<usize> {
        if a >= self.n() || b >= self.n() {
            return None;
        }
        let (x, y) = if self.degree(a) <= self.degree(b) {
            (a, b)
        } else {
            (b, a)
        };
        let base = self.offsets[x];
        self.neighbors(x)
            .binary_search(&y)
            .ok()
            .map(|i| self.edge_ids[base + i])
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edge_id(a, b).is_some()
    }

    pub(crate) fn require_edge(&self, e: Edge) -> Result<usize, GraphError> {
        self.edge_id(e.u, e.v).ok_or(GraphError::EdgeNotPresent(e))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut members = Vec::new();
            while let Some(v) = queue.pop_front() {
                members.push(v);
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(members.into_iter().collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    /// Cut vertices (ascending) and blocks of a connected graph. Each block is
    /// its sorted edge list; blocks are ordered by their smallest edge.
    pub fn cut_vertices_and_blocks(&self) -> Result<(Vec<Vertex>, Vec<Vec<Edge>>), GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let (is_cut, blocks) = self.biconnected(None);
        let cuts = (0..self.n()).filter(|&v| is_cut[v]).collect();
        Ok((cuts, blocks))
    }

    /// Iterative Hopcroft-Tarjan over every component of the graph with
    /// `skip` (if any) removed. Returns per-vertex cut flags and the blocks.
    pub(crate) fn biconnected(&self, skip: Option<Vertex>) -> (Vec<bool>, Vec<Vec<Edge>>) {
        let n = self.n();
        const UNSEEN: usize = usize::MAX;
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut edge_stack: Vec<usize> = Vec::new();
        let mut blocks: Vec<Vec<Edge>> = Vec::new();
        // Frame: (vertex, edge id used to enter it, next adjacency cursor).
        let mut stack: Vec<(Vertex, usize, usize)> = Vec::new();
        let mut time = 0;
        for root in 0..n {
            if disc[root] != UNSEEN || Some(root) == skip {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            stack.push((root, usize::MAX, self.offsets[root]));
            while let Some(&mut (v, via, ref mut cursor)) = stack.last_mut() {
                if *cursor < self.offsets[v + 1] {
                    let w = self.targets[*cursor];
                    let id = self.edge_ids[*cursor];
                    *cursor += 1;
                    if id == via || Some(w) == skip {
                        continue;
                    }
                    if disc[w] == UNSEEN {
                        edge_stack.push(id);
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, id, self.offsets[w]));
                    } else if disc[w] < disc[v] {
                        edge_stack.push(id);
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(parent, _, _)) = stack.last() {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] >= disc[parent] {
                            if parent != root {
                                is_cut[parent] = true;
                            }
                            let mut block = Vec::new();
                            while let Some(id) = edge_stack.pop() {
                                block.push(self.edges[id]);
                                if id == via {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            blocks.push(block);
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        (is_cut, blocks)
    }

    /// Contracts `e = xy` into a single vertex. The larger endpoint is removed
    /// and later vertices shift down by one; `mapping[old]` gives each old
    /// vertex's new id (both endpoints map to the same vertex).
    pub fn contract_edge(&self, e: Edge) -> Result<(Graph, Vec<Vertex>), GraphError> {
        self.require_edge(e)?;
        let (keep, gone) = e.endpoints();
        let mapping: Vec<Vertex> = (0..self.n())
            .map(|v| match v {
                v if v == gone => keep,
                v if v > gone => v - 1,
                v => v,
            })
            .collect();
        let mut list: Vec<Edge> = self
            .edges
            .iter()
            .filter(|&&f| f != e)
            .map(|f| Edge::new(mapping[f.u], mapping[f.v]))
            .collect();
        list.sort_unstable();
        list.dedup();
        Ok((Graph::from_sorted_unique(self.n() - 1, list), mapping))
    }

    /// Removes `e`, keeping every vertex.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        let id = self.require_edge(e)?;
        let list = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != id)
            .map(|(_, &f)| f)
            .collect();
        Ok(Graph::from_sorted_unique(self.n(), list))
    }

    /// Removes the vertices in `gone` and relabels the rest by rank;
    /// `mapping[old]` is `None` for removed vertices.
    pub fn delete_vertices(&self, gone: &VertexSet) -> (Graph, Vec<Option<Vertex>>) {
        let mut mapping = vec![None; self.n()];
        let mut next = 0;
        for (v, slot) in mapping.iter_mut().enumerate() {
            if !gone.contains(v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let list = self
            .edges
            .iter()
            .filter_map(|f| Some(Edge::new(mapping[f.u]?, mapping[f.v]?)))
            .collect();
        (Graph::from_sorted_unique(next, list), mapping)
    }

    /// The subgraph induced by `keep`, relabeled by rank. The returned vector
    /// maps each new vertex back to its old id.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<Vertex>) {
        let mut mapping = vec![usize::MAX; self.n()];
        for (i, v) in keep.iter().enumerate() {
            mapping[v] = i;
        }
        let mut list = Vec::new();
        for v in keep.iter() {
            for &w in self.neighbors(v) {
                if w > v && mapping[w] != usize::MAX {
                    list.push(Edge::new(mapping[v], mapping[w]));
                }
            }
        }
        list.sort_unstable();
        (
            Graph::from_sorted_unique(keep.len(), list),
            keep.as_slice().to_vec(),
        )
    }

    pub fn is_bipartite(&self) -> bool {
        self.odd_cycle().is_none()
    }

    /// An odd cycle as a closed vertex sequence (first vertex not repeated),
    /// or `None` when the graph is bipartite.
    pub fn odd_cycle(&self) -> Option<Vec<Vertex>> {
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        parent[w] = v;
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        let (mut x, mut y) = (v, w);
                        let mut left = vec![x];
                        let mut right = vec![y];
                        while x != y {
                            if depth[x] >= depth[y] {
                                x = parent[x];
                                left.push(x);
                            } else {
                                y = parent[y];
                                right.push(y);
                            }
                        }
                        right.pop();
                        left.extend(right.into_iter().rev());
                        return Some(left);
                    }
                }
            }
        }
        None
    }

    /// True when two internally vertex-disjoint `u`-`v` paths exist. The edge
    /// `uv` itself, when present, counts as one path.
    pub fn two_disjoint_paths_exist(&self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(true);
        }
        Ok(DisjointPaths::new(self).at_least_two(self, u, v, None))
    }

    /// Same as [`two_disjoint_paths_exist`](Self::two_disjoint_paths_exist)
    /// in the graph minus the edge with id `skip`.
    pub(crate) fn two_disjoint_paths_without(
        &self,
        scratch: &mut DisjointPaths,
        u: Vertex,
        v: Vertex,
        skip: usize,
    ) -> bool {
        scratch.at_least_two(self, u, v, Some(skip))
    }
}

/// Scratch space for vertex-disjoint path counting by unit-capacity flow on
/// the split graph (each vertex becomes an in-node and an out-node).
pub(crate) struct DisjointPaths {
    through: Vec<bool>,
    /// Flow on the arc u -> v of edge id `e` is at `2e` when u < v, else `2e + 1`.
    arc: Vec<bool>,
    /// Predecessor of each split node in the current search: node index and
    /// the kind of step that reached it.
    pred: Vec<(usize, Step)>,
    seen: Vec<u32>,
    stamp: u32,
    touched_arcs: Vec<usize>,
    touched_vertices: Vec<usize>,
}

#[derive(Clone, Copy)]
enum Step {
    None,
    Through,
    Cancel,
    Forward(usize),
    Backward(usize),
}

impl DisjointPaths {
    pub(crate) fn new(g: &Graph) -> DisjointPaths {
        DisjointPaths {
            through: vec![false; g.n()],
            arc: vec![false; 2 * g.m()],
            pred: vec![(0, Step::None); 2 * g.n()],
            seen: vec![0; 2 * g.n()],
            stamp: 0,
            touched_arcs: Vec::new(),
            touched_vertices: Vec::new(),
        }
    }

    fn arc_index(g: &Graph, from: Vertex, id: usize) -> usize {
        if from == g.edges[id].u {
            2 * id
        } else {
            2 * id + 1
        }
    }

    fn at_least_two(&mut self, g: &Graph, s: Vertex, t: Vertex, skip: Option<usize>) -> bool {
        let found = self.augment(g, s, t, skip) && self.augment(g, s, t, skip);
        for &a in &self.touched_arcs {
            self.arc[a] = false;
        }
        for &v in &self.touched_vertices {
            self.through[v] = false;
        }
        self.touched_arcs.clear();
        self.touched_vertices.clear();
        found
    }

    /// One BFS augmentation from `s`'s out-node to `t`'s in-node.
    fn augment(&mut self, g: &Graph, s: Vertex, t: Vertex, skip: Option<usize>) -> bool {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.seen.iter_mut().for_each(|x| *x = 0);
            self.stamp = 1;
        }
        let stamp = self.stamp;
        // Node 2v is v's in-node, 2v + 1 its out-node.
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut queue = VecDeque::new();
        self.seen[source] = stamp;
        queue.push_back(source);
        let mut reached = false;
        while let Some(node) = queue.pop_front() {
            if node == sink {
                reached = true;
                break;
            }
            let v = node / 2;
            let mut visit = |next: usize, step: Step, queue: &mut VecDeque<usize>| {
                if self.seen[next] != stamp {
                    self.seen[next] = stamp;
                    self.pred[next] = (node, step);
                    queue.push_back(next);
                }
            };
            if node % 2 == 0 {
                // In-node: pass through v, or undo flow that entered v.
                if !self.through[v] && v != s && v != t {
                    visit(node + 1, Step::Through, &mut queue);
                }
                for (w, id) in g.incident(v) {
                    if Some(id) != skip && self.arc[Self::arc_index(g, w, id)] {
                        visit(2 * w + 1, Step::Backward(id), &mut queue);
                    }
                }
            } else {
                if self.through[v] {
                    visit(node - 1, Step::Cancel, &mut queue);
                }
                for (w, id) in g.incident(v) {
                    if Some(id) != skip && w != s && !self.arc[Self::arc_index(g, v, id)] {
                        visit(2 * w, Step::Forward(id), &mut queue);
                    }
                }
            }
        }
        if !reached {
            return false;
        }
        let mut node = sink;
        while node != source {
            let (prev, step) = self.pred[node];
            match step {
                Step::Through => {
                    self.through[node / 2] = true;
                    self.touched_vertices.push(node / 2);
                }
                Step::Cancel => self.through[prev / 2] = false,
                Step::Forward(id) => {
                    let a = Self::arc_index(g, prev / 2, id);
                    self.arc[a] = true;
                    self.touched_arcs.push(a);
                }
                Step::Backward(id) => {
                    let a = Self::arc_index(g, node / 2, id);
                    self.arc[a] = false;
                }
                Step::None => unreachable!("source has no predecessor"),
            }
            node = prev;
        }
        true
    }
}
