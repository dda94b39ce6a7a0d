//! Proper 2-cutsets, blocks with marker vertices, and the search for a split
//! whose block is 2-sparse and not a complete bipartite `K(2,t)`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::DecompositionError;
use crate::graph::{Edge, Graph, Vertex, VertexSet};
use crate::structure;

/// A split `(X, Y, a, b)` of the proper 2-cutset `{a, b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub a: Vertex,
    pub b: Vertex,
    pub x: VertexSet,
    pub y: VertexSet,
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &VertexSet| {
            s.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(
            f,
            "{} {} | {} | {}",
            self.a,
            self.b,
            join(&self.x),
            join(&self.y)
        )
    }
}

/// `G[X + {a, b}]` plus a marker vertex adjacent to exactly `a` and `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub graph: Graph,
    /// Always the last vertex of `graph`.
    pub marker: Vertex,
    pub a_img: Vertex,
    pub b_img: Vertex,
    /// Original vertex of every non-marker block vertex.
    pub back_map: Vec<Vertex>,
}

/// Components of `G - {a, b}`, sorted into the classes used by the split
/// search. Each list is in smallest-member order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComponentClassification {
    /// Single-vertex components.
    pub c1: Vec<VertexSet>,
    /// Larger components whose block is 2-sparse and whose neighbors of `a`
    /// and `b` all have degree 2.
    pub c2: Vec<VertexSet>,
    /// Larger components with a 2-sparse block and some neighbor of `a` or
    /// `b` of degree at least 3.
    pub c3: Vec<VertexSet>,
    /// Components whose block is not 2-sparse.
    pub rejected: Vec<VertexSet>,
}

fn check_pair(g: &Graph, a: Vertex, b: Vertex) -> Result<(), DecompositionError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(DecompositionError::BadPartition(format!(
            "cutset vertices coincide at {a}"
        )));
    }
    if g.has_edge(a, b) {
        return Err(DecompositionError::AdjacentPair(a, b));
    }
    Ok(())
}

/// Connected components of `g - {a, b}` in smallest-member order.
pub fn components_off_pair(
    g: &Graph,
    a: Vertex,
    b: Vertex,
) -> Result<Vec<VertexSet>, DecompositionError> {
    check_pair(g, a, b)?;
    Ok(components_without(g, a, b))
}

fn components_without(g: &Graph, a: Vertex, b: Vertex) -> Vec<VertexSet> {
    let mut seen = vec![false; g.n()];
    seen[a] = true;
    seen[b] = true;
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        let mut members = Vec::new();
        while let Some(v) = queue.pop_front() {
            members.push(v);
            for &w in g.neighbors(v) {
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

/// Builds the block `G_X(a, b)`. Block vertices are `X + {a, b}` relabeled
/// by rank, followed by the marker.
pub fn make_block(
    g: &Graph,
    x: &VertexSet,
    a: Vertex,
    b: Vertex,
) -> Result<Block, DecompositionError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if x.is_empty() {
        return Err(DecompositionError::BadPartition("X is empty".into()));
    }
    if a == b || x.contains(a) || x.contains(b) {
        return Err(DecompositionError::BadPartition(
            "X must avoid two distinct cutset vertices".into(),
        ));
    }
    if let Some(v) = x.iter().find(|&v| v >= g.n()) {
        g.check_vertex(v)?;
    }
    let mut keep = x.clone();
    keep.insert(a);
    keep.insert(b);
    let (inner, back_map) = g.induced_subgraph(&keep);
    let rank = |v: Vertex| back_map.binary_search(&v).unwrap();
    let (a_img, b_img) = (rank(a), rank(b));
    let marker = inner.n();
    let mut edges: Vec<Edge> = inner.edges().to_vec();
    edges.push(Edge::new(a_img, marker));
    edges.push(Edge::new(b_img, marker));
    edges.sort_unstable();
    Ok(Block {
        graph: Graph::from_sorted_unique(marker + 1, edges),
        marker,
        a_img,
        b_img,
        back_map,
    })
}

fn is_induced_path(g: &Graph, keep: &VertexSet) -> bool {
    let (sub, _) = g.induced_subgraph(keep);
    sub.is_connected() && sub.m() + 1 == sub.n() && sub.max_degree() <= 2
}

fn has_path_within(g: &Graph, keep: &VertexSet, from: Vertex, to: Vertex) -> bool {
    let mut seen = VertexSet::from([from]);
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            return true;
        }
        for &w in g.neighbors(v) {
            if keep.contains(w) && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    false
}

/// Checks every defining condition of a split of a proper 2-cutset.
pub fn is_proper_split(g: &Graph, s: &Split) -> bool {
    let n = g.n();
    if s.a >= n || s.b >= n || s.a == s.b || g.has_edge(s.a, s.b) {
        return false;
    }
    if s.x.is_empty() || s.y.is_empty() || !s.x.is_disjoint(&s.y) {
        return false;
    }
    let pair = VertexSet::from([s.a, s.b]);
    if !s.x.is_disjoint(&pair) || !s.y.is_disjoint(&pair) {
        return false;
    }
    if s.x.len() + s.y.len() + 2 != n || s.x.iter().chain(s.y.iter()).any(|v| v >= n) {
        return false;
    }
    if s.x
        .iter()
        .any(|v| g.neighbors(v).iter().any(|&w| s.y.contains(w)))
    {
        return false;
    }
    [&s.x, &s.y].into_iter().all(|side| {
        let keep = side.union(&pair);
        has_path_within(g, &keep, s.a, s.b) && !is_induced_path(g, &keep)
    })
}

/// `Some(t)` when the block is `K(2,t)` with `t >= 3` and `{a, b}` as the
/// side of size two.
pub fn is_k2t_block(blk: &Block) -> Option<usize> {
    let g = &blk.graph;
    if g.has_edge(blk.a_img, blk.b_img) {
        return None;
    }
    let middle: Vec<Vertex> = (0..g.n())
        .filter(|&v| v != blk.a_img && v != blk.b_img)
        .collect();
    let pair = {
        let mut p = [blk.a_img, blk.b_img];
        p.sort_unstable();
        p
    };
    let t = middle.len();
    (t >= 3 && middle.iter().all(|&v| g.neighbors(v) == pair)).then_some(t)
}

/// Counts the quantities the split search needs for `G_X(a, b)` without
/// building the block. `in_x` marks the members of `X`.
struct BlockShape {
    deg_a: usize,
    deg_b: usize,
    two_sparse: bool,
    k2t: bool,
    /// Smallest neighbor of `a` in `X` that is not adjacent to `b`.
    free_neighbor_of_a: Option<Vertex>,
}

fn block_shape(g: &Graph, x: &VertexSet, in_x: &[bool], a: Vertex, b: Vertex) -> BlockShape {
    let deg_a = g.neighbors(a).iter().filter(|&&w| in_x[w]).count() + 1;
    let deg_b = g.neighbors(b).iter().filter(|&&w| in_x[w]).count() + 1;
    let block_degree = |v: Vertex| {
        if v == a {
            deg_a
        } else if v == b {
            deg_b
        } else {
            g.degree(v)
        }
    };
    let mut two_sparse = true;
    let mut k2t = x.len() >= 2;
    'outer: for v in x.iter() {
        let nbrs = g.neighbors(v);
        if nbrs.len() != 2 || !nbrs.contains(&a) || !nbrs.contains(&b) {
            k2t = false;
        }
        if block_degree(v) <= 2 {
            continue;
        }
        for &w in nbrs {
            if (w == a || w == b || in_x[w]) && block_degree(w) > 2 {
                two_sparse = false;
                break 'outer;
            }
        }
    }
    let free_neighbor_of_a = g
        .neighbors(a)
        .iter()
        .copied()
        .find(|&w| in_x[w] && !g.has_edge(w, b));
    BlockShape {
        deg_a,
        deg_b,
        two_sparse,
        k2t: k2t && !g.has_edge(a, b),
        free_neighbor_of_a,
    }
}

/// Sorts the components of `G - {a, b}` into the four classes.
pub fn classify_components(
    g: &Graph,
    a: Vertex,
    b: Vertex,
) -> Result<ComponentClassification, DecompositionError> {
    check_pair(g, a, b)?;
    let comps = components_without(g, a, b);
    let mut in_x = vec![false; g.n()];
    let mut out = ComponentClassification::default();
    for c in comps {
        let class = classify_one(g, &c, &mut in_x, a, b);
        match class {
            Class::Trivial => out.c1.push(c),
            Class::Quiet => out.c2.push(c),
            Class::Loud => out.c3.push(c),
            Class::Rejected => out.rejected.push(c),
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Class {
    Trivial,
    Quiet,
    Loud,
    Rejected,
}

fn classify_one(g: &Graph, c: &VertexSet, in_x: &mut [bool], a: Vertex, b: Vertex) -> Class {
    if c.len() == 1 {
        return Class::Trivial;
    }
    for v in c.iter() {
        in_x[v] = true;
    }
    let shape = block_shape(g, c, in_x, a, b);
    let loud = [a, b]
        .iter()
        .any(|&s| g.neighbors(s).iter().any(|&w| in_x[w] && g.degree(w) >= 3));
    for v in c.iter() {
        in_x[v] = false;
    }
    if !shape.two_sparse {
        Class::Rejected
    } else if loud {
        Class::Loud
    } else {
        Class::Quiet
    }
}

/// What the coloring step needs from a split beyond properness: a 2-sparse
/// block that is not `K(2,t)`, `deg(a) >= 3` there, a neighbor of `a` in `X`
/// not adjacent to `b`, and, when `deg(b) = 2`, the structure
/// `G_{X - y}(a, y)` is `K(2,t)` for the unique neighbor `y` of `b` in `X`.
pub fn split_violations(g: &Graph, s: &Split) -> Vec<String> {
    let mut out = Vec::new();
    if !is_proper_split(g, s) {
        out.push("not a split of a proper 2-cutset".to_string());
        return out;
    }
    let blk = match make_block(g, &s.x, s.a, s.b) {
        Ok(blk) => blk,
        Err(e) => {
            out.push(e.to_string());
            return out;
        }
    };
    if !structure::is_two_sparse(&blk.graph) {
        out.push("block is not 2-sparse".into());
    }
    if is_k2t_block(&blk).is_some() {
        out.push("block is K(2,t)".into());
    }
    if blk.graph.degree(blk.a_img) < 3 {
        out.push("a has block degree below 3".into());
    }
    if !g
        .neighbors(s.a)
        .iter()
        .any(|&w| s.x.contains(w) && !g.has_edge(w, s.b))
    {
        out.push("every neighbor of a in X is adjacent to b".into());
    }
    if blk.graph.degree(blk.b_img) == 2 {
        let y = g.neighbors(s.b).iter().copied().find(|&w| s.x.contains(w));
        let mut rest = s.x.clone();
        let ok = y.is_some_and(|y| {
            rest.remove(y);
            !rest.is_empty()
                && make_block(g, &rest, s.a, y)
                    .ok()
                    .and_then(|inner| is_k2t_block(&inner))
                    .is_some()
        });
        if !ok {
            out.push("b has block degree 2 but X - y is not K(2,t) over (a, y)".into());
        }
    }
    out
}

/// Scratch state for the split search, sized to one graph.
struct Search<'g> {
    g: &'g Graph,
    in_x: Vec<bool>,
}

impl<'g> Search<'g> {
    fn shape(&mut self, x: &VertexSet, a: Vertex, b: Vertex) -> BlockShape {
        for v in x.iter() {
            self.in_x[v] = true;
        }
        let shape = block_shape(self.g, x, &self.in_x, a, b);
        for v in x.iter() {
            self.in_x[v] = false;
        }
        shape
    }

    fn is_k2t(&mut self, x: &VertexSet, a: Vertex, b: Vertex) -> bool {
        self.shape(x, a, b).k2t
    }

    /// Full acceptance test for a candidate `(X, a, b)`; `X` must be a union
    /// of components of `G - {a, b}`.
    fn accept(&mut self, x: &VertexSet, a: Vertex, b: Vertex) -> Option<Split> {
        let g = self.g;
        if x.is_empty() || x.len() + 2 >= g.n() {
            return None;
        }
        let shape = self.shape(x, a, b);
        if !shape.two_sparse || shape.k2t || shape.deg_a < 3 || shape.free_neighbor_of_a.is_none() {
            return None;
        }
        if shape.deg_b == 2 {
            let y = g.neighbors(b).iter().copied().find(|&w| x.contains(w))?;
            let mut rest = x.clone();
            rest.remove(y);
            if rest.is_empty() || !self.is_k2t(&rest, a, y) {
                return None;
            }
        }
        let y: VertexSet = (0..g.n())
            .filter(|&v| v != a && v != b && !x.contains(v))
            .collect();
        let split = Split {
            a,
            b,
            x: x.clone(),
            y,
        };
        is_proper_split(g, &split).then_some(split)
    }

    fn neighbors_in(&self, v: Vertex, x: &VertexSet) -> Vec<Vertex> {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| x.contains(w))
            .collect()
    }

    /// `a` has at least two neighbors in `X` and `b` exactly one. Walks `b`
    /// into `X` until the far end has two neighbors in what remains.
    fn refine(&mut self, x: &VertexSet, a: Vertex, b: Vertex) -> Option<Split> {
        let (mut x, mut b) = (x.clone(), b);
        loop {
            let inner = *self.neighbors_in(b, &x).first()?;
            let mut rest = x.clone();
            rest.remove(inner);
            if rest.is_empty() {
                return None;
            }
            match self.neighbors_in(inner, &rest).len() {
                0 => return None,
                1 => {
                    x = rest;
                    b = inner;
                }
                _ if self.is_k2t(&rest, a, inner) => return self.accept(&x, a, b),
                _ => return self.accept(&rest, a, inner),
            }
        }
    }

    /// Every refinement step of the walk in `refine`, each checked.
    fn refine_exhaustive(&mut self, x: &VertexSet, a: Vertex, b: Vertex) -> Option<Split> {
        let (mut x, mut b) = (x.clone(), b);
        loop {
            if let Some(s) = self.accept(&x, a, b) {
                return Some(s);
            }
            let nb = self.neighbors_in(b, &x);
            if nb.len() != 1 {
                return None;
            }
            x.remove(nb[0]);
            b = nb[0];
            if x.is_empty() {
                return None;
            }
        }
    }

    /// The case analysis for one non-adjacent pair `p < q`.
    fn scan_pair(&mut self, p: Vertex, q: Vertex) -> Option<Split> {
        let g = self.g;
        let comps = components_without(g, p, q);
        if comps.len() < 2 {
            return None;
        }
        let classes: Vec<Class> = comps
            .iter()
            .map(|c| classify_one(g, c, &mut self.in_x, p, q))
            .collect();
        let of = |want: &[Class]| -> Vec<&VertexSet> {
            comps
                .iter()
                .zip(&classes)
                .filter(|(_, k)| want.contains(k))
                .map(|(c, _)| c)
                .collect()
        };
        let quiet = of(&[Class::Quiet]);
        let small = of(&[Class::Trivial, Class::Quiet]);
        let loud = of(&[Class::Loud]);
        let count =
            |v: Vertex, c: &VertexSet| g.neighbors(v).iter().filter(|&&w| c.contains(w)).count();

        if !quiet.is_empty() && small.len() >= 2 {
            for &first in &quiet {
                for &second in &small {
                    if first != second {
                        if let Some(s) = self.accept(&first.union(second), p, q) {
                            return Some(s);
                        }
                    }
                }
            }
            return None;
        }
        if let Some(&c) = quiet.first() {
            let (np, nq) = (count(p, c), count(q, c));
            return match (np >= 2, nq >= 2) {
                (true, true) => self.accept(c, p, q),
                (false, false) => None,
                (true, false) => self.refine(c, p, q),
                (false, true) => self.refine(c, q, p),
            };
        }
        for c in loud {
            let (np, nq) = (count(p, c), count(q, c));
            let found = match (np >= 2, nq >= 2) {
                (true, true) => self.accept(c, p, q),
                (false, false) => None,
                (true, false) => self.refine(c, p, q),
                (false, true) => self.refine(c, q, p),
            };
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Broader search for one pair: every component alone and every two
    /// components together, both role assignments, every refinement step.
    fn scan_pair_exhaustive(&mut self, p: Vertex, q: Vertex) -> Option<Split> {
        let g = self.g;
        let comps: Vec<VertexSet> = components_without(g, p, q)
            .into_iter()
            .filter(|c| classify_one(g, c, &mut self.in_x, p, q) != Class::Rejected)
            .collect();
        if comps.len() < 2 {
            return None;
        }
        for c in &comps {
            for (a, b) in [(p, q), (q, p)] {
                if let Some(s) = self.refine_exhaustive(c, a, b) {
                    return Some(s);
                }
            }
        }
        for (i, c) in comps.iter().enumerate() {
            for d in &comps[i + 1..] {
                let x = c.union(d);
                for (a, b) in [(p, q), (q, p)] {
                    if let Some(s) = self.accept(&x, a, b) {
                        return Some(s);
                    }
                }
            }
        }
        None
    }
}

/// Whether `v` has degree at least 3 and two or more neighbors of degree 2:
/// a necessary condition for `v` to play the role of `a`.
fn can_anchor(g: &Graph, v: Vertex) -> bool {
    g.degree(v) >= 3 && g.neighbors(v).iter().filter(|&&w| g.degree(w) == 2).count() >= 2
}

/// Non-adjacent pairs `p < q` in lexicographic order such that `{p, q}`
/// separates the graph and one of them could anchor a split.
fn candidate_pairs(g: &Graph) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
    (0..g.n()).flat_map(move |p| {
        let (is_cut, _) = g.biconnected(Some(p));
        let p_anchor = can_anchor(g, p);
        (p + 1..g.n())
            .filter(move |&q| is_cut[q] && !g.has_edge(p, q) && (p_anchor || can_anchor(g, q)))
            .map(move |q| (p, q))
            .collect::<Vec<_>>()
    })
}

/// Finds a split whose block is 2-sparse, not `K(2,t)`, and has
/// `deg(a) >= 3`; when `deg(b) = 2` the part of `X` beyond `b`'s neighbor is
/// `K(2,t)`. Pairs are scanned in lexicographic order.
pub fn find_special_split(g: &Graph) -> Result<Split, DecompositionError> {
    let fail = |why: &str| Err(DecompositionError::PreconditionViolated(why.to_string()));
    if g.n() < 3 || !g.is_connected() {
        return fail("graph is not 2-connected");
    }
    let (is_cut, _) = g.biconnected(None);
    if is_cut.iter().any(|&c| c) {
        return fail("graph has a cut vertex");
    }
    if structure::is_two_sparse(g) {
        return fail("graph is 2-sparse");
    }
    if g.edges()
        .iter()
        .any(|e| g.degree(e.u()) == 2 && g.degree(e.v()) == 2)
    {
        return fail("an edge joins two vertices of degree 2");
    }
    if let Some(chord) = structure::find_chord(g) {
        return fail(&format!("{chord} is a chord"));
    }
    find_special_split_unchecked(g)
}

/// [`find_special_split`] without the precondition checks.
pub(crate) fn find_special_split_unchecked(g: &Graph) -> Result<Split, DecompositionError> {
    let mut search = Search {
        g,
        in_x: vec![false; g.n()],
    };
    let pairs: Vec<(Vertex, Vertex)> = candidate_pairs(g).collect();
    for &(p, q) in &pairs {
        if let Some(s) = search.scan_pair(p, q) {
            return Ok(s);
        }
    }
    for &(p, q) in &pairs {
        if let Some(s) = search.scan_pair_exhaustive(p, q) {
            return Ok(s);
        }
    }
    Err(DecompositionError::NoSplitFound)
}

/// Largest number of components of `X` that [`smaller_splits`] enumerates.
pub const AUDIT_COMPONENT_LIMIT: usize = 16;

/// Qualifying splits on the same cutset whose `X` is a proper subset of
/// `s.x`, found by trying every union of components inside `s.x`. `None`
/// when `s.x` has more than [`AUDIT_COMPONENT_LIMIT`] components.
pub fn smaller_splits(g: &Graph, s: &Split) -> Option<Vec<Split>> {
    let inside: Vec<VertexSet> = components_without(g, s.a, s.b)
        .into_iter()
        .filter(|c| c.iter().all(|v| s.x.contains(v)))
        .collect();
    if inside.len() > AUDIT_COMPONENT_LIMIT {
        return None;
    }
    let mut found = Vec::new();
    for mask in 1u32..(1 << inside.len()) - 1 {
        let x: VertexSet = inside
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .flat_map(|(_, c)| c.iter())
            .collect();
        let y = (0..g.n())
            .filter(|&v| v != s.a && v != s.b && !x.contains(v))
            .collect();
        let candidate = Split {
            a: s.a,
            b: s.b,
            x,
            y,
        };
        if split_violations(g, &candidate).is_empty() {
            found.push(candidate);
        }
    }
    Some(found)
}
