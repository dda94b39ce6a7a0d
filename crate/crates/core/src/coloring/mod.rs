//! Partial edge colorings, the bichromatic-path toolkit, and the optimal
//! acyclic edge coloring algorithm for chordless graphs.
//!
//! The free functions here take a [`Graph`] and a [`PartialEdgeColoring`]
//! and never mutate their inputs. Internally everything runs on a mutable
//! work graph; see [`color_graph`] for the full algorithm.

mod engine;
mod extend;
mod work;

use std::collections::BTreeMap;
use std::fmt;

use crate::decomposition::{split_violations, Split};
use crate::error::ColoringError;
use crate::graph::{Edge, Graph, Vertex};
use crate::structure;

use engine::Engine;
use work::{Walk, WorkGraph};

/// Colors are `1..=palette`.
pub type Color = u32;

/// Marks an uncolored edge inside the engine.
pub(crate) const NONE: Color = 0;

/// Graphs with more edges than this are colored on a helper thread with a
/// large stack; recursion depth grows linearly with the edge count.
const INLINE_EDGE_LIMIT: usize = 400;
const ENGINE_STACK_BYTES: usize = 512 << 20;

/// An assignment of colors from `1..=palette` to some edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartialEdgeColoring {
    palette: Color,
    colors: BTreeMap<Edge, Color>,
}

impl PartialEdgeColoring {
    pub fn new(palette: Color) -> PartialEdgeColoring {
        PartialEdgeColoring {
            palette,
            colors: BTreeMap::new(),
        }
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    pub fn get(&self, e: Edge) -> Option<Color> {
        self.colors.get(&e).copied()
    }

    /// Sets the color of `e`, returning the previous one.
    pub fn assign(&mut self, e: Edge, c: Color) -> Option<Color> {
        self.colors.insert(e, c)
    }

    pub fn unassign(&mut self, e: Edge) -> Option<Color> {
        self.colors.remove(&e)
    }

    /// Number of colored edges.
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Colored edges in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.colors.iter().map(|(&e, &c)| (e, c))
    }

    /// Number of distinct colors in use.
    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<Color> = self.colors.values().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Whether every edge of `g` is colored.
    pub fn is_total_for(&self, g: &Graph) -> bool {
        g.edges().iter().all(|e| self.colors.contains_key(e))
    }
}

/// A maximal path whose edges alternate between two colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BichromaticPath {
    pub vertices: Vec<Vertex>,
    /// Color of the first edge.
    pub start_color: Color,
    /// The other color.
    pub other_color: Color,
}

impl BichromaticPath {
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices.windows(2).map(|w| Edge::new(w[0], w[1]))
    }
}

impl fmt::Display for BichromaticPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "({}, {}) {}",
            self.start_color,
            self.other_color,
            vs.join("-")
        )
    }
}

fn require_edge(g: &Graph, a: Vertex, b: Vertex) -> Result<Edge, ColoringError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    let e = Edge::new(a, b);
    if g.has_edge(a, b) {
        Ok(e)
    } else {
        Err(ColoringError::EdgeNotPresent(e))
    }
}

fn precondition(msg: impl Into<String>) -> ColoringError {
    ColoringError::PreconditionViolated(msg.into())
}

/// Colors on colored edges at `u`, ascending.
pub fn color_sets(
    c: &PartialEdgeColoring,
    g: &Graph,
    u: Vertex,
) -> Result<Vec<Color>, ColoringError> {
    g.check_vertex(u)?;
    let mut out: Vec<Color> = g
        .neighbors(u)
        .iter()
        .filter_map(|&w| c.get(Edge::new(u, w)))
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Colors at `b` other than the color of `ab`.
pub fn f_ab(
    c: &PartialEdgeColoring,
    g: &Graph,
    a: Vertex,
    b: Vertex,
) -> Result<Vec<Color>, ColoringError> {
    let e = require_edge(g, a, b)?;
    let own = c.get(e);
    Ok(color_sets(c, g, b)?
        .into_iter()
        .filter(|&col| Some(col) != own)
        .collect())
}

/// The maximal walk from `start` along edges colored `alpha`, `beta`,
/// `alpha`, ...; `None` when `start` has no `alpha` edge. Fails if the walk
/// closes into a bichromatic cycle.
pub fn maximal_bichromatic_path(
    c: &PartialEdgeColoring,
    g: &Graph,
    start: Vertex,
    alpha: Color,
    beta: Color,
) -> Result<Option<BichromaticPath>, ColoringError> {
    g.check_vertex(start)?;
    if alpha == beta {
        return Err(precondition("path colors must differ"));
    }
    let wg = WorkGraph::with_coloring(g, c);
    match wg.walk(start, alpha, beta) {
        Walk::Cycle => Err(ColoringError::BichromaticCycle(start)),
        Walk::Path(p) if p.len() == 1 => Ok(None),
        Walk::Path(vertices) => Ok(Some(BichromaticPath {
            vertices,
            start_color: alpha,
            other_color: beta,
        })),
    }
}

/// Whether the `(alpha, beta)` walk from `a` starting with `alpha` ends at
/// `b` with an `alpha` edge, for adjacent `a` and `b`.
pub fn critical_path_exists(
    c: &PartialEdgeColoring,
    g: &Graph,
    alpha: Color,
    beta: Color,
    a: Vertex,
    b: Vertex,
) -> Result<bool, ColoringError> {
    require_edge(g, a, b)?;
    let wg = WorkGraph::with_coloring(g, c);
    Ok(match wg.walk(a, alpha, beta) {
        Walk::Path(p) => p.len() >= 2 && p.len() % 2 == 0 && p.last() == Some(&b),
        Walk::Cycle => false,
    })
}

fn require_uncolored(c: &PartialEdgeColoring, g: &Graph, e: Edge) -> Result<(), ColoringError> {
    require_edge(g, e.u(), e.v())?;
    match c.get(e) {
        Some(_) => Err(ColoringError::EdgeAlreadyColored(e)),
        None => Ok(()),
    }
}

/// Palette colors used on no edge adjacent to the uncolored edge `e`.
pub fn candidate_colors(
    c: &PartialEdgeColoring,
    g: &Graph,
    e: Edge,
) -> Result<Vec<Color>, ColoringError> {
    require_uncolored(c, g, e)?;
    Ok(WorkGraph::with_coloring(g, c).candidates(e.u(), e.v(), c.palette()))
}

/// Whether `gamma` is a candidate for `e` whose assignment closes no
/// bichromatic cycle.
pub fn is_valid(
    c: &PartialEdgeColoring,
    g: &Graph,
    e: Edge,
    gamma: Color,
) -> Result<bool, ColoringError> {
    let candidates = candidate_colors(c, g, e)?;
    Ok(candidates.contains(&gamma) && WorkGraph::with_coloring(g, c).is_valid(e.u(), e.v(), gamma))
}

/// Swaps the colors of `ui` and `uj`.
pub fn color_exchange(
    c: &PartialEdgeColoring,
    g: &Graph,
    u: Vertex,
    i: Vertex,
    j: Vertex,
) -> Result<PartialEdgeColoring, ColoringError> {
    let ui = require_edge(g, u, i)?;
    let uj = require_edge(g, u, j)?;
    let (ci, cj) = match (c.get(ui), c.get(uj)) {
        (Some(ci), Some(cj)) => (ci, cj),
        _ => return Err(precondition("both exchanged edges must be colored")),
    };
    let mut out = c.clone();
    out.assign(ui, cj);
    out.assign(uj, ci);
    Ok(out)
}

/// Whether swapping the colors of `ui` and `uj` leaves a proper, acyclic
/// coloring, assuming `c` was one. Only cycles through the two swapped
/// edges are examined.
pub fn exchange_is_valid(
    c: &PartialEdgeColoring,
    g: &Graph,
    u: Vertex,
    i: Vertex,
    j: Vertex,
) -> Result<bool, ColoringError> {
    let swapped = color_exchange(c, g, u, i, j)?;
    let wg = WorkGraph::with_coloring(g, &swapped);
    for (x, y) in [(u, i), (u, j)] {
        let id = g.edge_id(x, y).unwrap();
        let col = wg.color(id);
        let clash = |v: Vertex| wg.incident(v).filter(|&(_, e)| wg.color(e) == col).count() > 1;
        if clash(x) || clash(y) || wg.cycle_through(id).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn engine_for(g: &Graph, c: &PartialEdgeColoring) -> Engine {
    Engine {
        wg: WorkGraph::with_coloring(g, c),
        k: c.palette(),
    }
}

fn check_palette(c: &PartialEdgeColoring) -> Result<(), ColoringError> {
    match c.iter().find(|&(_, col)| col == 0 || col > c.palette()) {
        Some((e, col)) => Err(precondition(format!(
            "{e} has color {col} outside the palette 1..={}",
            c.palette()
        ))),
        None => Ok(()),
    }
}

/// Colors the open edge `path.vertices[0] s` by recoloring along `path` as
/// needed. `path` must be the maximal bichromatic path from its first
/// vertex, alternating degree-2 vertices with vertices whose neighbors all
/// have degree 2; its first vertex has neighbors exactly `path[1]` and `s`.
pub fn extend_by_lemma4(
    c: &PartialEdgeColoring,
    g: &Graph,
    path: &BichromaticPath,
    s: Vertex,
) -> Result<PartialEdgeColoring, ColoringError> {
    g.check_vertex(s)?;
    check_palette(c)?;
    let vs = &path.vertices;
    if vs.len() < 2 {
        return Err(precondition("path has no edge"));
    }
    if vs.contains(&s) {
        return Err(precondition("far endpoint lies on the path"));
    }
    let v1 = vs[0];
    let open = require_edge(g, v1, s)?;
    require_uncolored(c, g, open)?;
    let mut nbrs = g.neighbors(v1).to_vec();
    nbrs.sort_unstable();
    let mut want = vec![vs[1], s];
    want.sort_unstable();
    if nbrs != want {
        return Err(precondition(
            "first path vertex must have exactly the next vertex and s as neighbors",
        ));
    }
    if g.degree(s) < 3 {
        return Err(precondition("far endpoint needs degree at least 3"));
    }
    for (i, &v) in vs.iter().enumerate() {
        let ok = if i % 2 == 0 {
            g.degree(v) == 2
        } else {
            g.neighbors(v).iter().all(|&w| g.degree(w) == 2)
        };
        if !ok {
            return Err(precondition(format!(
                "vertex {v} breaks the path's degree pattern"
            )));
        }
    }
    let found = maximal_bichromatic_path(c, g, v1, path.start_color, path.other_color)?;
    if found.as_ref() != Some(path) {
        return Err(precondition(
            "path is not the maximal bichromatic path from its first vertex",
        ));
    }
    let mut engine = engine_for(g, c);
    engine.extend_along_path(vs, path.start_color, path.other_color, s)?;
    Ok(engine.wg.export(g, c.palette()))
}

fn two_connected(g: &Graph) -> bool {
    g.n() >= 3
        && g.is_connected()
        && g.cut_vertices_and_blocks()
            .is_ok_and(|(cuts, _)| cuts.is_empty())
}

fn check_rest_colored(c: &PartialEdgeColoring, g: &Graph, open: Edge) -> Result<(), ColoringError> {
    check_palette(c)?;
    if let Some(&e) = g.edges().iter().find(|&&e| e != open && c.get(e).is_none()) {
        return Err(precondition(format!("{e} is uncolored")));
    }
    Ok(())
}

/// Colors the one open edge `xy` of a 2-sparse graph, `x` of degree 2.
pub fn color_two_sparse_edge(
    c: &PartialEdgeColoring,
    g: &Graph,
    x: Vertex,
    y: Vertex,
) -> Result<PartialEdgeColoring, ColoringError> {
    let open = require_edge(g, x, y)?;
    require_uncolored(c, g, open)?;
    if !structure::is_two_sparse(g) {
        return Err(precondition("graph is not 2-sparse"));
    }
    if !two_connected(g) {
        return Err(precondition("graph is not 2-connected"));
    }
    if g.degree(x) != 2 {
        return Err(precondition(format!("vertex {x} does not have degree 2")));
    }
    if let Some(e) = g
        .edges()
        .iter()
        .find(|e| g.degree(e.u()) == 2 && g.degree(e.v()) == 2)
    {
        return Err(precondition(format!("{e} joins two vertices of degree 2")));
    }
    check_rest_colored(c, g, open)?;
    let mut engine = engine_for(g, c);
    engine.extend_two_sparse(x, y)?;
    Ok(engine.wg.export(g, c.palette()))
}

/// Colors the open edge `xa` of a graph whose other edges are colored, for
/// a qualifying split and a degree-2 neighbor `x` of `a` in `X` that is not
/// adjacent to `b`. May recolor the graph beyond `a` when the palette has
/// exactly three colors.
pub fn color_split_edge(
    c: &PartialEdgeColoring,
    g: &Graph,
    split: &Split,
    x: Vertex,
) -> Result<PartialEdgeColoring, ColoringError> {
    let open = require_edge(g, x, split.a)?;
    require_uncolored(c, g, open)?;
    if let Some(why) = split_violations(g, split).first() {
        return Err(precondition(why.clone()));
    }
    if !split.x.contains(x) || g.degree(x) != 2 || g.has_edge(x, split.b) {
        return Err(precondition(format!(
            "{x} is not a free degree-2 neighbor of a in X"
        )));
    }
    if let Some(e) = g
        .edges()
        .iter()
        .find(|e| g.degree(e.u()) == 2 && g.degree(e.v()) == 2)
    {
        return Err(precondition(format!("{e} joins two vertices of degree 2")));
    }
    check_rest_colored(c, g, open)?;
    let mut engine = engine_for(g, c);
    engine.extend_split(split.a, split.b, x)?;
    Ok(engine.wg.export(g, c.palette()))
}

/// Bijection on `1..=k` sending the colors in `mine` to the smallest colors
/// outside `used`, in order, and the remaining colors to what is left, in
/// order. Index 0 is unused.
pub(crate) fn renaming(k: usize, used: &[bool], mine: &[bool]) -> Option<Vec<Color>> {
    let mut rename = vec![0; k + 1];
    let mut taken = vec![false; k + 1];
    let mut free = (1..=k).filter(|&c| !used[c]);
    for c in (1..=k).filter(|&c| mine[c]) {
        let t = free.next()?;
        rename[c] = t as Color;
        taken[t] = true;
    }
    let mut rest = (1..=k).filter(|&c| !taken[c]);
    for c in (1..=k).filter(|&c| !mine[c]) {
        rename[c] = rest.next()? as Color;
    }
    Some(rename)
}

/// Unions colorings of blocks that meet at `x`, renaming each block's
/// palette after the first so that all edges at `x` get distinct colors.
pub fn merge_at_cut_vertex(
    parts: &[PartialEdgeColoring],
    x: Vertex,
) -> Result<PartialEdgeColoring, ColoringError> {
    let k = parts.iter().map(|p| p.palette()).max().unwrap_or(0);
    let mut out = PartialEdgeColoring::new(k);
    let mut used = vec![false; k as usize + 1];
    for part in parts {
        check_palette(part)?;
        let mut mine = vec![false; k as usize + 1];
        for (e, col) in part.iter() {
            if e.contains(x) {
                mine[col as usize] = true;
            }
        }
        let needed = used.iter().chain(&mine).filter(|&&b| b).count();
        let rename = renaming(k as usize, &used, &mine).ok_or(ColoringError::PaletteTooSmall {
            palette: k,
            needed: needed as Color,
        })?;
        for (e, col) in part.iter() {
            let col = rename[col as usize];
            if out.assign(e, col).is_some() {
                return Err(precondition(format!("{e} appears in two blocks")));
            }
            if e.contains(x) {
                used[col as usize] = true;
            }
        }
    }
    Ok(out)
}

/// Number of colors [`color_graph`] uses: per component, its maximum degree,
/// or 3 for a cycle; the largest over all components.
pub fn optimal_palette(g: &Graph) -> Color {
    engine::palette_for(g)
}

/// An acyclic edge coloring of a chordless graph with the fewest colors.
pub fn color_graph(g: &Graph) -> Result<PartialEdgeColoring, ColoringError> {
    if let Some(witness) = structure::find_chord(g) {
        return Err(ColoringError::NotChordless { witness });
    }
    let k = optimal_palette(g);
    let mut engine = Engine {
        wg: WorkGraph::new(g),
        k,
    };
    if g.m() > INLINE_EDGE_LIMIT {
        engine = std::thread::scope(|scope| {
            std::thread::Builder::new()
                .stack_size(ENGINE_STACK_BYTES)
                .spawn_scoped(scope, move || engine.solve().map(|()| engine))
                .expect("failed to spawn the coloring thread")
                .join()
                .unwrap_or_else(|panic| std::panic::resume_unwind(panic))
        })?;
    } else {
        engine.solve()?;
    }
    Ok(engine.wg.export(g, k))
}

#[cfg(test)]
mod tests;
