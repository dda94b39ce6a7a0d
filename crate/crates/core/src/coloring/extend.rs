//! Single-edge extension steps: each takes a work graph whose alive edges
//! are all acyclically colored except one, and colors that edge, recoloring
//! a few others if it has to.

use crate::error::ColoringError;
use crate::graph::Vertex;

use super::engine::Engine;
use super::work::Walk;
use super::{Color, NONE};

fn internal(msg: impl Into<String>) -> ColoringError {
    ColoringError::Internal(msg.into())
}

/// Smallest color in `1..=palette` outside `avoid`.
fn smallest_outside(palette: Color, avoid: &[Color]) -> Option<Color> {
    (1..=palette).find(|c| !avoid.contains(c))
}

impl Engine {
    fn edge(&self, u: Vertex, v: Vertex) -> Result<usize, ColoringError> {
        self.wg
            .edge_between(u, v)
            .ok_or_else(|| internal(format!("expected an edge between {u} and {v}")))
    }

    fn path_of(
        &self,
        start: Vertex,
        first: Color,
        second: Color,
    ) -> Result<Vec<Vertex>, ColoringError> {
        match self.wg.walk(start, first, second) {
            Walk::Path(p) => Ok(p),
            Walk::Cycle => Err(ColoringError::BichromaticCycle(start)),
        }
    }

    fn swap_colors(&mut self, e: usize, f: usize) {
        let (ce, cf) = (self.wg.color(e), self.wg.color(f));
        self.wg.set_color(e, cf);
        self.wg.set_color(f, ce);
    }

    /// Assigns `c` to the open edge `e` and checks that no bichromatic cycle
    /// runs through it.
    fn commit(&mut self, e: usize, c: Color, step: &str) -> Result<(), ColoringError> {
        self.wg.set_color(e, c);
        match self.wg.cycle_through(e) {
            None => Ok(()),
            Some(other) => {
                let (u, v) = self.wg.ends(e);
                Err(internal(format!(
                    "{step}: color {c} on ({u}, {v}) closes a cycle with color {other}"
                )))
            }
        }
    }

    /// Colors the open edge `path[0] s`, where `path` is the maximal
    /// bichromatic walk from `path[0]` starting with `alpha` and then `beta`.
    /// Recolors along the path when no color is valid outright.
    pub(crate) fn extend_along_path(
        &mut self,
        path: &[Vertex],
        alpha: Color,
        beta: Color,
        s: Vertex,
    ) -> Result<(), ColoringError> {
        let start = path[0];
        let open = self.edge(start, s)?;
        if self.wg.color(open) != NONE {
            return Err(internal("path extension on a colored edge"));
        }
        if path.contains(&s) {
            return Err(internal("bichromatic path reaches the far endpoint"));
        }
        if let Some(c) = self.wg.smallest_valid(start, s, self.k) {
            self.wg.set_color(open, c);
            return Ok(());
        }
        let fallback = self.wg.candidates(start, s, self.k).first().copied();

        for pair in path.windows(2) {
            let e = self.edge(pair[0], pair[1])?;
            let c = self.wg.color(e);
            self.wg.set_color(e, if c == alpha { beta } else { alpha });
        }
        let len = path.len();
        if len >= 3 {
            let last = self.edge(path[len - 2], path[len - 1])?;
            if let Some(theta) = self.wg.cycle_through(last) {
                let pivot = path[len - 2];
                let (_, spoke) = self
                    .wg
                    .edge_colored(pivot, theta)
                    .ok_or_else(|| internal("cycle color missing at path end"))?;
                let back = self.edge(pivot, path[len - 3])?;
                self.swap_colors(spoke, back);
            }
        }

        let color = if !self.wg.has_color(s, alpha) {
            alpha
        } else {
            fallback.ok_or_else(|| internal("no candidate for the path extension"))?
        };
        self.commit(open, color, "path extension")
    }

    /// Colors the open edge `xy` of a 2-sparse graph, where `x` has degree at
    /// most 2.
    pub(crate) fn extend_two_sparse(&mut self, x: Vertex, y: Vertex) -> Result<(), ColoringError> {
        let open = self.edge(x, y)?;
        if let Some(c) = self.wg.smallest_valid(x, y, self.k) {
            self.wg.set_color(open, c);
            return Ok(());
        }
        let alpha = self
            .wg
            .incident(x)
            .map(|(_, e)| self.wg.color(e))
            .find(|&c| c != NONE)
            .ok_or_else(|| internal("lone edge without a valid color"))?;
        let beta = match self.wg.candidates(x, y, self.k).first() {
            Some(&gamma) => smallest_outside(self.k, &[alpha, gamma]),
            None => smallest_outside(self.k, &[alpha]),
        }
        .ok_or_else(|| internal("palette too small for a second path color"))?;
        let path = self.path_of(x, alpha, beta)?;
        self.extend_along_path(&path, alpha, beta, y)
    }

    /// Colors the open edge `xa`, where `x` is a degree-2 neighbor of `a` on
    /// the `X` side of a qualifying split with cutset `{a, b}`.
    pub(crate) fn extend_split(
        &mut self,
        a: Vertex,
        b: Vertex,
        x: Vertex,
    ) -> Result<(), ColoringError> {
        let open = self.edge(x, a)?;
        let (u, xu) = self
            .wg
            .incident(x)
            .find(|&(w, _)| w != a)
            .ok_or_else(|| internal("split vertex has no second neighbor"))?;
        let alpha = self.wg.color(xu);
        let candidates = self.wg.candidates(x, a, self.k);

        if candidates.is_empty() {
            let others: Vec<Color> = (1..=self.k).filter(|&c| c != alpha).take(2).collect();
            if others.len() < 2 {
                return Err(internal("palette too small at split edge"));
            }
            for &second in &others {
                let path = self.path_of(x, alpha, second)?;
                if !path.contains(&b) {
                    return self.extend_along_path(&path, alpha, second, a);
                }
            }
            return Err(internal(
                "both bichromatic paths from the split vertex reach b",
            ));
        }

        if let Some(c) = candidates
            .iter()
            .copied()
            .find(|&c| self.wg.is_valid(x, a, c))
        {
            self.wg.set_color(open, c);
            return Ok(());
        }
        let gamma = candidates[0];
        let critical = self.path_of(x, alpha, gamma)?;
        if critical.last() != Some(&a) || critical.len() < 4 {
            return Err(internal(
                "expected a critical path from the split vertex to a",
            ));
        }
        let beta = smallest_outside(self.k, &[alpha, gamma])
            .ok_or_else(|| internal("palette too small at split edge"))?;
        let q = self.path_of(x, alpha, beta)?;
        if !q.contains(&b) {
            return self.extend_along_path(&q, alpha, beta, a);
        }

        let z = critical[2];
        let w = q[2];
        if w != b {
            let uz = self.edge(u, z)?;
            let uw = self.edge(u, w)?;
            self.swap_colors(uz, uw);
            return self.commit(open, gamma, "exchange at the split vertex's neighbor");
        }

        // `u` is the unique neighbor of `b` in X and `z` the other common
        // neighbor of `a` and `u` on the critical path.
        let y = u;
        if self.k >= 4 {
            let eta = smallest_outside(self.k, &[alpha, beta, gamma])
                .ok_or_else(|| internal("palette too small"))?;
            match self.wg.edge_colored(y, eta) {
                None => self.wg.set_color(xu, eta),
                Some((_, yk)) => self.swap_colors(xu, yk),
            }
            return self.commit(open, gamma, "fourth-color repair");
        }
        self.rebuild_cubic(a, b, x, y, z)
    }

    /// The palette-3 case: `a` has neighbors `x`, `v` and one more vertex `p`;
    /// `y` has neighbors `x`, `v` and `b`. Colors the rest of the graph with
    /// those four vertices replaced by a marker on `p` and `b`, then fills the
    /// six edges in by hand.
    fn rebuild_cubic(
        &mut self,
        a: Vertex,
        b: Vertex,
        x: Vertex,
        y: Vertex,
        v: Vertex,
    ) -> Result<(), ColoringError> {
        let p = self
            .wg
            .incident(a)
            .map(|(w, _)| w)
            .find(|&w| w != x && w != v)
            .ok_or_else(|| internal("cut vertex a has no outside neighbor"))?;
        if self.wg.degree(a) != 3 || self.wg.degree(y) != 3 || self.wg.degree(v) != 2 {
            return Err(internal("unexpected degrees around the cubic split"));
        }
        let six = [
            self.edge(p, a)?,
            self.edge(b, y)?,
            self.edge(a, v)?,
            self.edge(y, x)?,
            self.edge(a, x)?,
            self.edge(y, v)?,
        ];
        for &e in &six {
            self.wg.kill(e);
        }
        let marker = self.wg.push_vertex();
        let pw = self.wg.push_edge(p, marker);
        let bw = self.wg.push_edge(b, marker);
        self.solve()?;
        let (alpha, beta) = (self.wg.color(pw), self.wg.color(bw));
        self.wg.pop_edge();
        self.wg.pop_edge();
        self.wg.pop_vertex();
        let gamma = smallest_outside(self.k, &[alpha, beta])
            .ok_or_else(|| internal("palette too small"))?;
        for (&e, c) in six.iter().zip([alpha, beta, beta, alpha, gamma, gamma]) {
            self.wg.revive(e);
            self.wg.set_color(e, c);
        }
        Ok(())
    }
}
