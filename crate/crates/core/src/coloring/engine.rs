//! The recursive driver. `solve` colors every alive edge of the work graph
//! with colors `1..=k` and leaves the graph structurally as it found it.

use std::collections::HashMap;

use crate::decomposition::find_special_split_unchecked;
use crate::error::ColoringError;
use crate::graph::{Graph, Vertex};
use crate::structure;

use super::work::{Snapshot, WorkGraph};
use super::{renaming, Color, NONE};

pub(crate) struct Engine {
    pub(crate) wg: WorkGraph,
    pub(crate) k: Color,
}

/// A maximal run `hub_a - d1 - ... - dr - hub_b` of degree-2 vertices with
/// `r >= 2`, replaced by `hub_a - d1 - hub_b` while the rest is colored.
struct Chain {
    /// The edge `hub_a d1`, kept.
    first: usize,
    /// Killed edges `d1 d2, ..., dr hub_b` in path order.
    rest: Vec<usize>,
    near: Vertex,
    far: Vertex,
    shortcut: usize,
}

impl Engine {
    pub(crate) fn solve(&mut self) -> Result<(), ColoringError> {
        let snap = self.wg.snapshot();
        if snap.graph.m() == 0 {
            return Ok(());
        }
        for &e in &snap.eids {
            self.wg.set_color(e, NONE);
        }
        let g = &snap.graph;

        let comps = g.connected_components();
        if comps.len() > 1 {
            let mut index = vec![0; g.n()];
            for (i, c) in comps.iter().enumerate() {
                for v in c.iter() {
                    index[v] = i;
                }
            }
            let mut groups = vec![Vec::new(); comps.len()];
            for (id, e) in g.edges().iter().enumerate() {
                groups[index[e.u()]].push(snap.eids[id]);
            }
            drop(snap);
            self.solve_groups(groups)?;
            return Ok(());
        }

        if g.max_degree() <= 2 {
            return self.color_path_or_cycle(&snap);
        }

        let (is_cut, blocks) = g.biconnected(None);
        if blocks.len() > 1 {
            let groups: Vec<Vec<usize>> = blocks
                .iter()
                .map(|b| {
                    b.iter()
                        .map(|e| snap.eids[g.edge_id(e.u(), e.v()).unwrap()])
                        .collect()
                })
                .collect();
            let cuts: Vec<Vertex> = (0..g.n())
                .filter(|&v| is_cut[v])
                .map(|v| snap.verts[v])
                .collect();
            drop(snap);
            let groups = self.solve_groups(groups)?;
            return self.merge_blocks(&groups, &cuts);
        }

        let chains = self.find_chains(&snap);
        if !chains.is_empty() {
            drop(snap);
            return self.solve_contracted(chains);
        }

        if structure::is_two_sparse(g) {
            return self.solve_two_sparse(&snap);
        }

        let split = find_special_split_unchecked(g)?;
        let a = snap.verts[split.a];
        let b = snap.verts[split.b];
        let x_local = g
            .neighbors(split.a)
            .iter()
            .copied()
            .find(|&w| split.x.contains(w) && !g.has_edge(w, split.b))
            .ok_or_else(|| ColoringError::Internal("split has no free neighbor of a".into()))?;
        let x = snap.verts[x_local];
        drop(split);
        drop(snap);
        self.solve_split(a, b, x)
    }

    /// Colors each group alone, the others suspended. Returns the groups.
    fn solve_groups(
        &mut self,
        mut groups: Vec<Vec<usize>>,
    ) -> Result<Vec<Vec<usize>>, ColoringError> {
        for i in 0..groups.len() {
            drop(std::mem::take(&mut groups[i]));
            for e in groups.iter().flatten() {
                self.wg.kill(*e);
            }
            self.solve()?;
            let mut mine = self.wg.alive_edges().to_vec();
            mine.sort_unstable();
            for e in groups.iter().flatten() {
                self.wg.revive(*e);
            }
            groups[i] = mine;
        }
        Ok(groups)
    }

    /// Permutes block palettes so that edges meeting at a cut vertex get
    /// distinct colors. Blocks are visited breadth-first from the first one.
    fn merge_blocks(
        &mut self,
        blocks: &[Vec<usize>],
        cuts: &[Vertex],
    ) -> Result<(), ColoringError> {
        let mut block_of: HashMap<usize, usize> = HashMap::new();
        for (i, b) in blocks.iter().enumerate() {
            for &e in b {
                block_of.insert(e, i);
            }
        }
        let mut blocks_at: HashMap<Vertex, Vec<usize>> = HashMap::new();
        for &c in cuts {
            let mut list: Vec<usize> = self.wg.incident(c).map(|(_, e)| block_of[&e]).collect();
            list.sort_unstable();
            list.dedup();
            blocks_at.insert(c, list);
        }
        let mut done = vec![false; blocks.len()];
        done[0] = true;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(bi) = queue.pop_front() {
            let mut touching: Vec<Vertex> = blocks[bi]
                .iter()
                .flat_map(|&e| {
                    let (u, v) = self.wg.ends(e);
                    [u, v]
                })
                .filter(|v| blocks_at.contains_key(v))
                .collect();
            touching.sort_unstable();
            touching.dedup();
            for cut in touching {
                for &next in &blocks_at[&cut] {
                    if done[next] {
                        continue;
                    }
                    self.align_block(&blocks[next], cut, |e| done[block_of[&e]])?;
                    done[next] = true;
                    queue.push_back(next);
                }
            }
        }
        Ok(())
    }

    /// Renames the colors of `block` so that its colors at `cut` avoid the
    /// colors at `cut` on edges already placed.
    fn align_block(
        &mut self,
        block: &[usize],
        cut: Vertex,
        placed: impl Fn(usize) -> bool,
    ) -> Result<(), ColoringError> {
        let k = self.k as usize;
        let mut used = vec![false; k + 1];
        let mut mine = vec![false; k + 1];
        for (_, e) in self.wg.incident(cut) {
            let c = self.wg.color(e) as usize;
            if placed(e) {
                used[c] = true;
            } else if block.binary_search(&e).is_ok() {
                mine[c] = true;
            }
        }
        let rename = renaming(k, &used, &mine).ok_or_else(|| ColoringError::PaletteTooSmall {
            palette: self.k,
            needed: used.iter().chain(&mine).filter(|&&u| u).count() as Color,
        })?;
        for &e in block {
            let c = self.wg.color(e) as usize;
            self.wg.set_color(e, rename[c]);
        }
        Ok(())
    }

    /// Paths alternate 1, 2; cycles alternate 1, 2 and close with 3.
    fn color_path_or_cycle(&mut self, snap: &Snapshot) -> Result<(), ColoringError> {
        let g = &snap.graph;
        let is_cycle = g.m() == g.n();
        let needed = if is_cycle {
            3
        } else if g.m() > 1 {
            2
        } else {
            1
        };
        if self.k < needed {
            return Err(ColoringError::PaletteTooSmall {
                palette: self.k,
                needed,
            });
        }
        let start = if is_cycle {
            0
        } else {
            (0..g.n()).find(|&v| g.degree(v) == 1).unwrap()
        };
        let (mut at, mut came) = (start, usize::MAX);
        for i in 0..g.m() {
            let (next, id) = g
                .incident(at)
                .find(|&(_, id)| id != came)
                .expect("walk ended early");
            let c = if is_cycle && i + 1 == g.m() {
                3
            } else {
                1 + (i % 2) as Color
            };
            self.wg.set_color(snap.eids[id], c);
            came = id;
            at = next;
        }
        Ok(())
    }

    /// Finds every maximal run of two or more adjacent degree-2 vertices in a
    /// 2-connected snapshot with maximum degree at least 3.
    fn find_chains(&self, snap: &Snapshot) -> Vec<Chain> {
        let g = &snap.graph;
        let step = |prev: Vertex, at: Vertex| {
            let nb = g.neighbors(at);
            if nb[0] == prev {
                nb[1]
            } else {
                nb[0]
            }
        };
        let mut seen = vec![false; g.n()];
        let mut out = Vec::new();
        for s in 0..g.n() {
            if seen[s] || g.degree(s) != 2 || !g.neighbors(s).iter().any(|&w| g.degree(w) == 2) {
                continue;
            }
            let (mut prev, mut at) = (s, g.neighbors(s)[0]);
            while g.degree(at) == 2 {
                (prev, at) = (at, step(prev, at));
            }
            let mut run = vec![at];
            (prev, at) = (at, prev);
            while g.degree(at) == 2 {
                run.push(at);
                seen[at] = true;
                (prev, at) = (at, step(prev, at));
            }
            run.push(at);
            let last = run.len() - 1;
            if run[0] == run[last] {
                continue;
            }
            if snap.verts[run[0]] > snap.verts[run[last]] {
                run.reverse();
            }
            let eid = |u: Vertex, v: Vertex| snap.eids[g.edge_id(u, v).unwrap()];
            out.push(Chain {
                first: eid(run[0], run[1]),
                rest: run[1..].windows(2).map(|w| eid(w[0], w[1])).collect(),
                near: snap.verts[run[1]],
                far: snap.verts[run[last]],
                shortcut: usize::MAX,
            });
        }
        out
    }

    fn solve_contracted(&mut self, mut chains: Vec<Chain>) -> Result<(), ColoringError> {
        for chain in &mut chains {
            for &e in &chain.rest {
                self.wg.kill(e);
            }
            chain.shortcut = self.wg.push_edge(chain.near, chain.far);
        }
        self.solve()?;
        for chain in chains.iter().rev() {
            let first = self.wg.color(chain.first);
            let last = self.wg.color(chain.shortcut);
            self.wg.pop_edge();
            let end = chain.rest.len() - 1;
            let mut prev = first;
            for (i, &e) in chain.rest.iter().enumerate() {
                let c = if i == end {
                    last
                } else {
                    // The first inner edge takes a third color, so every
                    // cycle through the chain sees at least three.
                    let avoid = match (i == 0, i + 1 == end) {
                        (true, _) => [first, last],
                        (false, true) => [prev, last],
                        (false, false) => [prev, prev],
                    };
                    (1..=self.k).find(|c| !avoid.contains(c)).ok_or(
                        ColoringError::PaletteTooSmall {
                            palette: self.k,
                            needed: 3,
                        },
                    )?
                };
                self.wg.revive(e);
                self.wg.set_color(e, c);
                prev = c;
            }
        }
        Ok(())
    }

    fn solve_two_sparse(&mut self, snap: &Snapshot) -> Result<(), ColoringError> {
        let g = &snap.graph;
        for e in g.edges() {
            let (u, v) = e.endpoints();
            let (x, y) = if g.degree(u) <= 2 { (u, v) } else { (v, u) };
            self.extend_two_sparse(snap.verts[x], snap.verts[y])?;
        }
        Ok(())
    }

    fn solve_split(&mut self, a: Vertex, b: Vertex, x: Vertex) -> Result<(), ColoringError> {
        let xa = self
            .wg
            .edge_between(x, a)
            .ok_or_else(|| ColoringError::Internal("split edge vanished".into()))?;
        self.wg.kill(xa);
        self.solve()?;
        self.wg.revive(xa);
        self.extend_split(a, b, x)
    }
}

/// Palette the engine uses for `g`: per component, the maximum degree, or 3
/// for a cycle; the largest over all components.
pub(crate) fn palette_for(g: &Graph) -> Color {
    g.connected_components()
        .iter()
        .map(|c| {
            let delta = c.iter().map(|v| g.degree(v)).max().unwrap_or(0);
            let edges: usize = c.iter().map(|v| g.degree(v)).sum::<usize>() / 2;
            if delta == 2 && edges == c.len() {
                3
            } else {
                delta as Color
            }
        })
        .max()
        .unwrap_or(0)
}
