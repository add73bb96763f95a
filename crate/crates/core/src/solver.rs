//! Exact proper connection numbers by complete search over colorings.
//!
//! Colorings are built edge by edge in restricted-growth form (a new color is
//! always the smallest unused one), so each partition of the edges into color
//! classes is visited once. After every assignment each vertex pair is checked
//! against the partial coloring, with uncolored edges acting as fresh colors;
//! a pair that fails there fails in every completion, so the branch is cut.

use std::time::{Duration, Instant};

use crate::budget::{Budget, Meter};
use crate::colored::engine::{find_path, key, path_is_proper, Key, PathEngine, PathQuery};
use crate::colored::{
    disjoint_proper_paths, has_strong_property, is_k_proper_connected, is_proper_connected,
    strong_pair, Color, EdgeColoring, DEFAULT_PATH_CAP,
};
use crate::error::{Error, Result};
use crate::graph::{bridges, is_k_connected, EdgeId, Graph, Vertex};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Partial colorings tried, summed over all palette sizes.
    pub nodes: u64,
    /// Path searches run while pruning.
    pub pair_checks: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcResult {
    pub value: usize,
    pub witness: EdgeColoring,
    pub stats: SearchStats,
}

/// What every vertex pair must have under the coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Requirement {
    ProperPath,
    Strong,
    Disjoint { k: usize, cap: usize },
}

/// Largest number of bridges meeting at one vertex. Two bridges at a vertex
/// are consecutive on every path crossing both, so they need distinct colors.
pub fn bridge_lower_bound(g: &Graph) -> usize {
    let mut at = vec![0usize; g.n()];
    for e in bridges(g) {
        let (u, v) = g.edge(e);
        at[u] += 1;
        at[v] += 1;
    }
    at.into_iter().max().unwrap_or(0)
}

/// Smallest palette admitting a coloring under which every pair of vertices
/// is joined by a proper path.
pub fn pc_exact(g: &Graph, budget: Budget) -> Result<PcResult> {
    if g.n() < 2 {
        return Err(Error::precondition("need at least two vertices"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let lo = bridge_lower_bound(g).max(1);
    let result = minimize(g, Requirement::ProperPath, lo, g.max_degree() + 1, budget)?;
    if !is_proper_connected(g, &result.witness)?.holds {
        return Err(Error::defect("exact search witness fails verification"));
    }
    Ok(result)
}

/// Smallest palette under which every pair is joined by `k` internally
/// disjoint proper paths. Undefined unless the graph is k-connected.
pub fn pc_k_exact(g: &Graph, k: usize, budget: Budget) -> Result<PcResult> {
    if k == 0 {
        return Err(Error::precondition("k must be at least 1"));
    }
    if k == 1 {
        return pc_exact(g, budget);
    }
    if g.n() < 2 || !is_k_connected(g, k) {
        return Err(Error::NotKConnected { k });
    }
    let req = Requirement::Disjoint {
        k,
        cap: DEFAULT_PATH_CAP,
    };
    let result = minimize(g, req, 1, g.max_degree() + 1, budget)?;
    if !is_k_proper_connected(g, &result.witness, k, DEFAULT_PATH_CAP)?.holds {
        return Err(Error::defect("exact search witness fails verification"));
    }
    Ok(result)
}

/// Adjacent edges get distinct colors, using at most `Δ + 1` of them.
///
/// Edges are colored in id order by the Misra-Gries fan rotation, so the
/// result is deterministic.
pub fn greedy_proper_edge_coloring(g: &Graph) -> EdgeColoring {
    if g.m() == 0 {
        return EdgeColoring::uniform(0, 1);
    }
    let palette = g.max_degree() + 1;
    let mut mg = MisraGries {
        g,
        colors: vec![0; g.m()],
        at: vec![vec![None; palette + 1]; g.n()],
        palette,
    };
    for e in 0..g.m() {
        mg.color_edge(e);
    }
    EdgeColoring::from_colors(mg.colors).expect("colors lie in 1..=Δ+1")
}

struct MisraGries<'a> {
    g: &'a Graph,
    colors: Vec<Color>,
    // at[v][c] = edge of color c at v
    at: Vec<Vec<Option<EdgeId>>>,
    palette: usize,
}

impl MisraGries<'_> {
    fn free(&self, v: Vertex, c: Color) -> bool {
        self.at[v][c as usize].is_none()
    }

    fn free_color(&self, v: Vertex) -> Color {
        (1..=self.palette as Color)
            .find(|&c| self.free(v, c))
            .expect("a vertex of degree at most Δ misses a color among Δ+1")
    }

    fn set(&mut self, e: EdgeId, c: Color) {
        let (a, b) = self.g.edge(e);
        let old = self.colors[e];
        if old != 0 {
            self.at[a][old as usize] = None;
            self.at[b][old as usize] = None;
        }
        self.colors[e] = c;
        if c != 0 {
            self.at[a][c as usize] = Some(e);
            self.at[b][c as usize] = Some(e);
        }
    }

    fn color_edge(&mut self, e0: EdgeId) {
        let g = self.g;
        let (u, v) = g.edge(e0);
        // maximal fan at u starting with the uncolored edge uv
        let mut fan = vec![v];
        loop {
            let last = *fan.last().expect("fan is never empty");
            let next = g.adjacency(u).iter().find(|&&(w, e)| {
                self.colors[e] != 0 && !fan.contains(&w) && self.free(last, self.colors[e])
            });
            match next {
                Some(&(w, _)) => fan.push(w),
                None => break,
            }
        }
        let c = self.free_color(u);
        let d = self.free_color(*fan.last().expect("fan is never empty"));
        // invert the path from u alternating d, c, d, ...
        let mut path = Vec::new();
        let (mut x, mut want) = (u, d);
        while let Some(e) = self.at[x][want as usize] {
            path.push(e);
            x = g.opposite(e, x);
            want = if want == d { c } else { d };
        }
        for &e in &path {
            self.set(e, 0);
        }
        for (i, &e) in path.iter().enumerate() {
            self.set(e, if i % 2 == 0 { c } else { d });
        }
        // shortest fan prefix ending at a vertex where d is free
        let fan_edge = |w: Vertex| g.edge_between(u, w).expect("fan vertices neighbor u");
        let mut end = 0;
        for i in 0..fan.len() {
            if i > 0 && !self.free(fan[i - 1], self.colors[fan_edge(fan[i])]) {
                break;
            }
            if self.free(fan[i], d) {
                end = i;
                break;
            }
        }
        let shifted: Vec<Color> = (0..end).map(|j| self.colors[fan_edge(fan[j + 1])]).collect();
        for &w in &fan[..=end] {
            self.set(fan_edge(w), 0);
        }
        for (j, &col) in shifted.iter().enumerate() {
            self.set(fan_edge(fan[j]), col);
        }
        self.set(fan_edge(fan[end]), d);
    }
}

/// Tries palettes `lo..=hi` in order and returns the first that admits a
/// coloring meeting `req`.
pub(crate) fn minimize(
    g: &Graph,
    req: Requirement,
    lo: usize,
    hi: usize,
    budget: Budget,
) -> Result<PcResult> {
    let started = Instant::now();
    let mut search = ColoringSearch::new(g, req, budget);
    for k in lo..=hi {
        if let Some(colors) = search.run(k as Color)? {
            let witness = EdgeColoring::new(colors, k as Color)?;
            return Ok(PcResult {
                value: k,
                witness,
                stats: SearchStats {
                    nodes: search.nodes,
                    pair_checks: search.pair_checks,
                    elapsed: started.elapsed(),
                },
            });
        }
    }
    Err(Error::defect(format!("no coloring with at most {hi} colors")))
}

pub(crate) struct ColoringSearch<'a> {
    g: &'a Graph,
    req: Requirement,
    order: Vec<EdgeId>,
    colors: Vec<Color>,
    pairs: Vec<(Vertex, Vertex)>,
    witnesses: Vec<Option<Vec<Vec<Vertex>>>>,
    meter: Meter,
    nodes: u64,
    pair_checks: u64,
}

impl<'a> ColoringSearch<'a> {
    pub(crate) fn new(g: &'a Graph, req: Requirement, budget: Budget) -> Self {
        let mut order: Vec<EdgeId> = (0..g.m()).collect();
        order.sort_by_key(|&e| {
            let (u, v) = g.edge(e);
            let (a, b) = (g.degree(u), g.degree(v));
            (a.min(b), a.max(b), e)
        });
        // far pairs first; a pair that fails moves to the front
        let mut pairs = Vec::new();
        for u in 0..g.n() {
            let dist = g.distances_from(u);
            for (v, d) in dist.iter().enumerate().skip(u + 1) {
                pairs.push((std::cmp::Reverse(*d), u, v));
            }
        }
        pairs.sort();
        let pairs: Vec<(Vertex, Vertex)> = pairs.into_iter().map(|(_, u, v)| (u, v)).collect();
        let witnesses = vec![None; pairs.len()];
        ColoringSearch {
            g,
            req,
            order,
            colors: vec![0; g.m()],
            pairs,
            witnesses,
            meter: Meter::new(budget, "coloring search"),
            nodes: 0,
            pair_checks: 0,
        }
    }

    /// A coloring with colors in `1..=k` meeting the requirement, if any.
    pub(crate) fn run(&mut self, k: Color) -> Result<Option<Vec<Color>>> {
        self.colors.iter_mut().for_each(|c| *c = 0);
        if !self.consistent()? {
            return Ok(None);
        }
        if self.extend(0, 0, k)? {
            Ok(Some(self.colors.clone()))
        } else {
            Ok(None)
        }
    }

    fn extend(&mut self, i: usize, used: Color, k: Color) -> Result<bool> {
        if i == self.order.len() {
            return Ok(true);
        }
        let e = self.order[i];
        for c in 1..=(used + 1).min(k) {
            self.meter.tick()?;
            self.nodes += 1;
            self.colors[e] = c;
            if self.consistent()? && self.extend(i + 1, used.max(c), k)? {
                return Ok(true);
            }
        }
        self.colors[e] = 0;
        Ok(false)
    }

    /// Every pair can still be satisfied by some completion.
    fn consistent(&mut self) -> Result<bool> {
        for i in 0..self.pairs.len() {
            let (u, v) = self.pairs[i];
            if let Some(w) = &self.witnesses[i] {
                if witness_holds(self.g, &self.colors, self.req, w) {
                    continue;
                }
            }
            self.pair_checks += 1;
            match find_witness(self.g, &self.colors, self.req, u, v)? {
                Some(w) => self.witnesses[i] = Some(w),
                None => {
                    self.pairs[..=i].rotate_right(1);
                    self.witnesses[..=i].rotate_right(1);
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn first_key(g: &Graph, colors: &[Color], p: &[Vertex]) -> Key {
    key(colors, g.edge_between(p[0], p[1]).expect("path edge"))
}

fn last_key(g: &Graph, colors: &[Color], p: &[Vertex]) -> Key {
    let l = p.len();
    key(colors, g.edge_between(p[l - 2], p[l - 1]).expect("path edge"))
}

/// Cheap re-check of a cached witness after more edges were colored.
fn witness_holds(g: &Graph, colors: &[Color], req: Requirement, w: &[Vec<Vertex>]) -> bool {
    if !w.iter().all(|p| path_is_proper(g, colors, p)) {
        return false;
    }
    match req {
        Requirement::Strong => {
            first_key(g, colors, &w[0]) != first_key(g, colors, &w[1])
                && last_key(g, colors, &w[0]) != last_key(g, colors, &w[1])
        }
        _ => true,
    }
}

fn find_witness(
    g: &Graph,
    colors: &[Color],
    req: Requirement,
    u: Vertex,
    v: Vertex,
) -> Result<Option<Vec<Vec<Vertex>>>> {
    Ok(match req {
        Requirement::ProperPath => {
            let q = PathQuery::new(g, colors, u, v);
            find_path(&q, PathEngine::default()).map(|p| vec![p])
        }
        Requirement::Strong => strong_pair(g, colors, u, v, PathEngine::default()).map(Vec::from),
        Requirement::Disjoint { k, cap } => disjoint_proper_paths(g, colors, u, v, k, cap)?,
    })
}

/// Smallest palette (at most `max_colors`) with the strong property, by
/// complete search.
pub(crate) fn strong_search(g: &Graph, max_colors: usize, budget: Budget) -> Result<Option<EdgeColoring>> {
    let mut search = ColoringSearch::new(g, Requirement::Strong, budget);
    for k in 2..=max_colors {
        if let Some(colors) = search.run(k as Color)? {
            let c = EdgeColoring::new(colors, k as Color)?;
            debug_assert!(has_strong_property(g, &c).map(|r| r.holds).unwrap_or(false));
            return Ok(Some(c));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(g: &Graph) -> usize {
        pc_exact(g, Budget::DEFAULT).unwrap().value
    }

    #[test]
    fn small_values() {
        for n in 2..7 {
            assert_eq!(pc(&Graph::complete(n)), 1);
        }
        for m in 2..6 {
            assert_eq!(pc(&Graph::star(m)), m);
        }
        assert_eq!(pc(&Graph::cycle(5)), 2);
        assert_eq!(pc(&Graph::cycle(4)), 2);
        assert_eq!(pc(&Graph::path(5)), 2);
        assert_eq!(pc(&Graph::petersen()), 2);
    }

    #[test]
    fn witness_has_value_colors() {
        let r = pc_exact(&Graph::star(4), Budget::DEFAULT).unwrap();
        assert_eq!(r.witness.palette(), 4);
        assert_eq!(r.witness.used_colors(), 4);
        assert!(r.stats.nodes > 0);
    }

    #[test]
    fn pc2_values() {
        let pc2 = |g: &Graph| pc_k_exact(g, 2, Budget::DEFAULT).unwrap().value;
        assert_eq!(pc2(&Graph::cycle(5)), 3);
        assert_eq!(pc2(&Graph::cycle(4)), 2);
        for n in 4..7 {
            assert_eq!(pc2(&Graph::complete(n)), 2);
        }
        assert_eq!(
            pc_k_exact(&Graph::star(3), 2, Budget::DEFAULT),
            Err(Error::NotKConnected { k: 2 })
        );
    }

    #[test]
    fn budget_is_reported() {
        let err = pc_exact(&Graph::petersen(), Budget(3)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(pc_exact(&g, Budget::DEFAULT), Err(Error::Disconnected));
    }

    #[test]
    fn greedy_is_proper() {
        let mut graphs = vec![Graph::complete(5), Graph::complete(6), Graph::petersen(), Graph::cycle(7), Graph::star(4)];
        graphs.push(Graph::complete_bipartite(3, 4));
        for g in graphs {
            let c = greedy_proper_edge_coloring(&g);
            assert!(c.is_proper_edge_coloring(&g));
            assert!(c.palette() as usize <= g.max_degree() + 1);
            assert!(is_proper_connected(&g, &c).unwrap().holds);
        }
    }

    #[test]
    fn strong_search_examples() {
        let c = strong_search(&Graph::cycle(4), 2, Budget::DEFAULT).unwrap().unwrap();
        assert_eq!(c.palette(), 2);
        let c = strong_search(&Graph::complete(4), 3, Budget::DEFAULT).unwrap().unwrap();
        assert!(has_strong_property(&Graph::complete(4), &c).unwrap().holds);
        assert!(strong_search(&Graph::path(3), 3, Budget::DEFAULT).unwrap().is_none());
    }
}
