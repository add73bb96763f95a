use std::collections::BTreeMap;
use std::ops::ControlFlow;

use super::coloring::{Color, EdgeColoring};
use super::engine::{self, find_path, for_each_path, key, EndFilter, Key, PathEngine, PathQuery};
use crate::error::{Error, Result};
use crate::graph::{is_k_connected, EdgeId, Graph, Vertex};

/// Paths enumerated per vertex pair before giving up.
pub const DEFAULT_PATH_CAP: usize = 1_000_000;

/// A simple path whose consecutive edges have different colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperPath {
    pub vertices: Vec<Vertex>,
    pub start_color: Color,
    pub end_color: Color,
}

impl ProperPath {
    fn from_vertices(g: &Graph, c: &EdgeColoring, vertices: Vec<Vertex>) -> Self {
        let first = g.edge_between(vertices[0], vertices[1]).expect("path edge");
        let last = g
            .edge_between(vertices[vertices.len() - 2], vertices[vertices.len() - 1])
            .expect("path edge");
        ProperPath {
            vertices,
            start_color: c.color(first),
            end_color: c.color(last),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() < 2
    }

    pub fn interior(&self) -> &[Vertex] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}

/// Outcome of checking a property over all vertex pairs `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub holds: bool,
    /// Pairs without the required witness, in lexicographic order.
    pub failures: Vec<(Vertex, Vertex)>,
    pub witnesses: BTreeMap<(Vertex, Vertex), Vec<ProperPath>>,
}

impl VerificationReport {
    fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = ((Vertex, Vertex), Option<Vec<ProperPath>>)>,
    {
        let mut report = VerificationReport::default();
        for (pair, outcome) in pairs {
            match outcome {
                Some(paths) => {
                    report.witnesses.insert(pair, paths);
                }
                None => report.failures.push(pair),
            }
        }
        report.holds = report.failures.is_empty();
        report
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (Vertex, Vertex)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

fn check_connected(g: &Graph, c: &EdgeColoring) -> Result<()> {
    c.check_fits(g)?;
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// True iff `seq` is a simple path of `g` whose consecutive edges differ in
/// color under `c`.
pub fn is_proper_path(g: &Graph, c: &EdgeColoring, seq: &[Vertex]) -> bool {
    c.len() == g.m() && engine::path_is_proper(g, c.colors(), seq)
}

pub fn exists_proper_path(g: &Graph, c: &EdgeColoring, u: Vertex, v: Vertex) -> Option<ProperPath> {
    exists_proper_path_with(PathEngine::default(), g, c, u, v)
}

pub fn exists_proper_path_with(
    engine: PathEngine,
    g: &Graph,
    c: &EdgeColoring,
    u: Vertex,
    v: Vertex,
) -> Option<ProperPath> {
    assert_ne!(u, v, "proper paths join distinct vertices");
    let q = PathQuery::new(g, c.colors(), u, v);
    find_path(&q, engine).map(|seq| ProperPath::from_vertices(g, c, seq))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathEnumeration {
    pub paths: Vec<ProperPath>,
    /// The cap was reached; more paths may exist.
    pub truncated: bool,
}

/// All proper `u`-`v` paths in depth-first order (neighbors ascending), up to
/// `cap` of them.
pub fn enumerate_proper_paths(
    g: &Graph,
    c: &EdgeColoring,
    u: Vertex,
    v: Vertex,
    cap: usize,
) -> PathEnumeration {
    assert_ne!(u, v, "proper paths join distinct vertices");
    let q = PathQuery::new(g, c.colors(), u, v);
    let mut paths = Vec::new();
    let mut truncated = false;
    let _ = for_each_path(&q, None, &mut |seq, _| {
        if paths.len() == cap {
            truncated = true;
            return ControlFlow::Break(());
        }
        paths.push(ProperPath::from_vertices(g, c, seq.to_vec()));
        ControlFlow::Continue(())
    });
    PathEnumeration { paths, truncated }
}

pub fn is_proper_connected(g: &Graph, c: &EdgeColoring) -> Result<VerificationReport> {
    check_connected(g, c)?;
    Ok(VerificationReport::from_pairs(pairs(g.n()).map(|(u, v)| {
        ((u, v), exists_proper_path(g, c, u, v).map(|p| vec![p]))
    })))
}

/// Every pair is joined by two proper paths whose start colors differ and
/// whose end colors differ. A single edge alone never qualifies.
pub fn has_strong_property(g: &Graph, c: &EdgeColoring) -> Result<VerificationReport> {
    check_connected(g, c)?;
    Ok(VerificationReport::from_pairs(pairs(g.n()).map(|(u, v)| {
        let found = strong_pair(g, c.colors(), u, v, PathEngine::default()).map(|[a, b]| {
            vec![
                ProperPath::from_vertices(g, c, a),
                ProperPath::from_vertices(g, c, b),
            ]
        });
        ((u, v), found)
    })))
}

/// Two proper `u`-`v` paths with distinct start keys and distinct end keys.
///
/// For each start class the search records up to two paths with different
/// end classes; two recorded paths from different start classes with
/// different end classes exist iff the pair has the property.
pub(crate) fn strong_pair(
    g: &Graph,
    colors: &[Color],
    u: Vertex,
    v: Vertex,
    engine: PathEngine,
) -> Option<[Vec<Vertex>; 2]> {
    let mut starts: Vec<Key> = g.adjacency(u).iter().map(|&(_, e)| key(colors, e)).collect();
    starts.sort_unstable();
    starts.dedup();
    let end_key = |seq: &[Vertex]| {
        let e = g
            .edge_between(seq[seq.len() - 2], seq[seq.len() - 1])
            .expect("path edge");
        key(colors, e)
    };
    let mut recorded: Vec<Vec<(Key, Vec<Vertex>)>> = Vec::new();
    for alpha in starts {
        let mut q = PathQuery::new(g, colors, u, v);
        q.first = EndFilter::Only(alpha);
        let Some(p1) = find_path(&q, engine) else { continue };
        let beta = end_key(&p1);
        q.last = EndFilter::Except(beta);
        let mut ends = vec![(beta, p1)];
        if let Some(p2) = find_path(&q, engine) {
            ends.push((end_key(&p2), p2));
        }
        for earlier in &recorded {
            for (b1, p) in earlier {
                for (b2, r) in &ends {
                    if b1 != b2 {
                        return Some([p.clone(), r.clone()]);
                    }
                }
            }
        }
        recorded.push(ends);
    }
    None
}

/// Every pair is joined by `k` proper paths that pairwise share no internal
/// vertex. At most one of them is the edge `uv` itself.
pub fn is_k_proper_connected(
    g: &Graph,
    c: &EdgeColoring,
    k: usize,
    cap: usize,
) -> Result<VerificationReport> {
    c.check_fits(g)?;
    if k == 0 {
        return Err(Error::precondition("k must be at least 1"));
    }
    if k == 1 {
        return is_proper_connected(g, c);
    }
    if !is_k_connected(g, k) {
        return Err(Error::NotKConnected { k });
    }
    let mut outcomes = Vec::new();
    for (u, v) in pairs(g.n()) {
        let found = disjoint_proper_paths(g, c.colors(), u, v, k, cap)?.map(|paths| {
            paths
                .into_iter()
                .map(|p| ProperPath::from_vertices(g, c, p))
                .collect()
        });
        outcomes.push(((u, v), found));
    }
    Ok(VerificationReport::from_pairs(outcomes))
}

/// `k` internally disjoint proper paths between `u` and `v`, or `None`.
/// Candidate first paths are tried shortest first; the last path of a tuple
/// is decided by the exact existence engine.
pub(crate) fn disjoint_proper_paths(
    g: &Graph,
    colors: &[Color],
    u: Vertex,
    v: Vertex,
    k: usize,
    cap: usize,
) -> Result<Option<Vec<Vec<Vertex>>>> {
    let mut blocked = vec![false; g.n()];
    let mut enumerated = 0usize;
    let mut search = DisjointSearch {
        g,
        colors,
        u,
        v,
        cap,
    };
    search.run(k, &mut blocked, None, &mut enumerated)
}

struct DisjointSearch<'a> {
    g: &'a Graph,
    colors: &'a [Color],
    u: Vertex,
    v: Vertex,
    cap: usize,
}

impl DisjointSearch<'_> {
    fn run(
        &mut self,
        k: usize,
        blocked: &mut Vec<bool>,
        banned: Option<EdgeId>,
        enumerated: &mut usize,
    ) -> Result<Option<Vec<Vec<Vertex>>>> {
        let mut q = PathQuery::new(self.g, self.colors, self.u, self.v);
        q.banned_edge = banned;
        if k == 1 {
            q.blocked = Some(blocked);
            return Ok(find_path(&q, PathEngine::default()).map(|p| vec![p]));
        }
        for len in 1..self.g.n() {
            let mut candidates: Vec<(Vec<Vertex>, Vec<EdgeId>)> = Vec::new();
            let snapshot = blocked.clone();
            let mut level = q;
            level.blocked = Some(&snapshot);
            let mut overflow = false;
            let _ = for_each_path(&level, Some(len), &mut |seq, edges| {
                if *enumerated >= self.cap {
                    overflow = true;
                    return ControlFlow::Break(());
                }
                *enumerated += 1;
                candidates.push((seq.to_vec(), edges.to_vec()));
                ControlFlow::Continue(())
            });
            for (seq, edges) in candidates {
                let interior = &seq[1..seq.len() - 1];
                interior.iter().for_each(|&w| blocked[w] = true);
                let next_banned = if edges.len() == 1 { Some(edges[0]) } else { banned };
                let rest = self.run(k - 1, blocked, next_banned, enumerated);
                interior.iter().for_each(|&w| blocked[w] = false);
                if let Some(mut rest) = rest? {
                    rest.insert(0, seq);
                    return Ok(Some(rest));
                }
            }
            if overflow {
                return Err(Error::EnumerationCap {
                    u: self.u,
                    v: self.v,
                    cap: self.cap,
                });
            }
        }
        Ok(None)
    }
}
