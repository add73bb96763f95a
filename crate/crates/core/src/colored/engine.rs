//! Proper-path search over possibly partial colorings.
//!
//! Colors are read from a slice indexed by edge id where `0` marks an
//! uncolored edge. An uncolored edge conflicts with nothing, so on a partial
//! coloring every query answers the relaxed question "could some completion
//! contain such a path"; on a total coloring the answer is exact.
//!
//! Two exact deciders are provided: a depth-first search over simple paths,
//! and a reduction to perfect matching in which each vertex is split into one
//! node per incident color class plus absorber nodes, so that a perfect
//! matching selects a proper source-target path (plus possibly some disjoint
//! properly colored cycles, which are discarded).

use std::ops::ControlFlow;

use petgraph::algo::maximum_matching;
use petgraph::graph::{NodeIndex, UnGraph};

use super::coloring::Color;
use crate::graph::{EdgeId, Graph, Vertex};

/// Identity of an edge's color for the purpose of conflicts: equal keys at a
/// shared vertex make two edges non-consecutive on a proper path.
pub(crate) type Key = u64;

#[inline]
pub(crate) fn key(colors: &[Color], e: EdgeId) -> Key {
    match colors[e] {
        0 => (1 << 32) + e as Key,
        c => c as Key,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum EndFilter {
    Any,
    Only(Key),
    Except(Key),
}

impl EndFilter {
    #[inline]
    fn admits(self, k: Key) -> bool {
        match self {
            EndFilter::Any => true,
            EndFilter::Only(x) => x == k,
            EndFilter::Except(x) => x != k,
        }
    }
}

#[derive(Clone, Copy)]
pub(crate) struct PathQuery<'a> {
    pub g: &'a Graph,
    pub colors: &'a [Color],
    pub source: Vertex,
    pub target: Vertex,
    pub blocked: Option<&'a [bool]>,
    pub banned_edge: Option<EdgeId>,
    pub first: EndFilter,
    pub last: EndFilter,
}

impl<'a> PathQuery<'a> {
    pub(crate) fn new(g: &'a Graph, colors: &'a [Color], source: Vertex, target: Vertex) -> Self {
        PathQuery {
            g,
            colors,
            source,
            target,
            blocked: None,
            banned_edge: None,
            first: EndFilter::Any,
            last: EndFilter::Any,
        }
    }

    #[inline]
    fn usable_vertex(&self, v: Vertex) -> bool {
        self.blocked.is_none_or(|b| !b[v])
    }

    #[inline]
    fn usable_edge(&self, e: EdgeId) -> bool {
        self.banned_edge != Some(e)
    }

    /// Whether edge `e` may be the first edge (leaving the source).
    #[inline]
    fn may_start(&self, e: EdgeId) -> bool {
        self.first.admits(key(self.colors, e))
    }

    #[inline]
    fn may_end(&self, e: EdgeId) -> bool {
        self.last.admits(key(self.colors, e))
    }
}

/// Which exact decider answers existence queries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PathEngine {
    /// Bounded depth-first search, falling back to matching when the step
    /// bound is hit.
    #[default]
    Hybrid,
    /// Depth-first search over simple paths, unbounded.
    Search,
    /// Perfect-matching reduction.
    Matching,
}

pub(crate) fn find_path(q: &PathQuery<'_>, engine: PathEngine) -> Option<Vec<Vertex>> {
    match engine {
        PathEngine::Search => dfs_find(q, u64::MAX).expect("unbounded search always decides"),
        PathEngine::Matching => matching_find(q),
        PathEngine::Hybrid => {
            let limit = 32 * (q.g.n() + q.g.m()) as u64 + 256;
            match dfs_find(q, limit) {
                Some(answer) => answer,
                None => matching_find(q),
            }
        }
    }
}

/// `None` when the step limit was reached before a verdict.
fn dfs_find(q: &PathQuery<'_>, limit: u64) -> Option<Option<Vec<Vertex>>> {
    let g = q.g;
    let (s, t) = (q.source, q.target);
    let mut visited = vec![false; g.n()];
    visited[s] = true;
    let mut path = vec![s];
    // (adjacency cursor, key of the edge used to enter the vertex)
    let mut frames: Vec<(usize, Option<Key>)> = vec![(0, None)];
    let mut steps = 0u64;
    while let Some(&mut (ref mut cursor, incoming)) = frames.last_mut() {
        let v = *path.last().expect("path tracks frames");
        let Some(&(w, e)) = g.adjacency(v).get(*cursor) else {
            frames.pop();
            visited[v] = false;
            path.pop();
            continue;
        };
        *cursor += 1;
        steps += 1;
        if steps > limit {
            return None;
        }
        if visited[w] || !q.usable_edge(e) || !q.usable_vertex(w) {
            continue;
        }
        let k = key(q.colors, e);
        if incoming.is_some_and(|i| i == k) || (v == s && !q.may_start(e)) {
            continue;
        }
        if w == t {
            if q.may_end(e) {
                path.push(t);
                return Some(Some(path));
            }
            continue;
        }
        visited[w] = true;
        path.push(w);
        frames.push((0, Some(k)));
    }
    Some(None)
}

const EXTERNAL: usize = usize::MAX;

fn matching_find(q: &PathQuery<'_>) -> Option<Vec<Vertex>> {
    let g = q.g;
    let (s, t) = (q.source, q.target);
    let mut gadget: UnGraph<(), ()> = UnGraph::default();
    // owner[node] = original vertex for class nodes, EXTERNAL for absorbers
    let mut owner: Vec<usize> = Vec::new();
    // class_nodes[v] = (key, node) sorted by key
    let mut class_nodes: Vec<Vec<(Key, NodeIndex)>> = vec![Vec::new(); g.n()];

    let allowed = |v: Vertex, e: EdgeId| -> bool {
        let w = g.opposite(e, v);
        if !q.usable_edge(e) || !q.usable_vertex(v) || !q.usable_vertex(w) {
            return false;
        }
        if (v == s || w == s) && !q.may_start(e) {
            return false;
        }
        !((v == t || w == t) && !q.may_end(e))
    };

    for v in 0..g.n() {
        let mut keys: Vec<Key> = g
            .adjacency(v)
            .iter()
            .filter(|&&(_, e)| allowed(v, e))
            .map(|&(_, e)| key(q.colors, e))
            .collect();
        keys.sort_unstable();
        keys.dedup();
        if keys.is_empty() {
            if v == s || v == t {
                return None;
            }
            continue;
        }
        let nodes: Vec<(Key, NodeIndex)> = keys
            .iter()
            .map(|&k| {
                owner.push(v);
                (k, gadget.add_node(()))
            })
            .collect();
        let absorbers = if v == s || v == t { keys.len() - 1 } else { keys.len() };
        let pads: Vec<NodeIndex> = (0..absorbers)
            .map(|_| {
                owner.push(EXTERNAL);
                gadget.add_node(())
            })
            .collect();
        for &p in &pads {
            for &(_, c) in &nodes {
                gadget.add_edge(p, c, ());
            }
        }
        if v != s && v != t && pads.len() >= 2 {
            gadget.add_edge(pads[0], pads[1], ());
        }
        class_nodes[v] = nodes;
    }

    let node_of = |v: Vertex, k: Key| -> NodeIndex {
        let list = &class_nodes[v];
        let i = list.binary_search_by_key(&k, |&(kk, _)| kk).expect("class exists");
        list[i].1
    };
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if allowed(a, e) && !class_nodes[a].is_empty() && !class_nodes[b].is_empty() {
            let k = key(q.colors, e);
            gadget.add_edge(node_of(a, k), node_of(b, k), ());
        }
    }

    let matching = maximum_matching(&gadget);
    if !matching.is_perfect() {
        return None;
    }
    let external_mate = |node: NodeIndex| -> Option<NodeIndex> {
        let mate = matching.mate(node)?;
        let (a, b) = (owner[node.index()], owner[mate.index()]);
        (b != EXTERNAL && a != b).then_some(mate)
    };

    let mut path = vec![s];
    let mut current = class_nodes[s]
        .iter()
        .find_map(|&(_, n)| external_mate(n).map(|m| (n, m)))
        .expect("source has exactly one external partner");
    loop {
        let (_, arrived) = current;
        let v = owner[arrived.index()];
        path.push(v);
        if v == t {
            return Some(path);
        }
        let next = class_nodes[v]
            .iter()
            .filter(|&&(_, n)| n != arrived)
            .find_map(|&(_, n)| external_mate(n).map(|m| (n, m)))
            .expect("internal path vertex has two external partners");
        current = next;
    }
}

/// Visits every proper simple path from source to target (restricted to
/// exactly `exact_len` edges when given), in depth-first order with
/// neighbors ascending.
pub(crate) fn for_each_path<F>(q: &PathQuery<'_>, exact_len: Option<usize>, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[Vertex], &[EdgeId]) -> ControlFlow<()>,
{
    let mut visited = vec![false; q.g.n()];
    visited[q.source] = true;
    let mut path = vec![q.source];
    let mut edges = Vec::new();
    enumerate_rec(q, exact_len, &mut visited, &mut path, &mut edges, visit)
}

fn enumerate_rec<F>(
    q: &PathQuery<'_>,
    exact_len: Option<usize>,
    visited: &mut [bool],
    path: &mut Vec<Vertex>,
    edges: &mut Vec<EdgeId>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[Vertex], &[EdgeId]) -> ControlFlow<()>,
{
    let v = *path.last().expect("path is never empty");
    let incoming = edges.last().map(|&e| key(q.colors, e));
    let depth = edges.len();
    for &(w, e) in q.g.adjacency(v) {
        if visited[w] || !q.usable_edge(e) || !q.usable_vertex(w) {
            continue;
        }
        let k = key(q.colors, e);
        if incoming == Some(k) || (depth == 0 && !q.may_start(e)) {
            continue;
        }
        if w == q.target {
            if q.may_end(e) && exact_len.is_none_or(|l| l == depth + 1) {
                path.push(w);
                edges.push(e);
                let flow = visit(path, edges);
                path.pop();
                edges.pop();
                flow?;
            }
            continue;
        }
        if exact_len.is_some_and(|l| depth + 1 >= l) {
            continue;
        }
        visited[w] = true;
        path.push(w);
        edges.push(e);
        let flow = enumerate_rec(q, exact_len, visited, path, edges, visit);
        edges.pop();
        path.pop();
        visited[w] = false;
        flow?;
    }
    ControlFlow::Continue(())
}

/// Checks a vertex sequence against a query's coloring rules.
pub(crate) fn path_is_proper(g: &Graph, colors: &[Color], seq: &[Vertex]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let mut seen = vec![false; g.n()];
    let mut prev: Option<Key> = None;
    for (i, &v) in seq.iter().enumerate() {
        if v >= g.n() || seen[v] {
            return false;
        }
        seen[v] = true;
        if i == 0 {
            continue;
        }
        let Some(e) = g.edge_between(seq[i - 1], v) else {
            return false;
        };
        let k = key(colors, e);
        if prev == Some(k) {
            return false;
        }
        prev = Some(k);
    }
    true
}
