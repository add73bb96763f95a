//! Simple undirected graphs with stable vertex and edge ids.
//!
//! Vertices are the dense ids `0..n`. Edges are stored as `(u, v)` with
//! `u < v`, and an edge's id is its position in the edge list. Adjacency lists
//! are kept sorted by neighbor id so that every traversal in the crate visits
//! the smallest vertex first.

mod cycles;
mod decompose;
mod edgelist;
mod graph6;

pub use cycles::{circumference, cycle_of_length, hamiltonian_cycle};
pub use decompose::{
    bipartition, blocks_and_cuts, bridge_block_tree, bridges, is_k_connected, BlockDecomposition,
    BridgeBlockTree,
};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use graph6::{parse_graph6, to_graph6};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<(Vertex, EdgeId)>>,
    lookup: Vec<u32>,
}

const NO_EDGE: u32 = u32::MAX;

/// Maps the vertices and edges of a derived graph back to the graph it came
/// from: `vertices[i]` is the parent id of child vertex `i`, likewise for edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphMap {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
            lookup: vec![NO_EDGE; n * n],
        }
    }

    /// Builds a graph keeping the given edge order as the edge ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n);
        for (a, b) in edges {
            g.push_edge(a, b)?;
        }
        for list in &mut g.adjacency {
            list.sort_unstable();
        }
        Ok(g)
    }

    fn push_edge(&mut self, a: Vertex, b: Vertex) -> Result<()> {
        if a >= self.n || b >= self.n {
            return Err(Error::InvalidGraph(format!(
                "edge ({a}, {b}) out of range for {} vertices",
                self.n
            )));
        }
        if a == b {
            return Err(Error::InvalidGraph(format!("self-loop at {a}")));
        }
        if self.lookup[a * self.n + b] != NO_EDGE {
            return Err(Error::InvalidGraph(format!("parallel edge ({a}, {b})")));
        }
        let id = self.edges.len();
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        self.edges.push((u, v));
        self.adjacency[u].push((v, id));
        self.adjacency[v].push((u, id));
        self.lookup[u * self.n + v] = id as u32;
        self.lookup[v * self.n + u] = id as u32;
        Ok(())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph is simple")
    }

    /// `C_n` with edges `(i, i+1)` in order and the closing edge `(0, n-1)` last.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges = (0..n).map(|i| (i, (i + 1) % n));
        Graph::from_edges(n, edges).expect("cycle is simple")
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    /// `K_{1,m}` with the center as vertex 0.
    pub fn star(m: usize) -> Self {
        Graph::from_edges(m + 1, (1..=m).map(|i| (0, i))).expect("star is simple")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::from_edges(a + b, edges).expect("complete bipartite graph is simple")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).expect("Petersen graph is simple")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    /// `(neighbor, edge id)` pairs sorted by neighbor.
    #[inline]
    pub fn adjacency(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    #[inline]
    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        match self.lookup[u * self.n + v] {
            NO_EDGE => None,
            id => Some(id as usize),
        }
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.lookup[u * self.n + v] != NO_EDGE
    }

    /// The other endpoint of edge `e`.
    #[inline]
    pub fn opposite(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.reachable_from(0).iter().all(|&r| r)
    }

    pub(crate) fn reachable_from(&self, s: Vertex) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<Vertex>> = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &(w, _) in &self.adjacency[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    /// Breadth-first distances from `s`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, s: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::from([s]);
        dist[s] = 0;
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &self.adjacency[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Subgraph induced by `vertices` (taken in the given order), with edges
    /// in parent edge-id order.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (Graph, SubgraphMap) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edge_map = Vec::new();
        let mut edges = Vec::new();
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            if local[a] != usize::MAX && local[b] != usize::MAX {
                edges.push((local[a], local[b]));
                edge_map.push(id);
            }
        }
        let g = Graph::from_edges(vertices.len(), edges).expect("induced subgraph is simple");
        (
            g,
            SubgraphMap {
                vertices: vertices.to_vec(),
                edges: edge_map,
            },
        )
    }

    /// Same vertex set, only the listed edges (kept in ascending id order).
    pub fn spanning_subgraph(&self, edge_ids: &[EdgeId]) -> (Graph, SubgraphMap) {
        let mut ids = edge_ids.to_vec();
        ids.sort_unstable();
        ids.dedup();
        let g = Graph::from_edges(self.n, ids.iter().map(|&e| self.edges[e]))
            .expect("spanning subgraph is simple");
        (
            g,
            SubgraphMap {
                vertices: (0..self.n).collect(),
                edges: ids,
            },
        )
    }

    /// Removes the listed vertices; the rest keep their relative order.
    pub fn remove_vertices(&self, removed: &[Vertex]) -> (Graph, SubgraphMap) {
        let keep: Vec<Vertex> = (0..self.n).filter(|v| !removed.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    pub fn complement(&self) -> Graph {
        let edges = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v));
        Graph::from_edges(self.n, edges).expect("complement is simple")
    }

    /// Pairs of nonadjacent distinct vertices `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n)
            .flat_map(move |u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(move |&(u, v)| !self.has_edge(u, v))
    }
}

pub(crate) fn binomial2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}
