//! Blocks, bridges, the bridge-block tree and bipartitions.

use std::collections::VecDeque;

use super::{EdgeId, Graph, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted vertex sets, ordered by (smallest vertex, then lexicographically).
    pub blocks: Vec<Vec<Vertex>>,
    /// Edge ids of each block, ascending.
    pub block_edges: Vec<Vec<EdgeId>>,
    pub cut_vertices: Vec<Vertex>,
}

impl BlockDecomposition {
    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// Blocks containing exactly one cut vertex, with that cut vertex.
    pub fn end_blocks(&self) -> impl Iterator<Item = (usize, Vertex)> + '_ {
        self.blocks.iter().enumerate().filter_map(|(i, b)| {
            let mut cuts = b.iter().copied().filter(|&v| self.is_cut_vertex(v));
            match (cuts.next(), cuts.next()) {
                (Some(x), None) => Some((i, x)),
                _ => None,
            }
        })
    }
}

/// Lowpoint DFS from vertex 0. Requires a connected graph.
pub fn blocks_and_cuts(g: &Graph) -> Result<BlockDecomposition> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![vec![0]],
            block_edges: vec![vec![]],
            cut_vertices: vec![],
        });
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut raw_blocks: Vec<Vec<EdgeId>> = Vec::new();
    // (vertex, edge to parent, next adjacency index)
    let mut frames: Vec<(Vertex, Option<EdgeId>, usize)> = vec![(0, None, 0)];
    let mut clock = 0;
    let mut root_children = 0;
    disc[0] = clock;
    low[0] = clock;

    while let Some(frame) = frames.last_mut() {
        let (v, parent_edge, next) = *frame;
        if let Some(&(w, e)) = g.adjacency(v).get(next) {
            frame.2 += 1;
            if Some(e) == parent_edge {
                continue;
            }
            if disc[w] == usize::MAX {
                clock += 1;
                disc[w] = clock;
                low[w] = clock;
                edge_stack.push(e);
                if v == 0 {
                    root_children += 1;
                }
                frames.push((w, Some(e), 0));
            } else if disc[w] < disc[v] {
                edge_stack.push(e);
                low[v] = low[v].min(disc[w]);
            }
            continue;
        }
        frames.pop();
        let Some(tree_edge) = parent_edge else { continue };
        let p = g.opposite(tree_edge, v);
        low[p] = low[p].min(low[v]);
        if low[v] >= disc[p] {
            if p != 0 {
                is_cut[p] = true;
            }
            let mut block = Vec::new();
            while let Some(e) = edge_stack.pop() {
                block.push(e);
                if e == tree_edge {
                    break;
                }
            }
            raw_blocks.push(block);
        }
    }
    if root_children > 1 {
        is_cut[0] = true;
    }

    let mut blocks: Vec<(Vec<Vertex>, Vec<EdgeId>)> = raw_blocks
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let mut verts: Vec<Vertex> = edges
                .iter()
                .flat_map(|&e| {
                    let (a, b) = g.edge(e);
                    [a, b]
                })
                .collect();
            verts.sort_unstable();
            verts.dedup();
            (verts, edges)
        })
        .collect();
    blocks.sort();
    let (blocks, block_edges) = blocks.into_iter().unzip();
    Ok(BlockDecomposition {
        blocks,
        block_edges,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    })
}

/// Edge ids of all bridges, ascending. Works on disconnected graphs too.
pub fn bridges(g: &Graph) -> Vec<EdgeId> {
    let mut out = Vec::new();
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let (sub, map) = g.induced_subgraph(&comp);
        let dec = blocks_and_cuts(&sub).expect("component is connected");
        out.extend(
            dec.block_edges
                .iter()
                .filter(|b| b.len() == 1)
                .map(|b| map.edges[b[0]]),
        );
    }
    out.sort_unstable();
    out
}

/// The graph obtained by contracting every bridgeless component; its edges
/// are exactly the bridges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeBlockTree {
    /// Bridge edge ids, ascending; tree edge `i` corresponds to `bridges[i]`.
    pub bridges: Vec<EdgeId>,
    /// Components of `(V, E \ B)`, sorted, ordered by smallest vertex.
    pub components: Vec<Vec<Vertex>>,
    /// Component id of each vertex.
    pub component_of: Vec<usize>,
    pub tree: Graph,
}

impl BridgeBlockTree {
    pub fn is_singleton(&self, c: usize) -> bool {
        self.components[c].len() == 1
    }

    /// Bridges with an endpoint in component `c`.
    pub fn cut_edges_of(&self, c: usize) -> Vec<EdgeId> {
        self.tree
            .adjacency(c)
            .iter()
            .map(|&(_, i)| self.bridges[i])
            .collect()
    }

    pub fn max_degree(&self) -> usize {
        self.tree.max_degree()
    }
}

pub fn bridge_block_tree(g: &Graph) -> Result<BridgeBlockTree> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let bridge_ids = bridges(g);
    let mut is_bridge = vec![false; g.m()];
    for &e in &bridge_ids {
        is_bridge[e] = true;
    }
    let kept: Vec<EdgeId> = (0..g.m()).filter(|&e| !is_bridge[e]).collect();
    let (rest, _) = g.spanning_subgraph(&kept);
    let components = rest.components();
    let mut component_of = vec![0; g.n()];
    for (c, members) in components.iter().enumerate() {
        for &v in members {
            component_of[v] = c;
        }
    }
    let tree_edges = bridge_ids.iter().map(|&e| {
        let (a, b) = g.edge(e);
        (component_of[a], component_of[b])
    });
    let tree = Graph::from_edges(components.len(), tree_edges)
        .map_err(|e| Error::defect(format!("bridge-block contraction: {e}")))?;
    Ok(BridgeBlockTree {
        bridges: bridge_ids,
        components,
        component_of,
        tree,
    })
}

/// Two-coloring of the vertices by BFS, smallest vertex of each component on
/// the first side. `None` when an odd cycle exists.
pub fn bipartition(g: &Graph) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let mut side = vec![u8::MAX; g.n()];
    for s in 0..g.n() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
    }
    let x = (0..g.n()).filter(|&v| side[v] == 0).collect();
    let y = (0..g.n()).filter(|&v| side[v] == 1).collect();
    Some((x, y))
}

/// At least `k + 1` vertices and no vertex cut of size below `k`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if g.n() < k + 1 || !g.is_connected() {
        return false;
    }
    if k == 1 {
        return true;
    }
    if k == 2 {
        return blocks_and_cuts(g).is_ok_and(|d| d.cut_vertices.is_empty());
    }
    let mut removed = Vec::with_capacity(k - 1);
    !has_small_cut(g, 0, k - 1, &mut removed)
}

fn has_small_cut(g: &Graph, from: Vertex, size: usize, removed: &mut Vec<Vertex>) -> bool {
    if removed.len() == size {
        let (rest, _) = g.remove_vertices(removed);
        return !rest.is_connected();
    }
    for v in from..g.n() {
        removed.push(v);
        let found = has_small_cut(g, v + 1, size, removed);
        removed.pop();
        if found {
            return true;
        }
    }
    false
}
