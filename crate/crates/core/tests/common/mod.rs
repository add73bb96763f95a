//! Brute-force reference computations for the integration tests. Nothing here
//! calls the library's path engines or solvers.

#![allow(dead_code)]

pub mod strategies;

use pconn::graph::parse_graph6;
use pconn::{Graph, Vertex};

pub fn corpus(name: &str) -> Vec<Graph> {
    let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph6(l).unwrap())
        .collect()
}

/// Every simple `u`–`v` path as (vertices, edge ids).
pub fn simple_paths(g: &Graph, u: Vertex, v: Vertex) -> Vec<(Vec<Vertex>, Vec<usize>)> {
    fn go(
        g: &Graph,
        at: Vertex,
        v: Vertex,
        seen: &mut Vec<bool>,
        vs: &mut Vec<Vertex>,
        es: &mut Vec<usize>,
        out: &mut Vec<(Vec<Vertex>, Vec<usize>)>,
    ) {
        if at == v {
            out.push((vs.clone(), es.clone()));
            return;
        }
        for &(w, e) in g.adjacency(at) {
            if !seen[w] {
                seen[w] = true;
                vs.push(w);
                es.push(e);
                go(g, w, v, seen, vs, es, out);
                vs.pop();
                es.pop();
                seen[w] = false;
            }
        }
    }
    let mut seen = vec![false; g.n()];
    seen[u] = true;
    let mut out = Vec::new();
    go(g, u, v, &mut seen, &mut vec![u], &mut Vec::new(), &mut out);
    out
}

pub fn proper(colors: &[u32], edges: &[usize]) -> bool {
    edges.windows(2).all(|w| colors[w[0]] != colors[w[1]])
}

pub fn brute_proper_connected(g: &Graph, colors: &[u32]) -> bool {
    (0..g.n()).all(|u| {
        (u + 1..g.n()).all(|v| simple_paths(g, u, v).iter().any(|(_, es)| proper(colors, es)))
    })
}

/// Smallest `k` admitting a proper-path coloring, by trying every coloring
/// in restricted-growth form. Only for tiny graphs.
pub fn brute_pc(g: &Graph) -> usize {
    let m = g.m();
    for k in 1..=m.max(1) {
        if restricted_growth(m, k).any(|c| brute_proper_connected(g, &c)) {
            return k;
        }
    }
    unreachable!("m colors always suffice")
}

/// All colorings of `m` edges with colors `1..=k` in restricted-growth form:
/// each color's first use comes after the first use of every smaller color.
pub fn restricted_growth(m: usize, k: usize) -> impl Iterator<Item = Vec<u32>> {
    let mut stack: Vec<Vec<u32>> = vec![Vec::new()];
    std::iter::from_fn(move || {
        while let Some(prefix) = stack.pop() {
            if prefix.len() == m {
                return Some(prefix);
            }
            let top = prefix.iter().copied().max().unwrap_or(0);
            for c in (1..=(top + 1).min(k as u32)).rev() {
                let mut next = prefix.clone();
                next.push(c);
                stack.push(next);
            }
        }
        None
    })
}

/// Edges of the labelled tree with Prüfer sequence `seq` over `0..n`.
pub fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf.min(x), leaf.max(x)));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Canonical code of an unrooted tree on at most 32 vertices: the smaller
/// AHU encoding over its one or two centers, packed as bits (1 opens a
/// subtree, 0 closes it) with its length.
pub fn tree_canon(n: usize, edges: &[(usize, usize)]) -> (u64, u32) {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> (u64, u32) {
        let mut kids: Vec<(u64, u32)> = adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| encode(adj, w, v))
            .collect();
        kids.sort_unstable();
        let (mut bits, mut len) = (1u64, 1u32);
        for (b, l) in kids {
            bits = bits << l | b;
            len += l;
        }
        (bits << 1, len + 1)
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut left = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            degree[v] = 0;
            for &w in &adj[v] {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| encode(&adj, c, usize::MAX)).min().unwrap()
}

/// Every tree on `n` vertices up to isomorphism, by running through all
/// Prüfer sequences.
pub fn all_trees(n: usize) -> Vec<Graph> {
    if n <= 2 {
        return vec![Graph::path(n)];
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let edges = prufer_edges(&seq, n);
        if seen.insert(tree_canon(n, &edges)) {
            out.push(Graph::from_edges(n, edges).unwrap());
        }
        let mut i = 0;
        while i < seq.len() && seq[i] == n - 1 {
            seq[i] = 0;
            i += 1;
        }
        if i == seq.len() {
            return out;
        }
        seq[i] += 1;
    }
}

/// SplitMix64 step, for test-side sampling independent of the library's.
pub fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Two proper `u`–`v` paths with no common internal vertex, for every pair.
pub fn brute_two_proper_connected(g: &Graph, colors: &[u32]) -> bool {
    (0..g.n()).all(|u| {
        (u + 1..g.n()).all(|v| {
            let paths: Vec<Vec<Vertex>> = simple_paths(g, u, v)
                .into_iter()
                .filter(|(_, es)| proper(colors, es))
                .map(|(vs, _)| vs)
                .collect();
            paths.iter().enumerate().any(|(i, p)| {
                paths[i + 1..].iter().any(|q| {
                    // two direct edges cannot both exist in a simple graph
                    let inner = &p[1..p.len() - 1];
                    q[1..q.len() - 1].iter().all(|x| !inner.contains(x))
                })
            })
        })
    })
}
