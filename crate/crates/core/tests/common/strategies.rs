use pconn::Graph;
use proptest::prelude::*;

/// Connected graph on `min_n..=max_n` vertices: a random tree plus each other
/// pair with probability about `density`/8.
pub fn connected_graph(min_n: usize, max_n: usize, density: u8) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(move |n| {
        let parents = (1..n).map(|i| 0..i).collect::<Vec<_>>();
        let extra = proptest::collection::vec(0u8..8, n * (n - 1) / 2);
        (Just(n), parents, extra).prop_map(move |(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extra[k] < density && !edges.contains(&(u, v)) {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Connected graph with a coloring from `1..=k`.
pub fn colored_graph(min_n: usize, max_n: usize, density: u8, k: u32) -> impl Strategy<Value = (Graph, Vec<u32>)> {
    connected_graph(min_n, max_n, density).prop_flat_map(move |g| {
        let m = g.m();
        (Just(g), proptest::collection::vec(1..=k, m))
    })
}
