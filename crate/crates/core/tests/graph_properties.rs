mod common;

use common::strategies::connected_graph;
use common::{corpus, simple_paths};
use pconn::graph::{
    bipartition, blocks_and_cuts, bridge_block_tree, bridges, hamiltonian_cycle, parse_graph6, to_graph6,
};
use pconn::{Budget, Graph};
use proptest::prelude::*;

fn is_bridge_by_removal(g: &Graph, e: usize) -> bool {
    let keep: Vec<usize> = (0..g.m()).filter(|&f| f != e).collect();
    !g.spanning_subgraph(&keep).0.is_connected()
}

fn hamiltonian_by_permutations(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let mut rest: Vec<usize> = (1..n).collect();
    fn permute(g: &Graph, rest: &mut Vec<usize>, k: usize) -> bool {
        if k == rest.len() {
            let cyc: Vec<usize> = std::iter::once(0).chain(rest.iter().copied()).collect();
            return (0..cyc.len()).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]));
        }
        for i in k..rest.len() {
            rest.swap(k, i);
            if permute(g, rest, k + 1) {
                return true;
            }
            rest.swap(k, i);
        }
        false
    }
    permute(g, &mut rest, 0)
}

fn has_odd_cycle(g: &Graph) -> bool {
    g.edges().iter().enumerate().any(|(e, &(u, v))| {
        simple_paths(g, u, v)
            .iter()
            .any(|(_, es)| es.len() % 2 == 0 && !es.contains(&e))
    })
}

fn check_bridge_tree(g: &Graph) {
    let found = bridges(g);
    for e in 0..g.m() {
        assert_eq!(found.contains(&e), is_bridge_by_removal(g, e), "edge {e}");
    }
    let t = bridge_block_tree(g).unwrap();
    let mut inside = 0;
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let same = t.component_of[a] == t.component_of[b];
        assert_eq!(same, !t.bridges.contains(&e));
        inside += usize::from(same);
    }
    assert_eq!(inside + t.bridges.len(), g.m());
    assert_eq!(t.tree.n(), t.components.len());
    assert_eq!(t.tree.m() + 1, t.tree.n());
    assert!(t.tree.is_connected());
}

#[test]
fn graph6_round_trip_on_corpora() {
    for name in ["connected_upto7.g6", "bridgeless_corpus.g6", "dirac_upto8.g6"] {
        let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
        for line in std::fs::read_to_string(path).unwrap().lines() {
            assert_eq!(to_graph6(&parse_graph6(line).unwrap()), line);
        }
    }
}

#[test]
fn bridge_tree_partitions_edges_on_corpus() {
    for g in corpus("connected_upto7.g6") {
        check_bridge_tree(&g);
    }
}

#[test]
fn hamiltonian_search_matches_permutations_on_corpus() {
    for g in corpus("connected_upto7.g6") {
        let found = hamiltonian_cycle(&g, Budget::DEFAULT).unwrap();
        assert_eq!(found.is_some(), hamiltonian_by_permutations(&g), "{}", to_graph6(&g));
        if let Some(c) = found {
            assert_eq!(c.len(), g.n());
            assert!((0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()])));
        }
    }
}

#[test]
fn bipartition_matches_odd_cycles_on_corpus() {
    for g in corpus("connected_upto7.g6") {
        assert_eq!(bipartition(&g).is_some(), !has_odd_cycle(&g), "{}", to_graph6(&g));
    }
}

#[test]
fn blocks_cover_every_edge_once() {
    for g in corpus("connected_upto7.g6").into_iter().filter(|g| g.m() > 0) {
        let d = blocks_and_cuts(&g).unwrap();
        let mut all: Vec<usize> = d.block_edges.concat();
        all.sort_unstable();
        assert_eq!(all, (0..g.m()).collect::<Vec<_>>());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bridge_tree_on_eight_vertices(g in connected_graph(8, 8, 2)) {
        check_bridge_tree(&g);
    }

    #[test]
    fn hamiltonian_on_eight_vertices(g in connected_graph(8, 8, 4)) {
        let found = hamiltonian_cycle(&g, Budget::DEFAULT).unwrap();
        prop_assert_eq!(found.is_some(), hamiltonian_by_permutations(&g));
    }

    #[test]
    fn bipartition_on_eight_vertices(g in connected_graph(8, 8, 1)) {
        prop_assert_eq!(bipartition(&g).is_some(), !has_odd_cycle(&g));
    }

    #[test]
    fn graph6_round_trip(g in connected_graph(1, 70, 3)) {
        let s = to_graph6(&g);
        let back = parse_graph6(&s).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert!(g.edges().iter().all(|&(u, v)| back.has_edge(u, v)));
        prop_assert_eq!(back.m(), g.m());
    }
}
