mod common;

use common::strategies::connected_graph;
use common::{brute_pc, brute_proper_connected, corpus};
use pconn::colored::{is_k_proper_connected, is_proper_connected, DEFAULT_PATH_CAP};
use pconn::graph::is_k_connected;
use pconn::solver::{bridge_lower_bound, pc_exact, pc_k_exact};
use pconn::{Budget, Error, Graph};
use proptest::prelude::*;

const B: Budget = Budget::DEFAULT;

#[test]
fn bounds_and_witnesses_on_corpus() {
    for g in corpus("connected_upto7.g6").into_iter().filter(|g| g.n() >= 2) {
        let r = pc_exact(&g, B).unwrap();
        assert!(r.value >= 1 && r.value <= g.max_degree() + 1);
        assert_eq!(r.value == 1, g.is_complete());
        assert!(r.value >= bridge_lower_bound(&g));
        assert!(r.witness.palette() as usize <= r.value);
        assert!(is_proper_connected(&g, &r.witness).unwrap().holds);
        assert!(brute_proper_connected(&g, r.witness.colors()));
    }
}

#[test]
fn matches_brute_force_on_small_graphs() {
    for g in corpus("connected_upto7.g6").into_iter().filter(|g| g.n() >= 2 && g.m() <= 7) {
        assert_eq!(pc_exact(&g, B).unwrap().value, brute_pc(&g));
    }
}

#[test]
fn two_disjoint_needs_at_least_pc() {
    for g in corpus("connected_upto7.g6").into_iter().filter(|g| g.n() <= 6 && is_k_connected(g, 2)) {
        let p1 = pc_exact(&g, B).unwrap().value;
        let p2 = pc_k_exact(&g, 2, B).unwrap();
        assert!(p2.value >= p1);
        assert!(is_k_proper_connected(&g, &p2.witness, 2, DEFAULT_PATH_CAP).unwrap().holds);
    }
}

#[test]
fn undefined_without_connectivity() {
    let path = Graph::path(4);
    assert_eq!(pc_k_exact(&path, 2, B).unwrap_err(), Error::NotKConnected { k: 2 });
    let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    assert_eq!(pc_exact(&split, B).unwrap_err(), Error::Disconnected);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn spanning_subgraphs_need_no_fewer_colors(g in connected_graph(3, 8, 4)) {
        // the underlying spanning tree taken first by the strategy is edges 0..n-1
        let (tree, _) = g.spanning_subgraph(&(0..g.n() - 1).collect::<Vec<_>>());
        prop_assert!(tree.is_tree());
        let pg = pc_exact(&g, B).unwrap().value;
        let pt = pc_exact(&tree, B).unwrap().value;
        prop_assert!(pg <= pt);
        prop_assert_eq!(pt, tree.max_degree().max(1));
    }
}
