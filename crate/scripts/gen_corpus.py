#!/usr/bin/env python3
"""Regenerate the graph6 corpora under crates/core/tests/data.

Uses networkx (graph atlas + its graph6 encoder) so the corpora are produced
by an encoder independent of the Rust parser they are fed to.
"""
import itertools
import os
import sys

import networkx as nx

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "tests", "data")


def g6(g):
    return nx.to_graph6_bytes(nx.convert_node_labels_to_integers(g), header=False).decode().strip()


def write(name, graphs):
    with open(os.path.join(OUT, name), "w") as f:
        for g in graphs:
            f.write(g6(g) + "\n")
    print(f"{name}: {len(graphs)} graphs", file=sys.stderr)


def dedupe(graphs):
    buckets = {}
    out = []
    for g in graphs:
        key = (g.number_of_nodes(), g.number_of_edges(), nx.weisfeiler_lehman_graph_hash(g))
        seen = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(g, h) for h in seen):
            continue
        seen.append(g)
        out.append(g)
    return out


def max_degree_three_on_eight():
    base = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 7
            and max((d for _, d in g.degree()), default=0) <= 3]
    cands = []
    for g in base:
        free = [v for v in g.nodes if g.degree(v) <= 2]
        for r in range(0, 4):
            for nbrs in itertools.combinations(free, r):
                h = g.copy()
                h.add_node(7)
                h.add_edges_from((7, u) for u in nbrs)
                cands.append(h)
    return dedupe(cands)


def bridgeless_named():
    out = [nx.petersen_graph()]
    for k in (3, 4, 5):
        out.append(nx.circular_ladder_graph(k))  # prisms on 6, 8, 10 vertices
    for n in range(4, 11):
        out.append(nx.wheel_graph(n))
    # theta graphs: two vertices joined by three internally disjoint paths
    for a, b, c in itertools.combinations_with_replacement(range(1, 5), 3):
        if (a, b, c).count(1) > 1 or 2 + (a - 1) + (b - 1) + (c - 1) > 10:
            continue
        g = nx.Graph()
        nxt = 2
        for length in (a, b, c):
            prev = 0
            for _ in range(length - 1):
                g.add_edge(prev, nxt)
                prev = nxt
                nxt += 1
            g.add_edge(prev, 1)
        out.append(g)
    out.append(nx.complete_bipartite_graph(3, 3))
    out.append(nx.complete_bipartite_graph(2, 5))
    out.append(nx.cycle_graph(9))
    out.append(nx.cycle_graph(10))
    return out


def main():
    os.makedirs(OUT, exist_ok=True)
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() >= 1]
    connected = [g for g in atlas if nx.is_connected(g)]
    write("connected_upto7.g6", connected)

    bridgeless = [g for g in connected if g.number_of_nodes() >= 3 and not nx.has_bridges(g)]
    write("bridgeless_corpus.g6", bridgeless + dedupe(bridgeless_named()))

    dirac = [g for g in connected if g.number_of_nodes() >= 3
             and 2 * min(d for _, d in g.degree()) >= g.number_of_nodes()
             and g.number_of_edges() < g.number_of_nodes() * (g.number_of_nodes() - 1) // 2]
    eight = [nx.complement(h) for h in max_degree_three_on_eight() if h.number_of_edges() > 0]
    write("dirac_upto8.g6", dirac + eight)


if __name__ == "__main__":
    main()
