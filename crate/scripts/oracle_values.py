#!/usr/bin/env python3
"""Brute-force reference values used to freeze expectations in the Rust tests.

Everything here enumerates simple paths and colorings directly; nothing is
shared with the Rust implementation.
"""
import itertools
import random
import networkx as nx


def simple_paths(g, u, v):
    return nx.all_simple_paths(g, u, v)


def proper(g, col, path):
    cs = [col[frozenset(e)] for e in zip(path, path[1:])]
    return all(a != b for a, b in zip(cs, cs[1:]))


def proper_connected(g, col):
    for u, v in itertools.combinations(g.nodes, 2):
        if not any(proper(g, col, p) for p in simple_paths(g, u, v)):
            return False
    return True


def two_proper(g, col, u, v):
    paths = [p for p in simple_paths(g, u, v) if proper(g, col, p)]
    for p, q in itertools.combinations(paths, 2):
        if not (set(p[1:-1]) & set(q[1:-1])):
            return True
    return False


def k2_connected(g, col):
    return all(two_proper(g, col, u, v) for u, v in itertools.combinations(g.nodes, 2))


def pc(g, check=proper_connected):
    edges = [frozenset(e) for e in g.edges]
    for k in range(1, len(edges) + 1):
        for cs in itertools.product(range(1, k + 1), repeat=len(edges) - 1):
            col = dict(zip(edges, (1,) + cs))
            if check(g, col):
                return k


def gk(n, k):
    g = nx.complete_graph(n - k - 1)
    for leaf in range(n - k - 1, n):
        g.add_edge(0, leaf)
    return g


def has_coloring(g, k, tries=20000, seed=0):
    """Random search for a proper-path coloring with k colors."""
    rnd = random.Random(seed)
    edges = [frozenset(e) for e in g.edges]
    return any(proper_connected(g, {e: rnd.randint(1, k) for e in edges}) for _ in range(tries))


def srt(r, t):
    g = nx.Graph()
    for i in range(r):
        g.add_edges_from((i * t + a, i * t + b) for a, b in itertools.combinations(range(t), 2))
        g.add_edge(r * t, i * t)
    return g


if __name__ == "__main__":
    print("pc(C5) =", pc(nx.cycle_graph(5)))
    print("pc(K4) =", pc(nx.complete_graph(4)))
    print("pc(K13) =", pc(nx.star_graph(3)))
    print("pc(gk(8,2)) =", pc(gk(8, 2)))
    print("pc(srt(2,2)) =", pc(srt(2, 2)))
    bowtie = nx.Graph([(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    print("pc(bowtie) =", pc(bowtie))
    tri_bridge = nx.Graph([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
    print("pc(two triangles + bridge) =", pc(tri_bridge))
    tri_pend = nx.Graph([(0, 1), (1, 2), (0, 2), (2, 3)])
    print("pc(triangle + pendant) =", pc(tri_pend))
    print("pc2(C5) =", pc(nx.cycle_graph(5), k2_connected))
    print("pc2(C4) =", pc(nx.cycle_graph(4), k2_connected))
    print("pc2(K4) =", pc(nx.complete_graph(4), k2_connected))
    # gk(n, k) has k+1 pendant edges at one vertex, so pc >= k+1; exact
    # values where small, otherwise a (k+1)-coloring witness
    for n in range(5, 10):
        for k in range(1, 4):
            if n - k - 1 < 3:
                continue
            g = gk(n, k)
            if g.number_of_edges() <= 10:
                print(f"pc(gk({n},{k})) =", pc(g))
            else:
                print(f"pc(gk({n},{k})) <= {k + 1}:", has_coloring(g, k + 1))
    p = nx.petersen_graph()
    print("petersen hamiltonian:", any(
        all(p.has_edge(a, b) for a, b in zip((0,) + perm, perm + (0,)))
        for perm in itertools.permutations(range(1, 10))))
    print("petersen circumference:", max(len(c) for c in nx.simple_cycles(p)))
