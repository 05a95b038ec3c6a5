"""Shared fixtures and independent oracle implementations.

The oracles here deliberately avoid the package's bitmask machinery (dict
adjacency, recursion, union-find) so that agreement between a solver and its
oracle genuinely checks two code paths.
"""

from __future__ import annotations

import random
from collections import deque

import pytest

from planacyclic import Digraph, UndirectedGraph


def random_digraph(rng: random.Random, max_n: int = 12) -> Digraph:
    n = rng.randint(1, max_n)
    p = rng.uniform(0.05, 0.5)
    arcs = [(u, v) for u in range(n) for v in range(n)
            if u != v and rng.random() < p]
    return Digraph(n, arcs)


def random_undirected(rng: random.Random, max_n: int = 10) -> UndirectedGraph:
    n = rng.randint(1, max_n)
    p = rng.uniform(0.1, 0.6)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return UndirectedGraph(n, edges)


def dfs_has_directed_cycle(digraph: Digraph, subset) -> bool:
    """Independent acyclicity oracle: recursive three-color DFS on dicts."""
    subset = set(subset)
    adj = {v: sorted(w for u, w in digraph.arcs if u == v and w in subset)
           for v in subset}
    color = {v: 0 for v in subset}

    def visit(v) -> bool:
        color[v] = 1
        for w in adj[v]:
            if color[w] == 1:
                return True
            if color[w] == 0 and visit(w):
                return True
        color[v] = 2
        return False

    return any(color[v] == 0 and visit(v) for v in sorted(subset))


def per_arc_bfs_digirth(digraph: Digraph) -> int | None:
    """Independent digirth oracle: for every arc (u, v), shortest directed
    path v -> u plus one, minimized."""
    adj = {v: [] for v in range(digraph.n)}
    for u, v in digraph.arcs:
        adj[u].append(v)
    best = None
    for u, v in digraph.arcs:
        dist = {v: 0}
        queue = deque([v])
        while queue:
            w = queue.popleft()
            if w == u:
                break
            for x in adj[w]:
                if x not in dist:
                    dist[x] = dist[w] + 1
                    queue.append(x)
        if u in dist and (best is None or dist[u] + 1 < best):
            best = dist[u] + 1
    return best


def union_find_is_forest(n: int, edges, subset) -> bool:
    """Independent forest oracle: union-find over the induced edges."""
    subset = set(subset)
    parent = {v: v for v in subset}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        if u in subset and v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
    return True


def octahedron() -> UndirectedGraph:
    # K_{2,2,2}: complement of a perfect matching on 6 vertices
    return UndirectedGraph(6, [(u, v) for u in range(6) for v in range(u + 1, 6)
                               if (u, v) not in ((0, 3), (1, 4), (2, 5))])


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0x5EED)
