"""Shared fixtures for the test suite: exhaustive tree enumeration and
seeded graph suites. Kept independent of the library's graph machinery
where they serve as oracles."""

from functools import lru_cache
from itertools import product

import numpy as np

from aldous.graphs import WeightedGraph, random_connected_graph

# unlabeled trees on 1..8 vertices (classic counts)
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23}


def prufer_to_edges(seq, n):
    """Decode a Prufer sequence over 1..n into the tree's edge list."""
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = sorted(v for v in range(1, n + 1) if degree[v] == 1)
    import heapq

    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return edges


def tree_canonical(n, edges):
    """Canonical string of an unlabeled tree: rooted encoding at the
    center(s), minimized over the at-most-two choices."""
    if n == 1:
        return "()"
    adjacency = {v: set() for v in range(1, n + 1)}
    for i, j in edges:
        adjacency[i].add(j)
        adjacency[j].add(i)
    # peel leaves to find the center(s)
    remaining = set(range(1, n + 1))
    degree = {v: len(adjacency[v]) for v in remaining}
    layer = [v for v in remaining if degree[v] <= 1]
    while len(remaining) > 2:
        next_layer = []
        for v in layer:
            remaining.discard(v)
            for w in adjacency[v]:
                if w in remaining:
                    degree[w] -= 1
                    if degree[w] == 1:
                        next_layer.append(w)
        layer = next_layer

    def encode(root):
        def rec(v, parent):
            children = sorted(rec(w, v) for w in adjacency[v] if w != parent)
            return "(" + "".join(children) + ")"

        return rec(root, None)

    return min(encode(root) for root in remaining)


@lru_cache(maxsize=None)
def all_trees(n):
    """Edge lists of every unlabeled tree on n vertices (2 <= n <= 8)."""
    if n == 2:
        return [[(1, 2)]]
    seen = {}
    for seq in product(range(1, n + 1), repeat=n - 2):
        edges = prufer_to_edges(seq, n)
        key = tree_canonical(n, edges)
        if key not in seen:
            seen[key] = edges
    return list(seen.values())


def tree_graph(n, edges, weights=None):
    if weights is None:
        weights = [1.0] * len(edges)
    return WeightedGraph(n, dict(zip(edges, weights)))


def seeded_graph_stream(seed, count, n_low, n_high, extra_edge_prob=0.3):
    """Deterministic stream of random connected weighted graphs."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(n_low, n_high + 1))
        out.append(random_connected_graph(n, rng, extra_edge_prob=extra_edge_prob))
    return out
