"""Brute-force oracles and graph strategies shared by the test suite.

The oracles enumerate subsets with itertools and never touch the package's
counting internals, so they stay independent of the code paths they check.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from hypothesis import strategies as st

from ramsey_abc.graph import Graph


def brute_count_cliques(g: Graph, p: int) -> int:
    total = 0
    for combo in combinations(range(g.n), p):
        if all(g.has_edge(u, v) for u, v in combinations(combo, 2)):
            total += 1
    return total


def brute_count_indep(g: Graph, q: int) -> int:
    total = 0
    for combo in combinations(range(g.n), q):
        if not any(g.has_edge(u, v) for u, v in combinations(combo, 2)):
            total += 1
    return total


def brute_fitness(g: Graph, p: int, q: int) -> int:
    return brute_count_cliques(g, p) + brute_count_indep(g, q)


def brute_independence_number(g: Graph) -> int:
    for size in range(g.n, 0, -1):
        if brute_count_indep(g, size):
            return size
    return 0


def recursive_independence_number(g: Graph) -> int:
    """Textbook include/exclude recursion on the lowest remaining vertex.

    No bounds, no colouring: slower than the package implementation but a
    genuinely different algorithm, usable up to n ~ 20.
    """

    def rec(mask: int) -> int:
        if not mask:
            return 0
        b = mask & -mask
        v = b.bit_length() - 1
        without = rec(mask ^ b)
        with_v = 1 + rec(mask & ~(g.adj[v] | b))
        return max(without, with_v)

    return rec((1 << g.n) - 1)


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    for perm in permutations(range(g.n)):
        if all(
            g.has_edge(u, v) == h.has_edge(perm[u], perm[v])
            for u, v in combinations(range(g.n), 2)
        ):
            return True
    return False


def graph_from_mask(n: int, mask: int) -> Graph:
    """Graph from an integer encoding the upper triangle, pair by pair."""
    edges = []
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            if mask >> k & 1:
                edges.append((u, v))
            k += 1
    return Graph.from_edges(n, edges)


def all_graphs(n: int):
    """Every labeled graph on n vertices (2^C(n,2) of them)."""
    pairs = n * (n - 1) // 2
    for mask in range(1 << pairs):
        yield graph_from_mask(n, mask)


def random_graph(n: int, rng: random.Random, density: float = 0.5) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density
    ]
    return Graph.from_edges(n, edges)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 12):
    n = draw(st.integers(min_n, max_n))
    pairs = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << pairs) - 1))
    return graph_from_mask(n, mask)
