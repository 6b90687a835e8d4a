"""Naive labeled-graph generators for tests and sweeps (no isomorphism reduction)."""
from __future__ import annotations

import random
from collections.abc import Iterator

from .graph import Graph


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def labeled_graphs(n: int, *, connected: bool = False) -> Iterator[Graph]:
    """All ``2**(n(n-1)/2)`` labeled graphs on ``n`` vertices (n <= 7), optionally only connected ones."""
    if not 0 <= n <= 7:
        raise ValueError(f"labeled enumeration is for n <= 7, got {n}")
    pairs = _pairs(n)
    # bit rows contributed by each pair, precomputed once
    contrib = [((1 << j), (1 << i)) for i, j in pairs]
    full = (1 << n) - 1
    for code in range(1 << len(pairs)):
        rows = [0] * n
        m = code
        while m:
            low = m & -m
            e = low.bit_length() - 1
            i, j = pairs[e]
            a, b = contrib[e]
            rows[i] |= a
            rows[j] |= b
            m ^= low
        if connected and n:
            comp = frontier = 1
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= rows[low.bit_length() - 1]
                    f ^= low
                frontier = nxt & ~comp
                comp |= frontier
            if comp != full:
                continue
        yield Graph.from_rows(rows)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(i, j) for i, j in _pairs(n) if rng.random() < p])


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for k in range(1, n):
        u, v = order[k], order[rng.randrange(k)]
        edges.add((min(u, v), max(u, v)))
    for i, j in _pairs(n):
        if rng.random() < p:
            edges.add((i, j))
    return Graph.from_edges(n, sorted(edges))
