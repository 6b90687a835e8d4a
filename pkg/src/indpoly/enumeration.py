"""Counting and enumerating independent sets."""
from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from . import limits
from ._backend import kernels
from .graph import Graph, bits

__all__ = [
    "CoefficientSequence",
    "LevelCount",
    "independence_coefficients",
    "brute_force_coefficients",
    "independence_number",
    "maximal_independent_sets",
    "level_double_count",
]


@dataclass(frozen=True)
class CoefficientSequence:
    """``coeffs[k]`` is the number of independent sets of size ``k``."""

    coeffs: tuple[int, ...]

    @property
    def alpha(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def total(self) -> int:
        return sum(self.coeffs)

    def as_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]


@dataclass(frozen=True)
class LevelCount:
    k: int
    omega_k: int
    omega_k1: int
    edge_count: int
    min_lower_degree: int


def independence_coefficients(g: Graph) -> CoefficientSequence:
    limits.check(g.n, limits.ENUM_MAX_N, "independence_coefficients")
    cached = g._cache.get("coeffs")
    if cached is None:
        cached = CoefficientSequence(tuple(int(c) for c in kernels.independence_counts(g.rows)))
        g._cache["coeffs"] = cached
    return cached


def _popcount(a: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(a).astype(np.int64)
    out = np.zeros(a.shape, dtype=np.int64)
    x = a.copy()
    while x.any():
        out += (x & 1).astype(np.int64)
        x >>= 1
    return out


def _independent_flags(rows: list[int], n: int) -> np.ndarray:
    """Direct test of all ``2**n`` subsets of vertices ``0..n-1`` (rows already restricted)."""
    subsets = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(1 << n, dtype=bool)
    for v in range(n):
        ok &= ((subsets >> v) & 1 == 0) | ((subsets & rows[v]) == 0)
    return ok


def brute_force_coefficients(g: Graph, *, split_above: int = 20) -> CoefficientSequence:
    """Tally every vertex subset that passes a direct independence test.

    Shares nothing with :func:`independence_coefficients`; it is the oracle
    the recursion is tested against. Up to ``split_above`` vertices all
    ``2**n`` subsets are tested in one vectorised pass. Beyond that the
    vertices are cut into a low and a high block, every subset of each block
    is tested directly, and a subset ``L | H`` is counted when both halves
    pass and ``L`` avoids the low neighbours of ``H``; the number of good
    ``L`` inside each allowed region comes from a subset-sum transform.
    """
    n = g.n
    limits.check(n, limits.BRUTE_MAX_N, "brute_force_coefficients")
    if n <= split_above:
        subsets = np.arange(1 << n, dtype=np.int64)
        ok = _independent_flags(list(g.rows), n)
        tally = np.bincount(_popcount(subsets[ok]), minlength=n + 1)
    else:
        tally = _split_tally(g.rows, n, (n + 1) // 2)
    coeffs = [int(c) for c in tally]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return CoefficientSequence(tuple(coeffs))


def _split_tally(rows: tuple[int, ...], n: int, lo: int) -> np.ndarray:
    hi = n - lo
    low_mask = (1 << lo) - 1
    low_ok = _independent_flags([r & low_mask for r in rows[:lo]], lo)
    low_subsets = np.arange(1 << lo, dtype=np.int64)
    # table[M, j] = number of independent L inside M with |L| = j
    table = np.zeros((1 << lo, lo + 1), dtype=np.int64)
    table[low_subsets[low_ok], _popcount(low_subsets[low_ok])] = 1
    for b in range(lo):
        with_b = (low_subsets >> b) & 1 == 1
        table[with_b] += table[low_subsets[with_b] ^ (1 << b)]

    high_rows = [rows[lo + i] >> lo for i in range(hi)]
    high_ok = _independent_flags(high_rows, hi)
    high_subsets = np.arange(1 << hi, dtype=np.int64)[high_ok]
    blocked = np.zeros(high_subsets.shape, dtype=np.int64)
    for i in range(hi):
        blocked |= np.where((high_subsets >> i) & 1 == 1, rows[lo + i] & low_mask, 0)
    allowed = ~blocked & low_mask
    sizes = _popcount(high_subsets)
    tally = np.zeros(n + 1, dtype=np.int64)
    for h in range(hi + 1):
        sel = sizes == h
        if sel.any():
            tally[h : h + lo + 1] += table[allowed[sel]].sum(axis=0)
    return tally


def independence_number(g: Graph, *, method: str = "count") -> int:
    """``alpha(g)``; ``method="bnb"`` uses a branch-and-bound search instead of counting."""
    if method == "count":
        return independence_coefficients(g).alpha
    if method != "bnb":
        raise ValueError(f"unknown method {method!r}")
    limits.check(g.n, limits.ENUM_MAX_N, "independence_number")
    rows = g.rows
    best = 0

    def search(size: int, cand: int) -> None:
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = size
            return
        # a vertex of minimum degree in the candidate set is in some maximum set
        v = min(bits(cand), key=lambda u: (rows[u] & cand).bit_count())
        nbrs = rows[v] & cand
        search(size + 1, cand & ~nbrs & ~(1 << v))
        for u in bits(nbrs):
            search(size + 1, cand & ~rows[u] & ~(1 << u))
            cand &= ~(1 << u)
            if size + cand.bit_count() <= best:
                return

    search(0, g.full_mask)
    return best


def maximal_independent_sets(g: Graph) -> Iterator[frozenset[int]]:
    """Every maximal independent set once, in lexicographic order of sorted vertex lists.

    Branches include-before-exclude on the smallest candidate; an excluded
    vertex must later gain a neighbour in the set, so a branch dies as soon as
    some excluded vertex has no neighbour among the remaining candidates.
    Consumers may stop iterating at any point.
    """
    limits.check(g.n, limits.ENUM_MAX_N, "maximal_independent_sets")
    rows = g.rows

    def walk(s: int, cand: int, excl: int) -> Iterator[int]:
        if not cand:
            if not excl:
                yield s
            return
        for x in bits(excl):
            if not rows[x] & cand:
                return
        low = cand & -cand
        v = low.bit_length() - 1
        keep = ~(rows[v] | low)
        yield from walk(s | low, cand & keep, excl & keep)
        yield from walk(s, cand & ~low, excl | low)

    for m in walk(0, g.full_mask, 0):
        yield frozenset(bits(m))


def _sets_of_size(g: Graph, k: int) -> list[int]:
    rows = g.rows
    out: list[int] = []

    def rec(s: int, size: int, avail: int) -> None:
        if size == k:
            out.append(s)
            return
        m = avail
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            rec(s | low, size + 1, m & ~rows[v])

    rec(0, 0, g.full_mask)
    return out


def level_double_count(g: Graph, k: int) -> LevelCount:
    """Data of the containment graph between size-``k`` and size-``k+1`` independent sets.

    ``edge_count`` is summed from the size-``k`` side (one containment per
    addable vertex); the identity ``edge_count == (k+1) * omega_k1`` is what
    the caller checks.
    """
    limits.check(g.n, limits.LEVEL_MAX_N, "level_double_count")
    alpha = independence_number(g)
    if not 0 <= k < alpha:
        raise ValueError(f"k must satisfy 0 <= k < alpha={alpha}, got {k}")
    lower = _sets_of_size(g, k)
    upper = set(_sets_of_size(g, k + 1))
    rows = g.rows
    edges = 0
    min_deg = None
    for w in lower:
        blocked = w
        for v in bits(w):
            blocked |= rows[v]
        deg = sum(1 for u in bits(g.full_mask & ~blocked) if w | (1 << u) in upper)
        edges += deg
        min_deg = deg if min_deg is None else min(min_deg, deg)
    return LevelCount(k, len(lower), len(upper), edges, min_deg or 0)
