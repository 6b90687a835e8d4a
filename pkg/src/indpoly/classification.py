"""Where a graph sits in the well-covered hierarchy, and its exact lambda*.

lambda* is the largest ``lam`` with ``lam * |S| <= |N(S)|`` for every
non-empty independent ``S``; it is computed from the neighbourhood profile
``m[s] = min{|N(S)| : S independent, |S| = s}`` as ``min_s m[s] / s``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import limits
from ._backend import kernels
from .enumeration import independence_number
from .graph import Graph, bits, is_connected, mask_of

__all__ = [
    "ClassificationRecord",
    "classify",
    "is_well_covered",
    "is_one_well_covered",
    "is_very_well_covered",
    "lambda_star",
    "neighborhood_profile",
    "is_lambda_quasi_regularizable",
    "in_w2",
    "extension_property",
    "extension_witnesses",
    "INF",
]

INF = math.inf

_PROFILE_MEMO_LIMIT = 1 << 18


@dataclass(frozen=True)
class ClassificationRecord:
    n: int
    alpha: int
    well_covered: bool
    very_well_covered: bool
    one_well_covered: bool
    lambda_star: Fraction | float
    has_isolated: bool
    connected: bool
    in_w2: bool | None = None

    def to_dict(self) -> dict:
        lam = self.lambda_star
        return {
            "n": self.n,
            "alpha": self.alpha,
            "well_covered": self.well_covered,
            "very_well_covered": self.very_well_covered,
            "one_well_covered": self.one_well_covered,
            "in_w2": self.in_w2,
            "lambda_star": "inf" if lam == INF else str(lam),
            "has_isolated": self.has_isolated,
            "connected": self.connected,
        }


def _cached(g: Graph, key: str, fn):
    val = g._cache.get(key)
    if val is None:
        val = fn()
        g._cache[key] = val
    return val


def is_well_covered(g: Graph) -> bool:
    limits.check(g.n, limits.ENUM_MAX_N, "is_well_covered")
    return _cached(g, "wc", lambda: bool(kernels.is_well_covered(g.rows, g.full_mask)))


def is_one_well_covered(g: Graph) -> bool:
    """Well-covered with ``n >= 2`` and ``g - v`` well-covered for every ``v``."""
    limits.check(g.n, limits.ENUM_MAX_N, "is_one_well_covered")
    return _cached(g, "1wc", lambda: bool(kernels.is_one_well_covered(g.rows)))


def is_very_well_covered(g: Graph) -> bool:
    return (
        not g.has_isolated()
        and g.n == 2 * independence_number(g)
        and is_well_covered(g)
    )


def _profile_memo(rows: tuple[int, ...], n: int) -> list[int]:
    """Neighbourhood profile by a memoised include/exclude recursion.

    State ``(A, X)``: ``A`` are the remaining candidates, ``X`` the excluded
    vertices not yet covered. Excluded vertices without a neighbour in ``A``
    can never be covered and are dropped, so states stay canonical;
    independent parts are combined by min-plus convolution.
    """
    memo: dict[tuple[int, int], list[int]] = {}

    def minplus(a: list[int], b: list[int]) -> list[int]:
        out = [a[0] + b[0]] + [None] * (len(a) + len(b) - 2)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                cur = out[i + j]
                if cur is None or x + y < cur:
                    out[i + j] = x + y
        return out

    def reach(a: int) -> int:
        out = 0
        for v in bits(a):
            out |= rows[v]
        return out

    def solve(a: int, x: int) -> list[int]:
        if not a:
            return [0]
        x &= reach(a)
        key = (a, x)
        hit = memo.get(key)
        if hit is not None:
            return hit
        # components joined through edges that touch a candidate
        universe = a | x
        comps = []
        rest = a
        while rest:
            comp = frontier = rest & -rest
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= rows[v] if (a >> v) & 1 else rows[v] & a
                frontier = nxt & universe & ~comp
                comp |= frontier
            comps.append(comp)
            rest &= ~comp
        if len(comps) > 1:
            res = [0]
            for comp in comps:
                res = minplus(res, solve(comp & a, comp & x))
        else:
            v = max(bits(a), key=lambda u: ((rows[u] & universe).bit_count(), -u))
            low = 1 << v
            skip = solve(a & ~low, x | low)
            cover = (rows[v] & universe).bit_count()
            take = solve(a & ~(rows[v] | low), x & ~rows[v])
            res = list(skip) + [None] * max(0, len(take) + 1 - len(skip))
            for s, c in enumerate(take):
                val = c + cover
                cur = res[s + 1]
                res[s + 1] = val if cur is None or val < cur else cur
        if len(memo) >= _PROFILE_MEMO_LIMIT:
            memo.clear()
        memo[key] = res
        return res

    return solve((1 << n) - 1, 0)


def neighborhood_profile(g: Graph, *, method: str = "auto") -> tuple[int, ...]:
    """``m[s]`` for ``s = 0..alpha``: the least ``|N(S)|`` over independent ``S`` of size ``s``.

    ``method="enum"`` walks every independent set (fast kernel, guarded at
    n <= 24); ``"memo"`` uses the include/exclude recursion, which scales
    to sparse graphs far beyond that; ``"auto"`` picks by size.
    """
    if method == "auto":
        method = "enum" if g.n <= limits.LAMBDA_ENUM_MAX_N else "memo"
    if method == "enum":
        limits.check(g.n, limits.LAMBDA_ENUM_MAX_N, "neighborhood_profile(enum)")
        return _cached(g, "profile", lambda: tuple(kernels.neighborhood_profile(g.rows)))
    if method == "memo":
        limits.check(g.n, limits.ENUM_MAX_N, "neighborhood_profile(memo)")
        return _cached(g, "profile", lambda: tuple(_profile_memo(g.rows, g.n)))
    raise ValueError(f"unknown method {method!r}")


def lambda_star(g: Graph, *, method: str = "auto") -> Fraction | float:
    """Exact ``min |N(S)|/|S|`` over non-empty independent ``S``; ``inf`` for the empty graph."""
    if g.n == 0:
        return INF
    if g.has_isolated():
        return Fraction(0)
    prof = neighborhood_profile(g, method=method)
    return min(Fraction(m, s) for s, m in enumerate(prof) if s)


def is_lambda_quasi_regularizable(g: Graph, lam: Fraction | int) -> bool:
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    return lam <= lambda_star(g)


def in_w2(g: Graph) -> bool:
    """Direct quantifier check of class W2 (every two disjoint independent sets
    extend to two disjoint maximum independent sets). Exponential; n <= 16."""
    limits.check(g.n, limits.W2_MAX_N, "in_w2")
    return _cached(g, "w2", lambda: bool(kernels.in_w2(g.rows)))


def extension_property(g: Graph) -> bool:
    """Every non-maximum independent set has an extension-witness pair."""
    limits.check(g.n, limits.W2_MAX_N, "extension_property")
    return _cached(g, "ext", lambda: bool(kernels.extension_property(g.rows)))


def _maximum_sets(g: Graph) -> list[int]:
    alpha = independence_number(g)
    rows = g.rows
    out = []

    def rec(s: int, size: int, avail: int) -> None:
        if size == alpha:
            out.append(s)
            return
        if size + avail.bit_count() < alpha:
            return
        m = avail
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            rec(s | low, size + 1, m & ~rows[v])

    rec(0, 0, g.full_mask)
    return out


def extension_witnesses(g: Graph, a) -> list[tuple[frozenset[int], frozenset[int]]]:
    """All unordered pairs ``(B1, B2)`` of disjoint non-empty sets, both disjoint
    from ``a``, with ``a | B1`` and ``a | B2`` maximum independent sets.

    Pairs are sorted by the sorted vertex lists of ``B1`` then ``B2``, with
    ``B1`` the lexicographically smaller member.
    """
    limits.check(g.n, limits.W2_MAX_N, "extension_witnesses")
    am = mask_of(a)
    if am >> g.n:
        raise ValueError("set contains vertices outside the graph")
    if not g.is_independent(am):
        raise ValueError(f"{sorted(bits(am))} is not independent")
    if am.bit_count() == independence_number(g):
        raise ValueError(f"{sorted(bits(am))} is already a maximum independent set")
    rests = sorted((sorted(bits(m & ~am)) for m in _maximum_sets(g) if m & am == am))
    out = []
    for b1, b2 in combinations(rests, 2):
        if not set(b1) & set(b2):
            out.append((frozenset(b1), frozenset(b2)))
    return out


def classify(g: Graph, compute_w2: bool = False) -> ClassificationRecord:
    limits.check(g.n, limits.ENUM_MAX_N, "classify")
    if compute_w2:
        limits.check(g.n, limits.W2_MAX_N, "classify(compute_w2=True)")
    alpha = independence_number(g)
    wc = is_well_covered(g)
    isolated = g.has_isolated()
    return ClassificationRecord(
        n=g.n,
        alpha=alpha,
        well_covered=wc,
        very_well_covered=wc and not isolated and g.n == 2 * alpha,
        one_well_covered=wc and is_one_well_covered(g),
        lambda_star=lambda_star(g),
        has_isolated=isolated,
        connected=is_connected(g),
        in_w2=in_w2(g) if compute_w2 else None,
    )

