"""Pure-Python kernels; behaviourally identical to the compiled ``_ckernels``.

Every function takes the adjacency bit rows of a graph (``rows[v]`` has bit
``u`` set iff ``uv`` is an edge) and works on vertex subsets encoded as ints.
"""
from __future__ import annotations

from collections.abc import Sequence

MEMO_LIMIT = 1 << 18


def _low_index(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _grow(rows: Sequence[int], mask: int, seed: int) -> int:
    comp = frontier = seed
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= rows[low.bit_length() - 1]
            m ^= low
        frontier = nxt & mask & ~comp
        comp |= frontier
    return comp


def _polymul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _binomial_row(m: int) -> list[int]:
    row = [1]
    for k in range(m):
        row.append(row[-1] * (m - k) // (k + 1))
    return row


def independence_counts(rows: Sequence[int]) -> list[int]:
    """Coefficients ``s_0..s_alpha`` by the vertex-deletion recursion.

    ``I(G) = I(G - v) + x I(G - N[v])`` with ``v`` a maximum-degree vertex,
    components multiplied separately, results memoised on the residual
    vertex mask (cache cleared when it reaches ``MEMO_LIMIT`` entries).
    """
    rows = tuple(rows)
    memo: dict[int, list[int]] = {}

    def count(mask: int) -> list[int]:
        if mask == 0:
            return [1]
        hit = memo.get(mask)
        if hit is not None:
            return hit
        comp = _grow(rows, mask, mask & -mask)
        if comp != mask:
            res = count(comp)
            rest = mask & ~comp
            while rest:
                c = _grow(rows, rest, rest & -rest)
                res = _polymul(res, count(c))
                rest &= ~c
        else:
            best = -1
            bv = 0
            m = mask
            while m:
                low = m & -m
                v = low.bit_length() - 1
                d = (rows[v] & mask).bit_count()
                if d > best:
                    best, bv = d, v
                m ^= low
            size = mask.bit_count()
            if best == 0:
                res = _binomial_row(size)
            elif best == size - 1 and all(
                (rows[v] & mask).bit_count() == size - 1 for v in _iter_bits(mask)
            ):
                res = [1, size]
            else:
                a = count(mask & ~(1 << bv))
                b = count(mask & ~(rows[bv] | (1 << bv)))
                res = a + [0] * max(0, len(b) + 1 - len(a))
                for i, x in enumerate(b):
                    res[i + 1] += x
        if len(memo) >= MEMO_LIMIT:
            memo.clear()
        memo[mask] = res
        return res

    return list(count((1 << len(rows)) - 1))


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_well_covered(rows: Sequence[int], mask: int) -> bool:
    """True iff every maximal independent set of ``G[mask]`` has the same size.

    Pivoting Bron-Kerbosch over the complement; stops at the second size seen.
    """
    sizes: list[int] = []

    def walk(size: int, p: int, x: int) -> bool:
        if not p:
            if x:
                return True
            if not sizes:
                sizes.append(size)
                return True
            return sizes[0] == size
        # pivot: vertex of P|X whose closed neighbourhood meets P least
        best = None
        pivot_branch = 0
        for u in _iter_bits(p | x):
            br = p & (rows[u] | (1 << u))
            c = br.bit_count()
            if best is None or c < best:
                best, pivot_branch = c, br
                if c <= 1:
                    break
        branch = pivot_branch
        while branch:
            low = branch & -branch
            v = low.bit_length() - 1
            keep = ~(rows[v] | low)
            if not walk(size + 1, p & keep, x & keep):
                return False
            p &= ~low
            x |= low
            branch ^= low
        return True

    return walk(0, mask, 0)


def is_one_well_covered(rows: Sequence[int]) -> bool:
    n = len(rows)
    if n < 2:
        return False
    full = (1 << n) - 1
    if not is_well_covered(rows, full):
        return False
    return all(is_well_covered(rows, full & ~(1 << v)) for v in range(n))


def _independent_sets(rows: Sequence[int]) -> list[int]:
    """All independent sets as masks (includes the empty set)."""
    out = [0]
    n = len(rows)

    def rec(s: int, start: int, avail: int) -> None:
        m = avail >> start << start
        while m:
            low = m & -m
            v = low.bit_length() - 1
            t = s | low
            out.append(t)
            rec(t, v + 1, avail & ~rows[v] & ~low)
            m ^= low

    rec(0, 0, (1 << n) - 1)
    return out


def neighborhood_profile(rows: Sequence[int]) -> list[int]:
    """``m[s] = min |N(S)|`` over independent ``S`` with ``|S| = s``, by enumeration."""
    n = len(rows)
    prof = [0]

    def rec(size: int, nb: int, avail: int) -> None:
        m = avail
        while m:
            low = m & -m
            v = low.bit_length() - 1
            nb2 = nb | rows[v]
            c = nb2.bit_count()
            s2 = size + 1
            if s2 == len(prof):
                prof.append(c)
            elif c < prof[s2]:
                prof[s2] = c
            m ^= low
            rec(s2, nb2, m & ~rows[v])

    rec(0, 0, (1 << n) - 1)
    return prof


def _maximum_sets(indep: list[int]) -> tuple[int, list[int]]:
    alpha = max(s.bit_count() for s in indep)
    return alpha, [s for s in indep if s.bit_count() == alpha]


def in_w2(rows: Sequence[int]) -> bool:
    """Every two disjoint independent sets lie in two disjoint maximum independent sets."""
    indep = _independent_sets(rows)
    _, maxi = _maximum_sets(indep)
    for i, a in enumerate(indep):
        sup_a = [m for m in maxi if m & a == a]
        if not sup_a:
            return False
        for b in indep[i:]:
            if a & b:
                continue
            ok = False
            for m2 in maxi:
                if m2 & b != b:
                    continue
                for m1 in sup_a:
                    if not m1 & m2:
                        ok = True
                        break
                if ok:
                    break
            if not ok:
                return False
    return True


def extension_property(rows: Sequence[int]) -> bool:
    """Each non-maximum independent ``A`` lies in maximum ``M1, M2`` with ``M1 & M2 == A``."""
    indep = _independent_sets(rows)
    alpha, maxi = _maximum_sets(indep)
    for a in indep:
        if a.bit_count() == alpha:
            continue
        sup = [m for m in maxi if m & a == a]
        if not any(m1 & m2 == a for i, m1 in enumerate(sup) for m2 in sup[i + 1:]):
            return False
    return True
