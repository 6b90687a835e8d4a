"""Immutable simple graphs on vertices ``0..n-1``.

Adjacency is stored as one packed integer bit row per vertex, so that the
set algebra used by enumeration (intersection, union, subset tests) is a
handful of machine-word operations for ``n <= 64``.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence

__all__ = [
    "Graph",
    "cycle",
    "complete",
    "path",
    "star",
    "empty",
    "disjoint_union",
    "copies",
    "corona",
    "delete_vertex",
    "neighborhood",
    "components",
    "is_connected",
    "bits",
    "mask_of",
]


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A finite simple graph; never mutated after construction.

    ``Graph(n, adj)`` takes one neighbour collection per vertex. Derived
    quantities (coefficients, classification pieces) are memoised in a
    private per-instance cache, which is safe because the graph is frozen.
    """

    __slots__ = ("_n", "_rows", "_cache")

    def __init__(self, n: int, adj: Sequence[Iterable[int]] | None = None):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        if adj is None:
            rows = (0,) * n
        else:
            if len(adj) != n:
                raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
            rows = tuple(mask_of(a) for a in adj)
        self._n = n
        self._rows = rows
        self._cache: dict = {}
        self._validate()

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> Graph:
        g = cls.__new__(cls)
        g._n = len(rows)
        g._rows = tuple(int(r) for r in rows)
        g._cache = {}
        g._validate()
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls.from_rows(rows)

    def _validate(self) -> None:
        full = (1 << self._n) - 1
        rows = self._rows
        for v, r in enumerate(rows):
            if r < 0 or r & ~full:
                raise ValueError(f"vertex {v} has neighbours outside [0, {self._n})")
            if r >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            m = r
            while m:
                low = m & -m
                u = low.bit_length() - 1
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                m ^= low

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        """Adjacency bit rows; bit ``u`` of ``rows[v]`` is set iff ``uv`` is an edge."""
        return self._rows

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(bits(r)) for r in self._rows)

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(v, u) for v, r in enumerate(self._rows) for u in bits(r >> (v + 1) << (v + 1))]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def has_isolated(self) -> bool:
        return any(r == 0 for r in self._rows)

    def is_independent(self, vertices: Iterable[int] | int) -> bool:
        m = vertices if isinstance(vertices, int) else mask_of(vertices)
        for v in bits(m):
            if self._rows[v] & m:
                return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


def cycle(n: int) -> Graph:
    """``C_n`` with edges ``i, i+1 (mod n)``."""
    if n < 3:
        raise ValueError(f"C(n) needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"K(n) needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph.from_rows([full & ~(1 << v) for v in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"P(n) needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """``K_{1,n}``: centre 0, leaves ``1..n``."""
    if n < 0:
        raise ValueError(f"Star(n) needs n >= 0, got {n}")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def empty(n: int) -> Graph:
    return Graph(n)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.n
    return Graph.from_rows(list(g.rows) + [r << off for r in h.rows])


def copies(m: int, g: Graph) -> Graph:
    if m < 1:
        raise ValueError(f"need at least one copy, got {m}")
    out = g
    for _ in range(m - 1):
        out = disjoint_union(out, g)
    return out


def corona(g: Graph, family: Graph | Sequence[Graph]) -> Graph:
    """``g`` plus one attached graph per vertex, each vertex joined to all of its copy.

    The attached copies are numbered after ``g``'s vertices, in vertex order.
    """
    if isinstance(family, Graph):
        family = [family] * g.n
    if len(family) != g.n:
        raise ValueError(f"corona family has {len(family)} graphs, need {g.n}")
    rows = list(g.rows)
    off = g.n
    for v, h in enumerate(family):
        block = ((1 << h.n) - 1) << off
        rows[v] |= block
        for r in h.rows:
            rows.append((r << off) | (1 << v))
        off += h.n
    return Graph.from_rows(rows)


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    low = (1 << v) - 1
    rows = []
    for u, r in enumerate(g.rows):
        if u != v:
            rows.append((r & low) | (r >> (v + 1) << v))
    return Graph.from_rows(rows)


def neighborhood(g: Graph, s: Iterable[int] | int) -> frozenset[int]:
    """``N(S)``: vertices with at least one neighbour in ``S`` (may meet ``S``)."""
    m = s if isinstance(s, int) else mask_of(s)
    out = 0
    for v in bits(m):
        out |= g.rows[v]
    return frozenset(bits(out))


def component_masks(rows: Sequence[int], mask: int) -> list[int]:
    out = []
    while mask:
        comp = frontier = mask & -mask
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            frontier = nxt & mask & ~comp
            comp |= frontier
        out.append(comp)
        mask &= ~comp
    return out


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by smallest vertex."""
    return [frozenset(bits(c)) for c in component_masks(g.rows, g.full_mask)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g.rows, g.full_mask)) <= 1
