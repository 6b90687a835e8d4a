"""Exact integer polynomials, corona composition, shape and real-root analysis."""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from math import gcd

__all__ = [
    "IntPolynomial",
    "ShapeProfile",
    "RootCensus",
    "corona_compose",
    "shape_profile",
    "real_root_census",
    "sturm_sequence",
]


class IntPolynomial:
    """Immutable polynomial with arbitrary-precision integer coefficients, lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * k + [coeff])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def leading(self) -> int:
        return self._c[-1] if self._c else 0

    def __getitem__(self, k: int) -> int:
        return self._c[k] if 0 <= k < len(self._c) else 0

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self._c == other._c
        if isinstance(other, (list, tuple)):
            return self == IntPolynomial(other)
        if isinstance(other, int):
            return self == IntPolynomial([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._c)})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for k, a in enumerate(self._c):
            if a == 0:
                continue
            if k == 0:
                terms.append(str(a))
            else:
                coef = "" if a == 1 else f"{a}*"
                terms.append(f"{coef}x" + (f"^{k}" if k > 1 else ""))
        return " + ".join(terms)

    @staticmethod
    def _coerce(other) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial([other])
        if isinstance(other, (list, tuple)):
            return IntPolynomial(other)
        return NotImplemented

    def __add__(self, other) -> IntPolynomial:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-x for x in self._c])

    def __sub__(self, other) -> IntPolynomial:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other) -> IntPolynomial:
        return (-self) + other

    def __mul__(self, other) -> IntPolynomial:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self._c, o._c
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result = IntPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x):
        acc = 0
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def derivative(self) -> IntPolynomial:
        return IntPolynomial([k * a for k, a in enumerate(self._c)][1:])

    def content(self) -> int:
        g = 0
        for a in self._c:
            g = gcd(g, a)
        return g

    def primitive(self) -> IntPolynomial:
        """Divide by the (positive) content; signs are preserved."""
        g = self.content()
        if g <= 1:
            return self
        return IntPolynomial([a // g for a in self._c])

    def to_json(self) -> list[str]:
        return [str(a) for a in self._c]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> IntPolynomial:
        return cls(int(x) for x in data)


def _pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Remainder of ``|lc(b)|**(deg a - deg b + 1) * a`` by ``b``.

    Scaling by a positive factor keeps the sign of the true remainder, which
    is all a Sturm chain needs.
    """
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a.coeffs)
    db = b.degree
    lb = b.leading()
    scale = abs(lb)
    sign = 1 if lb > 0 else -1
    bc = b.coeffs
    while len(r) - 1 >= db and any(r):
        d = len(r) - 1
        top = r[-1]
        # r <- scale*r - sign*top*x^(d-db)*b, which kills the leading term
        r = [scale * x for x in r]
        q = sign * top
        shift = d - db
        for i, y in enumerate(bc):
            r[i + shift] -= q * y
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return IntPolynomial(r)


def _exact_div(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """``a / b`` up to a positive rational factor, for ``b`` dividing ``a`` over Q."""
    r = list(a.coeffs)
    bc = b.coeffs
    db = b.degree
    lb = b.leading()
    q = [0] * (len(r) - db)
    # work over Q by pre-scaling the dividend
    scale = abs(lb) ** (len(r) - db)
    r = [x * scale for x in r]
    for d in range(len(r) - 1, db - 1, -1):
        t = r[d]
        if t == 0:
            continue
        if t % lb:
            raise ArithmeticError("division is not exact")
        c = t // lb
        q[d - db] = c
        for i, y in enumerate(bc):
            r[i + d - db] -= c * y
    if any(r):
        raise ArithmeticError("division is not exact")
    return IntPolynomial(q).primitive()


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Q (positive leading coefficient)."""
    a, b = a.primitive(), b.primitive()
    while not b.is_zero():
        a, b = b, _pseudo_rem(a, b).primitive()
    if a.leading() < 0:
        a = -a
    return a


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free part")
    if p.degree <= 0:
        return IntPolynomial([1])
    g = poly_gcd(p, p.derivative())
    return _exact_div(p.primitive(), g)


def sturm_sequence(p: IntPolynomial) -> list[IntPolynomial]:
    """Sturm chain ``p, p', -rem, ...`` with primitive-part normalisation (positive factors only)."""
    chain = [p.primitive(), p.derivative().primitive()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        r = _pseudo_rem(chain[-2], chain[-1])
        if r.is_zero():
            break
        chain.append((-r).primitive())
    return [q for q in chain if not q.is_zero()]


def _variations(signs: list[int]) -> int:
    s = [x for x in signs if x]
    return sum(1 for u, v in zip(s, s[1:]) if u != v)


@dataclass(frozen=True)
class RootCensus:
    degree: int
    squarefree_degree: int
    distinct_real_roots: int

    @property
    def real_rooted(self) -> bool:
        return self.distinct_real_roots == self.squarefree_degree

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "squarefree_degree": self.squarefree_degree,
            "distinct_real_roots": self.distinct_real_roots,
            "real_rooted": self.real_rooted,
        }


def real_root_census(p: IntPolynomial | Sequence[int]) -> RootCensus:
    """Count distinct real roots exactly (Sturm on the square-free part)."""
    p = IntPolynomial._coerce(p)
    if p.is_zero():
        raise ValueError("the zero polynomial has no root census")
    sf = squarefree_part(p)
    if sf.degree <= 0:
        return RootCensus(p.degree, 0, 0)
    chain = sturm_sequence(sf)
    at_pos = [1 if q.leading() > 0 else -1 for q in chain]
    at_neg = [(1 if q.leading() > 0 else -1) * (-1 if q.degree % 2 else 1) for q in chain]
    return RootCensus(p.degree, sf.degree, _variations(at_neg) - _variations(at_pos))


def corona_compose(ih: IntPolynomial | Sequence[int], iy: IntPolynomial | Sequence[int], n: int) -> IntPolynomial:
    """``I(H o Y)`` from ``I(H)``, ``I(Y)`` and ``n = |V(H)|``.

    Equals ``I(Y)**n * I(H; x / I(Y))`` with denominators cleared, i.e.
    ``sum_k h_k x**k I(Y)**(n-k)``.
    """
    ih = IntPolynomial._coerce(ih)
    iy = IntPolynomial._coerce(iy)
    if ih.degree > n:
        raise ValueError(f"deg I(H) = {ih.degree} exceeds |V(H)| = {n}")
    if iy[0] != 1:
        raise ValueError("I(Y) must have constant term 1")
    powers = [IntPolynomial([1])]
    for _ in range(n):
        powers.append(powers[-1] * iy)
    total = IntPolynomial()
    for k, h in enumerate(ih.coeffs):
        if h:
            total = total + IntPolynomial.monomial(k, h) * powers[n - k]
    return total


@dataclass(frozen=True)
class ShapeProfile:
    unimodal: bool
    mode_indices: tuple[int, ...]
    nondecreasing_prefix_end: int
    nonincreasing_suffix_start: int
    log_concave: bool

    def to_dict(self) -> dict:
        return {
            "unimodal": self.unimodal,
            "mode_indices": list(self.mode_indices),
            "nondecreasing_prefix_end": self.nondecreasing_prefix_end,
            "nonincreasing_suffix_start": self.nonincreasing_suffix_start,
            "log_concave": self.log_concave,
        }


def shape_profile(p: IntPolynomial | Sequence[int]) -> ShapeProfile:
    s = list(p.coeffs) if isinstance(p, IntPolynomial) else [int(x) for x in p]
    if not s:
        return ShapeProfile(True, (), -1, 0, True)
    top = len(s) - 1
    pre = 0
    while pre < top and s[pre] <= s[pre + 1]:
        pre += 1
    suf = top
    while suf > 0 and s[suf - 1] >= s[suf]:
        suf -= 1
    peak = max(s)
    modes = tuple(k for k, a in enumerate(s) if a == peak)
    lc = all(s[k] * s[k] >= s[k - 1] * s[k + 1] for k in range(1, top))
    return ShapeProfile(pre >= suf - 1, modes, pre, suf, lc)
