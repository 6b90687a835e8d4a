"""Coefficient inequalities for independence polynomials as executable checks.

Each ``check_*`` function returns a :class:`BoundReport`. Hypotheses are
evaluated first and reported; when they fail, no inequality is checked and
the report says why. Every comparison is done in exact integers (rational
``lam`` is cleared of its denominator), so no verdict depends on floats.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from . import graph as gr
from .classification import (
    INF,
    is_one_well_covered,
    is_well_covered,
    lambda_star,
)
from .enumeration import independence_coefficients
from .graph import Graph
from .polynomial import corona_compose, shape_profile

__all__ = [
    "TheoremId",
    "Violation",
    "BoundReport",
    "WindowKind",
    "Window",
    "check_quasi_regular_bounds",
    "check_quasi_regularizable_bounds",
    "check_well_covered_bounds",
    "check_well_covered_prefix",
    "check_very_well_covered_bounds",
    "check_one_well_covered_bounds",
    "check_corona_k2_bounds",
    "check_bounds",
    "roller_coaster_window",
]

# order of H o K2 up to which its 1-well-coveredness is re-verified directly
CORONA_ONE_WC_MAX_N = 24


class TheoremId(str, enum.Enum):
    TH13 = "TH13"
    COR3 = "COR3"
    COR2 = "COR2"
    TH5 = "TH5"
    COR1 = "COR1"
    TH3 = "TH3"
    CORONA_K2 = "CORONA_K2"


@dataclass(frozen=True)
class Violation:
    k: int
    tag: str
    lhs: int | Fraction
    rhs: int | Fraction

    def to_dict(self) -> dict:
        return {"k": self.k, "tag": self.tag, "lhs": str(self.lhs), "rhs": str(self.rhs)}


@dataclass
class BoundReport:
    theorem_id: TheoremId
    hypotheses_met: bool
    reasons: list[str] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)
    checked_count: int = 0
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.hypotheses_met and not self.violations

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id.value,
            "hypotheses_met": self.hypotheses_met,
            "reasons": list(self.reasons),
            "passed": self.passed,
            "checked_count": self.checked_count,
            "violations": [v.to_dict() for v in self.violations],
            "params": {k: str(v) if isinstance(v, (int, Fraction)) and not isinstance(v, bool) else v
                       for k, v in self.params.items()},
        }

    def summary(self) -> dict:
        return {
            "hypotheses_met": self.hypotheses_met,
            "passed": self.passed,
            "checked": self.checked_count,
            "violations": len(self.violations),
        }

    # -- recording helpers ------------------------------------------------

    def le(self, k: int, tag: str, lhs, rhs) -> None:
        self.checked_count += 1
        if not lhs <= rhs:
            self.violations.append(Violation(k, tag, lhs, rhs))

    def lt(self, k: int, tag: str, lhs, rhs) -> None:
        self.checked_count += 1
        if not lhs < rhs:
            self.violations.append(Violation(k, tag, lhs, rhs))

    def nondecreasing(self, s, upto: int, tag: str) -> None:
        """``s_0 <= ... <= s_upto`` (clamped to the sequence)."""
        for k in range(min(upto, len(s) - 1)):
            self.le(k, tag, s[k], s[k + 1])

    def nonincreasing(self, s, start: int, tag: str, strict: bool = False) -> None:
        """``s_start >= ... >= s_alpha`` (strictly, if asked)."""
        for k in range(max(start, 0), len(s) - 1):
            if strict:
                self.lt(k, tag, s[k + 1], s[k])
            else:
                self.le(k, tag, s[k + 1], s[k])


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _unmet(tid: TheoremId, *reasons: str, **params) -> BoundReport:
    return BoundReport(tid, False, list(reasons), params=dict(params))


def check_quasi_regular_bounds(g: Graph, lam) -> BoundReport:
    """``(k+1) s_{k+1} <= (n - (lam+1) k) s_k`` for ``0 <= k < alpha`` and a
    non-increasing tail from ``r = ceil((n-1)/(lam+2))``, for graphs with
    ``lam * |S| <= |N(S)|`` on every independent ``S``."""
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    n = g.n
    p, q = lam.numerator, lam.denominator
    r = _ceil_div(q * (n - 1), p + 2 * q)
    lstar = lambda_star(g)
    params = {"lambda": lam, "lambda_star": "inf" if lstar == INF else lstar, "r": r}
    if lam > lstar:
        return _unmet(TheoremId.TH13, f"not {lam}-quasi-regularizable (lambda* = {lstar})", **params)
    s = independence_coefficients(g)
    rep = BoundReport(TheoremId.TH13, True, params=params)
    for k in range(len(s) - 1):
        rep.le(k, "i", q * (k + 1) * s[k + 1], (q * n - (p + q) * k) * s[k])
    rep.nonincreasing(s, r, "ii:tail")
    return rep


def check_quasi_regularizable_bounds(g: Graph) -> BoundReport:
    """The ``lam = 1`` case: order ``n >= 2`` and ``|S| <= |N(S)|`` throughout.

    Inequality (i) is checked for every ``0 <= k < alpha``; at ``k = 0`` it
    reads ``s_1 <= n`` and always holds.
    """
    n = g.n
    r = _ceil_div(n - 1, 3)
    if n < 2:
        return _unmet(TheoremId.COR3, f"order {n} < 2", r=r)
    lstar = lambda_star(g)
    if lstar < 1:
        return _unmet(TheoremId.COR3, f"not quasi-regularizable (lambda* = {lstar})", r=r)
    s = independence_coefficients(g)
    rep = BoundReport(TheoremId.COR3, True, params={"r": r, "lambda_star": lstar})
    for k in range(len(s) - 1):
        rep.le(k, "i", (k + 1) * s[k + 1], (n - 2 * k) * s[k])
    rep.nonincreasing(s, r, "ii:tail")
    return rep


def check_well_covered_prefix(g: Graph) -> BoundReport:
    """``s_0 <= s_1 <= ... <= s_ceil(alpha/2)`` for well-covered graphs."""
    if not is_well_covered(g):
        return _unmet(TheoremId.TH5, "not well-covered")
    s = independence_coefficients(g)
    top = _ceil_div(s.alpha, 2)
    rep = BoundReport(TheoremId.TH5, True, params={"prefix_end": top})
    rep.nondecreasing(s, top, "prefix")
    return rep


def check_well_covered_bounds(g: Graph) -> BoundReport:
    """Two-sided ratio bounds, increasing prefix and decreasing tail for well-covered graphs.

    The ``(n-2k)`` upper bound and the tail need ``|S| <= |N(S)|``, which an
    isolated vertex breaks, so they are skipped (and the skip reported) then.
    """
    n = g.n
    if n < 2:
        return _unmet(TheoremId.COR2, f"order {n} < 2")
    if not is_well_covered(g):
        return _unmet(TheoremId.COR2, "not well-covered")
    s = independence_coefficients(g)
    alpha = s.alpha
    prefix_end = _ceil_div(alpha, 2)
    tail_start = _ceil_div(n - 1, 3)
    rep = BoundReport(
        TheoremId.COR2, True, params={"prefix_end": prefix_end, "tail_start": tail_start}
    )
    upper = not g.has_isolated()
    if not upper:
        rep.reasons.append("isolated vertex: upper bound and tail not applicable")
    for k in range(1, alpha):
        rep.le(k, "i:lower", (alpha - k) * s[k], (k + 1) * s[k + 1])
        if upper:
            rep.le(k, "i:upper", (k + 1) * s[k + 1], (n - 2 * k) * s[k])
    rep.nondecreasing(s, prefix_end, "ii:prefix")
    if upper:
        rep.nonincreasing(s, tail_start, "ii:tail")
    return rep


def check_very_well_covered_bounds(g: Graph) -> BoundReport:
    n = g.n
    if n < 2:
        return _unmet(TheoremId.COR1, f"order {n} < 2")
    s = independence_coefficients(g)
    alpha = s.alpha
    if g.has_isolated() or n != 2 * alpha or not is_well_covered(g):
        return _unmet(TheoremId.COR1, "not very well-covered")
    prefix_end = _ceil_div(alpha, 2)
    tail_start = _ceil_div(2 * alpha - 1, 3)
    rep = BoundReport(
        TheoremId.COR1, True, params={"prefix_end": prefix_end, "tail_start": tail_start}
    )
    rep.nondecreasing(s, prefix_end, "prefix")
    rep.nonincreasing(s, tail_start, "tail")
    return rep


def check_one_well_covered_bounds(g: Graph) -> BoundReport:
    """Bounds for connected 1-well-covered graphs of order ``n > 2``; parts
    (iii) and (iv) are strict, so equality is reported as a violation."""
    n = g.n
    reasons = []
    if n <= 2:
        reasons.append(f"order {n} <= 2")
    elif not gr.is_connected(g):
        reasons.append("not connected")
    elif not is_one_well_covered(g):
        reasons.append("not 1-well-covered")
    if reasons:
        return _unmet(TheoremId.TH3, *reasons)
    s = independence_coefficients(g)
    alpha = s.alpha
    prefix_end = min(alpha, _ceil_div(2 * alpha, 3))
    tail_start = _ceil_div(n - 1, 3)
    rep = BoundReport(
        TheoremId.TH3, True, params={"prefix_end": prefix_end, "tail_start": tail_start}
    )
    for k in range(1, alpha):
        rep.le(k, "i", 2 * (alpha - k) * s[k], (k + 1) * s[k + 1])
        rep.lt(k, "iii", (k + 1) * s[k + 1], (n - 2 * k) * s[k])
    rep.nondecreasing(s, prefix_end, "ii:prefix")
    rep.nonincreasing(s, tail_start, "iv:tail", strict=True)
    return rep


def check_corona_k2_bounds(h: Graph) -> BoundReport:
    """Checks for ``G = h o K2`` with ``h`` connected.

    Coefficients come from the corona composition formula, so large ``h``
    stay cheap; lambda* of ``G`` is computed exactly, and 1-well-coveredness
    is re-verified directly when ``|V(G)| <= CORONA_ONE_WC_MAX_N``.
    """
    if h.n == 0 or not gr.is_connected(h):
        raise ValueError("check_corona_k2_bounds needs a connected, non-empty H")
    g = gr.corona(h, gr.complete(2))
    s = corona_compose(independence_coefficients(h).coeffs, [1, 2], h.n).coeffs
    alpha = len(s) - 1
    n = g.n
    prefix_end = min(alpha, _ceil_div(2 * alpha, 3))
    tail_start = _ceil_div(3 * alpha - 1, 4)
    rep = BoundReport(
        TheoremId.CORONA_K2,
        True,
        params={"n": n, "alpha": alpha, "prefix_end": prefix_end, "tail_start": tail_start},
    )
    if n <= CORONA_ONE_WC_MAX_N:
        rep.params["one_well_covered_checked"] = True
        rep.le(0, "i:one_well_covered", 1, int(is_one_well_covered(g)))
    else:
        rep.params["one_well_covered_checked"] = False
    rep.le(0, "ii:order", n, 3 * alpha)
    rep.le(0, "ii:order", 3 * alpha, n)
    lstar = lambda_star(g)
    rep.params["lambda_star"] = lstar
    rep.le(0, "ii:lambda", Fraction(2), lstar)
    for k in range(1, alpha):
        rep.le(k, "iii:lower", 2 * (alpha - k) * s[k], (k + 1) * s[k + 1])
        rep.le(k, "iii:upper", (k + 1) * s[k + 1], 3 * (alpha - k) * s[k])
    rep.nondecreasing(s, prefix_end, "iv:prefix")
    rep.nonincreasing(s, tail_start, "iv:tail")
    if alpha >= 3:
        rep.le(alpha - 2, "v", s[alpha - 3] * s[alpha - 1], s[alpha - 2] ** 2)
        rep.le(alpha - 1, "v", s[alpha - 2] * s[alpha], s[alpha - 1] ** 2)
    if alpha <= 17:
        rep.le(0, "vi:unimodal", 1, int(shape_profile(s).unimodal))
    return rep


def check_bounds(g: Graph, theorem: TheoremId | str, lam=None) -> BoundReport:
    """Dispatch by theorem tag; ``TH13`` needs ``lam`` (``"star"`` uses lambda*)."""
    tid = TheoremId(theorem)
    if tid is TheoremId.TH13:
        if lam is None:
            raise ValueError("TH13 needs a lambda value")
        if lam == "star":
            lam = lambda_star(g)
            if lam == INF or lam == 0:
                return _unmet(tid, f"lambda* = {lam} is not a positive rational")
        return check_quasi_regular_bounds(g, lam)
    if tid is TheoremId.COR3:
        return check_quasi_regularizable_bounds(g)
    if tid is TheoremId.COR2:
        return check_well_covered_bounds(g)
    if tid is TheoremId.TH5:
        return check_well_covered_prefix(g)
    if tid is TheoremId.COR1:
        return check_very_well_covered_bounds(g)
    if tid is TheoremId.TH3:
        return check_one_well_covered_bounds(g)
    return check_corona_k2_bounds(g)


# -- roller-coaster windows ----------------------------------------------


class WindowKind(str, enum.Enum):
    WELL_COVERED = "WELL_COVERED"
    ONE_WELL_COVERED = "ONE_WELL_COVERED"
    CORONA_K2 = "CORONA_K2"


@dataclass(frozen=True)
class Window:
    """Index interval ``lo..hi`` of the coefficient sequence; empty when ``lo > hi``."""

    lo: int
    hi: int
    kind: WindowKind

    @property
    def indices(self) -> range:
        return range(self.lo, self.hi + 1)

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "kind": self.kind.value}


def roller_coaster_window(alpha: int, n: int, kind: WindowKind | str, convention: str = "ceil") -> Window:
    """Indices where the coefficient order is not forced by the bounds above.

    ``convention="listing"`` reads the well-covered window as the literal
    listing ``ceil(a/2), floor(a/2)+1, ...``; the set it names equals the
    default ``ceil(a/2), ceil(a/2)+1, ...`` for every ``alpha``, so both
    conventions give the same window.
    """
    kind = WindowKind(kind)
    if alpha < 1 or n < alpha:
        raise ValueError(f"need alpha >= 1 and n >= alpha, got alpha={alpha}, n={n}")
    if convention not in ("ceil", "listing"):
        raise ValueError(f"unknown convention {convention!r}")
    if kind is WindowKind.WELL_COVERED:
        lo = _ceil_div(alpha, 2)
        if convention == "listing":
            lo = min(lo, alpha // 2 + 1)
        hi = min(alpha, _ceil_div(n - 1, 3))
    elif kind is WindowKind.ONE_WELL_COVERED:
        lo = _ceil_div(2 * alpha, 3)
        hi = min(alpha, _ceil_div(n - 1, 3))
    else:
        lo = _ceil_div(2 * alpha, 3)
        hi = _ceil_div(3 * alpha - 1, 4)
    return Window(lo, hi, kind)
