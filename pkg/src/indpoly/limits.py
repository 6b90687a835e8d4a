"""Size limits for the exponential algorithms.

``INDPOLY_MAX_N`` lowers the enumeration limit (it can never exceed 64,
the width of one vertex-set word).
"""
from __future__ import annotations

import os

HARD_MAX_N = 64


class SizeLimitError(ValueError):
    """A graph is too large for the requested exact computation."""


def _env_limit() -> int:
    raw = os.environ.get("INDPOLY_MAX_N")
    if not raw:
        return HARD_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise SizeLimitError(f"INDPOLY_MAX_N must be an integer, got {raw!r}") from None
    return max(0, min(value, HARD_MAX_N))


ENUM_MAX_N = _env_limit()
BRUTE_MAX_N = 32
LEVEL_MAX_N = 24
LAMBDA_ENUM_MAX_N = 24
W2_MAX_N = 16


def check(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise SizeLimitError(f"{what} supports n <= {limit}, got n={n}")
