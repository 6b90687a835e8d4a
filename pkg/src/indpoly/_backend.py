"""Kernel selection: compiled extension when importable, else pure Python.

``INDPOLY_BACKEND=python`` forces the fallback; ``INDPOLY_BACKEND=compiled``
makes a missing extension an import error instead of a silent fallback.
"""
from __future__ import annotations

import os

from . import _pykernels

_choice = os.environ.get("INDPOLY_BACKEND", "").strip().lower()

if _choice == "python":
    kernels = _pykernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        if _choice == "compiled":
            raise
        kernels = _pykernels

BACKEND = "python" if kernels is _pykernels else "compiled"
