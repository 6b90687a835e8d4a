import random

import pytest
from hypothesis import strategies as st

from indpoly import _pykernels
from indpoly.graph import Graph

try:
    from indpoly import _ckernels
except ImportError:  # pragma: no cover - build without a compiler
    _ckernels = None

KERNELS = [pytest.param(_pykernels, id="python")]
if _ckernels is not None:
    KERNELS.append(pytest.param(_ckernels, id="compiled"))


@pytest.fixture(params=KERNELS)
def kernel(request):
    return request.param


@pytest.fixture
def rng():
    return random.Random(20261018)


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])
