"""The compiled kernels and the pure-Python fallback must agree exactly."""
import subprocess
import sys

import pytest
from hypothesis import given, settings

from indpoly import _backend, _pykernels
from indpoly import graph as gr
from indpoly.generators import random_graph

from .conftest import _ckernels, graphs

needs_compiled = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def all_kernel_results(k, g):
    out = {
        "counts": [int(c) for c in k.independence_counts(g.rows)],
        "wc": k.is_well_covered(g.rows, g.full_mask),
        "1wc": k.is_one_well_covered(g.rows),
        "profile": list(k.neighborhood_profile(g.rows)),
    }
    if g.n <= 9:
        out["w2"] = k.in_w2(g.rows)
        out["ext"] = k.extension_property(g.rows)
    return out


@needs_compiled
@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10))
def test_backends_agree(g):
    assert all_kernel_results(_ckernels, g) == all_kernel_results(_pykernels, g)


@needs_compiled
def test_backends_agree_on_larger_graphs(rng):
    for _ in range(20):
        g = random_graph(rng.randint(14, 22), rng.uniform(0.1, 0.5), rng)
        assert _ckernels.independence_counts(g.rows) == _pykernels.independence_counts(g.rows)
        assert _ckernels.is_one_well_covered(g.rows) == _pykernels.is_one_well_covered(g.rows)
        assert _ckernels.neighborhood_profile(g.rows) == _pykernels.neighborhood_profile(g.rows)


@needs_compiled
def test_compiled_handles_64_vertices():
    g = gr.corona(gr.path(16), gr.complete(3))
    assert g.n == 64
    assert _ckernels.independence_counts(g.rows) == _pykernels.independence_counts(g.rows)
    with pytest.raises(ValueError):
        _ckernels.independence_counts(gr.empty(65).rows)


def test_memo_eviction_keeps_results(monkeypatch):
    g = gr.corona(gr.cycle(12), gr.complete(2))
    ref = _pykernels.independence_counts(g.rows)
    monkeypatch.setattr(_pykernels, "MEMO_LIMIT", 8)
    assert _pykernels.independence_counts(g.rows) == ref


def test_backend_selection_env():
    code = "import indpoly._backend as b; print(b.BACKEND)"
    out = subprocess.run(
        [sys.executable, "-c", code], env={"INDPOLY_BACKEND": "python", "PATH": ""},
        capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
    assert _backend.BACKEND in ("python", "compiled")
