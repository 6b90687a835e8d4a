"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Both backends get identical inputs; results are compared before timing is
reported, so a speed-up never hides a wrong answer.
"""
from __future__ import annotations

import argparse
import random
import sys
import timeit

from indpoly import _pykernels
from indpoly import graph as gr
from indpoly.generators import random_connected_graph

try:
    from indpoly import _ckernels
except ImportError:
    _ckernels = None


def workloads(quick: bool):
    rng = random.Random(7)
    k2 = gr.complete(2)
    size = 12 if quick else 18
    yield "counts  P%d o K2" % size, "independence_counts", gr.corona(gr.path(size), k2)
    yield "counts  random n=40 p=0.15", "independence_counts", random_connected_graph(40, 0.15, rng)
    yield "counts  random n=24 p=0.3", "independence_counts", random_connected_graph(24, 0.3, rng)
    yield "well-covered  C4 o K1 x 4", "is_well_covered", gr.copies(4, gr.corona(gr.cycle(4), gr.complete(1)))
    yield "1-well-covered  C5 o K2", "is_one_well_covered", gr.corona(gr.cycle(5), k2)
    yield "profile  random n=20", "neighborhood_profile", random_connected_graph(20, 0.25, rng)
    yield "W2  P3 o K2", "in_w2", gr.corona(gr.path(3), k2)
    yield "extension  C4 o K2", "extension_property", gr.corona(gr.cycle(4), k2)


def call(module, name, g):
    fn = getattr(module, name)
    if name == "is_well_covered":
        return fn(g.rows, g.full_mask)
    return fn(g.rows)


def normalise(result):
    if isinstance(result, (list, tuple)):
        return [int(x) for x in result]
    return bool(result)


def best_of(fn, repeat: int) -> float:
    timer = timeit.Timer(fn)
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    print(f"{'workload':34s} {'python':>12s} {'compiled':>12s} {'speed-up':>9s}")
    for label, name, g in workloads(args.quick):
        if normalise(call(_pykernels, name, g)) != normalise(call(_ckernels, name, g)):
            print(f"{label}: backends disagree", file=sys.stderr)
            return 1
        t_py = best_of(lambda: call(_pykernels, name, g), args.repeat)
        t_c = best_of(lambda: call(_ckernels, name, g), args.repeat)
        print(f"{label:34s} {t_py * 1e3:10.3f}ms {t_c * 1e3:10.3f}ms {t_py / t_c:8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
