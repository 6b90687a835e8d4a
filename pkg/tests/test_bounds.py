from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from indpoly import graph as gr
from indpoly.bounds import (
    TheoremId,
    WindowKind,
    check_bounds,
    check_corona_k2_bounds,
    check_one_well_covered_bounds,
    check_quasi_regular_bounds,
    check_quasi_regularizable_bounds,
    check_very_well_covered_bounds,
    check_well_covered_bounds,
    check_well_covered_prefix,
    roller_coaster_window,
)
from indpoly.classification import lambda_star
from indpoly.generators import labeled_graphs

from .conftest import graphs

C3K2 = gr.corona(gr.cycle(3), gr.complete(2))


def test_quasi_regular_examples():
    rep = check_quasi_regular_bounds(C3K2, 2)
    assert rep.passed and rep.params["r"] == 2
    rep = check_quasi_regular_bounds(gr.cycle(7), 1)
    assert rep.passed and rep.params["r"] == 2
    rep = check_quasi_regular_bounds(gr.disjoint_union(gr.complete(3), gr.complete(1)), Fraction(1, 5))
    assert not rep.hypotheses_met and not rep.passed and rep.reasons
    with pytest.raises(ValueError):
        check_quasi_regular_bounds(C3K2, 0)


def test_well_covered_examples():
    rep = check_well_covered_bounds(gr.cycle(7))
    assert rep.passed and rep.checked_count > 0
    assert check_well_covered_bounds(gr.cycle(4)).passed
    rep = check_well_covered_bounds(gr.cycle(6))
    assert not rep.hypotheses_met and rep.reasons == ["not well-covered"]


def test_cycle7_inequalities_are_the_expected_numbers():
    rep = check_well_covered_bounds(gr.cycle(7))
    # k=1: 14 <= 28 <= 35, k=2: 14 <= 21 <= 42, prefix 1<=7<=14, tail 14>=7
    assert rep.checked_count == 4 + 2 + 1
    assert not rep.violations


def test_one_well_covered_examples():
    assert check_one_well_covered_bounds(gr.cycle(5)).passed
    rep = check_one_well_covered_bounds(C3K2)
    assert rep.passed and rep.params["tail_start"] == 3
    assert not check_one_well_covered_bounds(gr.complete(2)).hypotheses_met
    assert not check_one_well_covered_bounds(gr.copies(2, gr.complete(2))).hypotheses_met


def test_strict_parts_report_equality():
    # feed a crafted sequence through the recording helpers: equality is a strict violation
    from indpoly.bounds import BoundReport

    rep = BoundReport(TheoremId.TH3, True)
    rep.lt(1, "iii", 10, 10)
    rep.nonincreasing([1, 4, 4], 1, "iv:tail", strict=True)
    assert [v.tag for v in rep.violations] == ["iii", "iv:tail"]
    assert rep.checked_count == 2 and not rep.passed


def test_corona_k2_examples():
    for h in [gr.cycle(3), gr.star(3), gr.complete(1)]:
        rep = check_corona_k2_bounds(h)
        assert rep.passed, rep.violations
    rep = check_corona_k2_bounds(gr.complete(1))
    assert rep.params["alpha"] == 1 and rep.params["n"] == 3
    with pytest.raises(ValueError):
        check_corona_k2_bounds(gr.empty(2))
    with pytest.raises(ValueError):
        check_corona_k2_bounds(gr.empty(0))


def test_very_well_covered_and_prefix():
    assert check_very_well_covered_bounds(gr.path(4)).passed
    assert check_very_well_covered_bounds(gr.corona(gr.cycle(5), gr.complete(1))).passed
    assert not check_very_well_covered_bounds(gr.cycle(5)).hypotheses_met
    assert check_well_covered_prefix(gr.cycle(7)).passed
    assert not check_well_covered_prefix(gr.path(5)).hypotheses_met


def test_quasi_regularizable_gate():
    assert check_quasi_regularizable_bounds(gr.cycle(6)).passed
    assert not check_quasi_regularizable_bounds(gr.star(3)).hypotheses_met
    assert not check_quasi_regularizable_bounds(gr.complete(1)).hypotheses_met


def test_dispatch_and_star_lambda():
    assert check_bounds(C3K2, "TH13", "star").passed
    assert not check_bounds(gr.empty(3), TheoremId.TH13, "star").hypotheses_met
    assert not check_bounds(gr.empty(0), TheoremId.TH13, "star").hypotheses_met
    with pytest.raises(ValueError):
        check_bounds(C3K2, TheoremId.TH13)
    assert check_bounds(gr.cycle(3), TheoremId.CORONA_K2).passed


def test_report_serialisation():
    d = check_bounds(gr.cycle(7), "TH13", Fraction(1)).to_dict()
    assert d["theorem_id"] == "TH13" and d["passed"] is True
    assert d["params"]["lambda"] == "1"


CHECKS = [TheoremId.COR3, TheoremId.COR2, TheoremId.TH5, TheoremId.COR1, TheoremId.TH3]


def test_soundness_all_labeled_up_to_six():
    for n in range(0, 7):
        for g in labeled_graphs(n):
            for tid in CHECKS:
                rep = check_bounds(g, tid)
                assert not rep.violations, (g, tid, rep.violations)
            rep = check_bounds(g, TheoremId.TH13, "star")
            assert not rep.violations, (g, rep.violations)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=10), st.fractions(min_value=Fraction(1, 4), max_value=3, max_denominator=6))
def test_quasi_regular_bound_monotone_in_lambda(g, lam):
    lstar = lambda_star(g)
    rep = check_quasi_regular_bounds(g, lam)
    assert rep.hypotheses_met == (lam <= lstar)
    if rep.hypotheses_met:
        assert rep.passed
        # every smaller lambda passes too
        assert check_quasi_regular_bounds(g, lam / 2).passed


def test_window_examples():
    w = roller_coaster_window(5, 12, WindowKind.WELL_COVERED)
    assert (w.lo, w.hi) == (3, 4)
    w = roller_coaster_window(3, 9, "CORONA_K2")
    assert (w.lo, w.hi) == (2, 2)
    w = roller_coaster_window(2, 5, "ONE_WELL_COVERED")
    assert (w.lo, w.hi) == (2, 2) and list(w.indices) == [2]
    w = roller_coaster_window(4, 7, "WELL_COVERED")
    assert (w.lo, w.hi) == (2, 2)
    assert roller_coaster_window(6, 6, "ONE_WELL_COVERED").empty
    with pytest.raises(ValueError):
        roller_coaster_window(0, 3, "WELL_COVERED")
    with pytest.raises(ValueError):
        roller_coaster_window(4, 3, "WELL_COVERED")


@given(st.integers(1, 60), st.integers(0, 200))
def test_window_properties(alpha, extra):
    n = alpha + extra
    wc = roller_coaster_window(alpha, n, "WELL_COVERED")
    one = roller_coaster_window(alpha, n, "ONE_WELL_COVERED")
    assert set(one.indices) <= set(wc.indices)
    assert set(wc.indices) == set(roller_coaster_window(alpha, n, "WELL_COVERED", convention="listing").indices)
    if 2 * alpha <= n <= 3 * alpha - 2:
        assert wc.hi < alpha
    assert all(0 <= k <= alpha for k in wc.indices)


@pytest.mark.slow
def test_soundness_every_connected_graph_on_eight_vertices():
    # each 8-vertex graph is some 7-vertex graph plus one vertex, so extending every
    # 7-vertex isomorphism class in all 128 ways reaches every class on 8 vertices
    import networkx as nx

    for base in nx.graph_atlas_g():
        if base.number_of_nodes() != 7:
            continue
        rows = [0] * 7
        for u, v in base.edges():
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        for nbrs in range(1, 1 << 7):
            g = gr.Graph.from_rows([r | (nbrs >> i & 1) << 7 for i, r in enumerate(rows)] + [nbrs])
            if not gr.is_connected(g):
                continue
            for tid in CHECKS:
                assert not check_bounds(g, tid).violations, (g, tid)
            assert not check_bounds(g, TheoremId.TH13, "star").violations, g
