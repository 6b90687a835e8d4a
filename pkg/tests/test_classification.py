from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings

from indpoly import graph as gr
from indpoly.classification import (
    INF,
    classify,
    extension_property,
    extension_witnesses,
    in_w2,
    is_lambda_quasi_regularizable,
    is_well_covered,
    lambda_star,
    neighborhood_profile,
)
from indpoly.enumeration import independence_number, maximal_independent_sets
from indpoly.generators import labeled_graphs, random_connected_graph

from .conftest import graphs


def lambda_star_by_subsets(g):
    """min |N(S)|/|S| over every non-empty independent subset, straight from the definition."""
    best = None
    for m in range(1, 1 << g.n):
        if g.is_independent(m):
            r = Fraction(len(gr.neighborhood(g, m)), m.bit_count())
            best = r if best is None or r < best else best
    return best


def witnesses_by_subsets(g, a):
    alpha = independence_number(g)
    am = sum(1 << v for v in a)
    rests = []
    for m in range(1 << g.n):
        if m & am == 0 and g.is_independent(m | am) and (m | am).bit_count() == alpha:
            rests.append(m)
    as_set = lambda m: frozenset(v for v in range(g.n) if m >> v & 1)  # noqa: E731
    return {frozenset({as_set(b1), as_set(b2)}) for b1, b2 in combinations(rests, 2) if not b1 & b2}


def test_named_examples():
    c7 = classify(gr.cycle(7))
    assert c7.well_covered and not c7.one_well_covered
    p4 = classify(gr.path(4))
    assert p4.very_well_covered and not p4.one_well_covered
    k3k1 = classify(gr.disjoint_union(gr.complete(3), gr.complete(1)), compute_w2=True)
    assert k3k1.one_well_covered and k3k1.in_w2 is False and k3k1.lambda_star == 0
    assert k3k1.has_isolated and not k3k1.connected
    assert classify(gr.corona(gr.cycle(3), gr.complete(2))).lambda_star >= 2
    assert classify(gr.complete(2)).one_well_covered
    assert classify(gr.copies(3, gr.complete(2))).one_well_covered


def test_cycle_table():
    for n in range(3, 13):
        rec = classify(gr.cycle(n))
        assert rec.well_covered == (n in {3, 4, 5, 7})
        assert rec.very_well_covered == (n == 4)
        assert rec.one_well_covered == (n in {3, 5})


def test_degenerate_orders():
    assert not classify(gr.complete(1)).one_well_covered
    e = classify(gr.empty(0))
    assert e.lambda_star == INF and e.alpha == 0 and e.well_covered
    assert lambda_star(gr.complete(1)) == 0


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_lambda_star_matches_definition(g):
    lam = lambda_star(g)
    if g.n == 0:
        assert lam == INF
    else:
        assert lam == lambda_star_by_subsets(g)


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=12))
def test_profile_methods_agree(g):
    a = neighborhood_profile(g, method="enum")
    b = neighborhood_profile(gr.Graph.from_rows(g.rows), method="memo")
    assert a == b


def test_profile_memo_scales_to_corona_k2():
    for h in [gr.path(17), gr.cycle(17), gr.star(16)]:
        assert lambda_star(gr.corona(h, gr.complete(2))) == 2


@given(graphs(min_n=1, max_n=8))
def test_lambda_predicate_is_threshold(g):
    lam = lambda_star(g)
    for cand in [Fraction(1, 2), Fraction(1), Fraction(4, 3), Fraction(2), Fraction(3)]:
        assert is_lambda_quasi_regularizable(g, cand) == (cand <= lam)
    with pytest.raises(ValueError):
        is_lambda_quasi_regularizable(g, 0)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_well_covered_matches_maximal_sets(g):
    sizes = {len(s) for s in maximal_independent_sets(g)}
    assert is_well_covered(g) == (len(sizes) == 1)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_record_invariants(g):
    r = classify(g, compute_w2=g.n <= 8)
    if r.very_well_covered:
        assert r.well_covered and not r.has_isolated and r.n == 2 * r.alpha
    if r.one_well_covered:
        assert r.well_covered and r.n >= 2
    if r.in_w2 is not None and not r.has_isolated and r.n >= 1:
        assert r.in_w2 == r.one_well_covered
    if r.has_isolated:
        assert r.lambda_star == 0
    if r.well_covered and not r.has_isolated and r.n:
        assert r.lambda_star >= 1


def test_berge_property_fails_only_with_isolated_vertices():
    g = gr.copies(2, gr.complete(1))
    r = classify(g)
    assert r.well_covered and r.lambda_star == 0


def test_w2_and_extension_equivalence_sweep_n6():
    for n in range(1, 7):
        for g in labeled_graphs(n):
            if g.has_isolated():
                continue
            one = classify(g).one_well_covered
            assert in_w2(g) == one
            assert extension_property(g) == one


def test_w2_equivalence_random_up_to_12(rng):
    for _ in range(40):
        n = rng.randint(8, 12)
        g = random_connected_graph(n, rng.uniform(0.05, 0.5), rng)
        assert in_w2(g) == classify(g).one_well_covered


def test_w2_equivalence_on_one_well_covered_coronas():
    for h in [gr.path(3), gr.cycle(4), gr.star(3)]:
        g = gr.corona(h, gr.complete(2))
        assert in_w2(g) and classify(g).one_well_covered


def test_connected_one_well_covered_invariants(rng):
    seen = 0
    for n in range(3, 8):
        for g in labeled_graphs(n, connected=True):
            if not classify(g).one_well_covered:
                continue
            seen += 1
            assert g.n >= 2 * independence_number(g) + 1
            assert lambda_star(g) > 1
        if n == 6:
            break
    assert seen > 0


def test_extension_witness_examples():
    w = extension_witnesses(gr.cycle(5), {0})
    assert (frozenset({2}), frozenset({3})) in w
    assert extension_witnesses(gr.path(4), {1}) == []
    assert set(extension_witnesses(gr.cycle(3), set())) == {
        (frozenset({0}), frozenset({1})),
        (frozenset({0}), frozenset({2})),
        (frozenset({1}), frozenset({2})),
    }


def test_extension_witness_errors():
    with pytest.raises(ValueError):
        extension_witnesses(gr.cycle(5), {0, 1})
    with pytest.raises(ValueError):
        extension_witnesses(gr.cycle(5), {0, 2})


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=7))
def test_extension_witnesses_match_subsets(g):
    alpha = independence_number(g)
    for m in range(1 << g.n):
        if g.is_independent(m) and m.bit_count() < alpha:
            a = [v for v in range(g.n) if m >> v & 1]
            got = {frozenset(p) for p in extension_witnesses(g, a)}
            assert got == witnesses_by_subsets(g, a)
