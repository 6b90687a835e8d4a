from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from indpoly import graph as gr
from indpoly.enumeration import brute_force_coefficients, independence_coefficients
from indpoly.generators import random_graph
from indpoly.polynomial import (
    IntPolynomial,
    corona_compose,
    real_root_census,
    shape_profile,
    squarefree_part,
    sturm_sequence,
)

QUARTIC = [1, 12, 51, 93, 62]
coeff_lists = st.lists(st.integers(-50, 50), max_size=7)


def test_arithmetic_examples():
    x1 = IntPolynomial([1, 1])
    assert x1 ** 2 == [1, 2, 1]
    assert IntPolynomial([1, 2]) ** 0 == [1]
    assert IntPolynomial([1, 3]) * IntPolynomial([1, 2]) ** 2 == [1, 7, 16, 12]
    assert IntPolynomial([0, 0, 0]).is_zero() and IntPolynomial().degree == -1
    assert IntPolynomial([2, 0, 5])(3) == 47
    assert IntPolynomial([2, 0, 5]).derivative() == [0, 10]
    assert str(IntPolynomial([1, 2, 0, 1])) == "1 + 2*x + x^3"


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_laws(a, b, c):
    a, b, c = IntPolynomial(a), IntPolynomial(b), IntPolynomial(c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == IntPolynomial()
    assert (a * b)(3) == a(3) * b(3)


def test_big_coefficients_roundtrip():
    p = IntPolynomial([1, 2]) ** 200
    assert p[100] > 2 ** 63
    assert IntPolynomial.from_json(p.to_json()) == p


def test_corona_compose_examples():
    assert corona_compose([1, 1], [1, 2], 1) == [1, 3]
    assert corona_compose([1, 3], [1, 2], 3) == [1, 9, 24, 20]
    ip4 = brute_force_coefficients(gr.path(4)).coeffs
    assert corona_compose(ip4, [1, 1], 4) == list(brute_force_coefficients(gr.corona(gr.path(4), gr.complete(1))))
    assert corona_compose(independence_coefficients(gr.star(3)).coeffs, [1, 2], 4) == QUARTIC


def test_corona_compose_errors():
    with pytest.raises(ValueError):
        corona_compose([1, 3, 1], [1, 2], 1)
    with pytest.raises(ValueError):
        corona_compose([1, 1], [2, 2], 1)


def test_corona_compose_random_pairs(rng):
    for _ in range(60):
        h = random_graph(rng.randint(0, 6), rng.random(), rng)
        y = random_graph(rng.randint(1, 4), rng.random(), rng)
        got = corona_compose(brute_force_coefficients(h).coeffs, brute_force_coefficients(y).coeffs, h.n)
        assert got == list(brute_force_coefficients(gr.corona(h, y)))


def test_shape_profile_examples():
    sp = shape_profile(QUARTIC)
    assert sp.unimodal and sp.mode_indices == (3,)
    one = shape_profile([1])
    assert one.unimodal and one.nondecreasing_prefix_end == 0 and one.nonincreasing_suffix_start == 0
    sp = shape_profile([1, 9, 24, 20])
    assert sp.unimodal and sp.log_concave
    assert not shape_profile([3, 1, 3]).unimodal
    assert shape_profile([1, 2, 2, 1]).mode_indices == (1, 2)


@given(st.lists(st.integers(1, 10 ** 6), min_size=1, max_size=9), st.integers(1, 10 ** 9))
def test_shape_profile_scaling_invariance(s, c):
    assert shape_profile(s) == shape_profile([c * v for v in s])


def test_census_examples():
    c = real_root_census([1, 2])
    assert c.distinct_real_roots == 1 and c.real_rooted
    assert not real_root_census(QUARTIC).real_rooted
    assert real_root_census(corona_compose([1, 3, 1], [1, 2], 3)).real_rooted
    assert real_root_census([5]).real_rooted
    with pytest.raises(ValueError):
        real_root_census([])


@pytest.mark.parametrize("m", range(1, 9))
def test_census_repeated_root(m):
    c = real_root_census(IntPolynomial([1, 1]) ** m)
    assert (c.squarefree_degree, c.distinct_real_roots, c.real_rooted) == (1, 1, True)


def test_squarefree_part():
    p = IntPolynomial([1, 1]) ** 3 * IntPolynomial([-2, 1]) ** 2 * IntPolynomial([1, 0, 1])
    sf = squarefree_part(p)
    assert sf.degree == 4
    assert sf == IntPolynomial([1, 1]) * IntPolynomial([-2, 1]) * IntPolynomial([1, 0, 1])


def test_sturm_chain_degrees_drop():
    chain = sturm_sequence(IntPolynomial(QUARTIC))
    assert [q.degree for q in chain] == sorted((q.degree for q in chain), reverse=True)


def test_census_against_numpy(rng):
    checked = 0
    while checked < 100:
        deg = rng.randint(1, 8)
        p = IntPolynomial([rng.randint(-20, 20) for _ in range(deg)] + [rng.choice([-3, -2, -1, 1, 2, 3])])
        if squarefree_part(p).degree != p.degree:
            continue
        roots = np.roots(list(reversed(p.coeffs)))
        imag = np.abs(roots.imag)
        if np.any((imag > 1e-9) & (imag < 1e-5)):
            continue  # too close to the axis for a float verdict
        numeric = int(np.sum(np.abs(roots.imag) <= 1e-9))
        assert real_root_census(p).distinct_real_roots == numeric, p
        checked += 1


def test_census_exact_where_floats_struggle():
    # (x - 1/1000)(x - 2/1000): close roots, exact count still 2
    p = IntPolynomial([1, -1000]) * IntPolynomial([2, -1000])
    assert real_root_census(p).distinct_real_roots == 2
    # x^2 + 10^-12 scaled: a hair off the axis
    assert real_root_census([1, 0, 10 ** 12]).distinct_real_roots == 0


@given(st.lists(st.integers(-6, 6).filter(bool), min_size=1, max_size=6))
def test_real_rooted_positive_implies_log_concave(roots):
    # product of (1 + |r| x) has positive coefficients and only real roots
    p = IntPolynomial([1])
    for r in roots:
        p = p * IntPolynomial([1, abs(r)])
    assert real_root_census(p).real_rooted
    assert shape_profile(p).log_concave


def test_real_rooted_graph_polynomials_are_log_concave(rng):
    for _ in range(40):
        g = random_graph(rng.randint(1, 10), rng.random(), rng)
        s = independence_coefficients(g)
        if real_root_census(s.coeffs).real_rooted:
            assert shape_profile(s.coeffs).log_concave


def test_census_matches_rational_root_count():
    p = IntPolynomial([-6, 11, -6, 1])  # (x-1)(x-2)(x-3)
    assert real_root_census(p).distinct_real_roots == 3
    assert all(p(Fraction(r)) == 0 for r in (1, 2, 3))
