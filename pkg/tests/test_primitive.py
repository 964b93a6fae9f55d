import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cbrank.notation import parse_ordinal
from cbrank.ordinal import OMEGA, ZERO
from cbrank.primitive import (
    EmptyInput, IsolatedPointCert, isolated_points, primitive_of, primitive_of_term,
)
from cbrank.setterm import (
    EMPTY, Attach, CBChar, Interval, Point, canonical_tower, cb_characteristic,
    derivative_upto, max_point, min_point, points, union,
)

from strategies import GRID, SMALL, random_rational

F = Fraction
UNIT = Interval(0, 1)


def pts(t, d):
    return set(points(t, d).points)


def finite_sets(max_size=6):
    rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)
    return st.sets(rationals, min_size=1, max_size=max_size)


# -- examples ----------------------------------------------------------------


def test_isolated_points_of_a_pair():
    c0, c1 = isolated_points([0, 1])
    assert (c0.point, c1.point) == (0, 1)
    assert c0.radius <= F(1, 2) and c1.radius <= F(1, 3)
    assert max(c0.radius, c1.radius) <= F(1, 2)  # half the gap
    assert c0.verify([0, 1]) and c1.verify([0, 1])


def test_isolated_points_of_a_singleton_term():
    (cert,) = isolated_points(Point(F(7, 3)))
    assert cert.point == F(7, 3) and cert.index == 0


def test_isolated_points_of_a_tower_skip_the_top():
    t = canonical_tower(1, UNIT)
    certs = isolated_points(t, 3)
    assert [c.point for c in certs] == [F(1, 2), F(3, 4), F(7, 8)]
    assert all(c.verify(t) for c in certs)


def test_isolated_points_rejects_empty():
    with pytest.raises(EmptyInput):
        isolated_points([])
    with pytest.raises(EmptyInput):
        isolated_points(EMPTY, 3)


def test_primitive_of_empty():
    assert primitive_of([], OMEGA) is EMPTY


def test_primitive_of_single_point():
    g = primitive_of([0], 1)
    assert isinstance(g, Attach)
    assert derivative_upto(g, 1) == Point(F(0))


def test_primitive_of_pair_at_omega():
    g = primitive_of([0, 1], OMEGA)
    assert cb_characteristic(g) == CBChar(OMEGA, 2)
    assert pts(derivative_upto(g, OMEGA), 4) == {F(0), F(1)}


def test_primitive_of_rank_zero_is_the_set():
    assert primitive_of([2, 1], 0) == union(Point(F(1)), Point(F(2)))


def test_bad_certificate_fails():
    assert not IsolatedPointCert(0, F(0), F(1)).verify([0])
    assert not IsolatedPointCert(0, F(0), F(1, 3)).verify([0, F(1, 4)])


def test_primitive_of_term_on_a_point_matches_finite_case():
    for alpha in SMALL:
        assert primitive_of_term(Point(F(3)), alpha, 1) == primitive_of([3], alpha)


def test_primitive_of_term_on_a_tower():
    t = canonical_tower(1, UNIT)
    g = primitive_of_term(t, 1, 3)
    assert sorted(x for x, _ in g.attachments) == [F(1, 2), F(3, 4), F(7, 8)]
    assert pts(derivative_upto(g, 1), 5) == {F(1, 2), F(3, 4), F(7, 8), F(1)}
    # every depth-d point of F survives when F has rank at most one and alpha = 1
    for d in range(1, 4):
        assert pts(t, d) <= pts(derivative_upto(g, 1), 6)


@pytest.mark.parametrize("alpha", SMALL[1:], ids=str)
@pytest.mark.parametrize("rank", [0, 1, 2, OMEGA])
def test_truncated_primitive_identity(alpha, rank):
    # G^(alpha) = F^(alpha) together with the glued points
    F_ = canonical_tower(rank, Interval(F(-1), F(1)))
    g = primitive_of_term(F_, alpha, 4)
    glued = {x for x, _ in g.attachments}
    expected = pts(derivative_upto(F_, alpha), 5) | glued
    assert pts(derivative_upto(g, alpha), 5) == expected


def test_truncated_primitive_can_lose_a_limit_point():
    # the top of a rank-one tower is not the top of anything glued, so
    # two derivatives remove it
    F_ = canonical_tower(1, UNIT)
    g = primitive_of_term(F_, 2, 3)
    assert F(1) not in pts(derivative_upto(g, 2), 6)


# -- properties --------------------------------------------------------------


@settings(max_examples=60)
@given(finite_sets(), st.sampled_from(GRID))
def test_round_trip(xs, alpha):
    g = primitive_of(xs, alpha)
    derived = derivative_upto(g, alpha)
    for d in range(1, 5):
        assert pts(derived, d) == set(xs)


@settings(max_examples=60)
@given(finite_sets())
def test_radii_are_legal(xs):
    for cert in isolated_points(xs):
        assert 0 < cert.radius < F(1, cert.index + 1)
        assert cert.verify(xs)


@settings(max_examples=60)
@given(finite_sets(), st.sampled_from(SMALL[1:]))
def test_glued_towers_are_disjoint_and_bounded(xs, alpha):
    g = primitive_of(xs, alpha)
    hulls = sorted(
        (min_point(tower), max_point(tower)) for _, tower in getattr(g, "attachments", ())
    )
    assert all(a[1] < b[0] for a, b in zip(hulls, hulls[1:]))
    assert min(xs) - 1 <= min_point(g) and max_point(g) == max(xs)


@settings(max_examples=40)
@given(finite_sets(4), st.sampled_from(SMALL[1:]), st.sampled_from(SMALL), st.integers(1, 4))
def test_intermediate_identity(xs, alpha, beta, d):
    if beta > alpha:
        beta = alpha
    g = primitive_of(xs, alpha)
    towers = [tower for _, tower in g.attachments]
    expected = pts(union(*(derivative_upto(t, beta) for t in towers)), d) | set(xs)
    assert pts(derivative_upto(g, beta), d) == expected


def test_random_sets_at_every_grid_rank():
    rng = random.Random(7)
    for _ in range(10):
        xs = {random_rational(rng) for _ in range(rng.randint(1, 6))}
        for alpha in GRID:
            assert pts(derivative_upto(primitive_of(xs, alpha), alpha), 3) == xs
