import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cbrank.classify import (
    NotEquivalent, NotMember, OutOfRange, equivalent, homeo_map, ordinal_of_point,
    point_of_ordinal, tau_from_char, tau_of,
)
from cbrank.notation import parse_ordinal
from cbrank.oracle import OrdinalSpace, member_after
from cbrank.ordinal import OMEGA, ZERO, mul, omega_pow
from cbrank.setterm import (
    Interval, Point, canonical_tower, cb_characteristic, contains, derivative_upto,
    max_point, point_rank, points, realize,
)

from strategies import GRID, SMALL, random_interval, random_nonempty_term, terms

UNIT = Interval(0, 1)
F = Fraction


def test_tau_examples():
    assert tau_of(Point(F(5))) == ZERO
    assert tau_of(canonical_tower(OMEGA, UNIT)) == omega_pow(OMEGA)
    assert tau_of(realize(2, 3, UNIT)) == mul(omega_pow(2), 3)


def test_addresses_in_a_rank_one_tower():
    t = canonical_tower(1, UNIT)
    assert ordinal_of_point(t, 1) == OMEGA
    assert ordinal_of_point(t, F(1, 2)) == 0
    assert ordinal_of_point(t, F(3, 4)) == 1
    assert point_of_ordinal(t, 2) == F(7, 8)
    assert point_of_ordinal(t, OMEGA) == 1
    with pytest.raises(NotMember):
        ordinal_of_point(t, F(2, 3))
    with pytest.raises(OutOfRange):
        point_of_ordinal(t, OMEGA + 1)


def test_equivalent_examples():
    a = realize(OMEGA, 1, UNIT)
    assert equivalent(a, a)
    assert equivalent(a, realize(OMEGA, 1, Interval(5, 9)))
    assert not equivalent(a, realize(OMEGA, 2, UNIT))


@settings(max_examples=60)
@given(terms(nonempty=True))
def test_tau_matches_characteristic(t):
    assert tau_of(t) == tau_from_char(cb_characteristic(t))


@settings(max_examples=60)
@given(terms(nonempty=True), st.integers(1, 5))
def test_addressing_is_a_bijection(t, d):
    cloud = points(t, d).points
    addresses = [ordinal_of_point(t, q) for q in cloud]
    assert len(set(addresses)) == len(addresses)
    top = tau_of(t)
    for q, delta in zip(cloud, addresses):
        assert delta <= top
        assert point_of_ordinal(t, delta) == q


@settings(max_examples=60)
@given(terms(nonempty=True))
def test_last_address_is_a_top_point(t):
    # lower-rank pieces come first in address order, so tau lands on a top
    q = point_of_ordinal(t, tau_of(t))
    assert point_rank(t, q) == cb_characteristic(t).alpha


@pytest.mark.parametrize("alpha", GRID, ids=str)
def test_last_address_of_a_realization_is_its_maximum(alpha):
    t = realize(alpha, 3, Interval(F(-1), F(4)))
    assert point_of_ordinal(t, tau_of(t)) == max_point(t) == 4


@settings(max_examples=40)
@given(terms(nonempty=True), st.integers(1, 5))
def test_derivative_divisibility_law(t, d):
    char = cb_characteristic(t)
    space = OrdinalSpace(char.alpha, char.p)
    betas = {b for b in (ZERO, 1, 2, OMEGA, char.alpha) if b <= char.alpha}
    derived = {b: derivative_upto(t, b) for b in betas}
    for q in points(t, d).points:
        delta = ordinal_of_point(t, q)
        for b in betas:
            assert contains(derived[b], q) == member_after(space, delta, b)


@pytest.mark.parametrize("alpha", SMALL, ids=str)
def test_order_coherence_in_a_tower(alpha):
    t = canonical_tower(alpha, Interval(F(-2), F(3, 5)))
    cloud = points(t, 5).points
    addresses = [ordinal_of_point(t, q) for q in cloud]
    assert all(a < b for a, b in zip(addresses, addresses[1:]))


@settings(max_examples=30)
@given(terms(), terms(), terms())
def test_equivalence_relation(a, b, c):
    assert equivalent(a, a)
    assert equivalent(a, b) == equivalent(b, a)
    if equivalent(a, b) and equivalent(b, c):
        assert equivalent(a, c)


@settings(max_examples=40)
@given(terms(nonempty=True))
def test_homeo_map_on_itself_is_identity(t):
    h = homeo_map(t, t)
    for d in range(1, 6):
        for q in points(t, d).points:
            assert h(q) == q


@settings(max_examples=40)
@given(st.integers(0, 2**32 - 1))
def test_homeo_map_between_placements(seed):
    rng = random.Random(seed)
    alpha, p = rng.choice(GRID), rng.randint(1, 4)
    t1 = realize(alpha, p, random_interval(rng))
    t2 = realize(alpha, p, random_interval(rng))
    h = homeo_map(t1, t2)
    tops1 = points(derivative_upto(t1, alpha), 3).points
    tops2 = points(derivative_upto(t2, alpha), 3).points
    assert [h(q) for q in tops1] == tops2
    for beta in {ZERO, 1, alpha}:
        for d in range(1, 5):
            image = {h(q) for q in points(derivative_upto(t1, beta), d).points}
            assert image == set(points(derivative_upto(t2, beta), d).points)


@settings(max_examples=40)
@given(st.integers(0, 2**32 - 1))
def test_homeo_map_transports_derivatives(seed):
    rng = random.Random(seed)
    t1 = random_nonempty_term(rng)
    char = cb_characteristic(t1)
    t2 = realize(char.alpha, char.p, random_interval(rng))
    h = homeo_map(t1, t2)
    back = homeo_map(t2, t1)
    for beta in {1, char.alpha}:
        d1, d2 = derivative_upto(t1, beta), derivative_upto(t2, beta)
        for q in points(t1, 4).points:
            assert contains(d1, q) == contains(d2, h(q))
            assert back(h(q)) == q


def test_homeo_map_rejects_unequal_characteristics():
    with pytest.raises(NotEquivalent):
        homeo_map(realize(1, 2, UNIT), realize(2, 1, UNIT))


def test_constant_tower_inverse_matches_search():
    t = canonical_tower(parse_ordinal("w+1"), UNIT)
    for q in points(t, 4).points:
        assert point_of_ordinal(t, ordinal_of_point(t, q)) == q
