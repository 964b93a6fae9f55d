import itertools

import pytest
from hypothesis import assume, given, settings, strategies as st

from cbrank.ordinal import (
    OMEGA, ONE, ZERO, Comparison, ConstRank, Coefficients, FundamentalRank,
    NotLimit, NotSuccessor, Ordinal, Underflow, add, compare, divides_omega_pow,
    fundamental_sequence, is_limit, is_successor, left_subtract, mul, nat,
    omega_pow, partial_sum, pred, tau_closed_form,
)

from strategies import cnf

W = OMEGA
W2 = omega_pow(2)
W3 = omega_pow(3)


def below_w3(a, b, c):
    return add(add(mul(W2, a), mul(W, b)), nat(c))


# -- examples ----------------------------------------------------------------


def test_compare_examples():
    assert compare(0, 0) is Comparison.EQ
    assert compare(W, 3) is Comparison.GT
    assert compare(add(W2, W), add(W2, 5)) is Comparison.GT


def test_compare_matches_lexicographic_triples():
    # ordinals below w^3 are exactly the triples (a, b, c), ordered lexicographically
    triples = list(itertools.product(range(3), repeat=3))
    for x, y in itertools.product(triples, repeat=2):
        expected = (x > y) - (x < y)
        assert int(compare(below_w3(*x), below_w3(*y))) == expected


def test_add_mul_examples():
    assert add(1, W) == W
    assert add(W, 1) == Ordinal([(1, 1), (0, 1)])
    assert mul(W, 2) == Ordinal([(1, 2)])
    assert mul(2, W) == W
    ww = omega_pow(W)
    assert mul(ww, 3) == add(add(ww, ww), ww)
    assert mul(ww, 3) == Ordinal([(W, 3)])


@pytest.mark.parametrize("k", range(6))
def test_mul_by_natural_is_repeated_addition(k):
    a = Ordinal([(W, 2), (3, 1), (0, 4)])
    total = ZERO
    for _ in range(k):
        total = add(total, a)
    assert mul(a, k) == total


def test_left_subtract_examples():
    assert left_subtract(W, W2) == W2
    diff = left_subtract(add(W2, W), add(W2, mul(W, 4)))
    assert diff == mul(W, 3)
    assert add(add(W2, W), diff) == add(W2, mul(W, 4))
    assert left_subtract(5, 5) == ZERO
    with pytest.raises(Underflow):
        left_subtract(W2, W)


def test_divides_examples():
    assert divides_omega_pow(0, 7)
    delta = add(mul(W3, 2), mul(W2, 5))
    assert divides_omega_pow(2, delta)
    assert mul(W2, add(mul(W, 2), 5)) == delta
    small = add(W2, W)
    assert not divides_omega_pow(2, small)
    # no xi below w^2 solves w^2 * xi = w^2 + w
    for a, b in itertools.product(range(4), repeat=2):
        assert mul(W2, add(mul(W, a), b)) != small


def test_limit_successor_examples():
    assert is_limit(mul(W, 2))
    assert is_successor(add(W, 3))
    assert pred(add(W, 3)) == add(W, 2)
    assert not is_limit(0) and not is_successor(0)
    with pytest.raises(NotSuccessor):
        pred(W)


def test_fundamental_sequence_examples():
    for n in range(6):
        assert fundamental_sequence(W, n) == nat(n)
    assert fundamental_sequence(omega_pow(W), 3) == W3
    assert fundamental_sequence(mul(W2, 2), 4) == add(W2, mul(W, 4))
    with pytest.raises(NotLimit):
        fundamental_sequence(add(W, 1), 0)


def test_tau_closed_form_examples():
    assert tau_closed_form(ConstRank(ZERO)) == W
    assert tau_closed_form(ConstRank(W), Coefficients(base=1, slope=1)) == omega_pow(add(W, 1))
    ww = omega_pow(W)
    assert tau_closed_form(FundamentalRank(ww)) == omega_pow(ww)


def test_natural_embedding():
    assert nat(0) == ZERO and nat(0).is_zero()
    assert nat(5) == Ordinal([(0, 5)])
    assert int(nat(7)) == 7


def test_non_commutativity_witness():
    assert add(1, W) != add(W, 1)
    assert mul(2, W) != mul(W, 2)


# -- laws --------------------------------------------------------------------

ORD = cnf(max_depth=4, max_coeff=9)


@given(ORD, ORD, ORD)
def test_add_associative(a, b, c):
    assert add(add(a, b), c) == add(a, add(b, c))


@given(ORD, ORD, ORD)
def test_mul_associative(a, b, c):
    assert mul(mul(a, b), c) == mul(a, mul(b, c))


@given(ORD, ORD, ORD)
def test_left_distributive(a, b, c):
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


@given(ORD, ORD)
def test_subtraction_round_trip(a, b):
    lo, hi = sorted((a, b))
    assert add(lo, left_subtract(lo, hi)) == hi


@given(ORD, ORD, ORD)
def test_compare_total_order(a, b, c):
    assert int(compare(a, b)) == -int(compare(b, a))
    assert (compare(a, b) is Comparison.EQ) == (a == b)
    if a <= b and b <= c:
        assert a <= c


@given(ORD, ORD)
def test_compare_with_sum(a, b):
    result = compare(a, add(a, b))
    assert result in (Comparison.EQ, Comparison.LT)
    assert (result is Comparison.EQ) == b.is_zero()


@given(ORD, ORD)
def test_divisibility_witness(beta, xi):
    # w^beta * xi is always divisible; a unit added on top never is for beta > 0
    assume(not xi.is_zero())
    delta = mul(omega_pow(beta), xi)
    assert divides_omega_pow(beta, delta)
    if not beta.is_zero():
        assert not divides_omega_pow(beta, add(delta, 1))


@given(ORD)
def test_successor_limit_partition(a):
    assert a.is_zero() + is_limit(a) + is_successor(a) == 1
    if is_successor(a):
        assert add(pred(a), 1) == a


@settings(max_examples=60)
@given(ORD, st.lists(ORD, min_size=1, max_size=5))
def test_fundamental_sequence_increasing_and_cofinal(lam, sample):
    assume(is_limit(lam))
    seq = [fundamental_sequence(lam, n) for n in range(12)]
    assert all(x < y for x, y in zip(seq, seq[1:]))
    assert seq[-1] < lam
    for gamma in sample:
        if gamma < lam:
            assert any(gamma < fundamental_sequence(lam, n) for n in range(200)), gamma


@settings(max_examples=40)
@given(ORD, st.integers(1, 3), st.integers(0, 2), st.lists(ORD, max_size=4))
def test_tau_closed_form_bounds_partial_sums(rho, base, slope, sample):
    scheme = ConstRank(rho)
    coeff = Coefficients(base=base, slope=slope)
    tau = tau_closed_form(scheme, coeff)
    sums = [partial_sum(scheme, coeff, n) for n in range(30)]
    assert all(s < tau for s in sums)
    for gamma in sample:
        if gamma < tau:
            assert any(gamma < s for s in sums)


@settings(max_examples=40)
@given(ORD, st.lists(ORD, max_size=4))
def test_tau_closed_form_fundamental(lam, sample):
    assume(is_limit(lam))
    scheme = FundamentalRank(lam)
    tau = tau_closed_form(scheme)
    sums = [partial_sum(scheme, Coefficients(), n) for n in range(40)]
    assert all(s < tau for s in sums)
    for gamma in sample:
        gamma = mul(omega_pow(gamma), 2)
        if gamma < tau:
            assert any(gamma < s for s in sums)


def test_constructor_rejects_non_cnf():
    with pytest.raises(ValueError):
        Ordinal([(0, 1), (1, 1)])
    with pytest.raises(ValueError):
        Ordinal([(1, 0)])
