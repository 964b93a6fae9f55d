"""Closed-form derivatives of compact ordinal spaces, used as an oracle.

In ``[0, w^alpha * p]`` with the order topology, a point ``delta`` survives
``beta >= 1`` derivatives iff ``delta != 0`` and ``w^beta`` divides
``delta``.  ``brute_force_derivatives`` checks this on finite truncations by
plain neighbourhood analysis before anything relies on it.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Set, Tuple

from .classify import ordinal_of_point
from .ordinal import ZERO, Ordinal, add, as_ordinal, divides_omega_pow, mul, nat, omega_pow
from .setterm import SetTerm, cb_characteristic, contains, derivative_upto, points

__all__ = [
    "INFINITE", "OrdinalSpace", "member_after", "survivor_count",
    "brute_force_derivatives", "validate_closed_form", "cross_check",
    "CrossCheck",
]

INFINITE = math.inf


@dataclass(frozen=True)
class OrdinalSpace:
    """The compact space ``[0, w^alpha * p]``."""

    alpha: Ordinal
    p: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_ordinal(self.alpha))
        if self.p < 1:
            raise ValueError("p must be positive")

    @property
    def top(self) -> Ordinal:
        return mul(omega_pow(self.alpha), self.p)

    def __contains__(self, delta) -> bool:
        return as_ordinal(delta) <= self.top


def member_after(space: OrdinalSpace, delta, beta) -> bool:
    delta, beta = as_ordinal(delta), as_ordinal(beta)
    if delta not in space:
        raise ValueError(f"{delta} is outside [0, {space.top}]")
    return beta.is_zero() or divides_omega_pow(beta, delta)


def survivor_count(space: OrdinalSpace, beta):
    """Number of nonzero multiples of ``w^beta`` in the space (INFINITE if unbounded)."""
    beta = as_ordinal(beta)
    if beta > space.alpha:
        return 0
    if beta == space.alpha:
        return space.p
    return INFINITE


# -- brute force ---------------------------------------------------------------


def _digits_to_ordinal(digits: Sequence[int]) -> Ordinal:
    # digits = (a, c_{k-1}, ..., c_0) for w^k * a + ... + c_0
    k = len(digits) - 1
    total = ZERO
    for power, d in zip(range(k, -1, -1), digits):
        total = add(total, mul(omega_pow(power), d))
    return total


def _neighbourhood_floor(x: tuple, width: int):
    """Left end of the basic neighbourhood ``(g, x]`` used for ``x``.

    The lowest nonzero digit drops by one and every digit below it becomes
    ``width - 2``; the digit value ``width - 1`` stands for "arbitrarily
    large", so ``(g, x)`` holds exactly the points that approach ``x``.
    """
    for i in range(len(x) - 1, -1, -1):
        if x[i]:
            return x[:i] + (x[i] - 1,) + (width - 2,) * (len(x) - 1 - i)
    return None


def brute_force_derivatives(alpha: int, p: int, width: int = 6) -> Tuple[List[tuple], List[Set[tuple]]]:
    """Derived sets of a truncation of ``[0, w^alpha * p]`` for finite alpha.

    Points are digit tuples ``(a, c_{alpha-1}, ..., c_0)`` with lower digits
    in ``range(width)``.  A point ``x`` of ``A`` is kept in ``A'`` iff its
    punctured neighbourhood ``(g, x)`` meets ``A``.
    """
    if alpha < 0 or p < 1 or width < 3:
        raise ValueError("need alpha >= 0, p >= 1, width >= 3")
    elements = [
        (a,) + rest
        for a in range(p)
        for rest in itertools.product(range(width), repeat=alpha)
    ]
    elements.append((p,) + (0,) * alpha)
    stages = [set(elements)]
    for _ in range(alpha + 1):
        current = stages[-1]
        nxt = set()
        for x in current:
            floor = _neighbourhood_floor(x, width)
            if floor is not None and any(floor < y < x for y in current):
                nxt.add(x)
        stages.append(nxt)
    return elements, stages


def validate_closed_form(max_alpha: int = 2, max_p: int = 3, width: int = 6) -> list:
    """Compare the divisibility rule with brute force; return the mismatches."""
    mismatches = []
    for alpha in range(max_alpha + 1):
        for p in range(1, max_p + 1):
            space = OrdinalSpace(nat(alpha), p)
            elements, stages = brute_force_derivatives(alpha, p, width)
            for x in elements:
                delta = _digits_to_ordinal(x)
                for beta, stage in enumerate(stages):
                    if (x in stage) != member_after(space, delta, beta):
                        mismatches.append((alpha, p, x, beta))
    return mismatches


# -- engine cross-check ----------------------------------------------------------


@dataclass(frozen=True)
class CrossCheck:
    checks: int
    mismatches: tuple

    @property
    def ok(self) -> bool:
        return not self.mismatches


def cross_check(t: SetTerm, depth: int, betas: Iterable = None) -> CrossCheck:
    """Structural derivatives vs address divisibility on the depth enumeration."""
    char = cb_characteristic(t)
    if char.p == 0:
        return CrossCheck(0, ())
    if betas is None:
        betas = {ZERO, nat(1), nat(2), omega_pow(1), char.alpha}
    betas = sorted({as_ordinal(b) for b in betas if as_ordinal(b) <= char.alpha})
    space = OrdinalSpace(char.alpha, char.p)
    derived = {beta: derivative_upto(t, beta) for beta in betas}
    checks, bad = 0, []
    for entry in points(t, depth):
        delta = ordinal_of_point(t, entry.point)
        for beta in betas:
            checks += 1
            if contains(derived[beta], entry.point) != member_after(space, delta, beta):
                bad.append((entry.point, delta, beta))
    return CrossCheck(checks, tuple(bad))
