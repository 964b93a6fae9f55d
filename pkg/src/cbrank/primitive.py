"""Primitives under the Cantor-Bendixson derivative.

Given a compact ``F`` and an ordinal ``alpha``, build ``G`` with
``G^(alpha) = F`` by gluing a canonical tower of rank ``alpha`` on the left of
every isolated point of ``F``.  The tower at the ``n``-th isolated point
``x`` lives in ``(x - r, x]`` where ``r = min(1/(n+2), gap/2)`` and ``gap``
is the distance from ``x`` to the rest of ``F``.

Perfect (uncountable) ``F`` are outside the term language: there the answer
is ``G = F`` itself.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union as TypingUnion

from .ordinal import ZERO, as_ordinal
from .setterm import (
    EMPTY, Empty, Interval, Point, SetTerm, as_rational, attach,
    canonical_tower, cb_characteristic, points, predecessor, successor, union,
)

__all__ = [
    "EmptyInput", "IsolatedPointCert", "isolated_points", "primitive_of",
    "primitive_of_term",
]


class EmptyInput(ValueError):
    pass


@dataclass(frozen=True)
class IsolatedPointCert:
    index: int
    point: Fraction
    radius: Fraction

    def verify(self, F) -> bool:
        """Check ``0 < r < 1/(n+1)`` and ``(x - r, x + r) ∩ F == {x}`` exactly."""
        if not 0 < self.radius < Fraction(1, self.index + 1):
            return False
        x, r = self.point, self.radius
        if isinstance(F, SetTerm):
            left, right = predecessor(F, x), successor(F, x)
            return (left is None or left <= x - r) and (right is None or right >= x + r)
        return all(y == x or abs(y - x) >= r for y in map(as_rational, F))


def _radius(index: int, gap: Optional[Fraction]) -> Fraction:
    cap = Fraction(1, index + 2)
    return cap if gap is None else min(cap, gap / 2)


def _gap(left, x, right) -> Optional[Fraction]:
    gaps = [x - left] if left is not None else []
    if right is not None:
        gaps.append(right - x)
    return min(gaps) if gaps else None


def isolated_points(F, n_max: Optional[int] = None, max_depth: int = 64) -> list:
    """Certified isolated points of ``F``.

    For a finite set of rationals every point is returned, in ascending
    order.  For a term, the first ``n_max`` isolated points are returned in
    order of first appearance in the depth enumeration (ties in real order).
    """
    if isinstance(F, SetTerm):
        return _isolated_in_term(F, n_max, max_depth)
    xs = sorted(set(map(as_rational, F)))
    if not xs:
        raise EmptyInput("F has no points")
    certs = []
    for n, x in enumerate(xs[:n_max]):
        left = xs[n - 1] if n > 0 else None
        right = xs[n + 1] if n + 1 < len(xs) else None
        certs.append(IsolatedPointCert(n, x, _radius(n, _gap(left, x, right))))
    return certs


def _isolated_in_term(F: SetTerm, n_max: Optional[int], max_depth: int) -> list:
    if isinstance(F, Empty):
        raise EmptyInput("F has no points")
    finite = cb_characteristic(F).alpha == ZERO
    if n_max is None and not finite:
        raise ValueError("an infinite term has infinitely many isolated points; pass n_max")
    found, seen = [], set()
    for depth in range(1, max_depth + 1):
        for entry in points(F, depth):
            if entry.rank == ZERO and entry.point not in seen:
                seen.add(entry.point)
                found.append(entry.point)
        if finite or len(found) >= n_max:
            break
    if n_max is not None:
        found = found[:n_max]
    certs = []
    for n, x in enumerate(found):
        gap = _gap(predecessor(F, x), x, successor(F, x))
        certs.append(IsolatedPointCert(n, x, _radius(n, gap)))
    return certs


def _glue(certs, alpha) -> list:
    return [
        (c.point, canonical_tower(alpha, Interval(c.point - c.radius, c.point)))
        for c in certs
    ]


def primitive_of(F: Iterable, alpha) -> SetTerm:
    """Compact ``G`` whose ``alpha``-th derivative is the finite set ``F``."""
    alpha = as_ordinal(alpha)
    xs = sorted(set(map(as_rational, F)))
    base = union(*(Point(x) for x in xs))
    if not xs or alpha.is_zero():
        return base
    return attach(base, _glue(isolated_points(xs), alpha))


def primitive_of_term(F: SetTerm, alpha, depth: int) -> SetTerm:
    """Depth-truncated primitive of a symbolic ``F``.

    Towers are glued at the first ``depth`` isolated points only, so
    ``G^(alpha) = F^(alpha) ∪ {glued points}``; the full countable gluing
    would be needed to recover all of ``F``.
    """
    alpha = as_ordinal(alpha)
    if isinstance(F, Empty):
        raise EmptyInput("F has no points")
    if alpha.is_zero():
        return F
    return attach(F, _glue(isolated_points(F, depth), alpha))
