"""Homeomorphism classification through ordinal addresses.

Every nonempty term ``K`` with characteristic ``(alpha, p)`` is mapped
bijectively and continuously onto the ordinal space ``[0, tau]`` where
``tau = w^alpha * p`` (``p - 1`` when ``alpha = 0``).  Addresses are assigned
by structural recursion:

* a tower sends its top to ``tau`` and lays out its surviving children as
  consecutive blocks ``[offset, offset + tau_child]``;
* a union or an attachment lays out its pieces the same way, putting every
  piece of lower rank before the pieces of maximal rank so that the lower
  blocks are absorbed and the total is exactly ``w^alpha * p``.

Two terms are homeomorphic iff their characteristics agree, and the map
``point_of_ordinal(t2, ordinal_of_point(t1, q))`` realizes the homeomorphism.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Callable, Tuple

from .ordinal import (
    ONE, ZERO, ConstRank, Ordinal, add, as_ordinal, left_subtract, mul, nat,
    omega_pow, pred, tau_closed_form,
)
from .setterm import (
    Attach, CBChar, Empty, Point, SetTerm, Tower, Union, as_rational,
    cb_characteristic, contains,
)

__all__ = [
    "EmptyTerm", "NotMember", "OutOfRange", "NotEquivalent", "tau_of",
    "ordinal_of_point", "point_of_ordinal", "equivalent", "homeo_map",
    "tau_from_char",
]


class EmptyTerm(ValueError):
    pass


class NotMember(ValueError):
    pass


class OutOfRange(ValueError):
    pass


class NotEquivalent(ValueError):
    pass


def tau_from_char(char: CBChar) -> Ordinal:
    """Largest address of a term with the given characteristic."""
    if char.p == 0:
        raise EmptyTerm("the empty set has no addresses")
    if char.alpha.is_zero():
        return nat(char.p - 1)
    return mul(omega_pow(char.alpha), char.p)


@dataclass(frozen=True)
class _Remainder:
    """The base of an Attach with its glued points taken out.

    Its addresses are the base addresses with the removed (isolated) ones
    squeezed out of their finite stretch.
    """

    base: SetTerm
    removed_points: frozenset
    removed: Tuple[Ordinal, ...]

    @classmethod
    def of(cls, t: Attach) -> "_Remainder":
        gone = frozenset(x for x in t.points_attached if contains(t.base, x))
        addresses = tuple(sorted(ordinal_of_point(t.base, x) for x in gone))
        return cls(t.base, gone, addresses)

    def is_empty(self) -> bool:
        return isinstance(self.base, Empty) or (
            cb_characteristic(self.base).alpha.is_zero()
            and cb_characteristic(self.base).p == len(self.removed)
        )

    def _offsets(self, stretch: Ordinal) -> list:
        return [d.finite_part() for d in self.removed if d.limit_part() == stretch]

    def collapse(self, gamma: Ordinal) -> Ordinal:
        stretch, n = gamma.limit_part(), gamma.finite_part()
        below = sum(1 for k in self._offsets(stretch) if k < n)
        return add(stretch, n - below)

    def expand(self, delta: Ordinal) -> Ordinal:
        stretch, n = delta.limit_part(), delta.finite_part()
        for k in sorted(self._offsets(stretch)):
            if k <= n:
                n += 1
        return add(stretch, n)

    def tau(self) -> Ordinal:
        top = tau_of(self.base)
        stretch, n = top.limit_part(), top.finite_part()
        return pred(add(stretch, n + 1 - len(self._offsets(stretch))))

    def contains(self, q: Fraction) -> bool:
        return q not in self.removed_points and contains(self.base, q)

    def address(self, q: Fraction) -> Ordinal:
        if q in self.removed_points:
            raise NotMember(f"{q} is glued, not part of the remainder")
        return self.collapse(ordinal_of_point(self.base, q))

    def locate(self, delta: Ordinal) -> Fraction:
        return point_of_ordinal(self.base, self.expand(delta))

    def char(self) -> CBChar:
        base = cb_characteristic(self.base)
        if base.alpha > ZERO:
            return base
        return CBChar(ZERO, base.p - len(self.removed))


@lru_cache(maxsize=4096)
def _blocks(t: SetTerm) -> tuple:
    """Pieces of a Union/Attach in address order: lower ranks first."""
    if isinstance(t, Union):
        pieces = [(part, cb_characteristic(part)) for part in t.parts]
    else:
        pieces = []
        rest = _Remainder.of(t)
        if not rest.is_empty():
            pieces.append((rest, rest.char()))
        pieces.extend((g, cb_characteristic(g)) for _, g in t.attachments)
    top = max(char.alpha for _, char in pieces)
    return tuple(b for b, c in pieces if c.alpha < top) + tuple(b for b, c in pieces if c.alpha == top)


def _block_tau(block) -> Ordinal:
    return block.tau() if isinstance(block, _Remainder) else tau_of(block)


def _block_contains(block, q: Fraction) -> bool:
    return block.contains(q) if isinstance(block, _Remainder) else contains(block, q)


def _block_address(block, q: Fraction) -> Ordinal:
    return block.address(q) if isinstance(block, _Remainder) else ordinal_of_point(block, q)


def _block_locate(block, delta: Ordinal) -> Fraction:
    return block.locate(delta) if isinstance(block, _Remainder) else point_of_ordinal(block, delta)


@lru_cache(maxsize=8192)
def tau_of(t: SetTerm) -> Ordinal:
    """Largest address of ``t``: ``w^alpha * p`` for characteristic ``(alpha, p)``."""
    if isinstance(t, Empty):
        raise EmptyTerm("the empty set has no addresses")
    if isinstance(t, Point):
        return ZERO
    if isinstance(t, Tower):
        return tau_closed_form(t.child_scheme)
    if isinstance(t, (Union, Attach)):
        size = ZERO
        for block in _blocks(t):
            size = add(size, add(_block_tau(block), ONE))
        return pred(size)
    raise TypeError(f"not a set term: {t!r}")


def _tower_offset(t: Tower, m: int) -> Ordinal:
    """Address of the first point of child ``m``."""
    if isinstance(t.scheme, ConstRank):
        block = add(tau_of(t.child(t.alive_from)), ONE)
        return mul(block, m - t.alive_from)
    offset = ZERO
    for j in range(t.alive_from, m):
        offset = add(offset, add(tau_of(t.child(j)), ONE))
    return offset


def ordinal_of_point(t: SetTerm, q) -> Ordinal:
    q = as_rational(q)
    if isinstance(t, Point):
        if q == t.q:
            return ZERO
    elif isinstance(t, Tower):
        if q == t.top:
            return tau_of(t)
        if t.hull.lo < q < t.hull.hi:
            m = t.hull.cell_index(q)
            if m >= t.alive_from:
                return add(_tower_offset(t, m), ordinal_of_point(t.child(m), q))
    elif isinstance(t, (Union, Attach)):
        offset = ZERO
        for block in _blocks(t):
            if _block_contains(block, q):
                return add(offset, _block_address(block, q))
            offset = add(offset, add(_block_tau(block), ONE))
    elif not isinstance(t, Empty):
        raise TypeError(f"not a set term: {t!r}")
    raise NotMember(f"{q} is not a point of the term")


def point_of_ordinal(t: SetTerm, delta) -> Fraction:
    delta = as_ordinal(delta)
    if isinstance(t, Empty):
        raise OutOfRange("the empty set has no addresses")
    top = tau_of(t)
    if delta > top:
        raise OutOfRange(f"address {delta} exceeds {top}")
    if isinstance(t, Point):
        return t.q
    if isinstance(t, Tower):
        if delta == top:
            return t.top
        if isinstance(t.scheme, ConstRank):
            return _locate_in_const_tower(t, delta)
        offset, m = ZERO, t.alive_from
        while True:
            child = t.child(m)
            end = add(offset, tau_of(child))
            if delta <= end:
                return point_of_ordinal(child, left_subtract(offset, delta))
            offset, m = add(end, ONE), m + 1
    offset = ZERO
    for block in _blocks(t):
        end = add(offset, _block_tau(block))
        if delta <= end:
            return _block_locate(block, left_subtract(offset, delta))
        offset = add(end, ONE)
    raise AssertionError("address not covered by any block")


def _locate_in_const_tower(t: Tower, delta: Ordinal) -> Fraction:
    # equal blocks of size T + 1 where T = 0 or T = w^g
    child_tau = tau_of(t.child(t.alive_from))
    if child_tau.is_zero():
        k = int(delta)
    else:
        g = child_tau.leading_exponent
        c = delta.coefficient_of(g)
        remainder = left_subtract(mul(omega_pow(g), c), delta)
        k = c if remainder or c == 0 else c - 1
    start = mul(add(child_tau, ONE), k)
    inner = left_subtract(start, delta)
    assert inner <= child_tau
    return point_of_ordinal(t.child(t.alive_from + k), inner)


def equivalent(t1: SetTerm, t2: SetTerm) -> bool:
    """Homeomorphism test: the characteristic is a complete invariant."""
    return cb_characteristic(t1) == cb_characteristic(t2)


def homeo_map(t1: SetTerm, t2: SetTerm) -> Callable[[Fraction], Fraction]:
    """A homeomorphism from ``t1`` onto ``t2``, composed through addresses."""
    if not equivalent(t1, t2):
        raise NotEquivalent(
            f"characteristics differ: {cb_characteristic(t1)} vs {cb_characteristic(t2)}"
        )

    def h(q):
        return point_of_ordinal(t2, ordinal_of_point(t1, q))

    return h
