"""Symbolic compact countable subsets of the real line.

Terms are built from four constructors:

``Point(q)``
    the singleton ``{q}``.
``Tower(hull, scheme, alive_from, shift)``
    the point ``hi`` plus the ``shift``-th derivative of every child
    ``m >= alive_from``.  Child ``m`` is the canonical tower of rank
    ``scheme.rank(m)`` on the ``m``-th cell ``(knot(m-1), knot(m)]`` of
    ``hull = (lo, hi]``, where ``knot(n) = hi - (hi - lo) * 2**-(n+1)`` and
    ``knot(-1) = lo``.
``Union(parts)``
    a finite union of terms whose closed extents are separated by gaps.
``Attach(base, attachments)``
    ``base`` together with finitely many terms glued on the left of
    isolated points of ``base`` (or of points outside it), each glued term
    having the attachment point as its maximum.

Everything is exact: endpoints are ``fractions.Fraction``.  Transfinite
derivatives are computed by ordinal arithmetic on the structure, never by
iterating single steps.
"""
from __future__ import annotations

import functools
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Optional, Tuple, Union as TypingUnion

from .ordinal import (
    ONE, ZERO, ConstRank, FundamentalRank, Ordinal, RankScheme, add, as_ordinal,
    is_successor, left_subtract, pred,
)

__all__ = [
    "Interval", "SetTerm", "Empty", "EMPTY", "Point", "Tower", "Union", "Attach",
    "CBChar", "EnumEntry", "Enumeration", "OverlapError", "NotIsolated",
    "as_rational", "canonical_tower", "realize", "union", "attach",
    "derivative", "derivative_upto", "cb_characteristic", "points", "contains",
    "point_rank", "min_point", "max_point", "predecessor", "successor",
    "format_rational",
]

RationalLike = TypingUnion[Fraction, int, str]


class OverlapError(ValueError):
    pass


class NotIsolated(ValueError):
    pass


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Interval:
    """The half-open interval ``(lo, hi]``."""

    lo: Fraction
    hi: Fraction
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rational(self.lo))
        object.__setattr__(self, "hi", as_rational(self.hi))
        if not self.lo < self.hi:
            raise ValueError(f"empty interval ({self.lo}, {self.hi}]")
        object.__setattr__(self, "_hash", hash((self.lo, self.hi)))

    def __hash__(self):
        return self._hash

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def knot(self, n: int) -> Fraction:
        """``hi - (hi - lo) / 2**(n+1)``; ``knot(-1) == lo`` and the knots increase to ``hi``."""
        return self.hi - self.length / (1 << (n + 1))

    def cell(self, m: int) -> "Interval":
        return Interval(self.knot(m - 1), self.knot(m))

    def cell_index(self, q: Fraction) -> int:
        """Index ``m`` of the cell containing ``q``; needs ``lo < q < hi``."""
        if not self.lo < q < self.hi:
            raise ValueError(f"{q} is not inside the open hull of {self}")
        ceiling = -((-self.length) // (self.hi - q))
        return (ceiling - 1).bit_length() - 1

    def split(self, p: int) -> list["Interval"]:
        step = self.length / p
        return [Interval(self.lo + step * k, self.lo + step * (k + 1)) for k in range(p)]

    def __contains__(self, q) -> bool:
        return self.lo < q <= self.hi

    def __str__(self):
        return f"({self.lo}, {self.hi}]"


class SetTerm:
    __slots__ = ()


@dataclass(frozen=True)
class Empty(SetTerm):
    pass


EMPTY = Empty()


@dataclass(frozen=True)
class Point(SetTerm):
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", as_rational(self.q))


@dataclass(frozen=True)
class Tower(SetTerm):
    hull: Interval
    scheme: RankScheme
    alive_from: int = 0
    shift: Ordinal = ZERO
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "shift", as_ordinal(self.shift))
        if self.alive_from < 0:
            raise ValueError("alive_from must be a natural number")
        if not self.shift < self.scheme.top_rank:
            raise ValueError(f"shift {self.shift} kills the tower; use Point or Empty")
        if self.scheme.rank(self.alive_from) < self.shift:
            raise ValueError(f"child {self.alive_from} does not survive shift {self.shift}")

    @property
    def top(self) -> Fraction:
        return self.hull.hi

    @functools.cached_property
    def rank(self) -> Ordinal:
        return left_subtract(self.shift, self.scheme.top_rank)

    @property
    def child_scheme(self) -> RankScheme:
        """Ranks of the surviving children, as seen after the shift."""
        return self.scheme.shifted(self.shift)

    def child_rank(self, m: int) -> Ordinal:
        return left_subtract(self.shift, self.scheme.rank(m))

    def child(self, m: int) -> SetTerm:
        if m < self.alive_from:
            return EMPTY
        return _tower_child(self, m)

    def __hash__(self):
        # towers are cache keys all over; hashing their rationals is not free
        if not self._hash:
            object.__setattr__(self, "_hash", hash((self.hull, self.scheme, self.alive_from, self.shift)) or 1)
        return self._hash


@dataclass(frozen=True)
class Union(SetTerm):
    parts: Tuple[SetTerm, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if len(self.parts) < 2:
            raise ValueError("a Union needs at least two parts; use union()")
        for part in self.parts:
            if isinstance(part, (Empty, Union)):
                raise ValueError("Union parts must be nonempty and not Unions; use union()")
        for left, right in zip(self.parts, self.parts[1:]):
            if not max_point(left) < min_point(right):
                raise OverlapError("Union parts must be ordered with positive gaps")


@dataclass(frozen=True)
class Attach(SetTerm):
    base: SetTerm
    attachments: Tuple[Tuple[Fraction, SetTerm], ...] = field(default=())

    def __post_init__(self):
        items = tuple(sorted(((as_rational(x), t) for x, t in self.attachments), key=lambda e: e[0]))
        object.__setattr__(self, "attachments", items)
        if not items:
            raise ValueError("Attach needs at least one attachment; use attach()")
        previous = None
        for x, glued in items:
            if isinstance(glued, Empty) or max_point(glued) != x:
                raise ValueError(f"glued term at {x} must have {x} as its maximum")
            low = min_point(glued)
            if previous is not None and not previous < low:
                raise OverlapError("glued terms overlap")
            if contains(self.base, x) and point_rank(self.base, x) != ZERO:
                raise NotIsolated(f"attachment point {x} is not isolated in the base")
            left = predecessor(self.base, x)
            if left is not None and not left < low:
                raise OverlapError(f"glued term at {x} meets the base")
            previous = x

    @property
    def points_attached(self) -> frozenset:
        return frozenset(x for x, _ in self.attachments)


# -- constructors --------------------------------------------------------------


def canonical_tower(rho, interval: Interval) -> SetTerm:
    """A set inside ``interval`` whose ``rho``-th derivative is ``{interval.hi}``."""
    rho = as_ordinal(rho)
    if rho.is_zero():
        return Point(interval.hi)
    if is_successor(rho):
        return Tower(interval, ConstRank(pred(rho)))
    return Tower(interval, FundamentalRank(rho))


def realize(alpha, p: int, interval: Interval) -> SetTerm:
    """A term with Cantor-Bendixson characteristic ``(alpha, p)``."""
    if p < 0:
        raise ValueError("p must be a natural number")
    if p == 0:
        return EMPTY
    return union(*(canonical_tower(alpha, cell) for cell in interval.split(p)))


def union(*terms: SetTerm) -> SetTerm:
    """Flatten, drop empties and order by position; raise OverlapError on overlap."""
    parts = []
    for t in terms:
        if isinstance(t, Union):
            parts.extend(t.parts)
        elif not isinstance(t, Empty):
            parts.append(t)
    if not parts:
        return EMPTY
    if len(parts) == 1:
        return parts[0]
    parts.sort(key=min_point)
    return Union(tuple(parts))


def attach(base: SetTerm, attachments: Iterable[Tuple[RationalLike, SetTerm]]) -> SetTerm:
    """Normalizing constructor for Attach.

    Empty glued terms are dropped, as are glued single points already in the
    base.  Without attachments the base is returned; over an empty base the
    glued terms form a plain union.
    """
    kept = []
    for x, glued in attachments:
        x = as_rational(x)
        if isinstance(glued, Empty):
            continue
        if isinstance(glued, Point) and contains(base, x):
            continue
        kept.append((x, glued))
    if not kept:
        return base
    if isinstance(base, Empty):
        return union(*(g for _, g in kept))
    return Attach(base, tuple(kept))


@functools.lru_cache(maxsize=65536)
def _tower_child(tower: Tower, m: int) -> SetTerm:
    fresh = canonical_tower(tower.scheme.rank(m), tower.hull.cell(m))
    return derivative_upto(fresh, tower.shift)


# -- derivatives ---------------------------------------------------------------


def derivative(t: SetTerm) -> SetTerm:
    """The derived set (set of limit points) of ``t``."""
    return derivative_upto(t, ONE)


def derivative_upto(t: SetTerm, beta) -> SetTerm:
    """The ``beta``-th Cantor-Bendixson derivative of ``t``."""
    beta = as_ordinal(beta)
    if beta.is_zero() or isinstance(t, Empty):
        return t
    if isinstance(t, Point):
        return EMPTY
    if isinstance(t, Tower):
        shift = add(t.shift, beta)
        top_rank = t.scheme.top_rank
        if shift > top_rank:
            return EMPTY
        if shift == top_rank:
            return Point(t.top)
        first = t.scheme.first_at_least(shift, t.alive_from)
        return Tower(t.hull, t.scheme, first, shift)
    if isinstance(t, Union):
        return union(*(derivative_upto(part, beta) for part in t.parts))
    if isinstance(t, Attach):
        return attach(
            derivative_upto(t.base, beta),
            [(x, derivative_upto(glued, beta)) for x, glued in t.attachments],
        )
    raise TypeError(f"not a set term: {t!r}")


# -- characteristic ------------------------------------------------------------


class CBChar(NamedTuple):
    alpha: Ordinal
    p: int

    def __str__(self):
        return f"({self.alpha}, {self.p})"


def _combine(chars: Iterable[CBChar]) -> CBChar:
    chars = [c for c in chars if c.p]
    if not chars:
        return CBChar(ZERO, 0)
    top = max(c.alpha for c in chars)
    return CBChar(top, sum(c.p for c in chars if c.alpha == top))


def _remainder_char(t: Attach) -> CBChar:
    """Characteristic of the base with the attachment points removed."""
    base = cb_characteristic(t.base)
    if base.alpha > ZERO:
        return base
    removed = sum(1 for x in t.points_attached if contains(t.base, x))
    return CBChar(ZERO, base.p - removed)


@functools.lru_cache(maxsize=8192)
def cb_characteristic(t: SetTerm) -> CBChar:
    if isinstance(t, Empty):
        return CBChar(ZERO, 0)
    if isinstance(t, Point):
        return CBChar(ZERO, 1)
    if isinstance(t, Tower):
        return CBChar(t.rank, 1)
    if isinstance(t, Union):
        return _combine(cb_characteristic(part) for part in t.parts)
    if isinstance(t, Attach):
        pieces = [_remainder_char(t)]
        pieces.extend(cb_characteristic(glued) for _, glued in t.attachments)
        return _combine(pieces)
    raise TypeError(f"not a set term: {t!r}")


# -- membership and geometry -----------------------------------------------------


def contains(t: SetTerm, q: RationalLike) -> bool:
    q = as_rational(q)
    if isinstance(t, Empty):
        return False
    if isinstance(t, Point):
        return t.q == q
    if isinstance(t, Tower):
        if q == t.top:
            return True
        if not t.hull.lo < q < t.hull.hi:
            return False
        m = t.hull.cell_index(q)
        return m >= t.alive_from and contains(t.child(m), q)
    if isinstance(t, Union):
        return any(contains(part, q) for part in t.parts)
    if isinstance(t, Attach):
        return contains(t.base, q) or any(contains(g, q) for _, g in t.attachments)
    raise TypeError(f"not a set term: {t!r}")


def point_rank(t: SetTerm, q: RationalLike) -> Ordinal:
    """Largest ``beta`` with ``q`` in the ``beta``-th derivative of ``t``."""
    q = as_rational(q)
    if isinstance(t, Point) and t.q == q:
        return ZERO
    if isinstance(t, Tower):
        if q == t.top:
            return t.rank
        if t.hull.lo < q < t.hull.hi:
            m = t.hull.cell_index(q)
            if m >= t.alive_from:
                return point_rank(t.child(m), q)
    if isinstance(t, Union):
        for part in t.parts:
            if contains(part, q):
                return point_rank(part, q)
    if isinstance(t, Attach):
        for x, glued in t.attachments:
            if contains(glued, q):
                return point_rank(glued, q)
        return point_rank(t.base, q)
    raise ValueError(f"{q} is not a point of the term")


def min_point(t: SetTerm) -> Fraction:
    if isinstance(t, Point):
        return t.q
    if isinstance(t, Tower):
        return min_point(t.child(t.alive_from))
    if isinstance(t, Union):
        return min_point(t.parts[0])
    if isinstance(t, Attach):
        lows = [min_point(g) for _, g in t.attachments]
        if not isinstance(t.base, Empty):
            lows.append(min_point(t.base))
        return min(lows)
    raise ValueError("the empty set has no minimum")


def max_point(t: SetTerm) -> Fraction:
    if isinstance(t, Point):
        return t.q
    if isinstance(t, Tower):
        return t.top
    if isinstance(t, Union):
        return max_point(t.parts[-1])
    if isinstance(t, Attach):
        highs = [x for x, _ in t.attachments]
        if not isinstance(t.base, Empty):
            highs.append(max_point(t.base))
        return max(highs)
    raise ValueError("the empty set has no maximum")


def predecessor(t: SetTerm, q: RationalLike) -> Optional[Fraction]:
    """Largest point of ``t`` strictly below ``q`` (None if there is none).

    Raises NotIsolated when points of ``t`` accumulate at ``q`` from the left.
    """
    q = as_rational(q)
    if isinstance(t, Empty):
        return None
    if isinstance(t, Point):
        return t.q if t.q < q else None
    if isinstance(t, Tower):
        if q > t.top:
            return t.top
        if q <= t.hull.lo:
            return None
        if q == t.top:
            raise NotIsolated(f"{q} is a limit of the tower from the left")
        m = t.hull.cell_index(q)
        if m >= t.alive_from:
            below = predecessor(t.child(m), q)
            if below is not None:
                return below
        return t.hull.knot(m - 1) if m - 1 >= t.alive_from else None
    if isinstance(t, (Union, Attach)):
        found = [r for r in (predecessor(s, q) for s in _pieces(t)) if r is not None]
        return max(found) if found else None
    raise TypeError(f"not a set term: {t!r}")


def successor(t: SetTerm, q: RationalLike) -> Optional[Fraction]:
    """Smallest point of ``t`` strictly above ``q`` (None if there is none)."""
    q = as_rational(q)
    if isinstance(t, Empty):
        return None
    if isinstance(t, Point):
        return t.q if t.q > q else None
    if isinstance(t, Tower):
        if q >= t.top:
            return None
        if q <= t.hull.lo:
            return min_point(t)
        m = t.hull.cell_index(q)
        if m < t.alive_from:
            return min_point(t)
        above = successor(t.child(m), q)
        return above if above is not None else min_point(t.child(m + 1))
    if isinstance(t, (Union, Attach)):
        found = [r for r in (successor(s, q) for s in _pieces(t)) if r is not None]
        return min(found) if found else None
    raise TypeError(f"not a set term: {t!r}")


def _pieces(t: SetTerm) -> list:
    if isinstance(t, Union):
        return list(t.parts)
    return [t.base] + [g for _, g in t.attachments]


# -- enumeration ---------------------------------------------------------------


class EnumEntry(NamedTuple):
    point: Fraction
    address: Tuple[int, ...]
    rank: Ordinal


@dataclass(frozen=True)
class Enumeration:
    entries: Tuple[EnumEntry, ...]

    def __iter__(self) -> Iterator[EnumEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def points(self) -> list:
        return [e.point for e in self.entries]

    def point_set(self) -> frozenset:
        return frozenset(e.point for e in self.entries)

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write("point_num,point_den,address,rank\n")
        for e in self.entries:
            address = ".".join(map(str, e.address))
            out.write(f"{e.point.numerator},{e.point.denominator},{address},{e.rank}\n")
        return out.getvalue()


def _walk(t: SetTerm, depth: int, address: Tuple[int, ...]) -> Iterator[EnumEntry]:
    if depth <= 0 or isinstance(t, Empty):
        return
    if isinstance(t, Point):
        yield EnumEntry(t.q, address, ZERO)
    elif isinstance(t, Tower):
        yield EnumEntry(t.top, address, t.rank)
        for m in range(t.alive_from, t.alive_from + depth):
            yield from _walk(t.child(m), depth - 1, address + (m,))
    elif isinstance(t, Union):
        for i, part in enumerate(t.parts):
            yield from _walk(part, depth, address + (i,))
    elif isinstance(t, Attach):
        glued_at = t.points_attached
        for entry in _walk(t.base, depth, address + (0,)):
            if entry.point not in glued_at:
                yield entry
        for i, (_, glued) in enumerate(t.attachments, start=1):
            yield from _walk(glued, depth, address + (i,))
    else:
        raise TypeError(f"not a set term: {t!r}")


def points(t: SetTerm, depth: int) -> Enumeration:
    """Finite rendering ``E_depth`` of ``t``; monotone in depth, exhaustive in the limit."""
    if depth < 0:
        raise ValueError("depth must be a natural number")
    entries = sorted(_walk(t, depth, ()), key=lambda e: e.point)
    for a, b in zip(entries, entries[1:]):
        assert a.point < b.point, "enumeration produced a repeated point"
    return Enumeration(tuple(entries))
