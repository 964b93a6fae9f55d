"""Ordinals below epsilon_0 in Cantor normal form.

An ordinal is stored as a tuple of ``(exponent, coefficient)`` pairs with
strictly decreasing exponents (themselves ordinals) and positive integer
coefficients.  The empty tuple is 0.  Because the normal form is unique,
structural equality is ordinal equality.
"""
from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Iterable, Tuple, Union

__all__ = [
    "Ordinal", "OrdinalError", "Underflow", "NotSuccessor", "NotLimit",
    "Comparison", "ZERO", "ONE", "OMEGA", "nat", "omega_pow", "compare",
    "add", "mul", "left_subtract", "divides_omega_pow", "is_limit",
    "is_successor", "pred", "fundamental_sequence", "ConstRank",
    "FundamentalRank", "RankScheme", "Coefficients", "partial_sum",
    "tau_closed_form", "as_ordinal", "format_ordinal",
]


class OrdinalError(ArithmeticError):
    pass


class Underflow(OrdinalError):
    pass


class NotSuccessor(OrdinalError):
    pass


class NotLimit(OrdinalError):
    pass


class Comparison(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


Term = Tuple["Ordinal", int]
OrdinalLike = Union["Ordinal", int]


class Ordinal:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable[Tuple[OrdinalLike, int]] = ()):
        normal = []
        for exponent, coefficient in terms:
            exponent = as_ordinal(exponent)
            if not isinstance(coefficient, int) or coefficient < 1:
                raise ValueError(f"coefficient must be a positive int, got {coefficient!r}")
            if normal and _cmp(normal[-1][0], exponent) <= 0:
                raise ValueError("exponents must be strictly decreasing")
            normal.append((exponent, coefficient))
        self.terms: Tuple[Term, ...] = tuple(normal)
        self._hash = hash(self.terms)

    @classmethod
    def _trusted(cls, terms: Tuple[Term, ...]) -> "Ordinal":
        self = cls.__new__(cls)
        self.terms = terms
        self._hash = hash(terms)
        return self

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero())

    def __int__(self) -> int:
        if not self.is_finite():
            raise OverflowError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    @property
    def leading_exponent(self) -> "Ordinal":
        return self.terms[0][0] if self.terms else ZERO

    @property
    def last_exponent(self) -> "Ordinal":
        return self.terms[-1][0] if self.terms else ZERO

    def finite_part(self) -> int:
        if self.terms and self.terms[-1][0].is_zero():
            return self.terms[-1][1]
        return 0

    def limit_part(self) -> "Ordinal":
        """The largest limit ordinal (or 0) below or equal to self."""
        if self.terms and self.terms[-1][0].is_zero():
            return Ordinal._trusted(self.terms[:-1])
        return self

    def coefficient_of(self, exponent: OrdinalLike) -> int:
        exponent = as_ordinal(exponent)
        for e, c in self.terms:
            if e == exponent:
                return c
        return 0

    # -- protocol ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = nat(other) if other >= 0 else None
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self._hash == other._hash and self.terms == other.terms

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return _cmp(self, as_ordinal(other)) < 0

    def __le__(self, other):
        return _cmp(self, as_ordinal(other)) <= 0

    def __gt__(self, other):
        return _cmp(self, as_ordinal(other)) > 0

    def __ge__(self, other):
        return _cmp(self, as_ordinal(other)) >= 0

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        return add(self, other)

    def __radd__(self, other):
        return add(other, self)

    def __mul__(self, other):
        return mul(self, other)

    def __rmul__(self, other):
        return mul(other, self)

    def __sub__(self, other):
        # self - other, meaning the c with other + c == self
        return left_subtract(other, self)

    def __str__(self):
        return format_ordinal(self)

    def __repr__(self):
        return f"Ordinal({format_ordinal(self)!r})"


def as_ordinal(value: OrdinalLike) -> Ordinal:
    if isinstance(value, Ordinal):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return nat(value)
    raise TypeError(f"cannot interpret {value!r} as an ordinal")


def nat(n: int) -> Ordinal:
    if n < 0:
        raise Underflow(f"negative natural {n}")
    if n == 0:
        return ZERO
    return Ordinal._trusted(((ZERO, n),))


def omega_pow(a: OrdinalLike) -> Ordinal:
    return Ordinal._trusted(((as_ordinal(a), 1),))


def _cmp(a: Ordinal, b: Ordinal) -> int:
    if a is b:
        return 0
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = _cmp(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    return (len(a.terms) > len(b.terms)) - (len(a.terms) < len(b.terms))


def compare(a: OrdinalLike, b: OrdinalLike) -> Comparison:
    return Comparison(_cmp(as_ordinal(a), as_ordinal(b)))


def add(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    a, b = as_ordinal(a), as_ordinal(b)
    if not b.terms:
        return a
    head, coefficient = b.terms[0]
    out = []
    for e, c in a.terms:
        k = _cmp(e, head)
        if k > 0:
            out.append((e, c))
        elif k == 0:
            out.append((e, c + coefficient))
            return Ordinal._trusted(tuple(out) + b.terms[1:])
        else:
            break
    return Ordinal._trusted(tuple(out) + b.terms)


def mul(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    a, b = as_ordinal(a), as_ordinal(b)
    if not a.terms or not b.terms:
        return ZERO
    lead, lead_coefficient = a.terms[0]
    result = ZERO
    for e, c in b.terms:
        if e.is_zero():
            piece = Ordinal._trusted(((lead, lead_coefficient * c),) + a.terms[1:])
        else:
            piece = Ordinal._trusted(((add(lead, e), c),))
        result = add(result, piece)
    return result


def left_subtract(b: OrdinalLike, a: OrdinalLike) -> Ordinal:
    """Return the unique ``c`` with ``b + c == a``; requires ``b <= a``."""
    b, a = as_ordinal(b), as_ordinal(a)
    if _cmp(b, a) > 0:
        raise Underflow(f"{b} > {a}")
    for i, ((eb, cb), (ea, ca)) in enumerate(zip(b.terms, a.terms)):
        if eb == ea and cb == ca:
            continue
        if eb == ea:
            return Ordinal._trusted(((ea, ca - cb),) + a.terms[i + 1:])
        return Ordinal._trusted(a.terms[i:])
    return Ordinal._trusted(a.terms[len(b.terms):])


def divides_omega_pow(beta: OrdinalLike, delta: OrdinalLike) -> bool:
    """True iff ``delta == omega**beta * xi`` for some ``xi >= 1``."""
    beta, delta = as_ordinal(beta), as_ordinal(delta)
    return bool(delta.terms) and _cmp(delta.last_exponent, beta) >= 0


def is_limit(a: OrdinalLike) -> bool:
    a = as_ordinal(a)
    return bool(a.terms) and not a.last_exponent.is_zero()


def is_successor(a: OrdinalLike) -> bool:
    a = as_ordinal(a)
    return bool(a.terms) and a.last_exponent.is_zero()


def pred(a: OrdinalLike) -> Ordinal:
    a = as_ordinal(a)
    if not is_successor(a):
        raise NotSuccessor(f"{a} is not a successor")
    e, c = a.terms[-1]
    if c == 1:
        return Ordinal._trusted(a.terms[:-1])
    return Ordinal._trusted(a.terms[:-1] + ((e, c - 1),))


def fundamental_sequence(lam: OrdinalLike, n: int) -> Ordinal:
    """n-th element of the standard (Wainer) fundamental sequence of ``lam``.

    With last term ``w^g * c``: if ``g = d + 1`` it becomes
    ``w^g * (c-1) + w^d * n``; if ``g`` is a limit it becomes
    ``w^g * (c-1) + w^(g[n])``.
    """
    lam = as_ordinal(lam)
    if not is_limit(lam):
        raise NotLimit(f"{lam} is not a nonzero limit")
    if n < 0:
        raise ValueError("index must be a natural number")
    g, c = lam.terms[-1]
    head = lam.terms[:-1] + (((g, c - 1),) if c > 1 else ())
    if is_successor(g):
        tail = ((pred(g), n),) if n > 0 else ()
    else:
        tail = ((fundamental_sequence(g, n), 1),)
    return Ordinal._trusted(head + tail)


# -- rank schemes ------------------------------------------------------------


@dataclass(frozen=True)
class ConstRank:
    """Every child has the same rank ``rho``; the tower has rank ``rho + 1``."""

    rho: Ordinal

    def rank(self, n: int) -> Ordinal:
        return self.rho

    @functools.cached_property
    def top_rank(self) -> Ordinal:
        return add(self.rho, ONE)

    def first_at_least(self, gamma: Ordinal, start: int = 0) -> int | None:
        return start if self.rho >= gamma else None

    def shifted(self, s: Ordinal) -> "ConstRank":
        return ConstRank(left_subtract(s, self.rho))


@dataclass(frozen=True)
class FundamentalRank:
    """Child ``n`` has rank ``lam[n]``; the tower has rank ``lam``."""

    lam: Ordinal

    def __post_init__(self):
        if not is_limit(self.lam):
            raise NotLimit(f"{self.lam} is not a nonzero limit")

    def rank(self, n: int) -> Ordinal:
        return fundamental_sequence(self.lam, n)

    @property
    def top_rank(self) -> Ordinal:
        return self.lam

    def first_at_least(self, gamma: Ordinal, start: int = 0) -> int | None:
        """Least ``n >= start`` with ``lam[n] >= gamma`` (None if gamma >= lam)."""
        if gamma >= self.lam:
            return None
        if self.rank(start) >= gamma:
            return start
        lo, step = start, 1
        while self.rank(start + step) < gamma:
            lo = start + step
            step *= 2
        hi = start + step
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.rank(mid) >= gamma:
                hi = mid
            else:
                lo = mid
        return hi

    def shifted(self, s: Ordinal) -> "FundamentalRank":
        return FundamentalRank(left_subtract(s, self.lam))


RankScheme = Union[ConstRank, FundamentalRank]


@dataclass(frozen=True)
class Coefficients:
    """Affine coefficient description ``p_k = base + slope * k``."""

    base: int = 1
    slope: int = 0

    def __post_init__(self):
        if self.base < 1 or self.slope < 0:
            raise ValueError("coefficients must stay positive")

    def __call__(self, k: int) -> int:
        return self.base + self.slope * k


def partial_sum(scheme: RankScheme, coefficients: Coefficients, n: int) -> Ordinal:
    total = ZERO
    for k in range(n + 1):
        total = add(total, mul(omega_pow(scheme.rank(k)), coefficients(k)))
    return total


def tau_closed_form(scheme: RankScheme, coefficients: Coefficients = Coefficients()) -> Ordinal:
    """Supremum of the partial sums ``sum_{k<=n} w^(rank_k) * p_k``."""
    if isinstance(scheme, ConstRank):
        return omega_pow(add(scheme.rho, ONE))
    return omega_pow(scheme.lam)


# -- printing ----------------------------------------------------------------


def format_ordinal(a: Ordinal, nested: bool = False) -> str:
    if not a.terms:
        return "0"
    parts = []
    for e, c in a.terms:
        if e.is_zero():
            parts.append(str(c))
            continue
        if e == ONE:
            text = "w"
        elif e.is_finite() or e == OMEGA:
            text = f"w^{format_ordinal(e, True)}"
        else:
            text = f"w^({format_ordinal(e, True)})"
        parts.append(text if c == 1 else f"{text}*{c}")
    return ("+" if nested else " + ").join(parts)


ZERO = Ordinal._trusted(())
ONE = Ordinal._trusted(((ZERO, 1),))
OMEGA = Ordinal._trusted(((ONE, 1),))
