"""Cantor-Bendixson derivatives of compact countable subsets of the reals.

Exact ordinal arithmetic below epsilon_0, symbolic set terms with rational
embeddings, homeomorphism classification by ordinal addresses, and
primitives under the derivative.
"""
from .classify import equivalent, homeo_map, ordinal_of_point, point_of_ordinal, tau_of
from .notation import ParseError, parse_ordinal, print_ordinal
from .ordinal import (
    OMEGA, ONE, ZERO, Ordinal, add, compare, divides_omega_pow, fundamental_sequence,
    left_subtract, mul, nat, omega_pow,
)
from .oracle import OrdinalSpace, member_after, survivor_count
from .primitive import isolated_points, primitive_of, primitive_of_term
from .setterm import (
    EMPTY, Attach, CBChar, Empty, Interval, Point, SetTerm, Tower, Union,
    canonical_tower, cb_characteristic, contains, derivative, derivative_upto,
    points, realize, union,
)

__version__ = "0.1.0"
