"""JSON trees for terms and plain-text formats for rationals.

Schema (every rational is a ``"num/den"`` string, every ordinal is in
``w``-notation)::

    {"type": "empty"}
    {"type": "point", "q": "1/2"}
    {"type": "tower", "hull": ["0/1", "1/1"],
     "scheme": {"kind": "const", "rank": "w"} | {"kind": "fundamental", "limit": "w^2"},
     "alive_from": 0, "shift": "0"}
    {"type": "union", "parts": [<term>, ...]}
    {"type": "attach", "base": <term>,
     "attachments": [{"point": "0/1", "term": <term>}, ...]}
"""
from __future__ import annotations

import json
from fractions import Fraction

from .notation import parse_ordinal
from .ordinal import ConstRank, FundamentalRank
from .setterm import (
    EMPTY, Attach, Empty, Interval, Point, SetTerm, Tower, Union, as_rational,
    attach, format_rational, union,
)

__all__ = [
    "FormatError", "term_to_dict", "term_from_dict", "dumps", "loads", "parse_rational",
    "parse_rationals", "parse_interval",
]


class FormatError(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"not a rational: {text!r}") from None


def parse_rationals(text: str) -> list:
    """Rationals separated by commas and/or newlines; blank lines are skipped."""
    items = text.replace(",", "\n").splitlines()
    return [parse_rational(item) for item in items if item.strip()]


def parse_interval(text: str) -> Interval:
    lo, sep, hi = text.partition(",")
    if not sep:
        raise FormatError(f"interval must look like 'a,b', got {text!r}")
    return Interval(parse_rational(lo), parse_rational(hi))


def term_to_dict(t: SetTerm) -> dict:
    if isinstance(t, Empty):
        return {"type": "empty"}
    if isinstance(t, Point):
        return {"type": "point", "q": format_rational(t.q)}
    if isinstance(t, Tower):
        if isinstance(t.scheme, ConstRank):
            scheme = {"kind": "const", "rank": str(t.scheme.rho)}
        else:
            scheme = {"kind": "fundamental", "limit": str(t.scheme.lam)}
        return {
            "type": "tower",
            "hull": [format_rational(t.hull.lo), format_rational(t.hull.hi)],
            "scheme": scheme,
            "alive_from": t.alive_from,
            "shift": str(t.shift),
        }
    if isinstance(t, Union):
        return {"type": "union", "parts": [term_to_dict(p) for p in t.parts]}
    if isinstance(t, Attach):
        return {
            "type": "attach",
            "base": term_to_dict(t.base),
            "attachments": [
                {"point": format_rational(x), "term": term_to_dict(g)} for x, g in t.attachments
            ],
        }
    raise TypeError(f"not a set term: {t!r}")


def term_from_dict(data: dict) -> SetTerm:
    kind = data.get("type")
    if kind == "empty":
        return EMPTY
    if kind == "point":
        return Point(as_rational(data["q"]))
    if kind == "tower":
        lo, hi = data["hull"]
        spec = data["scheme"]
        if spec["kind"] == "const":
            scheme = ConstRank(parse_ordinal(spec["rank"]))
        elif spec["kind"] == "fundamental":
            scheme = FundamentalRank(parse_ordinal(spec["limit"]))
        else:
            raise ValueError(f"unknown scheme kind {spec['kind']!r}")
        return Tower(
            Interval(as_rational(lo), as_rational(hi)),
            scheme,
            int(data.get("alive_from", 0)),
            parse_ordinal(data.get("shift", "0")),
        )
    if kind == "union":
        return union(*(term_from_dict(p) for p in data["parts"]))
    if kind == "attach":
        base = term_from_dict(data["base"])
        return attach(base, [(as_rational(a["point"]), term_from_dict(a["term"])) for a in data["attachments"]])
    raise ValueError(f"unknown term type {kind!r}")


def dumps(t: SetTerm, indent: int | None = 2) -> str:
    return json.dumps(term_to_dict(t), indent=indent)


def loads(text: str) -> SetTerm:
    return term_from_dict(json.loads(text))
