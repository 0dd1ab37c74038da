"""Exact rational scalars, validated square roots and q-combinatorics."""
from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import BadRadical, DegenerateQ, MissingRadical, ParseError, QEqualsOne

Rational = Fraction

_RAT_RE = re.compile(r"^-?\d+(/\d+)?$")


def rat(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings.  Floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise ParseError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise ParseError(f"not a rational: {x!r}")


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if not _RAT_RE.match(s):
        raise ParseError(f"bad rational {s!r} (expected n or p/q)")
    if "/" in s:
        p, q = s.split("/")
        if int(q) == 0:
            raise ParseError(f"zero denominator in {s!r}")
        return Fraction(int(p), int(q))
    return Fraction(int(s))


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def order(q) -> float | int:
    """Multiplicative order of a nonzero rational other than 1."""
    q = Fraction(q)
    if q == 1:
        raise QEqualsOne("order of 1 is not used")
    return 2 if q == -1 else math.inf


def q_int(n: int, q) -> Fraction:
    q = Fraction(q)
    if q == 1:
        raise QEqualsOne("q = 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    total, p = Fraction(0), Fraction(1)
    for _ in range(n):
        total += p
        p *= q
    return total


def q_factorial(n: int, q) -> Fraction:
    out = Fraction(1)
    for m in range(1, n + 1):
        out *= q_int(m, q)
    return out


def q_binom(n: int, k: int, q) -> Fraction:
    q = Fraction(q)
    if q == 1:
        raise QEqualsOne("q = 1")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    for m in range(1, n + 1):
        if q_int(m, q) == 0:
            raise DegenerateQ(f"({m})_q vanishes at q = {format_rational(q)}")
    return q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q))


class RadicalTable:
    """Finite map q -> r with r*r == q checked on insertion."""

    def __init__(self, entries=None):
        self._entries: dict[Fraction, Fraction] = {}
        for q, r in dict(entries or {}).items():
            self.add(q, r)

    def add(self, q, r):
        q, r = rat(q), rat(r)
        if r * r != q:
            raise BadRadical(f"{format_rational(r)}^2 != {format_rational(q)}")
        old = self._entries.get(q)
        if old is not None and old != r:
            raise BadRadical(f"conflicting roots for {format_rational(q)}")
        self._entries[q] = r

    def __contains__(self, q):
        return Fraction(q) in self._entries

    def __len__(self):
        return len(self._entries)

    def items(self):
        return self._entries.items()

    def __repr__(self):
        body = ", ".join(f"{format_rational(q)}->{format_rational(r)}" for q, r in self._entries.items())
        return f"RadicalTable({{{body}}})"


def sqrt_of(q, table: RadicalTable) -> Fraction:
    q = Fraction(q)
    try:
        return table._entries[q]
    except KeyError:
        raise MissingRadical(f"no square root of {format_rational(q)} supplied") from None
