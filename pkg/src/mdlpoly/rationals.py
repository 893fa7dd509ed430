"""Shared exact-arithmetic helpers.

Everything polytope-facing in this package works over `fractions.Fraction`.
Vectors are plain tuples of Fractions; the double description code prefers
integer tuples, produced by clearing denominators with `integerize`.
Rationals serialize as "p/q" strings, with the denominator always written
(so "1/1", not "1").
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def frac(value) -> Fraction:
    """Coerce ints, strings and Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def as_vector(values: Iterable) -> Vector:
    return tuple(frac(v) for v in values)


def rational_str(value: Fraction) -> str:
    value = frac(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or a bare integer / decimal string) into a Fraction."""
    return Fraction(text.strip())


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vec_add(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(u: Sequence, s) -> Vector:
    s = frac(s)
    return tuple(a * s for a in u)


def integerize(vector: Sequence) -> tuple[int, ...]:
    """Scale a rational vector by a positive factor to coprime integers.

    The direction is preserved (the scale factor is always positive), so this
    is safe for inequality coefficient rows.  The zero vector maps to itself.
    """
    fracs = [frac(v) for v in vector]
    denoms = [f.denominator for f in fracs]
    scale = lcm(*denoms) if denoms else 1
    ints = [int(f * scale) for f in fracs]
    g = 0
    for value in ints:
        g = gcd(g, value)
    if g > 1:
        ints = [value // g for value in ints]
    return tuple(ints)


def normalize_integers(vector: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries (sign preserved)."""
    g = 0
    for value in vector:
        g = gcd(g, value)
    if g > 1:
        return tuple(value // g for value in vector)
    return tuple(vector)
