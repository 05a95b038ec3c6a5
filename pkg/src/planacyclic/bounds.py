"""Exact-rational lower-bound formulas for acyclic sets in planar oriented
graphs, used to cross-check solver output.

Everything here is `fractions.Fraction` arithmetic; the checks these feed sit
at integer boundaries where floating point would produce spurious failures.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidParameterError


def gr_bound(n: int, g: int) -> Fraction:
    """Digirth-sensitive lower bound max((n(g-3)+6)/g, (n(2g-3)+6)/(3g)).

    Valid for digirth g >= 4; at g = 8 it already reaches 3n/5.
    """
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    if g < 4:
        raise InvalidParameterError(f"gr_bound requires digirth >= 4, got {g}")
    return max(Fraction(n * (g - 3) + 6, g), Fraction(n * (2 * g - 3) + 6, 3 * g))


def table1_bound(n: int, g: int) -> Fraction:
    """Best known lower bound by digirth: 2n/5 (g=3), 5n/12 (g=4), n/2 (g=5),
    and (n(g-3)+6)/g for g >= 6."""
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    if g < 3:
        raise InvalidParameterError(f"digirth must be >= 3, got {g}")
    if g == 3:
        return Fraction(2 * n, 5)
    if g == 4:
        return Fraction(5 * n, 12)
    if g == 5:
        return Fraction(n, 2)
    return Fraction(n * (g - 3) + 6, g)
