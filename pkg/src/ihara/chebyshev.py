"""Chebyshev polynomials of both kinds and their integer dilations.

The dilated families absorb the irrational scaling ``x / (2 sqrt(q))`` and
the prefactor ``q**(k/2)``::

    G_k(x) = q**(k/2) * U_k(x / (2 sqrt q))      G_0 = 1, G_1 = x
    F_k(x) = 2 q**(k/2) * T_k(x / (2 sqrt q))    F_0 = 2, F_1 = x

Both satisfy ``P_k = x P_{k-1} - q P_{k-2}`` and have integer coefficients.
With ``q = d - 1`` they evaluate the non-backtracking walk sums of a
``d``-regular graph directly at its adjacency matrix.

Every family is zero at negative index.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import IntPolynomial, RationalSeries

KINDS = ("U", "T")
DILATED_KINDS = ("G", "F")

_X = IntPolynomial([0, 1])


@lru_cache(maxsize=None)
def _classic(kind: str, k: int) -> IntPolynomial:
    if k < 0:
        return IntPolynomial()
    if k == 0:
        return IntPolynomial([1])
    if k == 1:
        return IntPolynomial([0, 2]) if kind == "U" else _X
    return _X * 2 * _classic(kind, k - 1) - _classic(kind, k - 2)


def chebyshev(kind: str, k: int) -> IntPolynomial:
    """U_k (second kind) or T_k (first kind) as an integer polynomial."""
    if kind not in KINDS:
        raise ValueError(f"unknown Chebyshev kind {kind!r}")
    return _classic(kind, k)


@lru_cache(maxsize=None)
def _dilated(kind: str, q: int, k: int) -> IntPolynomial:
    if k < 0:
        return IntPolynomial()
    if k == 0:
        return IntPolynomial([1 if kind == "G" else 2])
    if k == 1:
        return _X
    return _X * _dilated(kind, q, k - 1) - _dilated(kind, q, k - 2) * q


def dilated(kind: str, q: int, k: int) -> IntPolynomial:
    """G_k or F_k for parameter ``q`` (``q = d - 1`` for a d-regular graph)."""
    if kind not in DILATED_KINDS:
        raise ValueError(f"unknown dilated family {kind!r}")
    if q < 1:
        raise ValueError("dilation parameter q must be >= 1")
    return _dilated(kind, q, k)


def generating_function(kind: str, x0, order: int, q: int = 1) -> RationalSeries:
    """Closed-form generating function of the family at ``x = x0``, expanded exactly.

    U: 1 / (1 - 2 x t + t^2)      T: (1 - x t) / (1 - 2 x t + t^2)
    G: 1 / (1 - x t + q t^2)      F: (2 - x t) / (1 - x t + q t^2)
    """
    x0 = Fraction(x0)
    if kind in KINDS:
        den = RationalSeries([1, -2 * x0, 1], order)
        num = RationalSeries([1] if kind == "U" else [1, -x0], order)
    elif kind in DILATED_KINDS:
        den = RationalSeries([1, -x0, q], order)
        num = RationalSeries([1] if kind == "G" else [2, -x0], order)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return num / den


def family_series(kind: str, x0, order: int, q: int = 1) -> RationalSeries:
    """``sum_{k <= order} P_k(x0) t^k`` from the recurrence polynomials."""
    x0 = Fraction(x0)
    if kind in KINDS:
        return RationalSeries([chebyshev(kind, k)(x0) for k in range(order + 1)], order)
    return RationalSeries([dilated(kind, q, k)(x0) for k in range(order + 1)], order)


def generating_check(kind: str, order: int, x0, q: int = 1) -> bool:
    if order < 1:
        raise ValueError("order must be >= 1")
    return family_series(kind, x0, order, q) == generating_function(kind, x0, order, q)
