"""Strict linear ordering on loop monomials.

Monomials are compared in five stages, with ties falling through to the
next stage:

1. weighted degree ``i/a + j/b + k/c``
2. ``i * (k + 1)``
3. ``max(j/b, k/c)``
4. ``j``
5. ``k``

:func:`cmp_monomials` evaluates the stages on integers with cleared
denominators; :func:`cmp_rational_oracle` evaluates them with exact
rationals straight from the definition and exists to cross-check the
integer form.
"""

from __future__ import annotations

from collections.abc import Iterable
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache

from skeingen.models.monomial import Monomial, SurgeryParams

OrderKey = tuple[int, int, int, int, int]
Weights = SurgeryParams | tuple[int, int, int]


class Comparison(IntEnum):
    """Outcome of a monomial comparison."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


def _abc(params: Weights) -> tuple[int, int, int]:
    if isinstance(params, SurgeryParams):
        return params.abc
    a, b, c = params
    return abs(a), abs(b), abs(c)


def monomial_key(params: Weights, m: Monomial) -> OrderKey:
    """Integer sort key whose lexicographic order is the monomial order.

    Only ``(a, b, c)`` matter; the signs of the surgery coefficients are
    ignored.
    """
    a, b, c = _abc(params)
    i, j, k = m.i, m.j, m.k
    return (i * b * c + j * a * c + k * a * b, i * (k + 1), max(j * c, k * b), j, k)


def _compare(left: tuple[object, ...], right: tuple[object, ...]) -> Comparison:
    if left < right:  # type: ignore[operator]
        return Comparison.LESS
    if left > right:  # type: ignore[operator]
        return Comparison.GREATER
    return Comparison.EQUAL


def cmp_monomials(params: Weights, u: Monomial, v: Monomial) -> Comparison:
    """Compare two monomials under the ordering for ``(a, b, c)``.

    Args:
        params: Surgery parameters, or a bare ``(a, b, c)`` triple.
        u: Left monomial.
        v: Right monomial.

    Returns:
        LESS, EQUAL or GREATER. EQUAL exactly when ``u == v``.

    Example:
        >>> cmp_monomials((2, 2, 2), Monomial(1, 0, 0), Monomial(0, 1, 0))
        <Comparison.GREATER: 1>
    """
    return _compare(monomial_key(params, u), monomial_key(params, v))


def is_greater(params: Weights, u: Monomial, v: Monomial) -> bool:
    return monomial_key(params, u) > monomial_key(params, v)


@lru_cache(maxsize=65536)
def _rational_profile(
    abc: tuple[int, int, int], m: Monomial
) -> tuple[Fraction, int, Fraction, int, int]:
    a, b, c = abc
    i, j, k = m.i, m.j, m.k
    return (
        Fraction(i, a) + Fraction(j, b) + Fraction(k, c),
        i * (k + 1),
        max(Fraction(j, b), Fraction(k, c)),
        j,
        k,
    )


def cmp_rational_oracle(params: Weights, u: Monomial, v: Monomial) -> Comparison:
    """Compare two monomials with exact rationals, stage by stage.

    Same contract as :func:`cmp_monomials`.
    """
    abc = _abc(params)
    return _compare(_rational_profile(abc, u), _rational_profile(abc, v))


def sort_monomials(params: Weights, monomials: Iterable[Monomial]) -> list[Monomial]:
    """Sort monomials ascending under the ordering."""
    abc = _abc(params)
    return sorted(monomials, key=lambda m: monomial_key(abc, m))


def max_monomial(params: Weights, monomials: Iterable[Monomial]) -> Monomial:
    """Greatest monomial under the ordering.

    Raises:
        ValueError: If ``monomials`` is empty.
    """
    abc = _abc(params)
    return max(monomials, key=lambda m: monomial_key(abc, m))
