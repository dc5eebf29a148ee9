"""Laurent polynomials in the framing variable A.

Every coefficient appearing in a skein computation lives in the ring
Z[A, A^-1]. This module provides an immutable, sparse representation of
that ring with canonical form, so two equal polynomials always compare
equal structurally and hash identically.

Example:
    >>> from skeingen.models.laurent import A, DELTA
    >>> str(DELTA * DELTA)
    'A^4 + 2 + A^-4'
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from typing import Any

Term = tuple[int, int]


def _canonical(items: Iterable[Term]) -> tuple[Term, ...]:
    merged: dict[int, int] = {}
    for exp, coeff in items:
        merged[exp] = merged.get(exp, 0) + coeff
    return tuple(sorted((e, c) for e, c in merged.items() if c != 0))


class LaurentPoly:
    """An element of Z[A, A^-1] in sparse canonical form.

    Terms are stored as ``(exponent, coefficient)`` pairs with strictly
    increasing exponents and nonzero integer coefficients. The zero
    polynomial has no terms.

    Args:
        terms: Either a mapping ``{exponent: coefficient}`` or an iterable
            of ``(exponent, coefficient)`` pairs. Repeated exponents are
            summed.

    Example:
        >>> p = LaurentPoly({1: 1, -1: 1})
        >>> str(p * LaurentPoly({1: 1, -1: -1}))
        'A^2 - A^-2'
    """

    __slots__ = ("_hash", "_terms")

    def __init__(self, terms: Mapping[int, int] | Iterable[Term] | None = None) -> None:
        if terms is None:
            self._terms: tuple[Term, ...] = ()
        elif isinstance(terms, Mapping):
            self._terms = _canonical(terms.items())
        else:
            self._terms = _canonical(terms)
        self._hash: int | None = None

    @classmethod
    def _from_canonical(cls, terms: tuple[Term, ...]) -> LaurentPoly:
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        """Build ``coefficient * A^exponent``."""
        if coefficient == 0:
            return cls._from_canonical(())
        return cls._from_canonical(((exponent, coefficient),))

    @classmethod
    def constant(cls, value: int) -> LaurentPoly:
        """Build the constant polynomial ``value``."""
        return cls.monomial(0, value)

    @property
    def terms(self) -> tuple[Term, ...]:
        """Canonical ``(exponent, coefficient)`` pairs, exponent-ascending."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exponent: int) -> int:
        """Coefficient of ``A^exponent`` (0 when absent)."""
        for exp, coeff in self._terms:
            if exp == exponent:
                return coeff
        return 0

    @property
    def degree(self) -> int | None:
        """Highest exponent, or None for the zero polynomial."""
        return self._terms[-1][0] if self._terms else None

    @property
    def min_degree(self) -> int | None:
        """Lowest exponent, or None for the zero polynomial."""
        return self._terms[0][0] if self._terms else None

    @property
    def leading_term(self) -> Term | None:
        """The ``(exponent, coefficient)`` pair of highest exponent."""
        return self._terms[-1] if self._terms else None

    # Arithmetic

    @staticmethod
    def _coerce(other: object) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other: object) -> LaurentPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if not rhs._terms:
            return self
        if not self._terms:
            return rhs
        return LaurentPoly._from_canonical(_canonical(self._terms + rhs._terms))

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._from_canonical(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other: object) -> LaurentPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> LaurentPoly:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other: object) -> LaurentPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if not self._terms or not rhs._terms:
            return LaurentPoly._from_canonical(())
        return LaurentPoly._from_canonical(
            _canonical((e1 + e2, c1 * c2) for e1, c1 in self._terms for e2, c2 in rhs._terms)
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPoly:
        """Raise to an integer power.

        Negative powers are defined only for units ``±A^n``.

        Raises:
            ZeroDivisionError: If a negative power of a non-unit is requested.
        """
        if exponent < 0:
            unit = self.is_unit()
            if unit is None:
                raise ZeroDivisionError(f"{self} is not a unit in Z[A, A^-1]")
            sign, exp = unit
            return LaurentPoly.monomial(-exp * -exponent, sign ** (-exponent))
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, n: int) -> LaurentPoly:
        """Multiply by ``A^n``."""
        return LaurentPoly._from_canonical(tuple((e + n, c) for e, c in self._terms))

    # Structure

    def is_unit(self) -> tuple[int, int] | None:
        """Detect units of Z[A, A^-1].

        Returns:
            ``(sign, exponent)`` when the polynomial equals ``sign * A^exponent``
            with ``sign`` in {1, -1}; None otherwise.
        """
        if len(self._terms) != 1:
            return None
        exp, coeff = self._terms[0]
        if coeff not in (1, -1):
            return None
        return coeff, exp

    def mirror(self) -> LaurentPoly:
        """Apply the involution A -> A^-1 (crossing reversal)."""
        return LaurentPoly._from_canonical(tuple((-e, c) for e, c in reversed(self._terms)))

    def evaluate(self, value: int | Fraction) -> int | Fraction:
        """Evaluate at ``A = value``.

        Raises:
            ZeroDivisionError: If ``value`` is 0 and a negative exponent occurs.
        """
        total: int | Fraction = 0
        for exp, coeff in self._terms:
            if exp >= 0:
                total += coeff * value**exp
            else:
                total += coeff * Fraction(1) / Fraction(value) ** (-exp)
        if isinstance(total, Fraction) and total.denominator == 1:
            return total.numerator
        return total

    def eval_minus_one(self) -> int:
        """Value at ``A = -1``."""
        return sum(c if e % 2 == 0 else -c for e, c in self._terms)

    # Equality, hashing, rendering

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        if self._hash is None:
            # constants hash like the int they compare equal to
            if not self._terms:
                self._hash = hash(0)
            elif len(self._terms) == 1 and self._terms[0][0] == 0:
                self._hash = hash(self._terms[0][1])
            else:
                self._hash = hash(("LaurentPoly", self._terms))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self._terms)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exp, coeff in reversed(self._terms):
            magnitude = abs(coeff)
            if exp == 0:
                body = str(magnitude)
            else:
                power = "A" if exp == 1 else f"A^{exp}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(parts)

    def to_json(self) -> list[list[Any]]:
        """JSON form: ``[[exponent, "coefficient"], ...]``, exponent-ascending."""
        return [[exp, str(coeff)] for exp, coeff in self._terms]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[Any]]) -> LaurentPoly:
        """Inverse of :meth:`to_json`."""
        return cls((int(exp), int(coeff)) for exp, coeff in data)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
A = LaurentPoly.monomial(1)
# Value of the unknot: -A^2 - A^-2.
DELTA = LaurentPoly({2: -1, -2: -1})
