"""Exact arithmetic in Q(zeta) for a primitive fifth root of unity.

Elements are stored in the power basis ``1, z, z^2, z^3`` with rational
coefficients; ``z^4`` is reduced with ``z^4 = -1 - z - z^2 - z^3``, so every
element has exactly one representation.

Example:
    >>> from skeingen.models.cyclotomic import ZETA
    >>> str((ZETA + ZETA**4) * (ZETA**2 + ZETA**3))
    '-1'
"""

from __future__ import annotations

import cmath
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from skeingen.core.exceptions import CyclotomicDivisionError

Rational = int | Fraction
_ROOTS = tuple(cmath.exp(2j * cmath.pi * k / 5) for k in range(5))


def _reduce(five: Sequence[Fraction]) -> tuple[Fraction, ...]:
    # c0 + ... + c4 z^4 with z^4 = -(1 + z + z^2 + z^3)
    top = five[4]
    return tuple(five[i] - top for i in range(4))


def _as_fraction(value: Rational) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient")
    return value if isinstance(value, Fraction) else Fraction(value)


class Cyclotomic5:
    """An element ``c0 + c1 z + c2 z^2 + c3 z^3`` of the fifth cyclotomic field.

    Args:
        coeffs: Up to four rational coefficients, lowest power first. A
            fifth coefficient is accepted and reduced away.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()) -> None:
        values = [_as_fraction(c) for c in coeffs]
        if len(values) > 5:
            raise ValueError(f"expected at most 5 coefficients, got {len(values)}")
        values += [Fraction(0)] * (5 - len(values))
        self._coeffs: tuple[Fraction, ...] = _reduce(values)

    @classmethod
    def _from_reduced(cls, coeffs: tuple[Fraction, ...]) -> Cyclotomic5:
        x = cls.__new__(cls)
        x._coeffs = coeffs
        return x

    @classmethod
    def rational(cls, value: Rational) -> Cyclotomic5:
        return cls((value,))

    @classmethod
    def zeta(cls, power: int = 1) -> Cyclotomic5:
        """``z^power`` for any integer power."""
        five = [Fraction(0)] * 5
        five[power % 5] = Fraction(1)
        return cls._from_reduced(_reduce(five))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def _five(self) -> list[Fraction]:
        return [*self._coeffs, Fraction(0)]

    @staticmethod
    def _coerce(other: object) -> Cyclotomic5 | None:
        if isinstance(other, Cyclotomic5):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Cyclotomic5.rational(other)
        return None

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._coeffs == rhs._coeffs

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self._coeffs[0])
        return hash(self._coeffs)

    def __add__(self, other: object) -> Cyclotomic5:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return Cyclotomic5._from_reduced(tuple(x + y for x, y in zip(self._coeffs, rhs._coeffs)))

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic5:
        return Cyclotomic5._from_reduced(tuple(-x for x in self._coeffs))

    def __sub__(self, other: object) -> Cyclotomic5:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> Cyclotomic5:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> Cyclotomic5:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        # Cyclic convolution modulo z^5 - 1, then reduce.
        product = [Fraction(0)] * 5
        for i, x in enumerate(self._coeffs):
            if x:
                for j, y in enumerate(rhs._coeffs):
                    product[(i + j) % 5] += x * y
        return Cyclotomic5._from_reduced(_reduce(product))

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic5:
        """Multiplicative inverse via the product of the other conjugates.

        Raises:
            CyclotomicDivisionError: If the element is zero.
        """
        if self.is_zero():
            raise CyclotomicDivisionError()
        others = self.galois(2) * self.galois(3) * self.galois(4)
        return others * (1 / self.norm())

    def __truediv__(self, other: object) -> Cyclotomic5:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other: object) -> Cyclotomic5:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs * self.inverse()

    def __pow__(self, exponent: int) -> Cyclotomic5:
        if exponent < 0:
            return self.inverse() ** -exponent
        result = ONE_C
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # Galois structure

    def galois(self, k: int) -> Cyclotomic5:
        """Apply the automorphism ``z -> z^k``.

        Raises:
            ValueError: If ``k`` is divisible by 5.
        """
        if k % 5 == 0:
            raise ValueError(f"z -> z^{k} is not an automorphism")
        five = [Fraction(0)] * 5
        for i, x in enumerate(self._coeffs):
            five[(i * k) % 5] += x
        return Cyclotomic5._from_reduced(_reduce(five))

    def conjugate(self) -> Cyclotomic5:
        """Complex conjugation, ``z -> z^4``."""
        return self.galois(4)

    def norm(self) -> Fraction:
        """Field norm, the product of all four conjugates."""
        product = self * self.galois(2) * self.galois(3) * self.galois(4)
        return product._coeffs[0]

    def is_rational(self) -> bool:
        return not any(self._coeffs[1:])

    def is_real(self) -> bool:
        return self == self.conjugate()

    def to_complex(self) -> complex:
        return sum((float(c) * _ROOTS[i] for i, c in enumerate(self._coeffs)), 0j)

    # Text and JSON

    def __str__(self) -> str:
        parts: list[tuple[str, str]] = []
        for power, c in enumerate(self._coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "z" if power == 1 else f"z^{power}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        text = f"-{first}" if first_sign == "-" else first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Cyclotomic5({self})"

    def to_json(self) -> list[list[int]]:
        return [[c.numerator, c.denominator] for c in self._coeffs]

    @classmethod
    def from_json(cls, data: Any) -> Cyclotomic5:
        """Parse four ``[numerator, denominator]`` pairs.

        Raises:
            ValueError: If the payload is malformed.
        """
        if not isinstance(data, list) or len(data) != 4:
            raise ValueError(f"expected four coefficient pairs, got {data!r}")
        coeffs: list[Fraction] = []
        for pair in data:
            if not isinstance(pair, list) or len(pair) != 2:
                raise ValueError(f"malformed coefficient {pair!r}")
            coeffs.append(Fraction(int(pair[0]), int(pair[1])))
        return cls(coeffs)


ZERO_C = Cyclotomic5()
ONE_C = Cyclotomic5((1,))
ZETA = Cyclotomic5.zeta(1)


@dataclass(frozen=True, slots=True)
class Mat2:
    """A 2x2 matrix ``[[a, b], [c, d]]`` over the fifth cyclotomic field."""

    a: Cyclotomic5
    b: Cyclotomic5
    c: Cyclotomic5
    d: Cyclotomic5

    @classmethod
    def of(cls, rows: Sequence[Sequence[Cyclotomic5 | Rational]]) -> Mat2:
        """Build from row-major nested sequences, coercing rationals."""
        (a, b), (c, d) = rows
        return cls(*(x if isinstance(x, Cyclotomic5) else Cyclotomic5.rational(x) for x in (a, b, c, d)))

    @classmethod
    def identity(cls) -> Mat2:
        return cls(ONE_C, ZERO_C, ZERO_C, ONE_C)

    @property
    def entries(self) -> tuple[Cyclotomic5, Cyclotomic5, Cyclotomic5, Cyclotomic5]:
        return self.a, self.b, self.c, self.d

    def __matmul__(self, other: Mat2) -> Mat2:
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __mul__(self, other: object) -> Mat2:
        if isinstance(other, Mat2):
            return self @ other
        if isinstance(other, (Cyclotomic5, int, Fraction)) and not isinstance(other, bool):
            return Mat2(*(x * other for x in self.entries))
        return NotImplemented

    def __rmul__(self, other: object) -> Mat2:
        if isinstance(other, (Cyclotomic5, int, Fraction)) and not isinstance(other, bool):
            return Mat2(*(x * other for x in self.entries))
        return NotImplemented

    def __neg__(self) -> Mat2:
        return Mat2(*(-x for x in self.entries))

    def __pow__(self, exponent: int) -> Mat2:
        if exponent < 0:
            raise ValueError("matrix powers must be nonnegative")
        result = Mat2.identity()
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def det(self) -> Cyclotomic5:
        return self.a * self.d - self.b * self.c

    def trace(self) -> Cyclotomic5:
        return self.a + self.d

    def transpose(self) -> Mat2:
        return Mat2(self.a, self.c, self.b, self.d)

    def galois(self, k: int) -> Mat2:
        return Mat2(*(x.galois(k) for x in self.entries))

    def is_identity(self) -> bool:
        return self == Mat2.identity()

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"

    def to_json(self) -> list[list[list[list[int]]]]:
        return [[self.a.to_json(), self.b.to_json()], [self.c.to_json(), self.d.to_json()]]
