"""Loop monomials and surgery parameters.

A monomial ``x^i y^j z^k`` stands for ``i + j + k`` disjoint parallel
loops in the complement of the genus-2 handlebody: ``i`` copies of the
loop around the first handle, ``j`` around the second and ``k`` around
both. Surgery parameters ``(alpha, beta, gamma)`` are validated against
the finiteness hypotheses on construction.
"""

from __future__ import annotations

import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from enum import StrEnum
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from skeingen.core.exceptions import InvalidParametersError

_FACTOR_RE = re.compile(r"^([xyz])(?:\^(\d+))?$")


@dataclass(frozen=True, slots=True)
class Monomial:
    """The loop collection ``x^i y^j z^k``.

    Args:
        i: Exponent of x.
        j: Exponent of y.
        k: Exponent of z.

    Raises:
        ValueError: If any exponent is negative.

    Example:
        >>> str(Monomial(2, 0, 1))
        'x^2 z'
    """

    i: int
    j: int
    k: int

    def __post_init__(self) -> None:
        if self.i < 0 or self.j < 0 or self.k < 0:
            raise ValueError(f"monomial exponents must be nonnegative, got {tuple(self)}")

    def __iter__(self) -> Iterator[int]:
        yield self.i
        yield self.j
        yield self.k

    @property
    def exponents(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)

    def __str__(self) -> str:
        factors = []
        for name, exp in zip("xyz", self.exponents):
            if exp == 1:
                factors.append(name)
            elif exp > 1:
                factors.append(f"{name}^{exp}")
        return " ".join(factors) if factors else "1"

    def to_json(self) -> list[int]:
        return [self.i, self.j, self.k]

    @classmethod
    def from_json(cls, data: Sequence[int]) -> Monomial:
        i, j, k = data
        return cls(int(i), int(j), int(k))

    @classmethod
    def parse(cls, text: str) -> Monomial:
        """Parse the text form produced by ``str()``.

        Raises:
            ValueError: If the text is not a monomial in x, y, z.
        """
        text = text.strip()
        if text == "1":
            return cls(0, 0, 0)
        exps = {"x": 0, "y": 0, "z": 0}
        for factor in text.split():
            match = _FACTOR_RE.match(factor)
            if match is None:
                raise ValueError(f"not a monomial factor: {factor!r}")
            exps[match.group(1)] += int(match.group(2) or 1)
        return cls(exps["x"], exps["y"], exps["z"])


ONE_MONOMIAL = Monomial(0, 0, 0)


def violated_hypothesis(a: int, b: int, c: int) -> str | None:
    """Return the first failing finiteness hypothesis for ``(a, b, c)``.

    The hypotheses are ``a, b, c > 1`` and the three strict triangle
    inequalities on reciprocals, compared by cross-multiplication.
    """
    for name, value in (("a", a), ("b", b), ("c", c)):
        if value <= 1:
            return f"{name} > 1"
    if b * c >= a * (b + c):
        return "1/a < 1/b + 1/c"
    if a * c >= b * (a + c):
        return "1/b < 1/a + 1/c"
    if a * b >= c * (a + b):
        return "1/c < 1/a + 1/b"
    return None


class SurgeryParams(BaseModel):
    """Surgery coefficients ``(alpha, beta, gamma)`` of M(alpha, beta, gamma).

    Args:
        alpha: Signed twist coefficient on the first handle.
        beta: Signed twist coefficient on the second handle.
        gamma: Signed twist coefficient on the band joining them.

    Raises:
        InvalidParametersError: If ``|alpha|, |beta|, |gamma| > 1`` or one of
            the three reciprocal triangle inequalities fails.

    Example:
        >>> sp = SurgeryParams(alpha=3, beta=-2, gamma=5)
        >>> sp.abc, sp.is_same_sign
        ((3, 2, 5), False)
    """

    model_config = ConfigDict(frozen=True)

    alpha: int = Field(description="Surgery coefficient alpha")
    beta: int = Field(description="Surgery coefficient beta")
    gamma: int = Field(description="Surgery coefficient gamma")

    @model_validator(mode="after")
    def check_hypotheses(self) -> Self:
        violated = violated_hypothesis(*self.abc)
        if violated is not None:
            raise InvalidParametersError(self.as_tuple(), violated)
        return self

    @classmethod
    def of(cls, alpha: int, beta: int, gamma: int) -> SurgeryParams:
        """Positional constructor."""
        return cls(alpha=alpha, beta=beta, gamma=gamma)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.alpha, self.beta, self.gamma)

    @property
    def a(self) -> int:
        return abs(self.alpha)

    @property
    def b(self) -> int:
        return abs(self.beta)

    @property
    def c(self) -> int:
        return abs(self.gamma)

    @property
    def abc(self) -> tuple[int, int, int]:
        return (abs(self.alpha), abs(self.beta), abs(self.gamma))

    @property
    def signs(self) -> tuple[int, int, int]:
        return tuple(1 if v > 0 else -1 for v in self.as_tuple())  # type: ignore[return-value]

    @property
    def is_same_sign(self) -> bool:
        return len(set(self.signs)) == 1

    @property
    def is_canonical(self) -> bool:
        """True for the all-positive form and the mixed form ``(a, -b, c)``."""
        return self.signs in ((1, 1, 1), (1, -1, 1))

    def __str__(self) -> str:
        return f"M({self.alpha}, {self.beta}, {self.gamma})"


class RelationKind(StrEnum):
    """The two handle-slide relations."""

    TYPE_I = "I"
    TYPE_II = "II"


class RelationParams(BaseModel):
    """Twist parameters ``(r, s, t)`` of a Type I or Type II relation.

    For Type I, ``r`` and ``s`` are twists on the two handles and ``t``
    counts parallel z-loops. For Type II, ``s`` and ``t`` are twists and
    ``r`` counts parallel x-loops.
    """

    model_config = ConfigDict(frozen=True)

    kind: RelationKind
    r: int
    s: int
    t: int

    @classmethod
    def of(cls, kind: RelationKind, r: int, s: int, t: int) -> RelationParams:
        return cls(kind=kind, r=r, s=s, t=t)

    @property
    def rst(self) -> tuple[int, int, int]:
        return (self.r, self.s, self.t)

    def __str__(self) -> str:
        return f"{self.kind.value}({self.r}, {self.s}, {self.t})"
