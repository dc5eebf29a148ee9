"""Representations of the binary icosahedral group and their characters."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any

from skeingen.models.cyclotomic import Cyclotomic5, Mat2

# Class representatives as words in the generators r and s.
CLASS_WORDS: tuple[str, ...] = ("1", "r", "r^2", "r^3", "r^4", "r^5", "rs", "s", "s^2")


@dataclass(frozen=True, slots=True)
class Representation:
    """A representation ``<r, s | r^5 = s^3 = (rs)^2> -> SL(2)``.

    Attributes:
        name: ``sigma0``, ``sigma1`` or ``sigma2``.
        image_r: Matrix assigned to ``r``.
        image_s: Matrix assigned to ``s``.
    """

    name: str
    image_r: Mat2
    image_s: Mat2

    def word(self, word: str) -> Mat2:
        """Image of one of the class representatives in :data:`CLASS_WORDS`.

        Raises:
            KeyError: If ``word`` is not a class representative.
        """
        r, s = self.image_r, self.image_s
        images = {
            "1": Mat2.identity(),
            "r": r,
            "r^2": r**2,
            "r^3": r**3,
            "r^4": r**4,
            "r^5": r**5,
            "rs": r @ s,
            "s": s,
            "s^2": s**2,
        }
        return images[word]

    def character(self) -> tuple[Cyclotomic5, ...]:
        """Traces at every class representative, in column order."""
        return tuple(self.word(w).trace() for w in CLASS_WORDS)


@dataclass(frozen=True, slots=True)
class CharacterTable:
    """Characters evaluated at the class representatives.

    ``rows`` maps a character name (``chi0``, ``chi1``, ``chi2``) to its nine
    values, ordered as :data:`CLASS_WORDS`.
    """

    rows: Mapping[str, tuple[Cyclotomic5, ...]] = field(default_factory=dict)

    @property
    def names(self) -> list[str]:
        return list(self.rows)

    def value(self, character: str, word: str) -> Cyclotomic5:
        """``tau_word(character)``."""
        return self.rows[character][CLASS_WORDS.index(word)]

    def column(self, word: str) -> tuple[Cyclotomic5, ...]:
        index = CLASS_WORDS.index(word)
        return tuple(row[index] for row in self.rows.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacterTable):
            return NotImplemented
        return dict(self.rows) == dict(other.rows)

    def __hash__(self) -> int:
        return hash(frozenset(self.rows.items()))

    def to_dict(self) -> dict[str, Any]:
        return {
            "columns": list(CLASS_WORDS),
            "rows": {
                name: {"text": [str(v) for v in values], "exact": [v.to_json() for v in values]}
                for name, values in self.rows.items()
            },
        }


@dataclass(frozen=True, slots=True)
class TraceRelation:
    """A linear identity ``tau_target = sum coeff * tau_word`` among evaluations."""

    target: str
    combination: tuple[tuple[int, str], ...]

    def rhs(self, row: Mapping[str, Cyclotomic5]) -> Cyclotomic5:
        total = Cyclotomic5()
        for coeff, word in self.combination:
            total = total + coeff * row[word]
        return total

    def __str__(self) -> str:
        parts = []
        for coeff, word in self.combination:
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            body = f"tau_{word}" if mag == 1 else f"{mag}*tau_{word}"
            parts.append((sign, body))
        text = parts[0][1] if parts[0][0] == "+" else f"-{parts[0][1]}"
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return f"tau_{self.target} = {text}"


@dataclass(frozen=True, slots=True)
class TraceRelationResult:
    """Outcome of one trace relation at one character."""

    relation: TraceRelation
    character: str
    lhs: Cyclotomic5
    rhs: Cyclotomic5

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict[str, Any]:
        return {
            "relation": str(self.relation),
            "character": self.character,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "holds": self.holds,
        }


@dataclass(frozen=True, slots=True)
class RepresentationCheck:
    name: str
    unimodular: bool
    group_relations: bool

    @property
    def passed(self) -> bool:
        return self.unimodular and self.group_relations


@dataclass(frozen=True, slots=True)
class CharvarReport:
    """Everything the ``charvar`` command verifies."""

    representations: tuple[RepresentationCheck, ...]
    table: CharacterTable
    matches_expected: bool
    relations: tuple[TraceRelationResult, ...]
    determinant: Cyclotomic5

    @property
    def passed(self) -> bool:
        return (
            all(r.passed for r in self.representations)
            and self.matches_expected
            and all(r.holds for r in self.relations)
            and not self.determinant.is_zero()
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "representations": [
                {"name": r.name, "unimodular": r.unimodular, "group_relations": r.group_relations}
                for r in self.representations
            ],
            "table": self.table.to_dict(),
            "matches_expected": self.matches_expected,
            "trace_relations": [r.to_dict() for r in self.relations],
            "independence_determinant": {
                "text": str(self.determinant),
                "exact": self.determinant.to_json(),
            },
            "passed": self.passed,
        }
