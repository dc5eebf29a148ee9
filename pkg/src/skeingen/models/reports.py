"""Result models produced by the engines and rendered by the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from pydantic import BaseModel, Field

from skeingen.models.monomial import Monomial, RelationParams, SurgeryParams


class LemmaCheck(BaseModel):
    """Outcome of one twist-expansion check."""

    name: str
    passed: bool
    detail: str = ""


class LemmaReport(BaseModel):
    """All twist-expansion checks for a run of ``lemmas``."""

    max_twist: int
    additivity_bound: int
    checks: list[LemmaCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def passed_count(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def failures(self) -> list[LemmaCheck]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "max_twist": self.max_twist,
            "additivity_bound": self.additivity_bound,
            "total": len(self.checks),
            "passed": self.passed_count,
            "failures": [c.model_dump() for c in self.failures],
        }


class Normalization(BaseModel):
    """A surgery triple brought to canonical sign form.

    Args:
        source: The triple as given.
        params: The canonical triple, ``(a, b, c)`` or ``(a, -b, c)``.
        moves: Applied moves in order, each ``"negate"`` or ``"rotate"``.
    """

    source: tuple[int, int, int]
    params: SurgeryParams
    moves: list[str] = Field(default_factory=list)


@dataclass(frozen=True, slots=True)
class RewriteWitness:
    """Relation that rewrites a monomial as a combination of smaller ones.

    Attributes:
        relation: Relation whose left side has the monomial as greatest term.
        right: Greatest monomial on the right side, strictly smaller.
        unit: ``(sign, exponent)`` of the left leading coefficient.
        source: Which rule produced the witness.
    """

    relation: RelationParams
    right: Monomial
    unit: tuple[int, int]
    source: str = "scan"

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.relation.kind.value,
            "rst": list(self.relation.rst),
            "right": self.right.to_json(),
        }


@dataclass(frozen=True, slots=True)
class GeneratingSetReport:
    """Auditable result of a generating-set computation.

    ``generators`` are ascending under the monomial order; every candidate
    outside ``generators`` has an entry in ``rewrites``.
    """

    normalization: Normalization
    candidates: tuple[Monomial, ...]
    generators: tuple[Monomial, ...]
    rewrites: dict[Monomial, RewriteWitness] = field(default_factory=dict)
    boundary: tuple[Monomial, ...] = ()
    refinement_rejected: tuple[Monomial, ...] = ()

    @property
    def params(self) -> SurgeryParams:
        return self.normalization.params

    @property
    def generators_by_exponent(self) -> list[Monomial]:
        """Generators in ``(i, j, k)`` lexicographic order."""
        return sorted(self.generators, key=lambda m: m.exponents)

    def to_dict(self) -> dict[str, Any]:
        return {
            "params": list(self.normalization.source),
            "canonical": list(self.params.as_tuple()),
            "moves": list(self.normalization.moves),
            "candidates": [m.to_json() for m in self.candidates],
            "generators": [m.to_json() for m in self.generators],
            "boundary": [m.to_json() for m in self.boundary],
            "rewrites": {
                ",".join(map(str, m.exponents)): w.to_dict()
                for m, w in sorted(self.rewrites.items(), key=lambda item: item[0].exponents)
            },
        }


@dataclass(frozen=True, slots=True)
class CaseViolation:
    """An out-of-region monomial whose case-table relation does not descend."""

    monomial: Monomial
    case: str
    relation: RelationParams | None
    reason: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "monomial": self.monomial.to_json(),
            "case": self.case,
            "relation": None
            if self.relation is None
            else {"kind": self.relation.kind.value, "rst": list(self.relation.rst)},
            "reason": self.reason,
        }


@dataclass(frozen=True, slots=True)
class TerminationReport:
    """Exhaustive run of the termination case table over a bounded grid."""

    params: SurgeryParams
    bound: int
    checked: int
    outside: int
    case_counts: dict[str, int]
    violations: tuple[CaseViolation, ...]
    longest_chain: int
    boundary: tuple[Monomial, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        return {
            "params": list(self.params.as_tuple()),
            "bound": self.bound,
            "checked": self.checked,
            "outside_region": self.outside,
            "case_counts": dict(sorted(self.case_counts.items())),
            "longest_chain": self.longest_chain,
            "boundary": [m.to_json() for m in self.boundary],
            "violations": [v.to_dict() for v in self.violations],
            "passed": self.passed,
        }
