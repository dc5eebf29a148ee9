"""Twist-region states and formal combinations over them.

An expansion of a twisted strand is a finite Z[A, A^-1]-linear
combination of basis states. Open twists expand over wrap and clasp
states, closed twists over bundles of parallel loops, and double twists
over loop/loop and bridge/bridge states. Relation sides expand over loop
monomials; :class:`LoopCombination` carries those.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Mapping
from enum import StrEnum
from typing import TYPE_CHECKING, Any, Generic, NamedTuple, TypeVar

from skeingen.models.laurent import LaurentPoly
from skeingen.models.monomial import Monomial

if TYPE_CHECKING:
    from skeingen.models.monomial import SurgeryParams


class TwistFamily(StrEnum):
    """Families of states in an open-twist expansion.

    ``PASS`` states wrap the strand once around the cable with ``loops``
    parallel cable loops alongside; ``CLASP`` states carry only the loops.
    """

    PASS = "pass"
    CLASP = "clasp"


class DoubleFamily(StrEnum):
    """Families of states in a double-twist expansion."""

    LOOP_LOOP = "loops"
    BRIDGE_BRIDGE = "bridges"


class OpenTwistState(NamedTuple):
    family: TwistFamily
    loops: int

    @property
    def label(self) -> str:
        return f"{self.family.value}({self.loops})"


class ClosedState(NamedTuple):
    loops: int

    @property
    def label(self) -> str:
        return f"loops({self.loops})"


class DoubleState(NamedTuple):
    family: DoubleFamily
    left_loops: int
    right_loops: int

    @property
    def label(self) -> str:
        return f"{self.family.value}({self.left_loops},{self.right_loops})"


def Pass(loops: int) -> OpenTwistState:
    return OpenTwistState(TwistFamily.PASS, loops)


def Clasp(loops: int) -> OpenTwistState:
    return OpenTwistState(TwistFamily.CLASP, loops)


def LoopLoop(left: int, right: int) -> DoubleState:
    return DoubleState(DoubleFamily.LOOP_LOOP, left, right)


def BridgeBridge(left: int, right: int) -> DoubleState:
    return DoubleState(DoubleFamily.BRIDGE_BRIDGE, left, right)


K = TypeVar("K", OpenTwistState, ClosedState, DoubleState, Monomial)


def _sort_key(state: Any) -> tuple[int, ...]:
    # Families sort in declaration order, then by loop counts.
    return tuple(list(type(x)).index(x) if isinstance(x, StrEnum) else x for x in state)


def _label(state: Any) -> str:
    return state.label if hasattr(state, "label") else str(state)


class Combination(Mapping[K, LaurentPoly], Generic[K]):
    """Immutable formal combination ``sum coeff * state``.

    Zero coefficients are never stored. Iteration follows the natural
    tuple order of the states, so dumps are reproducible.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[K, LaurentPoly] | Iterable[tuple[K, LaurentPoly]] = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[K, LaurentPoly] = {}
        for state, coeff in items:
            acc[state] = acc[state] + coeff if state in acc else coeff
        self._terms = {s: acc[s] for s in sorted(acc, key=_sort_key) if acc[s]}

    def __getitem__(self, state: K) -> LaurentPoly:
        return self._terms[state]

    def __iter__(self) -> Iterator[K]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, state: K) -> LaurentPoly:
        """Coefficient of ``state``, zero when absent."""
        return self._terms.get(state, LaurentPoly())

    def map_coefficients(self, func: Callable[[LaurentPoly], LaurentPoly]) -> dict[K, LaurentPoly]:
        return {s: func(c) for s, c in self._terms.items()}

    def dump(self) -> str:
        """One ``label : coefficient`` line per state."""
        return "\n".join(f"{_label(s)} : {c}" for s, c in self._terms.items())

    def __repr__(self) -> str:
        body = ", ".join(f"{_label(s)}: {c}" for s, c in self._terms.items())
        return f"{type(self).__name__}({{{body}}})"


class TwistExpansion(Combination[K]):
    """Expansion of a twist region over basis states.

    Args:
        terms: State coefficients.
        twists: Signed twist counts that produced the expansion.
        handedness: +1 when wraps are positive (``w``), -1 when they are the
            mirrored wraps (``w^-1``). Closed expansions keep the handedness of
            the open expansion they were closed from.
        rotated: True for the half-turn rotated orientation of the region.
    """

    __slots__ = ("handedness", "rotated", "twists")

    def __init__(
        self,
        terms: Mapping[K, LaurentPoly] | Iterable[tuple[K, LaurentPoly]] = (),
        *,
        twists: tuple[int, ...] = (),
        handedness: int = 1,
        rotated: bool = False,
    ) -> None:
        super().__init__(terms)
        self.twists = twists
        self.handedness = handedness
        self.rotated = rotated

    def mirror(self) -> TwistExpansion[K]:
        """Crossing reversal: apply A -> A^-1 to every coefficient."""
        return TwistExpansion(
            self.map_coefficients(LaurentPoly.mirror),
            twists=tuple(-n for n in self.twists),
            handedness=-self.handedness,
            rotated=self.rotated,
        )

    def max_index(self, family: Any) -> int | None:
        """Largest loop index among open states of ``family``."""
        indices = [s.loops for s in self if isinstance(s, OpenTwistState) and s.family == family]
        return max(indices) if indices else None


class LoopCombination(Combination[Monomial]):
    """A skein element written in the loop monomials ``x^i y^j z^k``."""

    __slots__ = ()

    def top_term(self, params: SurgeryParams | tuple[int, int, int]) -> tuple[Monomial, LaurentPoly]:
        """Greatest monomial under the ordering and its coefficient.

        Raises:
            ValueError: If the combination is zero.
        """
        from skeingen.core.ordering import max_monomial

        top = max_monomial(params, self)
        return top, self[top]

    def to_json(self) -> list[dict[str, Any]]:
        return [{"monomial": m.to_json(), "coefficient": c.to_json()} for m, c in self.items()]
