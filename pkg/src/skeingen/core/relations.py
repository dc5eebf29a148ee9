"""Type I and Type II handle-slide relations.

Sliding a strand over an attached 2-handle equates two skein elements.
For a Type I relation with parameters ``(r, s, t)`` the left side is a
loop twisted ``r`` times about the first cable and ``s`` times about the
second, alongside ``t`` parallel z-loops; the right side is the same
picture with twists ``(alpha - r, beta - s)``. Type II plays the same game
on the second cable and the band, with ``r`` parallel x-loops and twists
``(s, t)`` against ``(beta - s, gamma - t)``.

The rewrite engine only needs the greatest monomial of each side and the
left leading coefficient, which is always a unit. Full expansions through
the twist engine are available for verification.
"""

from __future__ import annotations

from skeingen.core.exceptions import RelationError
from skeingen.core.twist import expand_closed_twist, expand_double_twist
from skeingen.models.laurent import DELTA, A, LaurentPoly
from skeingen.models.monomial import Monomial, RelationKind, RelationParams, SurgeryParams
from skeingen.models.twist import DoubleFamily, LoopCombination

TYPE_I = RelationKind.TYPE_I
TYPE_II = RelationKind.TYPE_II


def twist_pair(p: RelationParams) -> tuple[int, int]:
    """Twist counts on the left side: ``(r, s)`` for Type I, ``(s, t)`` for Type II."""
    return (p.r, p.s) if p.kind == TYPE_I else (p.s, p.t)


def parallel_loops(p: RelationParams) -> int:
    """Parallel loop count: ``t`` for Type I, ``r`` for Type II."""
    return p.t if p.kind == TYPE_I else p.r


def shifted_params(p: RelationParams, sp: SurgeryParams) -> RelationParams:
    """Parameters describing the right side of the relation."""
    if p.kind == TYPE_I:
        return RelationParams.of(TYPE_I, sp.alpha - p.r, sp.beta - p.s, p.t)
    return RelationParams.of(TYPE_II, p.r, sp.beta - p.s, sp.gamma - p.t)


def _place(kind: RelationKind, first: int, second: int, loops: int, bridged: int) -> Monomial:
    # Bridged states trade two cable loops for one loop around both cables.
    if kind == TYPE_I:
        return Monomial(first, second, loops + bridged)
    return Monomial(loops + bridged, first, second)


def _top_of_pair(u: int, v: int) -> tuple[int, int, int]:
    if u != 0 and v != 0 and (u > 0) != (v > 0):
        return abs(u) - 1, abs(v) - 1, 1
    return abs(u), abs(v), 0


def greatest_left_term(p: RelationParams) -> tuple[Monomial, LaurentPoly]:
    """Greatest monomial on the left side and its (unit) coefficient.

    Args:
        p: Relation parameters.

    Returns:
        ``(monomial, coefficient)``. Same-sign twists give ``-A^(u+v+2)`` when
        nonnegative and ``-A^(u+v-2)`` when nonpositive; mixed signs give
        ``A^(u+v)`` on the bridged monomial.

    Raises:
        RelationError: If both twists are zero.

    Example:
        >>> m, c = greatest_left_term(RelationParams.of(RelationKind.TYPE_I, 2, -1, 0))
        >>> str(m), str(c)
        ('x z', 'A')
    """
    u, v = twist_pair(p)
    if u == 0 and v == 0:
        raise RelationError(
            f"Type {p.kind.value} relation with both twists zero has no unit leading term",
            details={"relation": str(p)},
        )
    first, second, bridged = _top_of_pair(u, v)
    if bridged:
        coeff = A ** (u + v)
    elif u >= 0 and v >= 0:
        coeff = -(A ** (u + v + 2))
    else:
        coeff = -(A ** (u + v - 2))
    return _place(p.kind, first, second, parallel_loops(p), bridged), coeff


def greatest_right_term(p: RelationParams, sp: SurgeryParams) -> Monomial:
    """Greatest monomial on the right side of the relation.

    When both shifted twists vanish the right side is a trivial circle
    times parallel loops, and that loop monomial is returned. This differs
    from :func:`greatest_left_term`, which raises ``RelationError`` for a
    degenerate pair: the shifted pair can be ``(0, 0)`` while the relation
    itself is valid, e.g. Type I ``(2, -2, 1)`` at ``M(2, -2, 2)`` tops out
    at ``z``.
    """
    q = shifted_params(p, sp)
    u, v = twist_pair(q)
    first, second, bridged = _top_of_pair(u, v)
    return _place(p.kind, first, second, parallel_loops(q), bridged)


def left_param_candidates(m: Monomial, kind: RelationKind) -> list[RelationParams]:
    """All relation parameters of ``kind`` whose greatest left term is ``m``."""
    i, j, k = m.i, m.j, m.k
    triples: list[tuple[int, int, int]] = []
    if kind == TYPE_I:
        if i > 0 or j > 0:
            triples += [(i, j, k), (-i, -j, k)]
        if k > 0:
            triples += [(i + 1, -j - 1, k - 1), (-i - 1, j + 1, k - 1)]
    else:
        if j > 0 or k > 0:
            triples += [(i, j, k), (i, -j, -k)]
        if i > 0:
            triples += [(i - 1, j + 1, -k - 1), (i - 1, -j - 1, k + 1)]
    return [RelationParams.of(kind, *t) for t in triples]


def expand_side(p: RelationParams) -> LoopCombination:
    """Expand one side of a relation into loop monomials.

    Raises:
        RelationError: If the parallel loop count is negative.
    """
    u, v = twist_pair(p)
    loops = parallel_loops(p)
    if loops < 0:
        raise RelationError(
            "negative number of parallel loops",
            details={"relation": str(p)},
        )
    if u == 0 and v == 0:
        return LoopCombination({_place(p.kind, 0, 0, loops, 0): DELTA})
    if v == 0:
        closed = expand_closed_twist(u)
        return LoopCombination((_place(p.kind, s.loops, 0, loops, 0), c) for s, c in closed.items())
    if u == 0:
        closed = expand_closed_twist(v, rotated=True)
        return LoopCombination((_place(p.kind, 0, s.loops, loops, 0), c) for s, c in closed.items())
    double = expand_double_twist(u, v)
    return LoopCombination(
        (
            _place(
                p.kind,
                s.left_loops,
                s.right_loops,
                loops,
                int(s.family == DoubleFamily.BRIDGE_BRIDGE),
            ),
            c,
        )
        for s, c in double.items()
    )


def expand_relation_full(
    p: RelationParams, sp: SurgeryParams
) -> tuple[LoopCombination, LoopCombination]:
    """Expand both sides of a relation.

    Returns:
        ``(left, right)`` combinations of loop monomials.

    Raises:
        RelationError: If either side has a negative parallel loop count.
    """
    return expand_side(p), expand_side(shifted_params(p, sp))
