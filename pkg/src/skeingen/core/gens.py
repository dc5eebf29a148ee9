"""Finite generating sets for S(M(alpha, beta, gamma)).

Every loop monomial outside a bounded candidate region can be rewritten,
through a Type I or Type II relation, as a combination of strictly
smaller monomials. The surviving candidates, those no relation rewrites,
generate the skein module.

Two canonical sign patterns are handled:

- mixed ``(a, -b, c)``: the region is ``i < a``, ``j < b``,
  ``b*k <= 2c(b - 1)``
- same-sign ``(a, b, c)``: the region is ``i < a``, ``j < b``, ``k < c``,
  plus the boundary monomial ``z^c``. It ties ``y^b`` on weight and loses
  the tie-break, so no relation rewrites it.

Any other sign pattern is first normalized by global negation and cyclic
rotation, both of which preserve the manifold up to orientation.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor

from skeingen.core.exceptions import InvalidParametersError, VerificationError
from skeingen.core.ordering import is_greater, monomial_key
from skeingen.core.relations import (
    TYPE_I,
    TYPE_II,
    greatest_left_term,
    greatest_right_term,
    left_param_candidates,
)
from skeingen.models.monomial import Monomial, RelationParams, SurgeryParams, violated_hypothesis
from skeingen.models.reports import (
    CaseViolation,
    GeneratingSetReport,
    Normalization,
    RewriteWitness,
    TerminationReport,
)
from skeingen.utils.logging import get_logger

logger = get_logger("gens")

CANONICAL_FORM = "canonical sign pattern (a, b, c) or (a, -b, c)"
DEFAULT_MAX_STEPS = 10_000


def normalize_params(alpha: int, beta: int, gamma: int) -> Normalization:
    """Bring a surgery triple to canonical sign form.

    Global negation maps M(alpha, beta, gamma) to its mirror image, and
    M(alpha, beta, gamma) is the same manifold as M(gamma, alpha, beta).
    At most one negation and two rotations are needed.

    Args:
        alpha: First surgery coefficient.
        beta: Second surgery coefficient.
        gamma: Third surgery coefficient.

    Returns:
        Normalization holding the canonical SurgeryParams and the moves.

    Raises:
        InvalidParametersError: If a hypothesis fails, naming it.

    Example:
        >>> normalize_params(-3, 5, 7).params.as_tuple()
        (7, -3, 5)
    """
    source = (alpha, beta, gamma)
    violated = violated_hypothesis(abs(alpha), abs(beta), abs(gamma))
    if violated is not None:
        raise InvalidParametersError(source, violated)

    moves: list[str] = []
    triple = source
    if sum(v < 0 for v in triple) >= 2:
        triple = (-triple[0], -triple[1], -triple[2])
        moves.append("negate")
    while triple[1] > 0 and any(v < 0 for v in triple):
        triple = (triple[2], triple[0], triple[1])
        moves.append("rotate")

    params = SurgeryParams.of(*triple)
    logger.debug(f"normalized {source} -> {triple} via {moves or 'no moves'}")
    return Normalization(source=source, params=params, moves=moves)


def _require_canonical(sp: SurgeryParams) -> None:
    if not sp.is_canonical:
        raise InvalidParametersError(sp.as_tuple(), CANONICAL_FORM)


def _in_grid(m: Monomial, sp: SurgeryParams) -> bool:
    a, b, c = sp.abc
    if m.i >= a or m.j >= b:
        return False
    if sp.is_same_sign:
        return m.k < c
    return b * m.k <= 2 * c * (b - 1)


def candidate_grid(sp: SurgeryParams) -> list[Monomial]:
    """Candidate monomials in ``(i, j, k)`` lexicographic order.

    Raises:
        InvalidParametersError: If ``sp`` is not in canonical sign form.
    """
    _require_canonical(sp)
    a, b, c = sp.abc
    k_max = c - 1 if sp.is_same_sign else (2 * c * (b - 1)) // b
    return [Monomial(i, j, k) for i in range(a) for j in range(b) for k in range(k_max + 1)]


def boundary_generators(sp: SurgeryParams) -> list[Monomial]:
    """Out-of-grid monomials that no relation rewrites."""
    _require_canonical(sp)
    return [Monomial(0, 0, sp.c)] if sp.is_same_sign else []


def in_region(m: Monomial, sp: SurgeryParams) -> bool:
    """True when ``m`` lies in the candidate grid or on the boundary."""
    return _in_grid(m, sp) or (sp.is_same_sign and m == Monomial(0, 0, sp.c))


def _witness(m: Monomial, p: RelationParams, sp: SurgeryParams, source: str) -> RewriteWitness | None:
    """Witness for ``p`` when it rewrites ``m`` strictly downward."""
    left, coeff = greatest_left_term(p)
    if left != m:
        raise VerificationError(
            "greatest left term",
            f"{p} has greatest left term {left}, expected {m}",
        )
    unit = coeff.is_unit()
    if unit is None:
        raise VerificationError("unit coefficient", f"{p} has leading coefficient {coeff}")
    right = greatest_right_term(p, sp)
    if not is_greater(sp, m, right):
        return None
    return RewriteWitness(relation=p, right=right, unit=unit, source=source)


def is_rewritable(m: Monomial, sp: SurgeryParams) -> RewriteWitness | None:
    """First relation rewriting ``m`` into strictly smaller monomials.

    Type I candidates are tried before Type II, each in enumeration order.

    Returns:
        The witness, or None when ``m`` survives.
    """
    for kind in (TYPE_I, TYPE_II):
        for p in left_param_candidates(m, kind):
            witness = _witness(m, p, sp, "scan")
            if witness is not None:
                return witness
    return None


def scan_candidates(
    candidates: Sequence[Monomial], sp: SurgeryParams, workers: int = 1
) -> dict[Monomial, RewriteWitness | None]:
    """Run :func:`is_rewritable` over ``candidates``.

    The per-monomial work is pure, so a thread pool may be used; results
    are merged in input order regardless of schedule.
    """
    if workers <= 1 or len(candidates) < 2:
        results = [is_rewritable(m, sp) for m in candidates]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda m: is_rewritable(m, sp), candidates))
    return dict(zip(candidates, results))


def refine_same_sign(m: Monomial, sp: SurgeryParams) -> bool:
    """Extra rewrite conditions for same-sign parameters.

    True when ``i < a, j < b`` and ``i/a + j/b > 1`` (or ``= 1`` with
    ``i > a/2``), or when ``j < b, k < c`` and ``j/b + k/c > 1`` (or ``= 1``
    with ``k > c/2``). Compared with integer cross-multiplication.
    """
    return refinement_relation(m, sp) is not None


def refinement_relation(m: Monomial, sp: SurgeryParams) -> RelationParams | None:
    """Relation behind :func:`refine_same_sign` for ``m``, if it applies.

    The x/y conditions use Type I with ``(r, s, t) = (i, j, k)``, whose right
    side tops out at ``x^(a-i) y^(b-j) z^k``; the y/z conditions use Type II
    with the same triple, topping out at ``x^i y^(b-j) z^(c-k)``.
    """
    a, b, c = sp.abc
    i, j, k = m.i, m.j, m.k
    if i < a and j < b:
        lhs = i * b + j * a
        if lhs > a * b or (lhs == a * b and 2 * i > a):
            return RelationParams.of(TYPE_I, i, j, k)
    if j < b and k < c:
        lhs = j * c + k * b
        if lhs > b * c or (lhs == b * c and 2 * k > c):
            return RelationParams.of(TYPE_II, i, j, k)
    return None


def generating_set(
    sp: SurgeryParams,
    workers: int = 1,
    candidates: Iterable[Monomial] | None = None,
    normalization: Normalization | None = None,
) -> GeneratingSetReport:
    """Compute a finite generating set.

    Args:
        sp: Canonical surgery parameters.
        workers: Thread count for the rewrite scan.
        candidates: Optional custom enumeration of the candidate grid; the
            result does not depend on its order.
        normalization: How ``sp`` was obtained, recorded in the report.

    Returns:
        GeneratingSetReport with generators ascending under the order.

    Raises:
        InvalidParametersError: If ``sp`` is not in canonical sign form.

    Example:
        >>> report = generating_set(SurgeryParams.of(2, -2, 2))
        >>> [str(m) for m in report.generators_by_exponent]
        ['1', 'z', 'z^2', 'y', 'x']
    """
    _require_canonical(sp)
    grid = list(candidates) if candidates is not None else candidate_grid(sp)
    boundary = boundary_generators(sp)
    rewrites: dict[Monomial, RewriteWitness] = {}
    rejected: list[Monomial] = []

    to_scan: list[Monomial] = []
    for m in grid:
        relation = refinement_relation(m, sp) if sp.is_same_sign else None
        if relation is None:
            to_scan.append(m)
            continue
        witness = _witness(m, relation, sp, "refinement")
        if witness is None:
            # Equal weights with i = 0: the tie-break favours the right side.
            rejected.append(m)
            to_scan.append(m)
        else:
            rewrites[m] = witness

    for m, witness in scan_candidates(to_scan, sp, workers).items():
        if witness is not None:
            rewrites[m] = witness

    survivors = [m for m in grid if m not in rewrites] + boundary
    generators = tuple(sorted(survivors, key=lambda m: monomial_key(sp, m)))
    logger.info(
        f"{sp}: {len(grid)} candidates, {len(rewrites)} rewritten, {len(generators)} generators"
    )
    for m, w in sorted(rewrites.items(), key=lambda item: item[0].exponents):
        logger.debug(f"  {m} -> {w.right} via {w.relation} ({w.source})")

    return GeneratingSetReport(
        normalization=normalization
        or Normalization(source=sp.as_tuple(), params=sp, moves=[]),
        candidates=tuple(sorted(grid, key=lambda m: m.exponents)) + tuple(boundary),
        generators=generators,
        rewrites=rewrites,
        boundary=tuple(boundary),
        refinement_rejected=tuple(rejected),
    )


def _mixed_case(m: Monomial, sp: SurgeryParams) -> tuple[str, RelationParams]:
    a, b, c = sp.abc
    i, j, k = m.i, m.j, m.k
    if i >= a:
        return "1", RelationParams.of(TYPE_I, i, j, k)
    if j >= b:
        if k > 0:
            return "2.1", RelationParams.of(TYPE_I, i + 1, -j - 1, k - 1)
        if i > 0:
            return "2.2.1", RelationParams.of(TYPE_II, i - 1, -j - 1, 1)
        return "2.2.2", RelationParams.of(TYPE_II, 0, -j, 0)
    if i > 0:
        return "3.1", RelationParams.of(TYPE_II, i - 1, -j - 1, k + 1)
    if j == b - 1:
        return "3.2.1", RelationParams.of(TYPE_I, 1, -b, k - 1)
    return "3.2.2", RelationParams.of(TYPE_II, 0, j, k)


def _same_sign_case(m: Monomial, sp: SurgeryParams) -> tuple[str, RelationParams]:
    a, b, _ = sp.abc
    i, j, k = m.i, m.j, m.k
    if i >= a:
        label = "1.1" if (j >= b or i == a) else "1.2"
        return label, RelationParams.of(TYPE_I, i, j, k)
    if j >= b:
        if j > b:
            return "2.1", RelationParams.of(TYPE_I, i, j, k)
        if i > 0:
            return "2.2", RelationParams.of(TYPE_I, i, j, k)
        # With i = 0 the Type I right side ties on weight and wins at i(k+1).
        return "2.2.0", RelationParams.of(TYPE_II, i, j, k)
    return ("3.1" if k > sp.c else "3.2"), RelationParams.of(TYPE_II, i, j, k)


def termination_witness(m: Monomial, sp: SurgeryParams) -> tuple[str, RelationParams]:
    """Case label and relation that rewrite an out-of-region monomial.

    Raises:
        ValueError: If ``m`` lies inside the candidate region.
        InvalidParametersError: If ``sp`` is not canonical.
    """
    _require_canonical(sp)
    if in_region(m, sp):
        raise ValueError(f"{m} lies inside the candidate region of {sp}")
    return _same_sign_case(m, sp) if sp.is_same_sign else _mixed_case(m, sp)


def reduce_to_region(
    m: Monomial, sp: SurgeryParams, max_steps: int = DEFAULT_MAX_STEPS
) -> list[Monomial]:
    """Follow case-table rewrites from ``m`` until the region is reached.

    Returns:
        The strictly descending chain of greatest terms, starting with ``m``
        and ending inside the region.

    Raises:
        VerificationError: If a step fails to descend or ``max_steps`` is hit.
    """
    chain = [m]
    current = m
    while not in_region(current, sp):
        if len(chain) > max_steps:
            raise VerificationError("reduction", f"no region reached from {m} in {max_steps} steps")
        label, relation = termination_witness(current, sp)
        witness = _witness(current, relation, sp, f"case {label}")
        if witness is None:
            raise VerificationError("reduction", f"case {label} does not descend at {current}")
        current = witness.right
        chain.append(current)
    return chain


def _extended_grid(bound: int) -> Iterator[Monomial]:
    for i in range(bound + 1):
        for j in range(bound + 1):
            for k in range(bound + 1):
                yield Monomial(i, j, k)


def check_termination_cases(sp: SurgeryParams, bound: int) -> TerminationReport:
    """Verify the case table on every out-of-region monomial up to ``bound``.

    For each monomial with exponents at most ``bound`` outside the region,
    the case-table relation must have it as greatest left term with a unit
    coefficient, and its right greatest term must be strictly smaller.

    Args:
        sp: Canonical surgery parameters.
        bound: Largest exponent examined.

    Returns:
        TerminationReport listing any violations with their case labels.
    """
    _require_canonical(sp)
    counts: dict[str, int] = {}
    violations: list[CaseViolation] = []
    checked = outside = longest = 0

    for m in _extended_grid(bound):
        checked += 1
        if in_region(m, sp):
            continue
        outside += 1
        label, relation = termination_witness(m, sp)
        counts[label] = counts.get(label, 0) + 1
        try:
            witness = _witness(m, relation, sp, f"case {label}")
        except VerificationError as e:
            violations.append(CaseViolation(monomial=m, case=label, relation=relation, reason=str(e)))
            continue
        if witness is None:
            reason = f"right term {greatest_right_term(relation, sp)} is not smaller"
            violations.append(CaseViolation(monomial=m, case=label, relation=relation, reason=reason))
            continue
        try:
            longest = max(longest, len(reduce_to_region(m, sp)) - 1)
        except VerificationError as e:
            violations.append(CaseViolation(monomial=m, case=label, relation=relation, reason=str(e)))

    for v in violations:
        logger.debug(f"case {v.case} fails at {v.monomial}: {v.reason}")
    logger.info(f"{sp}: {outside} of {checked} monomials checked, {len(violations)} violations")
    return TerminationReport(
        params=sp,
        bound=bound,
        checked=checked,
        outside=outside,
        case_counts=counts,
        violations=tuple(violations),
        longest_chain=longest,
        boundary=tuple(boundary_generators(sp)),
    )

