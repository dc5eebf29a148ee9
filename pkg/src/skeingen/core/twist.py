"""Symbolic expansion of twisted strands.

A strand passing through ``n`` full twists about a cable is expanded by
resolving crossings two at a time. Writing ``w`` for one wrap of the
strand about the cable and ``l`` for a parallel loop of the cable, the
resolution of a full twist reads ``w^2 = A*l*w - A^2``. Every twist
region therefore lives in the algebra

    Z[A, A^-1][l][w] / (w^2 - A*l*w + A^2)

whose basis ``{w * l^j, l^j}`` is the pair of state families
``Pass(j)`` and ``Clasp(j)``. Negative twists use the mirrored wrap
``w^-1 = A^-1*l - A^-2*w``, which is the same relation read with
``A -> A^-1``.

Closing a region up glues the strand ends together. A closed wrap adds
one loop and a framing kink ``-A^3`` (``-A^-3`` for the mirrored wrap);
a closed clasp adds a trivial circle worth ``-A^2 - A^-2``.

Example:
    >>> print(expand_open_twist(2).dump())
    pass(1) : A
    clasp(0) : -A^2
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from functools import lru_cache

from skeingen.core.exceptions import TwistError
from skeingen.models.laurent import A, DELTA, ONE, ZERO, LaurentPoly
from skeingen.models.reports import LemmaCheck, LemmaReport
from skeingen.models.twist import (
    BridgeBridge,
    Clasp,
    ClosedState,
    DoubleFamily,
    DoubleState,
    LoopLoop,
    OpenTwistState,
    Pass,
    TwistExpansion,
    TwistFamily,
)
from skeingen.utils.logging import get_logger

logger = get_logger("twist")

A2 = A * A

# Element of the strand algebra keyed by (wraps in {0, 1}, cable loops).
StrandForm = dict[tuple[int, int], LaurentPoly]


def _sign(n: int) -> int:
    return 1 if n > 0 else -1


def _require_nonzero(*twists: int) -> None:
    if any(n == 0 for n in twists):
        raise TwistError("twist count must be nonzero", twists=twists)


@lru_cache(maxsize=128)
def _wrap_coefficients(n: int) -> tuple[tuple[LaurentPoly, ...], tuple[LaurentPoly, ...]]:
    """Coefficients ``(f_0..f_{n-1}, g_0..g_{n-2})`` of ``w^n`` for ``n >= 1``.

    Both families obey ``c^(n)_j = A * c^(n-1)_{j-1} - A^2 * c^(n-2)_j``.
    """
    if n == 1:
        return (ONE,), ()
    if n == 2:
        return (ZERO, A), (-A2,)
    f1, g1 = _wrap_coefficients(n - 1)
    f2, g2 = _wrap_coefficients(n - 2)

    def step(prev: tuple[LaurentPoly, ...], prev2: tuple[LaurentPoly, ...], size: int) -> tuple[LaurentPoly, ...]:
        return tuple(
            (A * prev[j - 1] if 0 < j <= len(prev) else ZERO)
            - (A2 * prev2[j] if j < len(prev2) else ZERO)
            for j in range(size)
        )

    return step(f1, f2, n), step(g1, g2, n - 1)


def expand_open_twist(n: int, rotated: bool = False) -> TwistExpansion[OpenTwistState]:
    """Expand a strand through ``n`` full twists.

    For ``n > 0`` the result is ``sum_{j<n} f_j Pass(j) + sum_{j<n-1} g_j Clasp(j)``
    with top coefficient ``f_{n-1} = A^(n-1)``. For ``n < 0`` it is the
    crossing-reversed expansion of ``|n|``, whose wrap states are mirrored
    wraps (``handedness == -1``).

    Args:
        n: Signed number of full twists.
        rotated: Expand the half-turn rotated region. The coefficients are
            identical; only the orientation flag differs.

    Raises:
        TwistError: If ``n == 0``.
    """
    _require_nonzero(n)
    f, g = _wrap_coefficients(abs(n))
    terms: list[tuple[OpenTwistState, LaurentPoly]] = [(Pass(j), c) for j, c in enumerate(f)]
    terms += [(Clasp(j), c) for j, c in enumerate(g)]
    expansion = TwistExpansion(terms, twists=(abs(n),), rotated=rotated)
    return expansion.mirror() if n < 0 else expansion


def to_strand_form(expansion: TwistExpansion[OpenTwistState]) -> StrandForm:
    """Rewrite an open expansion in the positive basis ``{w*l^j, l^j}``."""
    form: StrandForm = {}

    def add(key: tuple[int, int], coeff: LaurentPoly) -> None:
        form[key] = form.get(key, ZERO) + coeff

    for state, coeff in expansion.items():
        if state.family == TwistFamily.CLASP:
            add((0, state.loops), coeff)
        elif expansion.handedness > 0:
            add((1, state.loops), coeff)
        else:
            add((0, state.loops + 1), coeff * A ** -1)
            add((1, state.loops), -coeff * A ** -2)
    return {k: v for k, v in form.items() if v}


def reduce_to_positive_basis(expansion: TwistExpansion[OpenTwistState]) -> TwistExpansion[OpenTwistState]:
    """Express an open expansion with positive wraps only."""
    form = to_strand_form(expansion)
    terms = [(Pass(j) if wraps else Clasp(j), c) for (wraps, j), c in form.items()]
    return TwistExpansion(terms, twists=expansion.twists, handedness=1, rotated=expansion.rotated)


def _strand_product(left: StrandForm, right: StrandForm) -> StrandForm:
    product: StrandForm = {}

    def add(key: tuple[int, int], coeff: LaurentPoly) -> None:
        product[key] = product.get(key, ZERO) + coeff

    for (w1, j1), c1 in left.items():
        for (w2, j2), c2 in right.items():
            coeff = c1 * c2
            if w1 + w2 < 2:
                add((w1 + w2, j1 + j2), coeff)
            else:
                add((1, j1 + j2 + 1), A * coeff)
                add((0, j1 + j2), -A2 * coeff)
    return {k: v for k, v in product.items() if v}


def _strand_form_of(n: int) -> StrandForm:
    if n == 0:
        return {(0, 0): ONE}
    return to_strand_form(expand_open_twist(n))


def verify_twist_additivity(m: int, n: int) -> bool:
    """Check that ``m`` twists stacked on ``n`` twists expand like ``m + n``.

    Either count may be zero or negative; ``m + n == 0`` compares against
    the untwisted strand.
    """
    stacked = _strand_product(_strand_form_of(m), _strand_form_of(n))
    direct = _strand_form_of(m + n)
    if stacked != direct:
        logger.debug(f"additivity fails for ({m}, {n})")
        return False
    return True


def closure_of_open_twist(expansion: TwistExpansion[OpenTwistState]) -> TwistExpansion[ClosedState]:
    """Close an open-twist expansion into bundles of parallel loops."""
    kink = -(A ** (3 * expansion.handedness))
    terms: list[tuple[ClosedState, LaurentPoly]] = []
    for state, coeff in expansion.items():
        if state.family == TwistFamily.PASS:
            terms.append((ClosedState(state.loops + 1), kink * coeff))
        else:
            terms.append((ClosedState(state.loops), DELTA * coeff))
    return TwistExpansion(
        terms,
        twists=expansion.twists,
        handedness=expansion.handedness,
        rotated=expansion.rotated,
    )


def expand_closed_twist(n: int, rotated: bool = False) -> TwistExpansion[ClosedState]:
    """Expand a loop linking a cable through ``n`` full twists.

    The result is ``sum_{i<=|n|} h_i * loops(i)`` with top coefficient
    ``-A^(n+2)`` for ``n > 0`` and ``-A^(-|n|-2)`` for ``n < 0``.

    Raises:
        TwistError: If ``n == 0``.
    """
    return closure_of_open_twist(expand_open_twist(n, rotated=rotated))


def _resolve_pair(
    left: OpenTwistState, left_sign: int, right: OpenTwistState, right_sign: int
) -> Iterator[tuple[DoubleState, LaurentPoly]]:
    """Resolve one state on each cable into double-twist states."""
    i, j = left.loops, right.loops
    left_wraps = left.family == TwistFamily.PASS
    right_wraps = right.family == TwistFamily.PASS
    if left_wraps and right_wraps:
        if left_sign == right_sign:
            yield LoopLoop(i + 1, j + 1), -(A ** (4 * left_sign))
            yield BridgeBridge(i, j), -(A ** (2 * left_sign))
        else:
            yield BridgeBridge(i, j), ONE
    elif left_wraps:
        yield LoopLoop(i + 1, j), -(A ** (3 * left_sign))
    elif right_wraps:
        yield LoopLoop(i, j + 1), -(A ** (3 * right_sign))
    else:
        yield LoopLoop(i, j), DELTA


def expand_double_twist(m: int, n: int) -> TwistExpansion[DoubleState]:
    """Expand a loop passing through ``m`` twists on one cable and ``n`` on the other.

    Top coefficients: ``loops(m,n)`` carries ``-A^(m+n+2)`` when both are
    positive and ``-A^(-|m|-|n|-2)`` when both are negative; with mixed
    signs ``bridges(|m|-1,|n|-1)`` carries ``A^(m+n)``.

    Raises:
        TwistError: If ``m`` or ``n`` is zero.
    """
    _require_nonzero(m, n)
    left = expand_open_twist(m)
    right = expand_open_twist(n, rotated=True)
    ls, rs = _sign(m), _sign(n)
    terms: list[tuple[DoubleState, LaurentPoly]] = []
    for lstate, lcoeff in left.items():
        for rstate, rcoeff in right.items():
            outer = lcoeff * rcoeff
            terms.extend((state, outer * c) for state, c in _resolve_pair(lstate, ls, rstate, rs))
    return TwistExpansion(terms, twists=(m, n))


def _check(name: str, passed: bool, detail: str = "") -> LemmaCheck:
    if not passed:
        logger.warning(f"lemma check failed: {name} {detail}".rstrip())
    return LemmaCheck(name=name, passed=passed, detail=detail)


def _open_checks(n: int) -> Iterator[LemmaCheck]:
    pos, neg = expand_open_twist(n), expand_open_twist(-n)
    top = pos.coefficient(Pass(n - 1))
    yield _check(f"open({n}) top", top == A ** (n - 1), str(top))
    top = neg.coefficient(Pass(n - 1))
    yield _check(f"open({-n}) top", top == A ** (1 - n), str(top))
    clasp_top = pos.max_index(TwistFamily.CLASP)
    support_ok = pos.max_index(TwistFamily.PASS) == n - 1 and (clasp_top is None or clasp_top < n - 1)
    yield _check(f"open({n}) support", support_ok)
    yield _check(f"open({-n}) mirror", neg == pos.mirror())
    yield _check(f"open({n}) rotated", expand_open_twist(n, rotated=True) == pos)
    closed_direct = closure_of_open_twist(neg)
    closed_reduced = closure_of_open_twist(reduce_to_positive_basis(neg))
    yield _check(f"open({-n}) closure after reduction", closed_direct == closed_reduced)


def _closed_checks(n: int) -> Iterator[LemmaCheck]:
    pos, neg = expand_closed_twist(n), expand_closed_twist(-n)
    top = pos.coefficient(ClosedState(n))
    yield _check(f"closed({n}) top", top == -(A ** (n + 2)), str(top))
    top = neg.coefficient(ClosedState(n))
    yield _check(f"closed({-n}) top", top == -(A ** (-n - 2)), str(top))
    yield _check(f"closed({n}) support", max(s.loops for s in pos) == n)
    yield _check(f"closed({-n}) mirror", neg == pos.mirror())


def _double_checks(m: int, n: int) -> Iterator[LemmaCheck]:
    pp = expand_double_twist(m, n)
    pn = expand_double_twist(m, -n)
    np_ = expand_double_twist(-m, n)
    nn = expand_double_twist(-m, -n)
    expected = {
        "++": (pp, LoopLoop(m, n), -(A ** (m + n + 2))),
        "+-": (pn, BridgeBridge(m - 1, n - 1), A ** (m - n)),
        "-+": (np_, BridgeBridge(m - 1, n - 1), A ** (n - m)),
        "--": (nn, LoopLoop(m, n), -(A ** (-m - n - 2))),
    }
    for signs, (expansion, state, coeff) in expected.items():
        found = expansion.coefficient(state)
        yield _check(f"double{signs}({m},{n}) top", found == coeff, str(found))
    yield _check(f"double--({m},{n}) mirror", nn == pp.mirror())
    yield _check(f"double-+({m},{n}) mirror", np_ == pn.mirror())
    yield _check(f"double++({m},{n}) support", _double_support_ok(pp, m, n, same_sign=True))
    yield _check(f"double+-({m},{n}) support", _double_support_ok(pn, m, n, same_sign=False))


def _double_support_ok(expansion: Mapping[DoubleState, LaurentPoly], m: int, n: int, same_sign: bool) -> bool:
    for state in expansion:
        i, j = state.left_loops, state.right_loops
        if state.family == DoubleFamily.BRIDGE_BRIDGE:
            if not (i < m and j < n):
                return False
        elif same_sign:
            if not (i <= m and j <= n):
                return False
        elif not ((i <= m and j < n - 1) or (i < m - 1 and j <= n)):
            return False
    return True


def check_twist_lemmas(max_twist: int = 8, additivity_bound: int = 4) -> LemmaReport:
    """Verify every twist expansion against its closed-form statement.

    Covers top coefficients, summation supports, mirror symmetry and
    closure consistency for ``1 <= |n|, |m| <= max_twist``, and twist
    additivity for ``|m|, |n| <= additivity_bound``.

    Args:
        max_twist: Largest twist count checked.
        additivity_bound: Largest count used in additivity checks.

    Returns:
        LemmaReport with one entry per individual check.
    """
    checks: list[LemmaCheck] = []
    for n in range(1, max_twist + 1):
        checks.extend(_open_checks(n))
        checks.extend(_closed_checks(n))
        for m in range(1, max_twist + 1):
            checks.extend(_double_checks(m, n))
    for m in range(-additivity_bound, additivity_bound + 1):
        for n in range(-additivity_bound, additivity_bound + 1):
            checks.append(_check(f"additivity({m},{n})", verify_twist_additivity(m, n)))
    report = LemmaReport(max_twist=max_twist, additivity_bound=additivity_bound, checks=checks)
    logger.info(f"twist lemmas: {report.passed_count}/{len(checks)} checks passed")
    return report
