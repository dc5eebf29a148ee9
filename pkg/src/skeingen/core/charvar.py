"""SL(2) characters of the binary icosahedral group.

The group is presented as ``<r, s | r^5 = s^3 = (rs)^2>``. Up to
equivalence it has three representations into SL(2): the doubled trivial
one and two faithful ones exchanged by ``z -> z^2``. Their characters
evaluated at nine class representatives determine the character variety,
and the evaluations at ``1``, ``r`` and ``s`` are linearly independent,
which is what makes the skein module of the corresponding manifold at
least three-dimensional at ``A = -1``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from skeingen.models.character import (
    CLASS_WORDS,
    CharacterTable,
    CharvarReport,
    Representation,
    RepresentationCheck,
    TraceRelation,
    TraceRelationResult,
)
from skeingen.models.cyclotomic import Cyclotomic5, Mat2
from skeingen.models.laurent import LaurentPoly
from skeingen.utils.logging import get_logger

logger = get_logger("charvar")

TRACE_RELATIONS: tuple[TraceRelation, ...] = (
    TraceRelation("s^2", ((3, "s"), (-2, "1"))),
    TraceRelation("rs", ((2, "s"), (-1, "1"))),
    TraceRelation("r^5", ((4, "s"), (-3, "1"))),
    TraceRelation("r^4", ((4, "s"), (-1, "r"), (-2, "1"))),
    TraceRelation("r^3", ((3, "s"), (-1, "r"), (-1, "1"))),
    TraceRelation("r^2", ((1, "s"), (1, "r"), (-1, "1"))),
)

INDEPENDENCE_WORDS = ("1", "r", "s")


def _e5(c1: int, c2: int, c3: int, c4: int) -> Cyclotomic5:
    """``c1 z + c2 z^2 + c3 z^3 + c4 z^4``."""
    return Cyclotomic5((0, c1, c2, c3, c4))


def build_representations() -> list[Representation]:
    """The three representations ``sigma0``, ``sigma1``, ``sigma2``.

    Example:
        >>> [rep.name for rep in build_representations()]
        ['sigma0', 'sigma1', 'sigma2']
    """
    fifth = Cyclotomic5.rational(1) / 5
    a1 = fifth * Mat2(
        _e5(-3, -1, 1, -2),
        _e5(1, -3, -2, -1),
        _e5(1, 2, 3, -1),
        _e5(-2, 1, -1, -3),
    )
    b1 = fifth * Mat2(
        _e5(-1, -2, -3, -4),
        _e5(2, -1, 1, -2),
        _e5(2, -1, 1, -2),
        _e5(-4, -3, -2, -1),
    )
    a2 = Mat2(
        _e5(1, -1, 0, 0),
        _e5(0, -1, 0, -1),
        _e5(-1, 0, 0, -1),
        _e5(-1, 0, -1, 0),
    )
    b2 = Mat2(Cyclotomic5.rational(1), -_e5(0, 0, 1, 0), _e5(0, 1, 0, 0), Cyclotomic5())
    identity = Mat2.identity()
    return [
        Representation("sigma0", identity, identity),
        Representation("sigma1", a1, b1),
        Representation("sigma2", a2, b2),
    ]


def verify_group_relations(rep: Representation) -> bool:
    """Check ``R^5 = S^3 = (RS)^2`` with that common value an involution."""
    r5 = rep.image_r**5
    s3 = rep.image_s**3
    rs2 = (rep.image_r @ rep.image_s) ** 2
    ok = r5 == s3 == rs2 and (r5 @ r5).is_identity()
    logger.debug(f"{rep.name}: R^5 = {r5}, relations {'hold' if ok else 'fail'}")
    return ok


def unimodular(rep: Representation) -> bool:
    return rep.image_r.det() == 1 and rep.image_s.det() == 1


def character_table(representations: Sequence[Representation] | None = None) -> CharacterTable:
    """Traces of the class representatives under each representation.

    Characters are named ``chi0``, ``chi1``, ... after the representations.
    """
    reps = list(representations) if representations is not None else build_representations()
    rows = {rep.name.replace("sigma", "chi"): rep.character() for rep in reps}
    logger.info(f"character table built for {len(rows)} representations")
    return CharacterTable(rows=rows)


def expected_character_table() -> CharacterTable:
    """The published character table, transcribed entrywise."""
    two = Cyclotomic5.rational(2)
    one = Cyclotomic5.rational(1)
    t1 = _e5(-1, 0, 0, -1)
    t2 = _e5(0, -1, -1, 0)
    rows = {
        "chi0": (two,) * len(CLASS_WORDS),
        "chi1": (two, t1, -t2, t2, -t1, -two, Cyclotomic5(), one, -one),
        "chi2": (two, t2, -t1, t1, -t2, -two, Cyclotomic5(), one, -one),
    }
    return CharacterTable(rows=rows)


def trace_relation_results(table: CharacterTable | None = None) -> list[TraceRelationResult]:
    """Evaluate every trace relation at every character."""
    table = table if table is not None else character_table()
    results = []
    for relation in TRACE_RELATIONS:
        for name, values in table.rows.items():
            row = dict(zip(CLASS_WORDS, values))
            result = TraceRelationResult(relation, name, row[relation.target], relation.rhs(row))
            if not result.holds:
                logger.debug(f"{relation} fails at {name}: {result.lhs} != {result.rhs}")
            results.append(result)
    return results


def verify_trace_relations(table: CharacterTable | None = None) -> bool:
    return all(r.holds for r in trace_relation_results(table))


def det3(rows: Sequence[Sequence[Cyclotomic5]]) -> Cyclotomic5:
    """Cofactor expansion along the first row."""
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def independence_matrix(table: CharacterTable | None = None) -> list[list[Cyclotomic5]]:
    """Rows of ``tau_1, tau_r, tau_s`` per character."""
    table = table if table is not None else character_table()
    return [[table.value(name, w) for w in INDEPENDENCE_WORDS] for name in table.names]


def independence_determinant(table: CharacterTable | None = None) -> Cyclotomic5:
    """Determinant of the ``tau_1, tau_r, tau_s`` evaluation matrix.

    Example:
        >>> str(independence_determinant())
        '-2 - 4*z^2 - 4*z^3'
    """
    return det3(independence_matrix(table))


def specialize_at_minus_one(coefficients: Iterable[LaurentPoly]) -> list[int]:
    """Evaluate skein coefficients at ``A = -1``."""
    return [c.eval_minus_one() for c in coefficients]


def run_charvar_suite() -> CharvarReport:
    """Build the representations and run every check on them."""
    reps = build_representations()
    checks = tuple(
        RepresentationCheck(rep.name, unimodular(rep), verify_group_relations(rep)) for rep in reps
    )
    table = character_table(reps)
    report = CharvarReport(
        representations=checks,
        table=table,
        matches_expected=table == expected_character_table(),
        relations=tuple(trace_relation_results(table)),
        determinant=independence_determinant(table),
    )
    logger.info(f"character suite {'passed' if report.passed else 'failed'}")
    return report
