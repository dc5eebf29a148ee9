"""Tests for the termination case table."""

from __future__ import annotations

import pytest

from skeingen.core.exceptions import InvalidParametersError
from skeingen.core.gens import (
    check_termination_cases,
    in_region,
    reduce_to_region,
    termination_witness,
)
from skeingen.core.ordering import is_greater
from skeingen.core.relations import TYPE_I, TYPE_II
from skeingen.models.monomial import Monomial, RelationParams, SurgeryParams


class TestTerminationWitness:
    """Tests for the per-monomial case table."""

    def test_inside_region_rejected(self, mixed_params: SurgeryParams) -> None:
        """Monomials in the region have no case."""
        with pytest.raises(ValueError, match="inside the candidate region"):
            termination_witness(Monomial(1, 1, 2), mixed_params)

    def test_large_x(self, mixed_params: SurgeryParams) -> None:
        """Too many x-loops are handled by Type I on the monomial itself."""
        label, relation = termination_witness(Monomial(3, 0, 1), mixed_params)
        assert label == "1"
        assert relation == RelationParams.of(TYPE_I, 3, 0, 1)

    def test_large_y_without_z(self, mixed_params: SurgeryParams) -> None:
        """y^b with nothing else falls back to Type II."""
        label, relation = termination_witness(Monomial(0, 2, 0), mixed_params)
        assert label == "2.2.2"
        assert relation.kind == TYPE_II

    def test_same_sign_y_boundary(self, same_sign_params: SurgeryParams) -> None:
        """y^b alone is rewritten with Type II."""
        label, relation = termination_witness(Monomial(0, 2, 0), same_sign_params)
        assert label == "2.2.0"
        assert relation == RelationParams.of(TYPE_II, 0, 2, 0)

    def test_requires_canonical(self) -> None:
        """Case tables are only defined for canonical signs."""
        with pytest.raises(InvalidParametersError):
            termination_witness(Monomial(5, 0, 0), SurgeryParams.of(-2, 2, 2))


class TestReduceToRegion:
    """Tests for following rewrites down to the region."""

    @pytest.mark.parametrize("abc", [(2, -2, 2), (3, -2, 5), (2, 2, 2), (3, 3, 3)])
    def test_chain_descends(self, abc: tuple[int, int, int]) -> None:
        """Every step is strictly smaller and the chain ends in the region."""
        sp = SurgeryParams.of(*abc)
        chain = reduce_to_region(Monomial(5, 4, 6), sp)
        assert chain[0] == Monomial(5, 4, 6)
        assert in_region(chain[-1], sp)
        assert not any(in_region(m, sp) for m in chain[:-1])
        for upper, lower in zip(chain, chain[1:]):
            assert is_greater(sp, upper, lower)

    def test_region_is_fixed(self, mixed_params: SurgeryParams) -> None:
        """A region monomial reduces to itself."""
        assert reduce_to_region(Monomial(0, 1, 0), mixed_params) == [Monomial(0, 1, 0)]


class TestCheckTerminationCases:
    """Exhaustive checks over bounded grids."""

    @pytest.mark.parametrize("abc", [(2, -2, 2), (3, -2, 3), (3, -2, 5)])
    def test_mixed_no_violations(self, abc: tuple[int, int, int]) -> None:
        """The mixed case table descends everywhere up to exponent 12."""
        report = check_termination_cases(SurgeryParams.of(*abc), 12)
        assert report.violations == ()
        assert report.passed
        assert report.checked == 13**3
        assert sum(report.case_counts.values()) == report.outside

    @pytest.mark.parametrize("abc", [(2, 2, 2), (3, 3, 3)])
    def test_same_sign_no_violations(self, abc: tuple[int, int, int]) -> None:
        """The same-sign case table descends everywhere up to exponent 8."""
        sp = SurgeryParams.of(*abc)
        report = check_termination_cases(sp, 8)
        assert report.passed
        assert report.boundary == (Monomial(0, 0, sp.c),)

    def test_report_dict(self, mixed_params: SurgeryParams) -> None:
        """JSON reports list cases in sorted order."""
        data = check_termination_cases(mixed_params, 4).to_dict()
        assert data["params"] == [2, -2, 2]
        assert data["checked"] == 125
        assert data["passed"] is True
        assert list(data["case_counts"]) == sorted(data["case_counts"])
        assert data["longest_chain"] >= 1
