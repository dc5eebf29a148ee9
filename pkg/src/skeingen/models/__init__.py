"""Data models for skeingen.

Value types for Laurent polynomials, loop monomials, twist states,
cyclotomic numbers, group characters and the reports built from them.
"""

from skeingen.models.character import CharacterTable, Representation
from skeingen.models.cyclotomic import Cyclotomic5, Mat2
from skeingen.models.laurent import LaurentPoly
from skeingen.models.monomial import Monomial, RelationKind, RelationParams, SurgeryParams
from skeingen.models.reports import GeneratingSetReport, LemmaReport, TerminationReport

__all__ = [
    "CharacterTable",
    "Cyclotomic5",
    "GeneratingSetReport",
    "LaurentPoly",
    "LemmaReport",
    "Mat2",
    "Monomial",
    "RelationKind",
    "RelationParams",
    "Representation",
    "SurgeryParams",
    "TerminationReport",
]
