"""Elliptic curves over exact fields: Weierstrass arithmetic, torsion
location, section matrices, rank deficiencies, and finite-field surveys."""

from .curves import Curve, Point, SingularCurveError, curve_from_j, division_polynomial
from .sections import (
    CurveFunction,
    coherent_section_values,
    evaluation_rank,
    miller_section,
    rank_deficiency,
    section_matrix,
    vanishing_characters,
)
from .survey import SurveyReport, survey
from .torsion import (
    ExtensionCapError,
    SubgroupC,
    enumerate_subgroups,
    find_order_N_point,
    primitive_root_of_unity,
    torsion_basis,
)

__all__ = [
    "Curve",
    "CurveFunction",
    "ExtensionCapError",
    "Point",
    "SingularCurveError",
    "SubgroupC",
    "SurveyReport",
    "coherent_section_values",
    "curve_from_j",
    "division_polynomial",
    "enumerate_subgroups",
    "evaluation_rank",
    "find_order_N_point",
    "miller_section",
    "primitive_root_of_unity",
    "rank_deficiency",
    "section_matrix",
    "survey",
    "torsion_basis",
    "vanishing_characters",
]
