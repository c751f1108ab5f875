"""Exact arithmetic kernel: fields, polynomials, Laurent series, linear
algebra and integer factoring used by the curve and q-expansion engines."""

from .fields import (
    QQ,
    CyclotomicField,
    ExtField,
    FieldElement,
    PrimeField,
    cyclotomic_field,
    ext_field,
    finite_field,
    prime_field,
)
from .intfactor import Factorization, factor_integer
from .linalg import matrix_rank
from .polys import (
    NEG_INF,
    Poly,
    distinct_degree_profile,
    embed_element,
    embed_poly,
    is_irreducible,
    poly_discriminant,
    poly_resultant,
    poly_roots,
)
from .series import LaurentSeries, PrecisionError

__all__ = [
    "QQ",
    "CyclotomicField",
    "ExtField",
    "Factorization",
    "FieldElement",
    "LaurentSeries",
    "NEG_INF",
    "Poly",
    "PrecisionError",
    "PrimeField",
    "cyclotomic_field",
    "distinct_degree_profile",
    "embed_element",
    "embed_poly",
    "ext_field",
    "factor_integer",
    "finite_field",
    "is_irreducible",
    "matrix_rank",
    "poly_discriminant",
    "poly_resultant",
    "poly_roots",
    "prime_field",
]
