"""Exact ideal arithmetic in quadratic rings of integers.

Quadratic fields Q(sqrt(d)) with their rings of integers Z[w], ideals in
Hermite normal form, prime splitting, relative ideal norms, unit groups and
class numbers, and constructive streams of prime ideals that escape any
finite list.
"""

from .errors import (
    DegenerateD,
    FieldMismatch,
    NonPositive,
    NotImaginary,
    NotPrime,
    NotSquarefree,
    NotUFD,
    QuadringError,
    SearchExhausted,
    UnsupportedField,
    ZeroElement,
    ZeroIdeal,
)
from .field import AlgebraicInteger, OmegaKind, QuadraticField, make_field
from .ideals import Ideal, ideal_from_json, ideal_from_json_dict
from .infinitude import (
    escape_finite_list,
    nonassociate_prime_elements,
    prime_ideal_stream,
    rational_prime_stream,
)
from .norms import check_extension_norm, extend_ideal, relative_norm, residue_degree
from .splitting import (
    Factorization,
    PrimeIdealFactor,
    factor_ideal,
    kronecker_symbol,
    split_prime,
    valuation,
)
from .units import (
    UnitGroupInfo,
    UnitGroupKind,
    are_associate,
    class_number_imaginary,
    find_element_of_norm,
    is_ufd,
    minkowski_bound,
    principal_generator,
    unit_group,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicInteger",
    "DegenerateD",
    "Factorization",
    "FieldMismatch",
    "Ideal",
    "NonPositive",
    "NotImaginary",
    "NotPrime",
    "NotSquarefree",
    "NotUFD",
    "OmegaKind",
    "PrimeIdealFactor",
    "QuadraticField",
    "QuadringError",
    "SearchExhausted",
    "UnitGroupInfo",
    "UnitGroupKind",
    "UnsupportedField",
    "ZeroElement",
    "ZeroIdeal",
    "are_associate",
    "check_extension_norm",
    "class_number_imaginary",
    "escape_finite_list",
    "extend_ideal",
    "factor_ideal",
    "find_element_of_norm",
    "ideal_from_json",
    "ideal_from_json_dict",
    "is_ufd",
    "kronecker_symbol",
    "make_field",
    "minkowski_bound",
    "nonassociate_prime_elements",
    "principal_generator",
    "prime_ideal_stream",
    "rational_prime_stream",
    "relative_norm",
    "residue_degree",
    "split_prime",
    "unit_group",
    "valuation",
]
