"""Exact computation with good semigroups of Z^s and their ideals."""

from .catalog import (
    BudgetExceeded,
    HuntReport,
    enumerate_good,
    enumerate_ideals,
    from_small,
    hunt_cor26,
    natural,
    node,
    numerical,
    product,
)
from .duality import (
    SymmetryReport,
    check_reflexivity,
    dual,
    is_canonical,
    normalized_canonical,
    pointwise_equivalence,
    symmetry_report,
)
from .idealops import as_ideal, conductor_ideal, difference, filtration, is_subset, orthant, translate
from .lattice import Box, compare, meet, unit_chain
from .metric import element_distance, equals, filtration_distance, ideal_distance
from .poincare import PoincarePolynomial, check_symmetry_theorem, local_distance, poincare_polynomial
from .semigroup import (
    GoodSemigroup,
    Ideal,
    ValidationError,
    ValidationReport,
    contains,
    delta_nonempty,
    delta_union_empty,
    make_ideal,
    make_semigroup,
    validate,
    validate_good,
)

__version__ = "0.1.0"
