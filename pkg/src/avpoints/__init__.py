"""Rational points on abelian varieties over finite fields via orders and ideals."""

from .algebra import AlgElem, EtaleAlgebra, charpoly_scaled_inverse, make_algebra
from .classify import (
    IsogenyClass,
    admissible_groups,
    annihilated_by,
    enumerate_elliptic_classes,
    is_cyclic_class,
    is_rich_class,
    two_generator_witness,
)
from .groups import AbGroup
from .lattice import Lattice, Order, conductor
from .maximal import frobenius_order, maximal_order
from .overorders import overorders
from .points import (
    PointsResult,
    coprime_conductor_group,
    dual_group,
    dual_ideal,
    group_from_order,
    not_self_dual_witness,
    quotient_group,
    search_groups_for_multiplicator,
)
from .primes import cm_type_at, primes_above
from .weil import WeilPoly, point_count, validate_weil

__version__ = "0.1.0"

__all__ = [
    "AbGroup",
    "AlgElem",
    "EtaleAlgebra",
    "IsogenyClass",
    "Lattice",
    "Order",
    "PointsResult",
    "WeilPoly",
    "admissible_groups",
    "annihilated_by",
    "charpoly_scaled_inverse",
    "cm_type_at",
    "conductor",
    "coprime_conductor_group",
    "dual_group",
    "dual_ideal",
    "enumerate_elliptic_classes",
    "frobenius_order",
    "group_from_order",
    "is_cyclic_class",
    "is_rich_class",
    "make_algebra",
    "maximal_order",
    "not_self_dual_witness",
    "overorders",
    "point_count",
    "primes_above",
    "quotient_group",
    "search_groups_for_multiplicator",
    "two_generator_witness",
    "validate_weil",
]
