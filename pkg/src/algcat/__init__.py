"""Finite algebras, points and the categorical properties of objects.

Monoids, commutative monoids, semirings and subtraction algebras are given by
operation tables; the bicyclic monoid and free products are handled lazily
through normal forms.  See :mod:`algcat.classify` for the object checks.
"""
from .algebra import FiniteAlgebra, InputError, from_function, from_tables, validate_axioms
from .catalog import builtin, default_pool, finite_catalog
from .classify import (PROPERTIES, check_maltsev_object, check_pm_via_sum, check_property,
                       check_protomodular_object, check_strongly_unital_object,
                       check_subtractive_object, check_unital_object, classify, classify_table,
                       is_gregarious_monoid, is_group_monoid, is_ring_semiring,
                       maltsev_freeproduct_probe)
from .homs import Homomorphism, enumerate_homs
from .points import Point, is_schreier_point, is_stably_strong, is_strong_point, make_point

__version__ = "0.1.0"

__all__ = [
    "FiniteAlgebra", "InputError", "from_function", "from_tables", "validate_axioms",
    "builtin", "default_pool", "finite_catalog",
    "PROPERTIES", "check_maltsev_object", "check_pm_via_sum", "check_property",
    "check_protomodular_object", "check_strongly_unital_object", "check_subtractive_object",
    "check_unital_object", "classify", "classify_table", "is_gregarious_monoid", "is_group_monoid",
    "is_ring_semiring", "maltsev_freeproduct_probe",
    "Homomorphism", "enumerate_homs",
    "Point", "is_schreier_point", "is_stably_strong", "is_strong_point", "make_point",
]
