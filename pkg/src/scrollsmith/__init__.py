"""Exact numerical very-ampleness checks for rank-2 bundles on ruled surfaces and P2."""
from .bundles import ExtensionBundle, SplittingType, chern_classes, ey_family, make_extension_bundle
from .cohomology import CohomologyBound, cohomology_rational
from .divisors import BlownPlaneClass, DivisorClass, PlaneClass, RuledBase, intersect
from .invariants import ScrollInvariants, scroll_invariants
from .verdict import DomainError, Verdict

__version__ = "0.1.0"

__all__ = [
    "BlownPlaneClass",
    "CohomologyBound",
    "DivisorClass",
    "DomainError",
    "ExtensionBundle",
    "PlaneClass",
    "RuledBase",
    "ScrollInvariants",
    "SplittingType",
    "Verdict",
    "chern_classes",
    "cohomology_rational",
    "ey_family",
    "intersect",
    "make_extension_bundle",
    "scroll_invariants",
]
