"""Scroll invariants, parameter sweeps and the certified-bundle catalog."""
from ..invariants import ScrollInvariants, fibre_pair_degree, scroll_invariants
from .catalog import AppendStatus, Catalog, CatalogEntry, QueryResult, default_catalog_path
from .search import enumerate_candidates, evaluate_tuple, iter_tuples, revalidate

__all__ = [
    "ScrollInvariants",
    "scroll_invariants",
    "fibre_pair_degree",
    "AppendStatus",
    "Catalog",
    "CatalogEntry",
    "QueryResult",
    "default_catalog_path",
    "enumerate_candidates",
    "evaluate_tuple",
    "iter_tuples",
    "revalidate",
]
