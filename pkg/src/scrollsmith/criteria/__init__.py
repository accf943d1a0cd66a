"""Very-ampleness criteria for rank-2 bundles: sufficient checks and necessary obstructions."""
from .classical import check_prop_cinque, check_prop_due, check_prop_uno_b
from .necessary import brosius_forced_classes, check_brosius, finalno_obstruction
from .report import Condition, ConditionReport
from .special import check_restriction_props, reider_candidates, reider_exceptions, teoy_verdict
from .valma import check_valma, check_valmae, search_valma_witness, search_valmae_witness

__all__ = [
    "Condition",
    "ConditionReport",
    "check_valma",
    "check_valmae",
    "search_valma_witness",
    "search_valmae_witness",
    "check_prop_uno_b",
    "check_prop_due",
    "check_prop_cinque",
    "check_brosius",
    "brosius_forced_classes",
    "finalno_obstruction",
    "reider_exceptions",
    "reider_candidates",
    "check_restriction_props",
    "teoy_verdict",
]
