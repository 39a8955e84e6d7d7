from nestfold.check.services.properties import get_property
from nestfold.check.services.properties import property_registry
from nestfold.check.services.runner import audit_requested
from nestfold.check.services.runner import audit_termination
from nestfold.check.services.runner import check_property
from nestfold.check.services.runner import run_property
from nestfold.check.services.runner import run_suite

__all__ = [
    "audit_requested",
    "audit_termination",
    "check_property",
    "get_property",
    "property_registry",
    "run_property",
    "run_suite",
]
