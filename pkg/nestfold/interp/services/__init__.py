from nestfold.interp.services.enumeration import count_values
from nestfold.interp.services.enumeration import enumerate_indexed_values
from nestfold.interp.services.enumeration import enumerate_values
from nestfold.interp.services.evaluator import BUILTIN_NATIVES
from nestfold.interp.services.evaluator import eval_fold
from nestfold.interp.services.evaluator import eval_hofold
from nestfold.interp.services.evaluator import eval_map
from nestfold.interp.services.literals import format_index
from nestfold.interp.services.literals import format_value
from nestfold.interp.services.literals import parse_index
from nestfold.interp.services.literals import parse_value
from nestfold.interp.services.literals import value_from_json
from nestfold.interp.services.literals import value_to_json
from nestfold.interp.services.trace import AuditReport
from nestfold.interp.services.trace import EvalTrace
from nestfold.interp.services.trace import descent_audit
from nestfold.interp.services.trace import recording
from nestfold.interp.services.typing import check_indexed_value
from nestfold.interp.services.typing import check_value
from nestfold.interp.services.typing import check_value_expanded
from nestfold.interp.services.typing import conforms

__all__ = [
    "BUILTIN_NATIVES",
    "AuditReport",
    "EvalTrace",
    "check_indexed_value",
    "check_value",
    "check_value_expanded",
    "conforms",
    "count_values",
    "descent_audit",
    "enumerate_indexed_values",
    "enumerate_values",
    "eval_fold",
    "eval_hofold",
    "eval_map",
    "format_index",
    "format_value",
    "parse_index",
    "parse_value",
    "recording",
    "value_from_json",
    "value_to_json",
]
