"""
Induction principles: the fold with a motive over (index, value).
"""
from __future__ import annotations

from nestfold.derive.artifacts import CaseSpec
from nestfold.derive.artifacts import FoldSpec
from nestfold.derive.artifacts import Hypothesis
from nestfold.derive.artifacts import InductionCase
from nestfold.derive.artifacts import InductionSpec
from nestfold.derive.artifacts import Recursive
from nestfold.derive.services.naming import Naming


def induction_name(fold_name: str) -> str:
    return f"ind{fold_name.removeprefix('fold')}"


def case_binders(case: CaseSpec) -> tuple[str, ...]:
    """Names given to the subject's children in printed clauses and hypotheses."""
    return Naming.holes(len(case.args))


def derive_induction_spec(fold: FoldSpec) -> InductionSpec:
    cases = []
    for case in fold.cases:
        binders = case_binders(case)
        hypotheses = tuple(
            Hypothesis(binder, arg.index)
            for binder, arg in zip(binders, case.args, strict=True)
            if isinstance(arg, Recursive)
        )
        cases.append(InductionCase(case.name, binders, hypotheses))
    return InductionSpec(induction_name(fold.name), fold, tuple(cases))
