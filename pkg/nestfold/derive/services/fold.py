"""
Direct dependently typed folds, and the regular fold they generalize.
"""
from __future__ import annotations

import logging
from collections.abc import Mapping

from nestfold.core.declarations import App
from nestfold.core.declarations import Program
from nestfold.core.declarations import Var
from nestfold.core.services.closure import nestedness_report
from nestfold.core.services.closure import reachability_closure
from nestfold.derive.artifacts import UNIT_INDEX
from nestfold.derive.artifacts import ArgSpec
from nestfold.derive.artifacts import CaseSpec
from nestfold.derive.artifacts import FoldSpec
from nestfold.derive.artifacts import IndexCon
from nestfold.derive.artifacts import IndexExpr
from nestfold.derive.artifacts import IndexVar
from nestfold.derive.artifacts import InterpretationFn
from nestfold.derive.artifacts import InterpretationRule
from nestfold.derive.artifacts import ParamLeaf
from nestfold.derive.artifacts import PCon
from nestfold.derive.artifacts import PHole
from nestfold.derive.artifacts import Raw
from nestfold.derive.artifacts import Recursive
from nestfold.derive.services.index import derive_interpretation
from nestfold.derive.services.index import type_to_index
from nestfold.derive.services.naming import Naming
from nestfold.derive.services.naming import unique
from nestfold.utils.exceptions import DerivationError

logger = logging.getLogger(__name__)


def flat_pattern(tag: str, arity: int) -> PCon:
    return PCon(tag, tuple(PHole(k) for k in range(arity)))


def derive_fold_spec(
    program: Program,
    root: str,
    case_names: Mapping[str, str] | None = None,
) -> FoldSpec:
    """
    The direct fold of root: parameter leaves first, then every constructor of the
    closure in closure order. case_names renames constructor cases by constructor name.
    """
    case_names = case_names or {}
    decl = program.root(root)
    h = derive_interpretation(program, root)
    index_type = h.index_type

    names: list[str] = []
    drafts: list[tuple[IndexExpr, ParamLeaf | PCon, tuple[ArgSpec, ...]]] = []
    for param in decl.params:
        names.append(Naming.leaf_case(param, decl.params))
        drafts.append((IndexCon(index_type.leaf_for(param).name), ParamLeaf(param), (Raw(Var(param)),)))

    for member_name in reachability_closure(program, root):
        member = program.decl(member_name)
        is_ctor = index_type.for_type(member_name)
        if is_ctor is None:
            msg = f"{member_name} has no index constructor"
            raise DerivationError(msg)
        variables = tuple(IndexVar(v) for v in Naming.index_variables(member.arity))
        subject = IndexCon(is_ctor.name, variables)
        env = dict(zip(member.params, variables, strict=True))
        for ctor in member.constructors:
            names.append(case_names.get(ctor.name) or Naming.constructor_case(ctor.name, member_name))
            args = tuple(Recursive(type_to_index(t, env, index_type)) for t in ctor.arg_types)
            drafts.append((subject, flat_pattern(ctor.name, ctor.arity), args))

    cases = tuple(
        CaseSpec(name, subject, shape, args)
        for name, (subject, shape, args) in zip(unique(names), drafts, strict=True)
    )
    logger.debug("Derived %s with %d cases", Naming.fold(root), len(cases))
    return FoldSpec(Naming.fold(root), root, h, cases, direct=True).validate()


def derive_regular_fold_spec(program: Program, root: str) -> FoldSpec:
    """The ordinary fold of a regular type: a one-point index and raw parameter children."""
    decl = program.root(root)
    if any(entry.is_nested for entry in nestedness_report(program, root) if entry.type_name == root):
        msg = f"{root} is nested; it has no regular fold"
        raise DerivationError(msg)
    point = IndexCon(UNIT_INDEX.con_ctors[0].name)
    h = InterpretationFn(
        name=root,
        index_type=UNIT_INDEX,
        params=decl.params,
        rules=(InterpretationRule(point.name, (), decl.result_type),),
        program=program.restricted(reachability_closure(program, root)),
    )
    names: list[str] = []
    cases: list[tuple[PCon, tuple[ArgSpec, ...]]] = []
    for ctor in decl.constructors:
        names.append(Naming.constructor_case(ctor.name, root))
        args: list[ArgSpec] = []
        for t in ctor.arg_types:
            if isinstance(t, App) and t == decl.result_type:
                args.append(Recursive(point))
            else:
                args.append(Raw(t))
        cases.append((flat_pattern(ctor.name, ctor.arity), tuple(args)))
    specs = tuple(
        CaseSpec(name, point, shape, args) for name, (shape, args) in zip(unique(names), cases, strict=True)
    )
    return FoldSpec("fold", root, h, specs).validate()
