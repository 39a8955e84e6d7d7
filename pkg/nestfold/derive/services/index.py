"""
The index type of a nested family and its interpretation as types.
"""
from __future__ import annotations

import logging
from collections.abc import Mapping

from nestfold.core.declarations import App
from nestfold.core.declarations import Arrow
from nestfold.core.declarations import Program
from nestfold.core.declarations import TypeExpr
from nestfold.core.declarations import Var
from nestfold.core.declarations import substitute
from nestfold.core.services.closure import reachability_closure
from nestfold.derive.artifacts import IndexCon
from nestfold.derive.artifacts import IndexConstructor
from nestfold.derive.artifacts import IndexExpr
from nestfold.derive.artifacts import IndexTypeDecl
from nestfold.derive.artifacts import IndexVar
from nestfold.derive.artifacts import InterpretationFn
from nestfold.derive.artifacts import InterpretationRule
from nestfold.derive.services.naming import Naming
from nestfold.derive.services.naming import unique
from nestfold.utils.constants import HOLE_PREFIX
from nestfold.utils.constants import OUTER_HOLE
from nestfold.utils.exceptions import DerivationError
from nestfold.utils.exceptions import FreeIndexVariableError
from nestfold.utils.exceptions import OutOfClosureError

logger = logging.getLogger(__name__)


def hole(k: int) -> str:
    return f"{HOLE_PREFIX}{k}"


def derive_index_type(program: Program, root: str) -> IndexTypeDecl:
    """One leaf per root parameter, then one constructor per closure member."""
    decl = program.root(root)
    closure = reachability_closure(program, root)
    raw = [Naming.var_ctor(p) for p in decl.params] + [Naming.is_ctor(name) for name in closure]
    names = unique(raw)
    var_ctors = tuple(
        IndexConstructor(name, 0, param) for name, param in zip(names, decl.params, strict=False)
    )
    con_ctors = tuple(
        IndexConstructor(name, program.decl(member).arity, member)
        for name, member in zip(names[len(decl.params):], closure, strict=True)
    )
    logger.debug("Index type for %s over closure %s", root, ", ".join(closure))
    return IndexTypeDecl(Naming.index_type(root), var_ctors, con_ctors)


def derive_interpretation(
    program: Program,
    root: str,
    index_type: IndexTypeDecl | None = None,
) -> InterpretationFn:
    decl = program.root(root)
    index_type = index_type or derive_index_type(program, root)
    rules = [InterpretationRule(c.name, (), Var(c.denotes or "")) for c in index_type.var_ctors]
    for ctor in index_type.con_ctors:
        binders = tuple(hole(k) for k in range(1, ctor.arity + 1))
        rules.append(InterpretationRule(ctor.name, binders, App(ctor.denotes or "", tuple(Var(b) for b in binders))))
    closure = tuple(c.denotes or "" for c in index_type.con_ctors)
    return InterpretationFn(
        name=Naming.interpretation(root),
        index_type=index_type,
        params=decl.params,
        rules=tuple(rules),
        program=program.restricted(closure),
    )


def interpret_index(
    h: InterpretationFn,
    i: IndexExpr,
    sigma: Mapping[str, TypeExpr] | None = None,
) -> TypeExpr:
    """Evaluate h at the closed index i, then instantiate the parameters by sigma."""

    def inner(node: IndexExpr) -> TypeExpr:
        if isinstance(node, IndexVar):
            msg = f"index variable {node.name!r} is free; interpretation needs a closed index"
            raise FreeIndexVariableError(msg)
        rule = h.rule(node.name)
        if len(rule.binders) != len(node.args):
            msg = f"{node.name} expects {len(rule.binders)} index argument(s), got {len(node.args)}"
            raise DerivationError(msg)
        return substitute(rule.template, {b: inner(a) for b, a in zip(rule.binders, node.args, strict=True)})

    result = inner(i)
    if h.outer is not None:
        result = substitute(h.outer, {OUTER_HOLE: result})
    return substitute(result, sigma or {})


def type_to_index(t: TypeExpr, env: Mapping[str, IndexExpr], index_type: IndexTypeDecl) -> IndexExpr:
    """Structural translation of an in-closure type into an index expression."""
    match t:
        case Var(name):
            try:
                return env[name]
            except KeyError:
                msg = f"type variable {name!r} has no index"
                raise DerivationError(msg) from None
        case App(con, args):
            ctor = index_type.for_type(con)
            if ctor is None:
                msg = f"{con} is outside the closure indexed by {index_type.name}"
                raise OutOfClosureError(msg)
            return IndexCon(ctor.name, tuple(type_to_index(a, env, index_type) for a in args))
        case Arrow():
            msg = "function types have no index"
            raise OutOfClosureError(msg)
    raise TypeError(t)
