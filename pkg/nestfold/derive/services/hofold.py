"""
Specialization of dependently typed folds to higher-order folds.
"""
from __future__ import annotations

import logging

from nestfold.core.declarations import App
from nestfold.core.declarations import Var
from nestfold.core.declarations import mentioned_constructors
from nestfold.core.declarations import replace_constructor
from nestfold.derive.artifacts import FoldSpec
from nestfold.derive.artifacts import HOFoldArg
from nestfold.derive.artifacts import HOFoldSpec
from nestfold.derive.artifacts import IndexCon
from nestfold.derive.artifacts import IndexExpr
from nestfold.derive.artifacts import InterpretationFn
from nestfold.derive.artifacts import InterpretationRule
from nestfold.derive.services.naming import Naming
from nestfold.utils.constants import MOTIVE
from nestfold.utils.exceptions import DerivationError

logger = logging.getLogger(__name__)


def derive_hp(h: InterpretationFn, root: str) -> InterpretationFn:
    """h with the root type constructor replaced by the motive variable everywhere."""
    rules = tuple(
        InterpretationRule(r.index_con, r.binders, replace_constructor(r.template, root, MOTIVE)) for r in h.rules
    )
    outer = replace_constructor(h.outer, root, MOTIVE) if h.outer is not None else None
    return InterpretationFn(Naming.hp(h.name), h.index_type, h.params, rules, h.program, outer)


def mentions_root(h: InterpretationFn, root: str) -> bool:
    templates = [r.template for r in h.rules]
    if h.outer is not None:
        templates.append(h.outer)
    return any(root in mentioned_constructors(t) for t in templates)


def root_index(h: InterpretationFn, root: str) -> IndexExpr:
    """The index at which the family is the root applied to its own parameters."""
    leaves = {c.denotes: c.name for c in h.index_type.var_ctors}
    if h.outer is not None and root in mentioned_constructors(h.outer):
        if len(h.params) != 1:
            msg = f"{h.name}: an outer family needs exactly one parameter"
            raise DerivationError(msg)
        return IndexCon(leaves[h.params[0]])
    for rule in h.rules:
        template = rule.template
        if isinstance(template, App) and template.con == root and len(template.args) == len(h.params):
            holes = [a.name for a in template.args if isinstance(a, Var) and a.name in rule.binders]
            if len(holes) == len(rule.binders) == len(h.params):
                by_hole = {name: IndexCon(leaves[param]) for name, param in zip(holes, h.params, strict=True)}
                return IndexCon(rule.index_con, tuple(by_hole[b] for b in rule.binders))
    msg = f"{h.name} never yields {root} applied to its parameters"
    raise DerivationError(msg)


def derive_hofold(fold: FoldSpec) -> HOFoldSpec:
    h = fold.family
    if not isinstance(h, InterpretationFn):
        msg = f"{fold.name} folds an indexed representation; it has no higher-order specialization"
        raise DerivationError(msg)
    if not mentions_root(h, fold.root):
        msg = f"{h.name} never mentions {fold.root}"
        raise DerivationError(msg)
    decl = h.program.decl(fold.root)
    result = App(MOTIVE, tuple(Var(p) for p in decl.params))
    args = tuple(
        HOFoldArg(
            name=Naming.constructor_case(ctor.name, decl.name),
            constructor=ctor.name,
            arg_types=tuple(replace_constructor(t, decl.name, MOTIVE) for t in ctor.arg_types),
            result=result,
        )
        for ctor in decl.constructors
    )
    spec = HOFoldSpec(Naming.hofold(fold.root), fold, derive_hp(h, fold.root), root_index(h, fold.root), args)
    logger.debug("Specialized %s to %s", fold.name, spec.name)
    return spec
