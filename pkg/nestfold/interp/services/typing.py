"""
Value/index conformance.

Types are unfolded lazily: an `At` node stands for the interpretation at a closed
index and is expanded one rule at a time, only where a value reaches it.
"""
from __future__ import annotations

from dataclasses import dataclass

from nestfold.core.declarations import App
from nestfold.core.declarations import Program
from nestfold.core.declarations import TypeExpr
from nestfold.core.declarations import Var
from nestfold.core.declarations import substitute
from nestfold.derive.artifacts import IndexedRepDecl
from nestfold.derive.artifacts import IndexExpr
from nestfold.derive.artifacts import IndexVar
from nestfold.derive.artifacts import InterpretationFn
from nestfold.derive.artifacts import Raw
from nestfold.derive.artifacts import RawIndexed
from nestfold.derive.artifacts import Recursive
from nestfold.derive.artifacts import match_index
from nestfold.derive.artifacts import substitute_index
from nestfold.derive.services.index import interpret_index
from nestfold.interp.carriers import Carriers
from nestfold.interp.values import Con
from nestfold.interp.values import Ground
from nestfold.interp.values import Value
from nestfold.utils.constants import OUTER_HOLE
from nestfold.utils.exceptions import FreeIndexVariableError
from nestfold.utils.exceptions import UnknownTypeConstructorError
from nestfold.utils.exceptions import ValueTypeError


@dataclass(frozen=True, slots=True)
class At:
    """The (unexpanded) interpretation at a closed index."""

    index: IndexExpr


def unfold(h: InterpretationFn, at: At) -> TypeExpr:
    i = at.index
    if isinstance(i, IndexVar):
        msg = f"index variable {i.name!r} is free"
        raise FreeIndexVariableError(msg)
    rule = h.rule(i.name)
    if len(rule.binders) != len(i.args):
        msg = f"{i.name} expects {len(rule.binders)} index argument(s)"
        raise ValueTypeError(msg)
    return substitute(rule.template, {b: At(a) for b, a in zip(rule.binders, i.args, strict=True)})  # type: ignore[misc]


def family_type(h: InterpretationFn, i: IndexExpr) -> TypeExpr:
    """The lazily unfolded type of the family at i, outer wrapper included."""
    top = At(i)
    if h.outer is None:
        return top  # type: ignore[return-value]
    return substitute(h.outer, {OUTER_HOLE: top})  # type: ignore[dict-item]


def _show(t: object) -> str:
    if isinstance(t, At):
        return f"<index {t.index}>"
    if isinstance(t, Var):
        return t.name
    if isinstance(t, App):
        return " ".join([t.con, *(_show(a) for a in t.args)]) if t.args else t.con
    return repr(t)


def check_against(
    v: Value,
    t: TypeExpr,
    h: InterpretationFn,
    carriers: Carriers,
    program: Program | None = None,
) -> None:
    """Raise ValueTypeError unless v inhabits the lazily unfolded type t."""
    program = program or h.program
    stack: list[tuple[Value, object]] = [(v, t)]
    while stack:
        value, expected = stack.pop()
        while isinstance(expected, At):
            expected = unfold(h, expected)
        if isinstance(expected, Var):
            if not isinstance(value, Ground) or not carriers.contains(expected.name, value):
                msg = f"{value!r} is not in the carrier of {expected.name}"
                raise ValueTypeError(msg)
            continue
        if not isinstance(expected, App):
            msg = f"cannot check against {_show(expected)}"
            raise ValueTypeError(msg)
        if not isinstance(value, Con):
            msg = f"expected a value of {_show(expected)}, got ground {value.constant!r}"
            raise ValueTypeError(msg)
        try:
            decl = program.decl(expected.con)
        except UnknownTypeConstructorError:
            msg = f"{_show(expected)} is not a declared type"
            raise ValueTypeError(msg) from None
        ctor = next((c for c in decl.constructors if c.name == value.tag), None)
        if ctor is None:
            msg = f"constructor {value.tag} does not build {_show(expected)}"
            raise ValueTypeError(msg)
        if len(value.children) != ctor.arity:
            msg = f"{value.tag} takes {ctor.arity} argument(s), got {len(value.children)}"
            raise ValueTypeError(msg)
        child_types = decl.instantiate(ctor, expected.args)
        stack.extend(zip(value.children, child_types, strict=True))


def check_value(v: Value, i: IndexExpr, h: InterpretationFn, carriers: Carriers) -> None:
    """Accept iff v inhabits the interpretation of h at the closed index i."""
    check_against(v, family_type(h, i), h, carriers)


def conforms(v: Value, i: IndexExpr, h: InterpretationFn, carriers: Carriers) -> bool:
    try:
        check_value(v, i, h, carriers)
    except ValueTypeError:
        return False
    return True


def check_value_expanded(v: Value, i: IndexExpr, h: InterpretationFn, carriers: Carriers) -> bool:
    """Reference checker: expand the whole type first, then compare structurally."""
    full = interpret_index(h, i)

    def inhabits(value: Value, t: TypeExpr) -> bool:
        if isinstance(t, Var):
            return isinstance(value, Ground) and carriers.contains(t.name, value)
        if not isinstance(t, App) or not isinstance(value, Con) or t.con not in h.program:
            return False
        decl = h.program.decl(t.con)
        for ctor in decl.constructors:
            if ctor.name == value.tag and ctor.arity == len(value.children):
                return all(inhabits(c, ct) for c, ct in zip(value.children, decl.instantiate(ctor, t.args), strict=True))
        return False

    return inhabits(v, full)


def check_indexed_value(v: Value, i: IndexExpr, rep: IndexedRepDecl, carriers: Carriers) -> None:
    """Conformance for indexed representations: each constructor names its own index."""
    stack: list[tuple[Value, IndexExpr]] = [(v, i)]
    while stack:
        value, index = stack.pop()
        if not isinstance(value, Con):
            msg = f"expected a {rep.name} constructor, got ground {value.constant!r}"
            raise ValueTypeError(msg)
        ctor = rep.constructor(value.tag)
        binding = match_index(ctor.subject_index, index)
        if binding is None:
            msg = f"constructor {value.tag} at wrong index"
            raise ValueTypeError(msg)
        if len(value.children) != len(ctor.args):
            msg = f"{value.tag} takes {len(ctor.args)} argument(s)"
            raise ValueTypeError(msg)
        for child, arg in zip(value.children, ctor.args, strict=True):
            match arg:
                case Recursive(idx):
                    stack.append((child, substitute_index(idx, binding)))
                case Raw(Var(param)):
                    if not isinstance(child, Ground) or not carriers.contains(param, child):
                        msg = f"{child!r} is not in the carrier of {param}"
                        raise ValueTypeError(msg)
                case RawIndexed(idx, fold):
                    if isinstance(fold.family, InterpretationFn):
                        check_value(child, substitute_index(idx, binding), fold.family, carriers)
                case _:
                    msg = f"{rep.name}.{value.tag}: unsupported raw argument"
                    raise ValueTypeError(msg)
