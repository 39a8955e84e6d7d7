"""
Reachability closure and nestedness analysis of checked programs.
"""
from __future__ import annotations

from dataclasses import dataclass

from nestfold.core.declarations import App
from nestfold.core.declarations import Program
from nestfold.core.declarations import TypeExpr
from nestfold.core.declarations import Var
from nestfold.core.declarations import mentioned_constructors
from nestfold.utils.enums import ArgumentKind


@dataclass(frozen=True, slots=True)
class ConstructorNestedness:
    type_name: str
    constructor: str
    flags: tuple[ArgumentKind, ...]

    @property
    def is_nested(self) -> bool:
        return ArgumentKind.NESTED in self.flags


def reachability_closure(program: Program, root: str) -> tuple[str, ...]:
    """Root first, then every type constructor mentioned transitively, in first-mention order."""
    program.root(root)
    order = [root]
    cursor = 0
    while cursor < len(order):
        decl = program.decl(order[cursor])
        cursor += 1
        for ctor in decl.constructors:
            for arg in ctor.arg_types:
                for name in mentioned_constructors(arg):
                    if name not in order:
                        order.append(name)
    return tuple(order)


def _applies_head_to_non_variables(t: TypeExpr, head: str) -> bool:
    if not isinstance(t, App):
        return False
    if t.con == head and any(not isinstance(a, Var) for a in t.args):
        return True
    return any(_applies_head_to_non_variables(a, head) for a in t.args)


def nestedness_report(program: Program, root: str) -> tuple[ConstructorNestedness, ...]:
    """Flag every constructor argument of the closure members as plain or nested."""
    report = []
    for name in reachability_closure(program, root):
        decl = program.decl(name)
        for ctor in decl.constructors:
            flags = tuple(
                ArgumentKind.NESTED if _applies_head_to_non_variables(arg, decl.name) else ArgumentKind.PLAIN
                for arg in ctor.arg_types
            )
            report.append(ConstructorNestedness(decl.name, ctor.name, flags))
    return tuple(report)
