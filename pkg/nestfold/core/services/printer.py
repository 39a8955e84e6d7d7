"""
Canonical printing of declaration programs in the .ndt surface syntax.
"""
from __future__ import annotations

from nestfold.core.declarations import App
from nestfold.core.declarations import Arrow
from nestfold.core.declarations import ConstructorDecl
from nestfold.core.declarations import DataDecl
from nestfold.core.declarations import Program
from nestfold.core.declarations import TypeExpr
from nestfold.core.declarations import Var


def render_type(t: TypeExpr, *, atomic: bool = False) -> str:
    """Print t; atomic=True parenthesises anything that is not a single name."""
    match t:
        case Var(name):
            return name
        case App(con, ()):
            return con
        case App(con, args):
            text = " ".join([con, *(render_type(a, atomic=True) for a in args)])
        case Arrow(domain, codomain):
            text = f"{render_type(domain, atomic=isinstance(domain, Arrow))} -> {render_type(codomain)}"
        case _:
            raise TypeError(t)
    return f"({text})" if atomic else text


def render_constructor(ctor: ConstructorDecl, decl: DataDecl) -> str:
    parts = [render_type(a, atomic=isinstance(a, Arrow)) for a in ctor.arg_types]
    parts.append(render_type(decl.result_type))
    return f"{ctor.name} : {' -> '.join(parts)}"


def render_decl(decl: DataDecl) -> str:
    lines = [f"data {decl.name} ({' '.join(decl.params)}) where"]
    lines.extend(f"  {render_constructor(c, decl)}" for c in decl.constructors)
    return "\n".join(lines)


def render_program(program: Program) -> str:
    if not program.decls:
        return ""
    return "\n\n".join(render_decl(d) for d in program.decls) + "\n"
