"""
Kind checking: arities, name resolution and the first-order restriction.
"""
from __future__ import annotations

import logging

from nestfold.core.declarations import App
from nestfold.core.declarations import Arrow
from nestfold.core.declarations import ConstructorDecl
from nestfold.core.declarations import DataDecl
from nestfold.core.declarations import Program
from nestfold.core.declarations import TypeExpr
from nestfold.core.declarations import Var
from nestfold.core.services.printer import render_type
from nestfold.utils.exceptions import ArityMismatchError
from nestfold.utils.exceptions import HigherOrderArgumentError
from nestfold.utils.exceptions import UnboundParameterError
from nestfold.utils.exceptions import UnknownTypeConstructorError

logger = logging.getLogger(__name__)


def _where(ctor: ConstructorDecl) -> tuple[int | None, int | None]:
    if ctor.position is None:
        return None, None
    return ctor.position.line, ctor.position.column


def _check_type(t: TypeExpr, program: Program, decl: DataDecl, ctor: ConstructorDecl) -> None:
    line, column = _where(ctor)
    match t:
        case Var(name):
            if name not in decl.params:
                msg = f"{ctor.name}: type variable {name!r} is not a parameter of {decl.name}"
                raise UnboundParameterError(msg, line, column)
        case App(con, args):
            if con not in program:
                msg = f"{ctor.name}: unknown type constructor {con!r}"
                raise UnknownTypeConstructorError(msg, line, column)
            expected = program.decl(con).arity
            if len(args) != expected:
                msg = f"{ctor.name}: {con} expects {expected} argument(s) but {render_type(t)} gives {len(args)}"
                raise ArityMismatchError(msg, line, column)
            for arg in args:
                _check_type(arg, program, decl, ctor)
        case Arrow():
            msg = (
                f"{ctor.name}: argument {render_type(t, atomic=True)} is a function type; "
                "folds are only derived for first-order constructors"
            )
            raise HigherOrderArgumentError(msg, line, column)


def kind_check(program: Program) -> Program:
    """Return program unchanged when every constructor argument is well-kinded."""
    for decl in program.decls:
        for ctor in decl.constructors:
            for arg in ctor.arg_types:
                _check_type(arg, program, decl, ctor)
    logger.debug("Kind-checked %s declaration(s)", len(program.decls))
    return program
