"""
Parser for .ndt declaration programs.

    data Bush (a) where
      NilB : Bush a
      ConsB : a -> Bush (Bush a) -> Bush a

Lower-case names are type variables, capitalised names are type constructors.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cache

import pyparsing as pp

from nestfold.core.declarations import App
from nestfold.core.declarations import Arrow
from nestfold.core.declarations import ConstructorDecl
from nestfold.core.declarations import DataDecl
from nestfold.core.declarations import Position
from nestfold.core.declarations import Program
from nestfold.core.declarations import TypeExpr
from nestfold.core.declarations import Var
from nestfold.utils.exceptions import DeclarationSyntaxError
from nestfold.utils.exceptions import DuplicateNameError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class _RawConstructor:
    name: str
    chain: tuple[TypeExpr, ...]
    position: Position


def _position(text: str, loc: int) -> Position:
    return Position(pp.lineno(loc, text), pp.col(loc, text))


def _fold_arrows(items: list[TypeExpr]) -> TypeExpr:
    result = items[-1]
    for item in reversed(items[:-1]):
        result = Arrow(item, result)
    return result


class DeclarationParser:
    """Builds the pyparsing grammar once and turns source text into a Program."""

    @staticmethod
    @cache
    def grammar() -> pp.ParserElement:
        keyword = pp.Keyword("data") | pp.Keyword("where")
        lower = pp.Regex(r"[a-z][A-Za-z0-9_']*")
        upper = pp.Regex(r"[A-Z][A-Za-z0-9_']*")

        variable = ~keyword + lower
        # a capitalised name followed by ':' starts the next constructor line
        con_head = upper + ~pp.Literal(":")

        arrow_chain = pp.Forward()
        atom = pp.Forward()
        parens = pp.Suppress("(") + arrow_chain + pp.Suppress(")")
        var_atom = variable.copy().set_parse_action(lambda t: Var(t[0]))
        bare_con = con_head.copy().set_parse_action(lambda t: App(t[0], ()))
        atom <<= parens | var_atom | bare_con
        applied = (con_head + pp.OneOrMore(atom)).set_parse_action(
            lambda t: App(t[0], tuple(t[1:])),
        )
        app_type = applied | atom
        chain = pp.Group(app_type + pp.ZeroOrMore(pp.Suppress("->") + app_type))
        arrow_chain <<= chain.copy().set_parse_action(lambda t: _fold_arrows(list(t[0])))

        ctor = (upper + pp.Suppress(":") + chain).set_parse_action(
            lambda s, loc, t: _RawConstructor(t[0], tuple(t[1]), _position(s, loc)),
        )
        params = pp.Group(pp.ZeroOrMore(variable))
        decl = (
            pp.Suppress(pp.Keyword("data"))
            + upper
            + pp.Suppress("(")
            + params
            + pp.Suppress(")")
            + pp.Suppress(pp.Keyword("where"))
            + pp.Group(pp.OneOrMore(ctor))
        ).set_parse_action(lambda s, loc, t: _build_decl(t[0], tuple(t[1]), tuple(t[2]), _position(s, loc)))

        program = pp.ZeroOrMore(decl)
        program.ignore(pp.Literal("--") + pp.rest_of_line)
        return program

    @classmethod
    def parse(cls, text: str) -> Program:
        try:
            tokens = cls.grammar().parse_string(text, parse_all=True)
        except pp.ParseBaseException as exc:
            raise DeclarationSyntaxError(exc.msg, exc.lineno, exc.col) from exc
        program = Program(tuple(tokens))
        _check_unique(program)
        logger.debug("Parsed %s declaration(s): %s", len(program.decls), ", ".join(program.names))
        return program


def _build_decl(
    name: str,
    params: tuple[str, ...],
    raw_ctors: tuple[_RawConstructor, ...],
    position: Position,
) -> DataDecl:
    seen: set[str] = set()
    for param in params:
        if param in seen:
            msg = f"parameter {param!r} of {name} is declared twice"
            raise DuplicateNameError(msg, position.line, position.column)
        seen.add(param)
    result = App(name, tuple(Var(p) for p in params))
    ctors = []
    for raw in raw_ctors:
        if raw.chain[-1] != result:
            msg = f"constructor {raw.name} must return {_plain(result)}"
            raise DeclarationSyntaxError(msg, raw.position.line, raw.position.column)
        ctors.append(ConstructorDecl(raw.name, raw.chain[:-1], raw.position))
    return DataDecl(name, params, tuple(ctors), position)


def _plain(t: App) -> str:
    return " ".join([t.con, *(a.name for a in t.args if isinstance(a, Var))])


def _check_unique(program: Program) -> None:
    decl_names: set[str] = set()
    ctor_names: set[str] = set()
    for decl in program.decls:
        if decl.name in decl_names:
            pos = decl.position
            msg = f"data type {decl.name!r} is declared twice"
            raise DuplicateNameError(msg, pos.line if pos else None, pos.column if pos else None)
        decl_names.add(decl.name)
        for ctor in decl.constructors:
            if ctor.name in ctor_names:
                pos = ctor.position
                msg = f"constructor {ctor.name!r} is declared twice"
                raise DuplicateNameError(msg, pos.line if pos else None, pos.column if pos else None)
            ctor_names.add(ctor.name)


def parse_program(text: str) -> Program:
    """Parse .ndt source into a Program; positions are kept for diagnostics."""
    return DeclarationParser.parse(text)
