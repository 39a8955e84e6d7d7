"""
Value and index literals.

    ConsB[4, ConsB[NilB, NilB]]     constructor with arguments
    4  'W'  "Ze"                    natural, character, text grounds
    IsD(IsI(VarA), VarB)  or  3     index tree, or a natural for Z/S indexes
"""
from __future__ import annotations

from functools import cache
from typing import Any

import pyparsing as pp

from nestfold.derive.artifacts import IndexCon
from nestfold.derive.artifacts import IndexExpr
from nestfold.derive.artifacts import IndexVar
from nestfold.derive.artifacts import nat_index
from nestfold.interp.values import Con
from nestfold.interp.values import Ground
from nestfold.interp.values import Value
from nestfold.interp.values import char
from nestfold.interp.values import nat
from nestfold.interp.values import text
from nestfold.utils.enums import GroundSort
from nestfold.utils.exceptions import ValueSyntaxError


@cache
def _value_grammar() -> pp.ParserElement:
    value = pp.Forward()
    number = pp.Regex(r"\d+").set_parse_action(lambda t: nat(int(t[0])))
    character = pp.Regex(r"'(.)'").set_parse_action(lambda t: char(t[0][1]))
    string = pp.QuotedString('"', esc_char="\\").set_parse_action(lambda t: text(t[0]))
    tag = pp.Regex(r"[A-Z][A-Za-z0-9_']*")
    args = pp.Suppress("[") + pp.Group(pp.Optional(pp.DelimitedList(value))) + pp.Suppress("]")
    constructor = (tag + pp.Optional(args)).set_parse_action(
        lambda t: Con(t[0], tuple(t[1]) if len(t) > 1 else ()),
    )
    value <<= number | character | string | constructor
    return value


@cache
def _index_grammar() -> pp.ParserElement:
    index = pp.Forward()
    natural = pp.Regex(r"\d+").set_parse_action(lambda t: nat_index(int(t[0])))
    variable = pp.Regex(r"[a-z][A-Za-z0-9_']*").set_parse_action(lambda t: IndexVar(t[0]))
    name = pp.Regex(r"[A-Z][A-Za-z0-9_']*")
    args = pp.Suppress("(") + pp.Group(pp.DelimitedList(index)) + pp.Suppress(")")
    constructor = (name + pp.Optional(args)).set_parse_action(
        lambda t: IndexCon(t[0], tuple(t[1]) if len(t) > 1 else ()),
    )
    index <<= natural | variable | constructor
    return index


def parse_value(source: str) -> Value:
    try:
        return _value_grammar().parse_string(source.strip(), parse_all=True)[0]
    except pp.ParseBaseException as exc:
        msg = f"bad value literal {source!r}: {exc.msg} at column {exc.col}"
        raise ValueSyntaxError(msg) from exc


def parse_index(source: str) -> IndexExpr:
    try:
        return _index_grammar().parse_string(source.strip(), parse_all=True)[0]
    except pp.ParseBaseException as exc:
        msg = f"bad index literal {source!r}: {exc.msg} at column {exc.col}"
        raise ValueSyntaxError(msg) from exc


def format_value(v: Any) -> str:
    if isinstance(v, Ground):
        match v.sort:
            case GroundSort.NAT:
                return str(v.constant)
            case GroundSort.CHAR:
                return f"'{v.constant}'"
        escaped = str(v.constant).replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    if isinstance(v, Con):
        if not v.children:
            return v.tag
        return f"{v.tag}[{', '.join(format_value(c) for c in v.children)}]"
    return repr(v)


def format_index(i: IndexExpr) -> str:
    if isinstance(i, IndexVar):
        return i.name
    if not i.args:
        return i.name
    return f"{i.name}({', '.join(format_index(a) for a in i.args)})"


def value_to_json(v: Value) -> dict[str, Any]:
    if isinstance(v, Ground):
        return {str(v.sort): v.constant}
    return {"con": v.tag, "args": [value_to_json(c) for c in v.children]}


def value_from_json(data: Any) -> Value:
    if not isinstance(data, dict):
        msg = f"expected a JSON object for a value, got {data!r}"
        raise ValueSyntaxError(msg)
    if "con" in data:
        return Con(str(data["con"]), tuple(value_from_json(c) for c in data.get("args", [])))
    for sort in GroundSort:
        if sort.value in data:
            constant = data[sort.value]
            return Ground(int(constant) if sort == GroundSort.NAT else str(constant), sort)
    msg = f"unrecognised value object {data!r}"
    raise ValueSyntaxError(msg)
