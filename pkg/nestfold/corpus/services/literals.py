"""
Named example values.
"""
from __future__ import annotations

from nestfold.interp.services.literals import parse_value
from nestfold.interp.values import Value
from nestfold.utils.exceptions import UnknownEntryError

type Nested = int | list[Nested]


def bush_source(items: Nested) -> str:
    """List notation to a bush literal: [4, [8]] is ConsB[4, ConsB[ConsB[8, NilB], NilB]]."""
    if isinstance(items, int):
        return str(items)
    source = "NilB"
    for item in reversed(items):
        source = f"ConsB[{bush_source(item)}, {source}]"
    return source


TERM1 = "LamE[AppE[VarE[Zero], VarE[Succ[VarE['W']]]]]"

LITERAL_SOURCES: dict[str, str] = {
    "bush1": bush_source(
        [
            4,
            [8, [5], [[3]]],
            [[7], [], [[[7]]]],
            [[[], [[0]]]],
        ],
    ),
    "num0": "Succ[Succ[Zero]]",
    "num1": "Succ[Succ[Zero]]",
    "num2": "Succ[Succ[Succ[Zero]]]",
    # λ.0 (λ.1 0 (λ.2 1 0)) and λ.λ.1 0 (S (S 'W')) as plain de Bruijn terms
    "term1Term": (
        "Lam[App[Var[Zero],"
        " Lam[App[App[Var[Succ[Zero]], Var[Zero]],"
        " Lam[App[App[Var[Succ[Succ[Zero]]], Var[Succ[Zero]]], Var[Zero]]]]]]]"
    ),
    "term2Term": "Lam[Lam[App[App[Var[Succ[Zero]], Var[Zero]], Var[Succ[Succ['W']]]]]]",
    "term1": TERM1,
    "term2": (
        f"AppE[{TERM1},"
        f" LamE[AppE[AppE[VarE[Succ[{TERM1}]], VarE[Zero]],"
        f" LamE[AppE[AppE[VarE[Succ[VarE[Succ[{TERM1}]]]], VarE[Succ[VarE[Zero]]]], VarE[Zero]]]]]]"
    ),
    # (λ.0 (λ.1 0 (λ.2 1 0))) term1
    "redex0": (
        "AppE[LamE[AppE[VarE[Zero],"
        " LamE[AppE[AppE[VarE[Succ[VarE[Zero]]], VarE[Zero]],"
        " LamE[AppE[AppE[VarE[Succ[VarE[Succ[VarE[Zero]]]]], VarE[Succ[VarE[Zero]]]], VarE[Zero]]]]]]],"
        f" {TERM1}]"
    ),
}


def literal(name: str) -> Value:
    try:
        source = LITERAL_SOURCES[name]
    except KeyError:
        msg = f"no literal named {name!r}"
        raise UnknownEntryError(msg) from None
    return parse_value(source)


def literal_names() -> tuple[str, ...]:
    return tuple(LITERAL_SOURCES)
