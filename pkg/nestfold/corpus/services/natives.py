"""
Native leaf functions and the small ground helpers corpus programs are built from.
"""
from __future__ import annotations

from collections.abc import Callable
from typing import Any

from nestfold.interp.values import Con
from nestfold.interp.values import Ground
from nestfold.interp.values import Value
from nestfold.interp.values import as_int
from nestfold.interp.values import char
from nestfold.interp.values import con
from nestfold.interp.values import nat
from nestfold.interp.values import text
from nestfold.interp.values import value_eq
from nestfold.utils.enums import GroundSort
from nestfold.utils.exceptions import UnknownEntryError

type LeafFn = Callable[[Value], Value]

TRUE = con("True")
FALSE = con("False")


def cmp(x: Value, y: Value) -> Con:
    """Decidable equality on values, as a Bool."""
    return TRUE if value_eq(x, y) else FALSE


def fold_bool(on_true: Any, on_false: Any, b: Value) -> Any:
    if b == TRUE:
        return on_true
    if b == FALSE:
        return on_false
    msg = f"expected a Bool, got {b!r}"
    raise TypeError(msg)


def succ_nat(v: Value) -> Value:
    return nat(as_int(v) + 1)


def half(v: Value) -> Value:
    return nat(as_int(v) // 2)


def wrap_succ(v: Value) -> Value:
    """The Incr constructor Succ, as a function."""
    return con("Succ", v)


def singleton(v: Value) -> Value:
    """A character as a one-letter text; text is kept."""
    if isinstance(v, Ground) and v.sort in (GroundSort.CHAR, GroundSort.TEXT):
        return text(str(v.constant))
    msg = f"expected a character, got {v!r}"
    raise TypeError(msg)


def next_char(v: Value) -> Value:
    if not isinstance(v, Ground) or v.sort != GroundSort.CHAR:
        msg = f"expected a character, got {v!r}"
        raise TypeError(msg)
    return char(chr(ord(str(v.constant)) + 1))


def collapse_char(v: Value) -> Value:
    """Non-injective: W and c go to W, everything else to x."""
    if not isinstance(v, Ground) or v.sort != GroundSort.CHAR:
        msg = f"expected a character, got {v!r}"
        raise TypeError(msg)
    return char("W") if v.constant in ("W", "c") else char("x")


LEAF_FUNCTIONS: dict[str, LeafFn] = {
    "id": lambda v: v,
    "const0": lambda v: nat(0),
    "succ": succ_nat,
    "half": half,
    "Succ": wrap_succ,
    "singleton": singleton,
    "next_char": next_char,
    "const_c": lambda v: char("c"),
    "collapse": collapse_char,
}

# Finite families standing in for "every function" in the map laws.
NAT_FAMILY = ("id", "const0", "succ", "half")
CHAR_FAMILY = ("id", "next_char", "const_c", "collapse")


def leaf_function(name: str) -> LeafFn:
    try:
        return LEAF_FUNCTIONS[name]
    except KeyError:
        msg = f"no native function named {name!r}; known: {', '.join(LEAF_FUNCTIONS)}"
        raise UnknownEntryError(msg) from None


def family_for(sort: GroundSort) -> tuple[str, ...]:
    return NAT_FAMILY if sort == GroundSort.NAT else CHAR_FAMILY
