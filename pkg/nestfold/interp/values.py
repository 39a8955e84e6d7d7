"""
Finite constructor trees with ground leaves.
"""
from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from nestfold.utils.enums import GroundSort


@dataclass(frozen=True, slots=True)
class Ground:
    constant: int | str
    sort: GroundSort = GroundSort.NAT


@dataclass(frozen=True, slots=True)
class Con:
    tag: str
    children: tuple[Value, ...] = ()


type Value = Con | Ground


def nat(n: int) -> Ground:
    return Ground(n, GroundSort.NAT)


def char(c: str) -> Ground:
    return Ground(c, GroundSort.CHAR)


def text(s: str) -> Ground:
    return Ground(s, GroundSort.TEXT)


def con(tag: str, *children: Value) -> Con:
    return Con(tag, children)


def as_int(v: object) -> int:
    """Unwrap a natural; plain ints pass through."""
    if isinstance(v, Ground) and v.sort == GroundSort.NAT:
        return int(v.constant)
    if isinstance(v, int):
        return v
    msg = f"expected a natural, got {v!r}"
    raise TypeError(msg)


def value_size(v: Value) -> int:
    """Node count: a ground leaf counts 1, a constructor 1 plus its children."""
    if isinstance(v, Ground):
        return 1
    return 1 + sum(value_size(c) for c in v.children)


def value_eq(u: Value, v: Value) -> bool:
    return u == v


def value_key(v: Value) -> tuple:
    """Total order used by enumeration: grounds before constructors, then by tag and children."""
    if isinstance(v, Ground):
        return (0, v.sort.value, v.constant)
    return (1, v.tag, tuple(value_key(c) for c in v.children))


def subvalues(v: Value) -> Iterator[Value]:
    """Proper descendants of v, preorder."""
    stack = list(reversed(v.children)) if isinstance(v, Con) else []
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, Con):
            stack.extend(reversed(node.children))


def ground_leaves(v: Value) -> Iterator[Ground]:
    if isinstance(v, Ground):
        yield v
        return
    for node in subvalues(v):
        if isinstance(node, Ground):
            yield node
