"""
General-recursive reference implementations, used only as oracles.

These recurse the way the textbook definitions do (hmapB calls itself under a map)
and are not structurally terminating in general; inputs are always finite enumerated
values.
"""
from __future__ import annotations

from collections.abc import Callable
from typing import Any

from nestfold.interp.values import Con
from nestfold.interp.values import Ground
from nestfold.interp.values import Value
from nestfold.interp.values import as_int
from nestfold.interp.values import con
from nestfold.interp.values import ground_leaves
from nestfold.interp.values import nat
from nestfold.utils.enums import GroundSort

type Step = Callable[[Any, Any], Any]


def flatten_bush(v: Value) -> list[Ground]:
    """Entries of a bush in left-to-right order."""
    return list(ground_leaves(v))


def reference_sum(v: Value) -> Value:
    return nat(sum(as_int(g) for g in ground_leaves(v) if g.sort == GroundSort.NAT))


def spine_length(v: Value) -> Value:
    count = 0
    while isinstance(v, Con) and v.tag == "ConsB":
        count += 1
        v = v.children[1]
    return nat(count)


def reference_hmap_bush(f: Callable[[Any], Any], v: Any) -> Any:
    """hmapB f NilB = NilB; hmapB f (ConsB x xs) = ConsB (f x) (hmapB (hmapB f) xs)."""
    if v.tag == "NilB":
        return v
    x, xs = v.children
    return con("ConsB", f(x), reference_hmap_bush(lambda y: reference_hmap_bush(f, y), xs))


def reference_hfold_bush(base: Any, step: Step, v: Any) -> Any:
    """hfoldB base step (ConsB x xs) = step x (hfoldB base step (hmapB (hfoldB base step) xs))."""
    if v.tag == "NilB":
        return base
    x, xs = v.children
    folded = reference_hmap_bush(lambda y: reference_hfold_bush(base, step, y), xs)
    return step(x, reference_hfold_bush(base, step, folded))


def map_list_ref(f: Callable[[Value], Value], v: Value) -> Value:
    if not isinstance(v, Con) or v.tag == "Nil":
        return v
    x, xs = v.children
    return con("Cons", f(x), map_list_ref(f, xs))


def deep_equal(u: Value, v: Value) -> bool:
    """Structural comparison that never relies on dataclass equality."""
    stack = [(u, v)]
    while stack:
        a, b = stack.pop()
        if isinstance(a, Ground) or isinstance(b, Ground):
            if not (isinstance(a, Ground) and isinstance(b, Ground)):
                return False
            if a.sort != b.sort or a.constant != b.constant:
                return False
            continue
        if a.tag != b.tag or len(a.children) != len(b.children):
            return False
        stack.extend(zip(a.children, b.children, strict=True))
    return True


def reference_map_incr(level: int, f: Callable[[Value], Value], v: Value) -> Value:
    """f at depth level when v reaches it through Succ; a Zero met earlier closes v."""
    if level == 0:
        return f(v)
    if isinstance(v, Con) and v.tag == "Succ":
        return con("Succ", reference_map_incr(level - 1, f, v.children[0]))
    return v
