"""
Exhaustive enumeration of the values inhabiting a family at a closed index.

Values come out size-ascending, and within one size in `value_key` order, so the
first failing value a property check meets is also a smallest one.
"""
from __future__ import annotations

import logging
from collections.abc import Iterator
from itertools import product

from nestfold.core.declarations import App
from nestfold.core.declarations import Program
from nestfold.core.declarations import TypeExpr
from nestfold.core.declarations import Var
from nestfold.derive.artifacts import IndexedRepDecl
from nestfold.derive.artifacts import IndexExpr
from nestfold.derive.artifacts import InterpretationFn
from nestfold.derive.artifacts import Raw
from nestfold.derive.artifacts import RawIndexed
from nestfold.derive.artifacts import Recursive
from nestfold.derive.artifacts import match_index
from nestfold.derive.artifacts import substitute_index
from nestfold.interp.carriers import Carriers
from nestfold.interp.services.typing import At
from nestfold.interp.services.typing import family_type
from nestfold.interp.services.typing import unfold
from nestfold.interp.values import Con
from nestfold.interp.values import Value
from nestfold.interp.values import value_key
from nestfold.utils.exceptions import ValueTypeError

logger = logging.getLogger(__name__)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered ways to write total as a sum of `parts` positive integers."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first, *rest)


class FamilyEnumerator:
    """Memoized exact-size enumeration over lazily unfolded types."""

    def __init__(self, h: InterpretationFn, carriers: Carriers, program: Program | None = None):
        self.h = h
        self.carriers = carriers
        self.program = program or h.program
        self._cache: dict[tuple[object, int], tuple[Value, ...]] = {}

    def exact(self, t: TypeExpr, size: int) -> tuple[Value, ...]:
        while isinstance(t, At):
            t = unfold(self.h, t)
        key = (t, size)
        if key not in self._cache:
            self._cache[key] = self._build(t, size)
        return self._cache[key]

    def _build(self, t: TypeExpr, size: int) -> tuple[Value, ...]:
        if size < 1:
            return ()
        if isinstance(t, Var):
            return self.carriers.values(t.name) if size == 1 else ()
        if not isinstance(t, App):
            msg = f"cannot enumerate {t!r}"
            raise ValueTypeError(msg)
        decl = self.program.decl(t.con)
        found: list[Value] = []
        for ctor in decl.constructors:
            child_types = decl.instantiate(ctor, t.args)
            for sizes in compositions(size - 1, len(child_types)):
                pools = [self.exact(ct, s) for ct, s in zip(child_types, sizes, strict=True)]
                found.extend(Con(ctor.name, children) for children in product(*pools))
        return tuple(sorted(found, key=value_key))

    def values(self, t: TypeExpr, bound: int) -> Iterator[Value]:
        for size in range(1, bound + 1):
            yield from self.exact(t, size)


def enumerate_values(
    h: InterpretationFn,
    i: IndexExpr,
    carriers: Carriers,
    bound: int,
    program: Program | None = None,
) -> Iterator[Value]:
    """Every value of size at most bound that inhabits h at i, each exactly once."""
    return FamilyEnumerator(h, carriers, program).values(family_type(h, i), bound)


def count_values(h: InterpretationFn, i: IndexExpr, carriers: Carriers, bound: int) -> int:
    return sum(1 for _ in enumerate_values(h, i, carriers, bound))


class IndexedEnumerator:
    """Enumeration for indexed representations, where constructors pick their own index."""

    def __init__(self, rep: IndexedRepDecl, carriers: Carriers):
        self.rep = rep
        self.carriers = carriers
        self._cache: dict[tuple[IndexExpr, int], tuple[Value, ...]] = {}
        self._families: dict[str, FamilyEnumerator] = {}

    def exact(self, i: IndexExpr, size: int) -> tuple[Value, ...]:
        key = (i, size)
        if key not in self._cache:
            self._cache[key] = self._build(i, size)
        return self._cache[key]

    def _pool(self, arg: object, binding: dict[str, IndexExpr], size: int) -> tuple[Value, ...]:
        match arg:
            case Recursive(idx):
                return self.exact(substitute_index(idx, binding), size)
            case Raw(Var(param)):
                return self.carriers.values(param) if size == 1 else ()
            case RawIndexed(idx, fold) if isinstance(fold.family, InterpretationFn):
                family = self._families.setdefault(fold.name, FamilyEnumerator(fold.family, self.carriers))
                return family.exact(family_type(fold.family, substitute_index(idx, binding)), size)
        msg = f"{self.rep.name}: cannot enumerate argument {arg!r}"
        raise ValueTypeError(msg)

    def _build(self, i: IndexExpr, size: int) -> tuple[Value, ...]:
        found: list[Value] = []
        for ctor in self.rep.constructors:
            binding = match_index(ctor.subject_index, i)
            if binding is None:
                continue
            for sizes in compositions(size - 1, len(ctor.args)):
                pools = [self._pool(a, binding, s) for a, s in zip(ctor.args, sizes, strict=True)]
                found.extend(Con(ctor.name, children) for children in product(*pools))
        return tuple(sorted(found, key=value_key))

    def values(self, i: IndexExpr, bound: int) -> Iterator[Value]:
        for size in range(1, bound + 1):
            yield from self.exact(i, size)


def enumerate_indexed_values(rep: IndexedRepDecl, i: IndexExpr, carriers: Carriers, bound: int) -> Iterator[Value]:
    return IndexedEnumerator(rep, carriers).values(i, bound)
