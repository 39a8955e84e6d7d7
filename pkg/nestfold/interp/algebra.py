"""
Algebras: the runtime meaning of a fold's case arguments.
"""
from __future__ import annotations

from collections.abc import Callable
from collections.abc import Iterable
from collections.abc import Mapping
from dataclasses import dataclass
from dataclasses import field
from typing import TYPE_CHECKING
from typing import Any

from nestfold.interp.values import Value
from nestfold.utils.exceptions import AlgebraError
from nestfold.utils.exceptions import MissingCaseError

if TYPE_CHECKING:
    from nestfold.derive.artifacts import CaseSpec
    from nestfold.derive.artifacts import FoldSpec
    from nestfold.derive.artifacts import IndexExpr


@dataclass(frozen=True, slots=True)
class Replace:
    """Rebuild the matched constructor under a new tag; a parameter leaf gets wrapped."""

    tag: str


@dataclass(frozen=True, slots=True)
class Const:
    value: Value


@dataclass(frozen=True, slots=True)
class Native:
    key: str


type AlgebraTarget = Replace | Const | Native


@dataclass(frozen=True, slots=True)
class CaseContext:
    """What a native receives: index instantiation, raw children and recursive results."""

    case: CaseSpec
    index: IndexExpr
    bindings: Mapping[str, IndexExpr]
    subject: Any
    args: tuple[Any, ...]
    recursive: tuple[bool, ...]

    @property
    def raw(self) -> tuple[Any, ...]:
        return tuple(a for a, rec in zip(self.args, self.recursive, strict=True) if not rec)

    @property
    def results(self) -> tuple[Any, ...]:
        return tuple(a for a, rec in zip(self.args, self.recursive, strict=True) if rec)


type NativeFn = Callable[[CaseContext], Any]


@dataclass(frozen=True)
class Algebra:
    cases: Mapping[str, AlgebraTarget] = field(default_factory=dict)

    @classmethod
    def of(cls, pairs: Iterable[tuple[str, AlgebraTarget]]) -> Algebra:
        return cls(dict(pairs))

    def target(self, case_name: str) -> AlgebraTarget:
        try:
            return self.cases[case_name]
        except KeyError:
            msg = f"algebra has no target for case {case_name!r}"
            raise MissingCaseError(msg) from None

    def ensure_covers(self, spec: FoldSpec) -> None:
        names = [c.name for c in spec.cases]
        missing = [n for n in names if n not in self.cases]
        if missing:
            msg = f"algebra for {spec.name} misses case(s) {', '.join(missing)}"
            raise MissingCaseError(msg)
        extra = [n for n in self.cases if n not in names]
        if extra:
            msg = f"algebra for {spec.name} names unknown case(s) {', '.join(extra)}"
            raise AlgebraError(msg)
