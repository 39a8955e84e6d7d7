"""
How index types and families are spelled in emitted Agda.

A naturals-shaped index type prints as Nat with Z and S and variables n, m; a
one-point index type is elided; any other index type prints as derived.
"""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from dataclasses import field

from nestfold.derive.artifacts import FoldSpec
from nestfold.derive.artifacts import IndexCon
from nestfold.derive.artifacts import IndexedRepDecl
from nestfold.derive.artifacts import IndexExpr
from nestfold.derive.artifacts import IndexTypeDecl
from nestfold.derive.artifacts import IndexVar
from nestfold.derive.artifacts import InterpretationFn
from nestfold.derive.services.naming import Naming
from nestfold.utils.constants import INDEX_VARIABLE_NAMES
from nestfold.utils.constants import MOTIVE
from nestfold.utils.constants import NAT_INDEX_VARIABLE_NAMES

NAT = "Nat"


@dataclass(frozen=True)
class AgdaView:
    name: str
    ctor_names: Mapping[str, str] = field(default_factory=dict)
    var_names: Mapping[str, str] = field(default_factory=dict)
    nat: bool = False
    regular: bool = False

    @classmethod
    def of(cls, index_type: IndexTypeDecl) -> AgdaView:
        if index_type.is_unit_shaped:
            return cls(index_type.name, regular=True)
        if index_type.is_nat_shaped:
            ctors = {index_type.var_ctors[0].name: "Z", index_type.con_ctors[0].name: "S"}
            variables = dict(zip(INDEX_VARIABLE_NAMES, NAT_INDEX_VARIABLE_NAMES, strict=False))
            return cls(NAT, ctors, variables, nat=True)
        return cls(index_type.name)

    def ctor(self, name: str) -> str:
        return self.ctor_names.get(name, name)

    def var(self, name: str) -> str:
        return self.var_names.get(name, name)

    def first_var(self) -> str:
        return self.var(Naming.index_variables(1)[0])

    def index(self, i: IndexExpr, *, atomic: bool = False) -> str:
        match i:
            case IndexVar(name):
                return self.var(name)
            case IndexCon(name, ()):
                return self.ctor(name)
            case IndexCon(name, args):
                text = " ".join([self.ctor(name), *(self.index(a, atomic=True) for a in args)])
                return f"({text})" if atomic else text
        raise TypeError(i)

    def binder(self, names: tuple[str, ...], *, implicit: bool = False) -> str:
        inner = f"{' '.join(self.var(n) for n in names)} : {self.name}"
        return f"{{{inner}}}" if implicit else f"({inner})"

    def motive_at(self, i: IndexExpr, *extra: str) -> str:
        """The motive applied to an index (dropped in the regular view) and any further arguments."""
        parts = [MOTIVE] if self.regular else [MOTIVE, self.index(i, atomic=True)]
        return " ".join([*parts, *extra])

    def motive_kind(self, subject_type: str | None = None) -> str:
        """Kind of a fold motive, or of an induction motive over subject_type."""
        if subject_type is None:
            return "Set" if self.regular else f"{self.name} -> Set"
        if self.regular:
            return f"{subject_type} -> Set"
        return f"({self.first_var()} : {self.name}) -> {subject_type} -> Set"


def family_name(family: InterpretationFn | IndexedRepDecl, root: str, view: AgdaView) -> str:
    if isinstance(family, IndexedRepDecl):
        return family.name
    if view.regular:
        return root
    if view.nat:
        return Naming.nat_family(root)
    return family.name


def family_type(
    family: InterpretationFn | IndexedRepDecl,
    root: str,
    i: IndexExpr,
    params: tuple[str, ...] | None = None,
) -> str:
    """The family at index i, applied to params (its own parameters by default)."""
    view = AgdaView.of(family.index_type)
    params = family.params if params is None else params
    parts = [family_name(family, root, view)]
    if not view.regular:
        parts.append(view.index(i, atomic=True))
    parts.extend(params)
    return " ".join(parts)


def fold_family_type(fold: FoldSpec, i: IndexExpr, params: tuple[str, ...] | None = None) -> str:
    return family_type(fold.family, fold.root, i, params)


def implicit_sets(params: tuple[str, ...]) -> str:
    return f"{{{' '.join(params)} : Set}}"


def set_kind(arity: int) -> str:
    return " -> ".join(["Set"] * (arity + 1))
