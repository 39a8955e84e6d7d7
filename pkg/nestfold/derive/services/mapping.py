"""
Generic maps as fold algebras: constructors unchanged, carrier functions at the leaves.
"""
from __future__ import annotations

from nestfold.core.declarations import App
from nestfold.core.declarations import Arrow
from nestfold.core.declarations import TypeExpr
from nestfold.core.declarations import Var
from nestfold.derive.artifacts import FoldSpec
from nestfold.derive.artifacts import ParamLeaf
from nestfold.derive.artifacts import PCon
from nestfold.derive.artifacts import Raw
from nestfold.derive.artifacts import RawIndexed
from nestfold.interp.algebra import Algebra
from nestfold.interp.algebra import AlgebraTarget
from nestfold.interp.algebra import Native
from nestfold.interp.algebra import Replace
from nestfold.utils.exceptions import DerivationError

LEAF_PREFIX = "leaf:"
REBUILD_PREFIX = "map:"


def leaf_key(param: str) -> str:
    return f"{LEAF_PREFIX}{param}"


def rebuild_key(case: str) -> str:
    return f"{REBUILD_PREFIX}{case}"


def _type_variables(t: TypeExpr) -> set[str]:
    match t:
        case Var(name):
            return {name}
        case App(_, args):
            return set().union(*(_type_variables(a) for a in args))
        case Arrow(domain, codomain):
            return _type_variables(domain) | _type_variables(codomain)
    return set()


def derive_map_spec(fold: FoldSpec) -> Algebra:
    """
    Leaf cases call the carrier function registered under leaf:<param>; constructor
    cases with raw carrier children are rebuilt by map:<case>; every other case
    replaces itself.
    """
    targets: list[tuple[str, AlgebraTarget]] = []
    for case in fold.cases:
        if isinstance(case.shape, ParamLeaf):
            targets.append((case.name, Native(leaf_key(case.shape.param))))
            continue
        touches_carrier = False
        for arg in case.args:
            if isinstance(arg, RawIndexed) or (isinstance(arg, Raw) and isinstance(arg.type, Var)):
                touches_carrier = True
            elif isinstance(arg, Raw) and set(fold.params) & _type_variables(arg.type):
                msg = f"{fold.name}.{case.name}: cannot map through a raw argument that mentions a parameter"
                raise DerivationError(msg)
        if touches_carrier:
            targets.append((case.name, Native(rebuild_key(case.name))))
        else:
            targets.append((case.name, Replace(case.shape.tag)))
    return Algebra.of(targets)


def map_constructors(fold: FoldSpec) -> tuple[str, ...]:
    """Outer constructor tags the map rebuilds, in case order."""
    tags = [case.shape.tag for case in fold.cases if isinstance(case.shape, PCon)]
    return tuple(dict.fromkeys(tags))
