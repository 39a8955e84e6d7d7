"""
Properness of folds and their comparison with the direct construction.
"""
from __future__ import annotations

from dataclasses import dataclass

from nestfold.derive.artifacts import FoldSpec
from nestfold.derive.artifacts import IndexExpr
from nestfold.derive.artifacts import InterpretationFn
from nestfold.derive.artifacts import ParamLeaf
from nestfold.derive.artifacts import Raw
from nestfold.derive.artifacts import RawIndexed
from nestfold.derive.artifacts import Recursive
from nestfold.derive.artifacts import index_variables
from nestfold.derive.artifacts import rename_index
from nestfold.derive.services.hofold import mentions_root


@dataclass(frozen=True, slots=True)
class ProperReport:
    fold: str
    proper: bool
    root_cases: tuple[str, ...]
    reasons: tuple[str, ...] = ()


def properness_report(fold: FoldSpec) -> ProperReport:
    """Whether fold can be specialised to the higher-order fold of its root."""
    reasons: list[str] = []
    h = fold.family
    if not isinstance(h, InterpretationFn):
        return ProperReport(fold.name, False, (), ("indexed representations have no higher-order fold",))
    if not mentions_root(h, fold.root):
        reasons.append(f"{h.name} never produces {fold.root}")
    root_ctors = {c.name for c in h.program.decl(fold.root).constructors} if fold.root in h.program else set()
    root_cases = []
    covered = set()
    for case in fold.cases:
        if isinstance(case.shape, ParamLeaf):
            continue
        tag = case.shape.tag
        if tag in root_ctors:
            root_cases.append(case.name)
            covered.add(tag)
        elif not h.program.has_constructor(tag):
            reasons.append(f"case {case.name} matches {tag}, which no declaration of the family introduces")
    missing = sorted(root_ctors - covered)
    if missing:
        reasons.append(f"no case matches {', '.join(missing)}")
    return ProperReport(fold.name, not reasons, tuple(root_cases), tuple(reasons))


def _arg_signature(arg: object, ctor_names: dict[str, str], var_names: dict[str, str]) -> tuple:
    if isinstance(arg, Recursive):
        return ("rec", _canonical(arg.index, ctor_names, var_names))
    if isinstance(arg, RawIndexed):
        return ("raw-indexed", _canonical(arg.index, ctor_names, var_names))
    if isinstance(arg, Raw):
        return ("raw",)
    return ("?",)


def _canonical(i: IndexExpr, ctor_names: dict[str, str], var_names: dict[str, str]) -> IndexExpr:
    for name in index_variables(i):
        var_names.setdefault(name, f"v{len(var_names)}")
    return rename_index(i, ctor_names, var_names)


def coincides_with_direct(custom: FoldSpec, direct: FoldSpec) -> bool:
    """
    Structural equality up to a positional renaming of index constructors and a
    first-occurrence renaming of index variables in each case.
    """
    left, right = custom.index_type.constructors, direct.index_type.constructors
    if [c.arity for c in left] != [c.arity for c in right] or len(custom.cases) != len(direct.cases):
        return False
    to_direct = {a.name: b.name for a, b in zip(left, right, strict=True)}
    identity = {b.name: b.name for b in right}
    for mine, theirs in zip(custom.cases, direct.cases, strict=True):
        if isinstance(mine.shape, ParamLeaf) != isinstance(theirs.shape, ParamLeaf):
            return False
        if mine.tag != theirs.tag or len(mine.args) != len(theirs.args):
            return False
        mine_vars: dict[str, str] = {}
        theirs_vars: dict[str, str] = {}
        if _canonical(mine.subject_index, to_direct, mine_vars) != _canonical(
            theirs.subject_index, identity, theirs_vars
        ):
            return False
        mine_sig = [_arg_signature(a, to_direct, mine_vars) for a in mine.args]
        theirs_sig = [_arg_signature(a, identity, theirs_vars) for a in theirs.args]
        if mine_sig != theirs_sig:
            return False
    return True
