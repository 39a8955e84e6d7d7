"""
Indexed representations: a nested family desugared to an index-parameterized type.
"""
from __future__ import annotations

from nestfold.core.declarations import Program
from nestfold.derive.artifacts import Conversions
from nestfold.derive.artifacts import FoldSpec
from nestfold.derive.artifacts import IndexedConstructor
from nestfold.derive.artifacts import IndexedRepDecl
from nestfold.derive.artifacts import InterpretationFn
from nestfold.derive.artifacts import ParamLeaf
from nestfold.derive.artifacts import PHole
from nestfold.derive.services.fold import derive_fold_spec
from nestfold.derive.services.naming import Naming
from nestfold.derive.services.naming import unique
from nestfold.interp.algebra import Algebra
from nestfold.interp.algebra import Native
from nestfold.interp.algebra import Replace
from nestfold.utils.exceptions import DerivationError


def indexed_rep_of(fold: FoldSpec) -> IndexedRepDecl:
    """One constructor per fold case, typed by the case's subject and argument indexes."""
    if not isinstance(fold.family, InterpretationFn):
        msg = f"{fold.name} already folds an indexed representation"
        raise DerivationError(msg)
    raw_names: list[str] = []
    for case in fold.cases:
        if isinstance(case.shape, ParamLeaf):
            raw_names.append(Naming.base_ctor(case.shape.param, fold.params))
        elif all(isinstance(child, PHole) for child in case.shape.children):
            raw_names.append(Naming.indexed_ctor(case.shape.tag))
        else:
            msg = f"{fold.name}.{case.name} matches a nested pattern; indexed constructors need flat cases"
            raise DerivationError(msg)
    constructors = tuple(
        IndexedConstructor(name, case.name, case.tag, case.subject_index, case.args)
        for name, case in zip(unique(raw_names), fold.cases, strict=True)
    )
    name = Naming.indexed_rep(fold.root)
    return IndexedRepDecl(
        name=name,
        fold_name=f"{fold.name}N",
        index_type=fold.index_type,
        params=fold.params,
        constructors=constructors,
        program=fold.family.program,
        source=fold,
    )


def derive_indexed_rep(program: Program, root: str) -> IndexedRepDecl:
    return indexed_rep_of(derive_fold_spec(program, root))


def derive_conversions(rep: IndexedRepDecl) -> Conversions:
    """`to` folds the nested family into the twins; `from` folds the twins back."""
    if rep.source is None:
        msg = f"{rep.name} does not record the fold it was built from"
        raise DerivationError(msg)
    to_algebra = Algebra.of((c.case, Replace(c.name)) for c in rep.constructors)
    from_algebra = Algebra.of(
        (c.case, Native("id") if c.source is None else Replace(c.source)) for c in rep.constructors
    )
    return Conversions(rep.source, to_algebra, rep.fold_spec, from_algebra)
