"""
Church encodings of the abstract indexed family a fold describes.
"""
from __future__ import annotations

from nestfold.derive.artifacts import ChurchConstructor
from nestfold.derive.artifacts import ChurchEncodingDecl
from nestfold.derive.artifacts import FoldSpec
from nestfold.derive.artifacts import Recursive
from nestfold.derive.services.induction import case_binders
from nestfold.derive.services.naming import Naming


def derive_church(fold: FoldSpec) -> ChurchEncodingDecl:
    """Emission only: the encoded type is the type of the fold with the subject removed."""
    constructors = tuple(
        ChurchConstructor(
            name=Naming.church_ctor(case.name),
            case=case.name,
            holes=case_binders(case),
            recursive=tuple(isinstance(arg, Recursive) for arg in case.args),
        )
        for case in fold.cases
    )
    return ChurchEncodingDecl(
        name=Naming.church(fold.root),
        fold=fold,
        constructors=constructors,
        cfold_name=Naming.church_fold(fold.root),
        cmap_name=Naming.church_map(fold.root),
    )
