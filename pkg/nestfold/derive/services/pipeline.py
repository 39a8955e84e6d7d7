"""
The full derivation pipeline for one root type.
"""
from __future__ import annotations

import logging
from collections.abc import Mapping

from nestfold.core.declarations import Program
from nestfold.core.services.closure import reachability_closure
from nestfold.derive.artifacts import DerivedArtifacts
from nestfold.derive.services.church import derive_church
from nestfold.derive.services.fold import derive_fold_spec
from nestfold.derive.services.hofold import derive_hofold
from nestfold.derive.services.indexed import indexed_rep_of
from nestfold.derive.services.induction import derive_induction_spec

logger = logging.getLogger(__name__)


def derive_artifacts(
    program: Program,
    root: str,
    case_names: Mapping[str, str] | None = None,
) -> DerivedArtifacts:
    fold = derive_fold_spec(program, root, case_names)
    artifacts = DerivedArtifacts(
        root=root,
        program=program.restricted(reachability_closure(program, root)),
        index_type=fold.index_type,
        interpretation=fold.family,  # type: ignore[arg-type]
        fold_spec=fold,
        induction_spec=derive_induction_spec(fold),
        hofold=derive_hofold(fold),
        indexed_rep=indexed_rep_of(fold),
        church=derive_church(fold),
    )
    logger.info("Derived artifacts for %s: %d fold cases", root, len(fold.cases))
    return artifacts
