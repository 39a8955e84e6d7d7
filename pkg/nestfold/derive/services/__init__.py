from nestfold.derive.services.church import derive_church
from nestfold.derive.services.fold import derive_fold_spec
from nestfold.derive.services.fold import derive_regular_fold_spec
from nestfold.derive.services.hofold import derive_hofold
from nestfold.derive.services.hofold import derive_hp
from nestfold.derive.services.index import derive_index_type
from nestfold.derive.services.index import derive_interpretation
from nestfold.derive.services.index import interpret_index
from nestfold.derive.services.index import type_to_index
from nestfold.derive.services.indexed import derive_conversions
from nestfold.derive.services.indexed import derive_indexed_rep
from nestfold.derive.services.indexed import indexed_rep_of
from nestfold.derive.services.induction import derive_induction_spec
from nestfold.derive.services.mapping import derive_map_spec
from nestfold.derive.services.naming import Naming
from nestfold.derive.services.pipeline import derive_artifacts
from nestfold.derive.services.properness import ProperReport
from nestfold.derive.services.properness import coincides_with_direct
from nestfold.derive.services.properness import properness_report
from nestfold.derive.services.serialization import dump_artifacts
from nestfold.derive.services.serialization import load_artifacts

__all__ = [
    "Naming",
    "ProperReport",
    "coincides_with_direct",
    "derive_artifacts",
    "derive_church",
    "derive_conversions",
    "derive_fold_spec",
    "derive_hofold",
    "derive_hp",
    "derive_index_type",
    "derive_indexed_rep",
    "derive_induction_spec",
    "derive_interpretation",
    "derive_map_spec",
    "derive_regular_fold_spec",
    "dump_artifacts",
    "indexed_rep_of",
    "interpret_index",
    "load_artifacts",
    "properness_report",
    "type_to_index",
]
