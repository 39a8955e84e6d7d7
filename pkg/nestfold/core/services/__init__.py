from nestfold.core.services.closure import ConstructorNestedness
from nestfold.core.services.closure import nestedness_report
from nestfold.core.services.closure import reachability_closure
from nestfold.core.services.kinds import kind_check
from nestfold.core.services.loader import load_program
from nestfold.core.services.loader import load_program_file
from nestfold.core.services.parser import parse_program
from nestfold.core.services.printer import render_constructor
from nestfold.core.services.printer import render_decl
from nestfold.core.services.printer import render_program
from nestfold.core.services.printer import render_type

__all__ = [
    "ConstructorNestedness",
    "kind_check",
    "load_program",
    "load_program_file",
    "nestedness_report",
    "parse_program",
    "reachability_closure",
    "render_constructor",
    "render_decl",
    "render_program",
    "render_type",
]
