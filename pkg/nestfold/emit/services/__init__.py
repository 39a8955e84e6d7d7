from nestfold.emit.services.agda import emit_agda
from nestfold.emit.services.agda import format_canonical
from nestfold.emit.services.formatter import normalize_whitespace
from nestfold.emit.services.writer import emit_json
from nestfold.emit.services.writer import emit_text
from nestfold.emit.services.writer import write_outputs

__all__ = [
    "emit_agda",
    "emit_json",
    "emit_text",
    "format_canonical",
    "normalize_whitespace",
    "write_outputs",
]
