"""
Convenience entry points combining parsing and kind checking.
"""
from __future__ import annotations

from pathlib import Path

from nestfold.core.declarations import Program
from nestfold.core.services.kinds import kind_check
from nestfold.core.services.parser import parse_program
from nestfold.utils.exceptions import DeclarationSyntaxError


def load_program(text: str) -> Program:
    return kind_check(parse_program(text))


def load_program_file(path: str | Path) -> Program:
    """Read, parse and kind-check a declaration file; the file must be UTF-8."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        msg = f"{path} is not valid UTF-8 (byte {exc.start})"
        raise DeclarationSyntaxError(msg) from exc
    return load_program(text)
