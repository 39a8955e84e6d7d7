"""
Layout helpers shared by the Agda emitter, golden tests and diagnostics.
"""
from __future__ import annotations

import re

from nestfold.utils.constants import AGDA_INDENT
from nestfold.utils.constants import AGDA_WRAP_WIDTH

ARROW = " -> "
_BLANK_RUN = re.compile(r"\n{3,}")
_SPACE_RUN = re.compile(r"\s+")


def normalize_whitespace(text: str) -> str:
    """
    Blocks separated by blank lines, each collapsed to one line of single spaces.

    Listings wrap long signatures for layout only, so two texts that differ in
    where they break lines normalize to the same string.
    """
    blocks = re.split(r"\n\s*\n", text.replace("\r\n", "\n").strip())
    return "\n".join(_SPACE_RUN.sub(" ", block).strip() for block in blocks if block.strip())


def canonical_text(text: str) -> str:
    """Trailing spaces stripped, at most one blank line in a row, one final newline."""
    lines = [line.rstrip() for line in text.replace("\r\n", "\n").split("\n")]
    joined = _BLANK_RUN.sub("\n\n", "\n".join(lines)).strip("\n")
    return f"{joined}\n" if joined else ""


def wrap_arrows(line: str, indent: str, width: int = AGDA_WRAP_WIDTH) -> str:
    """Break an over-long arrow chain after its arrows, continuing one step deeper."""
    if len(line) <= width or ARROW not in line:
        return line
    continuation = indent + AGDA_INDENT * 2
    pieces = line.split(ARROW)
    lines = [pieces[0]]
    for piece in pieces[1:]:
        if len(lines[-1]) + len(ARROW) + len(piece) > width:
            lines[-1] += " ->"
            lines.append(continuation + piece)
        else:
            lines[-1] += ARROW + piece
    return "\n".join(lines)


def clause(lhs: str, rhs: str, width: int = AGDA_WRAP_WIDTH) -> str:
    line = f"{lhs} = {rhs}"
    if len(line) <= width:
        return line
    return f"{lhs} =\n{AGDA_INDENT}{rhs}"


def signature(name: str, head: list[str], arguments: list[str], tail: str, sep: str = ":") -> str:
    """
    `name : head -> ... ->` on the first line, then one argument per line aligned
    under the first binder, then the tail. sep="=" lays out a type definition.
    """
    pad = " " * (len(name) + len(sep) + 2)
    first = f"{name} {sep} {ARROW.join(head)}"
    if not arguments:
        return wrap_arrows(f"{first}{ARROW}{tail}", pad)
    lines = [f"{first} ->"]
    lines.extend(wrap_arrows(f"{pad}{arg} ->", pad) for arg in arguments)
    lines.append(wrap_arrows(f"{pad}{tail}", pad))
    return "\n".join(lines)


def flat_signature(name: str, parts: list[str]) -> str:
    return wrap_arrows(f"{name} : {ARROW.join(parts)}", " " * (len(name) + 3))


def parens(text: str) -> str:
    return f"({text})" if " " in text else text
