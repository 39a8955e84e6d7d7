"""
Naming conventions for derived artifacts.
"""
from __future__ import annotations

from collections.abc import Iterable

from nestfold.utils.constants import INDEX_TYPE_PREFIX
from nestfold.utils.constants import INDEX_VARIABLE_NAMES
from nestfold.utils.constants import IS_CTOR_PREFIX
from nestfold.utils.constants import SINGLE_LEAF_CASE
from nestfold.utils.constants import VAR_CTOR_PREFIX


class Naming:
    """Derives every generated name from the root type and its constructors."""

    @classmethod
    def suffix(cls, root: str) -> str:
        """Last capital letter of the root: Bush -> B, TermE -> E, D -> D."""
        for ch in reversed(root):
            if ch.isupper():
                return ch
        return root[-1].upper()

    @classmethod
    def fold(cls, root: str) -> str:
        return f"fold{cls.suffix(root)}"

    @classmethod
    def induction(cls, root: str) -> str:
        return f"ind{cls.suffix(root)}"

    @classmethod
    def map(cls, root: str) -> str:
        return f"map{cls.suffix(root)}"

    @classmethod
    def hofold(cls, root: str) -> str:
        return f"hfold{cls.suffix(root)}"

    @classmethod
    def index_type(cls, root: str) -> str:
        return f"{INDEX_TYPE_PREFIX}{root}"

    @classmethod
    def interpretation(cls, root: str) -> str:
        return "H"

    @classmethod
    def hp(cls, interpretation: str) -> str:
        return f"{interpretation}p"

    @classmethod
    def nat_family(cls, root: str) -> str:
        return f"N{root}"

    @classmethod
    def indexed_rep(cls, root: str) -> str:
        return f"{root}N"

    @classmethod
    def church(cls, root: str) -> str:
        return f"CN{root}"

    @classmethod
    def church_fold(cls, root: str) -> str:
        return f"cfold{cls.suffix(root)}"

    @classmethod
    def church_map(cls, root: str) -> str:
        return f"cmap{cls.suffix(root)}"

    @classmethod
    def var_ctor(cls, param: str) -> str:
        return f"{VAR_CTOR_PREFIX}{param[:1].upper()}{param[1:]}"

    @classmethod
    def is_ctor(cls, type_name: str) -> str:
        return f"{IS_CTOR_PREFIX}{type_name}"

    @classmethod
    def leaf_case(cls, param: str, params: tuple[str, ...]) -> str:
        if len(params) == 1:
            return SINGLE_LEAF_CASE
        return f"var{param[:1].upper()}{param[1:]}"

    @classmethod
    def constructor_case(cls, ctor: str, type_name: str) -> str:
        """Lower-cased constructor name, dropping a trailing type marker (NilB -> nil)."""
        marker = cls.suffix(type_name)
        stem = ctor
        if len(ctor) > 2 and ctor.endswith(marker) and ctor[-2].islower():
            stem = ctor[:-1]
        return stem.lower()

    @classmethod
    def base_ctor(cls, param: str, params: tuple[str, ...]) -> str:
        if len(params) == 1:
            return "Base"
        return f"Base{param[:1].upper()}{param[1:]}"

    @classmethod
    def indexed_ctor(cls, ctor: str) -> str:
        return f"{ctor}N"

    @classmethod
    def church_ctor(cls, case: str) -> str:
        return f"c{case}"

    @classmethod
    def holes(cls, count: int) -> tuple[str, ...]:
        if count == 1:
            return ("x",)
        if count == 2:  # noqa: PLR2004
            return ("x", "xs")
        return tuple(f"x{k}" for k in range(1, count + 1))

    @classmethod
    def index_variables(cls, count: int) -> tuple[str, ...]:
        names = list(INDEX_VARIABLE_NAMES[:count])
        while len(names) < count:
            names.append(f"i{len(names)}")
        return tuple(names)


def unique(names: Iterable[str]) -> tuple[str, ...]:
    """Resolve collisions with a numeric suffix, keeping first occurrences unchanged."""
    seen: set[str] = set()
    result = []
    for name in names:
        candidate, k = name, 2
        while candidate in seen:
            candidate = f"{name}{k}"
            k += 1
        seen.add(candidate)
        result.append(candidate)
    return tuple(result)
