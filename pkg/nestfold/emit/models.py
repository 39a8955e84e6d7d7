"""
Options of an emission request.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass

from django.conf import settings

from nestfold.utils.enums import Backend
from nestfold.utils.enums import IncludePart
from nestfold.utils.exceptions import EmitError

logger = logging.getLogger(__name__)

# Parts whose text refers to names another part defines.
PREREQUISITES: dict[IncludePart, tuple[IncludePart, ...]] = {
    IncludePart.INTERPRETATION: (IncludePart.NESTED_DECL,),
    IncludePart.FOLD: (IncludePart.INTERPRETATION,),
    IncludePart.INDUCTION: (IncludePart.FOLD,),
    IncludePart.MAP: (IncludePart.FOLD,),
    IncludePart.HOFOLD: (IncludePart.FOLD,),
    IncludePart.INDEXED_REP: (IncludePart.FOLD,),
    IncludePart.CHURCH: (IncludePart.INTERPRETATION,),
}


@dataclass(frozen=True)
class EmitOptions:
    backend: Backend = Backend.AGDA
    include: frozenset[IncludePart] = frozenset(IncludePart)
    module: str | None = None
    type_in_type: bool | None = None

    @classmethod
    def from_arguments(
        cls,
        backend: str = Backend.AGDA,
        include: str | Iterable[str] | None = None,
        module: str | None = None,
        type_in_type: bool | None = None,
    ) -> EmitOptions:
        """Options from command-line strings; include is a comma-separated list of part names."""
        try:
            chosen_backend = Backend(backend)
        except ValueError:
            msg = f"unknown backend {backend!r}; expected one of {', '.join(Backend.values)}"
            raise EmitError(msg) from None
        if include is None:
            return cls(chosen_backend, module=module, type_in_type=type_in_type).validated()
        names = include.split(",") if isinstance(include, str) else list(include)
        parts: set[IncludePart] = set()
        for raw in names:
            name = raw.strip()
            if not name:
                continue
            try:
                parts.add(IncludePart(name))
            except ValueError:
                msg = f"unknown include {name!r}; expected some of {', '.join(IncludePart.values)}"
                raise EmitError(msg) from None
        if not parts:
            msg = "the include list is empty"
            raise EmitError(msg)
        return cls(chosen_backend, frozenset(parts), module, type_in_type).validated()

    def validated(self) -> EmitOptions:
        if not self.include:
            msg = "nothing to emit: the include set is empty"
            raise EmitError(msg)
        if self.backend == Backend.JSON and self.include != frozenset(IncludePart):
            msg = "the json backend always writes every artifact; --include applies to agda only"
            raise EmitError(msg)
        if self.module is not None and not self.module.isidentifier():
            msg = f"{self.module!r} is not a module name"
            raise EmitError(msg)
        return self

    def parts(self) -> tuple[IncludePart, ...]:
        """Requested parts plus the parts they refer to, in emission order."""
        wanted = set(self.include)
        pending = list(wanted)
        while pending:
            for needed in PREREQUISITES.get(pending.pop(), ()):
                if needed not in wanted:
                    logger.debug("Including %s, which a requested part refers to", needed)
                    wanted.add(needed)
                    pending.append(needed)
        return tuple(part for part in IncludePart if part in wanted)

    @property
    def pragma(self) -> bool:
        if self.type_in_type is None:
            return bool(settings.NESTFOLD_TYPE_IN_TYPE_PRAGMA)
        return self.type_in_type
