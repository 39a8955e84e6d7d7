"""
Finite ground sets standing in for the parameters of a family.
"""
from __future__ import annotations

from collections.abc import Iterable
from collections.abc import Mapping
from dataclasses import dataclass
from dataclasses import field

from nestfold.interp.values import Ground
from nestfold.interp.values import char
from nestfold.interp.values import nat
from nestfold.interp.values import value_key
from nestfold.utils.exceptions import EmptyCarrierError
from nestfold.utils.exceptions import ValueTypeError


def nats(limit: int) -> tuple[Ground, ...]:
    """The naturals below limit."""
    return tuple(nat(n) for n in range(limit))


def chars(alphabet: Iterable[str]) -> tuple[Ground, ...]:
    return tuple(char(c) for c in alphabet)


@dataclass(frozen=True)
class Carriers:
    sets: Mapping[str, tuple[Ground, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for param, items in self.sets.items():
            if not items:
                msg = f"carrier for {param!r} is empty"
                raise EmptyCarrierError(msg)
        ordered = {p: tuple(sorted(set(items), key=value_key)) for p, items in self.sets.items()}
        object.__setattr__(self, "sets", ordered)

    @classmethod
    def of(cls, **sets: Iterable[Ground]) -> Carriers:
        return cls({p: tuple(items) for p, items in sets.items()})

    def values(self, param: str) -> tuple[Ground, ...]:
        try:
            return self.sets[param]
        except KeyError:
            msg = f"no carrier for parameter {param!r}"
            raise ValueTypeError(msg) from None

    def contains(self, param: str, v: object) -> bool:
        return v in self.values(param)

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.sets.items())))
