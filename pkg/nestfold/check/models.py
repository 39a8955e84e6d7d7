"""
Bounds, properties and reports of the enumeration checker.
"""
from __future__ import annotations

from collections.abc import Callable
from collections.abc import Iterable
from collections.abc import Mapping
from dataclasses import asdict
from dataclasses import dataclass
from dataclasses import field
from dataclasses import replace
from typing import Any

from django.conf import settings

from nestfold.derive.artifacts import IndexCon
from nestfold.derive.artifacts import IndexVar
from nestfold.interp.carriers import Carriers
from nestfold.interp.carriers import chars
from nestfold.interp.carriers import nats
from nestfold.interp.services.literals import format_index
from nestfold.interp.services.literals import format_value
from nestfold.interp.values import Con
from nestfold.interp.values import Ground
from nestfold.utils.enums import CheckStatus
from nestfold.utils.enums import ProfileName
from nestfold.utils.exceptions import EmptyCarrierError

SIZE_FIELDS = ("max_size_bush", "max_size_term", "max_size_d", "pair_size")
INDEX_FIELDS = ("max_index", "max_index_d")


# =============================================================================
# Bounds
# =============================================================================


@dataclass(frozen=True)
class Bounds:
    max_size_bush: int = 7
    max_size_term: int = 8
    max_size_d: int = 7
    max_index: int = 3
    max_index_d: int = 2
    nat_limit: int = 3
    pair_size: int = 4
    alphabet: tuple[str, ...] = ("W", "c", "x", "y")
    seed: int = 0
    profile: str = ProfileName.DEFAULT

    @classmethod
    def for_profile(cls, name: str | None = None) -> Bounds:
        """Bounds of a named profile from NESTFOLD_CHECK_PROFILES; fast halves the default one."""
        name = ProfileName(name or settings.NESTFOLD_PROFILE)
        profiles = settings.NESTFOLD_CHECK_PROFILES
        source = profiles.get(name) or profiles[ProfileName.DEFAULT]
        bounds = cls(
            **{k: v for k, v in source.items() if k != "alphabet"},
            alphabet=tuple(source.get("alphabet", cls.alphabet)),
            seed=settings.NESTFOLD_SEED,
            profile=name,
        )
        if name == ProfileName.FAST and name not in profiles:
            bounds = bounds.halved()
        return bounds.validated()

    def halved(self) -> Bounds:
        changes = {k: max(1, getattr(self, k) // 2) for k in (*SIZE_FIELDS, *INDEX_FIELDS)}
        return replace(self, **changes, profile=ProfileName.FAST)

    def with_overrides(
        self,
        max_size: int | None = None,
        max_index: int | None = None,
        seed: int | None = None,
    ) -> Bounds:
        """Command-line overrides: one size for every family, one index depth for all."""
        changes: dict[str, Any] = {}
        if max_size is not None:
            changes.update({k: max_size for k in SIZE_FIELDS if k != "pair_size"})
            changes["pair_size"] = min(self.pair_size, max_size)
        if max_index is not None:
            changes["max_index"] = max_index
            changes["max_index_d"] = min(self.max_index_d, max_index)
        if seed is not None:
            changes["seed"] = seed
        return replace(self, **changes).validated()

    def validated(self) -> Bounds:
        if self.nat_limit < 1 or not self.alphabet:
            msg = "empty domain: carriers need at least one natural and one character"
            raise EmptyCarrierError(msg)
        small = [k for k in SIZE_FIELDS if getattr(self, k) < 1]
        if small:
            msg = f"empty domain: {', '.join(small)} must be at least 1"
            raise EmptyCarrierError(msg)
        negative = [k for k in INDEX_FIELDS if getattr(self, k) < 0]
        if negative:
            msg = f"empty domain: {', '.join(negative)} must not be negative"
            raise EmptyCarrierError(msg)
        return self

    def nat_carriers(self, *params: str) -> Carriers:
        return Carriers.of(**{p: nats(self.nat_limit) for p in params or ("a",)})

    def char_carriers(self) -> Carriers:
        return Carriers.of(a=chars(self.alphabet))

    def as_json(self) -> dict[str, Any]:
        data = asdict(self)
        data["alphabet"] = list(self.alphabet)
        return data


# =============================================================================
# Properties
# =============================================================================


@dataclass(frozen=True, slots=True)
class CheckCase:
    """One point of a property's domain: named inputs, in enumeration order."""

    inputs: tuple[tuple[str, Any], ...]

    @classmethod
    def of(cls, **inputs: Any) -> CheckCase:
        return cls(tuple(inputs.items()))

    def as_kwargs(self) -> dict[str, Any]:
        return dict(self.inputs)


@dataclass(frozen=True)
class Property:
    """An executable equality between two evaluations over an enumerated domain."""

    name: str
    statement: str
    cases: Callable[[Bounds], Iterable[CheckCase]]
    left: Callable[..., Any]
    right: Callable[..., Any]
    topic: str = ""
    spotcheck: bool = False

    def sides(self, case: CheckCase) -> tuple[Any, Any]:
        kwargs = case.as_kwargs()
        return self.left(**kwargs), self.right(**kwargs)


# =============================================================================
# Reports
# =============================================================================


def describe(x: Any) -> str:
    """Printable form of a check input or result."""
    if isinstance(x, Con | Ground):
        return format_value(x)
    if isinstance(x, IndexCon | IndexVar):
        return format_index(x)
    if isinstance(x, tuple):
        return f"({', '.join(describe(item) for item in x)})"
    return str(x)


@dataclass(frozen=True)
class Counterexample:
    inputs: Mapping[str, str]
    left: str
    right: str
    error: str | None = None

    @classmethod
    def from_case(cls, case: CheckCase, left: Any = None, right: Any = None, error: str | None = None) -> Counterexample:
        inputs = {name: describe(value) for name, value in case.inputs}
        return cls(inputs, describe(left), describe(right), error)

    def as_json(self) -> dict[str, Any]:
        data: dict[str, Any] = {"inputs": dict(self.inputs), "left": self.left, "right": self.right}
        if self.error is not None:
            data["error"] = self.error
        return data


@dataclass(frozen=True)
class CheckReport:
    property: str
    cases: int
    status: CheckStatus
    counterexample: Counterexample | None = None
    spotcheck: bool = False
    seconds: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS

    def as_json(self) -> dict[str, Any]:
        """The report without timing, so equal runs serialize identically."""
        data: dict[str, Any] = {"property": self.property, "cases": self.cases, "status": str(self.status)}
        if self.spotcheck:
            data["spotcheck"] = True
        if self.counterexample is not None:
            data["counterexample"] = self.counterexample.as_json()
        return data

    def summary(self) -> str:
        line = f"{self.property}: {self.status} ({self.cases} cases)"
        if self.spotcheck:
            line += " [spot-check, not a proof]"
        if self.counterexample is not None:
            shown = ", ".join(f"{k}={v}" for k, v in self.counterexample.inputs.items())
            line += f"\n  counterexample: {shown}"
            if self.counterexample.error is not None:
                line += f"\n  error: {self.counterexample.error}"
            else:
                line += f"\n  left:  {self.counterexample.left}\n  right: {self.counterexample.right}"
        return line
