"""
Recording of recursive fold invocations and the structural-descent audit.
"""
from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from dataclasses import field

from nestfold.derive.artifacts import IndexExpr
from nestfold.interp.values import Value
from nestfold.interp.values import subvalues
from nestfold.interp.values import value_size


@dataclass(frozen=True, slots=True)
class TraceEntry:
    subject: Value
    index: IndexExpr
    parent: Value


@dataclass
class EvalTrace:
    entries: list[TraceEntry] = field(default_factory=list)

    def record(self, subject: Value, index: IndexExpr, parent: Value) -> None:
        self.entries.append(TraceEntry(subject, index, parent))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[TraceEntry]:
        return iter(self.entries)


_active: ContextVar[EvalTrace | None] = ContextVar("nestfold_trace", default=None)


def active_trace() -> EvalTrace | None:
    return _active.get()


@contextmanager
def recording(trace: EvalTrace | None = None) -> Iterator[EvalTrace]:
    """Capture every recursive invocation made by evaluations inside the block."""
    trace = trace if trace is not None else EvalTrace()
    token = _active.set(trace)
    try:
        yield trace
    finally:
        _active.reset(token)


@dataclass(frozen=True)
class AuditReport:
    checked: int
    violations: tuple[TraceEntry, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def merged(self, other: AuditReport) -> AuditReport:
        return AuditReport(self.checked + other.checked, self.violations + other.violations)


def is_strict_subvalue(child: Value, parent: Value) -> bool:
    if value_size(child) >= value_size(parent):
        return False
    return any(node == child for node in subvalues(parent))


def descent_audit(trace: EvalTrace) -> AuditReport:
    violations = tuple(e for e in trace if not is_strict_subvalue(e.subject, e.parent))
    return AuditReport(len(trace), violations)
