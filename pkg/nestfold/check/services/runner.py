"""
Service for running properties and auditing termination.
"""
from __future__ import annotations

import logging
import time
from collections.abc import Iterable
from typing import Any

from django.conf import settings

from nestfold.check.models import Bounds
from nestfold.check.models import CheckCase
from nestfold.check.models import CheckReport
from nestfold.check.models import Counterexample
from nestfold.check.models import Property
from nestfold.check.services.properties import get_property
from nestfold.check.services.properties import property_registry
from nestfold.interp.services.trace import AuditReport
from nestfold.interp.services.trace import descent_audit
from nestfold.interp.services.trace import recording
from nestfold.interp.values import Con
from nestfold.interp.values import Ground
from nestfold.interp.values import value_eq
from nestfold.utils.enums import CheckStatus

logger = logging.getLogger(__name__)


def _agree(left: Any, right: Any) -> bool:
    if isinstance(left, Con | Ground) and isinstance(right, Con | Ground):
        return value_eq(left, right)
    return left == right


def check_property(prop: Property, bounds: Bounds) -> CheckReport:
    """
    Evaluate both sides on every case until the first disagreement.

    A case whose evaluation raises is a failure too; the exception text is kept
    in the counterexample.
    """
    started = time.perf_counter()
    cases = 0
    counterexample: Counterexample | None = None
    logger.info("Checking %s", prop.name)
    for case in prop.cases(bounds):
        cases += 1
        counterexample = _run_case(prop, case)
        if counterexample is not None:
            break
    status = CheckStatus.PASS if counterexample is None else CheckStatus.FAIL
    report = CheckReport(prop.name, cases, status, counterexample, prop.spotcheck, time.perf_counter() - started)
    if report.passed:
        logger.info("%s: %s after %d cases", prop.name, status, cases)
    else:
        logger.warning("%s: %s at case %d: %s", prop.name, status, cases, counterexample.as_json())  # type: ignore[union-attr]
    return report


def _run_case(prop: Property, case: CheckCase) -> Counterexample | None:
    try:
        left, right = prop.sides(case)
    except Exception as exc:  # noqa: BLE001
        return Counterexample.from_case(case, error=f"{type(exc).__name__}: {exc}")
    if _agree(left, right):
        return None
    return Counterexample.from_case(case, left, right)


def run_property(name: str, bounds: Bounds | None = None) -> CheckReport:
    return check_property(get_property(name), bounds or Bounds.for_profile())


def run_suite(
    profile: str | None = None,
    bounds: Bounds | None = None,
    names: Iterable[str] | None = None,
) -> list[CheckReport]:
    """Every registered property (or the named ones) in registry order."""
    bounds = bounds or Bounds.for_profile(profile)
    selected = [get_property(n) for n in names] if names is not None else list(property_registry().values())
    logger.info("Running %d properties with the %s profile", len(selected), bounds.profile)
    reports = [check_property(prop, bounds) for prop in selected]
    failed = [r.property for r in reports if not r.passed]
    if failed:
        logger.warning("%d of %d properties failed: %s", len(failed), len(reports), ", ".join(failed))
    return reports


def audit_termination(
    profile: str | None = None,
    bounds: Bounds | None = None,
    names: Iterable[str] | None = None,
) -> AuditReport:
    """Rerun properties while recording recursive calls and check each call descends."""
    bounds = bounds or Bounds.for_profile(profile)
    selected = [get_property(n) for n in names] if names is not None else list(property_registry().values())
    total = AuditReport(0)
    for prop in selected:
        with recording() as trace:
            check_property(prop, bounds)
        audit = descent_audit(trace)
        if not audit.ok:
            logger.warning("%s: %d recursive call(s) did not descend", prop.name, len(audit.violations))
        total = total.merged(audit)
    logger.info("Termination audit: %d calls checked, %d violations", total.checked, len(total.violations))
    return total


def audit_requested() -> bool:
    return bool(settings.NESTFOLD_AUDIT_TERMINATION)
