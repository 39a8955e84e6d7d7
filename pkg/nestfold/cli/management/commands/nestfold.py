"""
Management command tying the declaration parser, the derivation pipeline, the
evaluator, the property suite and the emitter together.

Usage:
    python manage.py nestfold derive FILE --type ROOT [--case CTOR=NAME ...] [--json]
    python manage.py nestfold emit FILE --type ROOT [--backend agda|json] [--include LIST] [-o DIR]
    python manage.py nestfold eval --fn NAME [--index IDX] [--param NAME=VAL ...] VALUE
    python manage.py nestfold check (--property NAME ... | --all) [--max-size N] [--max-index N]
    python manage.py nestfold corpus list [FILTER] [--kind KIND]

Examples:
    python manage.py nestfold derive nestfold/corpus/declarations/d.ndt --type D
    python manage.py nestfold emit nestfold/corpus/declarations/bush.ndt --type Bush --include church
    python manage.py nestfold eval --fn sumB bush1
    python manage.py nestfold check --property beta_law_term --max-size 8

Exit status is 0 on success, 1 when a property fails and 2 on any usage,
declaration or value error.
"""
from __future__ import annotations

import json
import logging
from collections.abc import Iterable
from pathlib import Path
from typing import Any

from django.core.management.base import BaseCommand
from django.core.management.base import CommandError

from nestfold.check.models import Bounds
from nestfold.check.services import audit_requested
from nestfold.check.services import audit_termination
from nestfold.check.services import run_suite
from nestfold.core.services.loader import load_program_file
from nestfold.corpus.services import corpus_entry
from nestfold.corpus.services import list_entries
from nestfold.corpus.services import resolve_value
from nestfold.derive.artifacts import DerivedArtifacts
from nestfold.derive.services.pipeline import derive_artifacts
from nestfold.derive.services.serialization import dump_artifacts
from nestfold.emit.models import EmitOptions
from nestfold.emit.services import write_outputs
from nestfold.interp.services import format_index
from nestfold.interp.services import format_value
from nestfold.utils.enums import Backend
from nestfold.utils.enums import EntryKind
from nestfold.utils.enums import ProfileName
from nestfold.utils.exceptions import NestfoldError

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
CHECK_FAILED = 1


def key_values(pairs: Iterable[str] | None, flag: str) -> dict[str, str]:
    """Parse repeated NAME=VALUE arguments; the first '=' splits."""
    result: dict[str, str] = {}
    for pair in pairs or ():
        name, sep, value = pair.partition("=")
        if not sep or not name.strip():
            msg = f"{flag} expects NAME=VALUE, got {pair!r}"
            raise CommandError(msg, returncode=USAGE_ERROR)
        result[name.strip()] = value.strip()
    return result


def artifact_summary(a: DerivedArtifacts) -> str:
    """Human-readable listing of what derive_artifacts produced."""
    index_type = a.index_type
    ctors = ", ".join(f"{c.name}/{c.arity}" for c in index_type.constructors)
    fold = a.fold_spec
    lines = [
        f"root: {a.root}",
        f"closure: {', '.join(d.name for d in a.program.decls)}",
        f"index type: {index_type.name} ({ctors})",
        f"interpretation: {a.interpretation.name}",
        f"fold: {fold.name} ({len(fold.cases)} cases)",
    ]
    lines.extend(f"  {case.name} at {format_index(case.subject_index)}" for case in fold.cases)
    lines.extend([
        f"induction: {a.induction_spec.name}",
        f"higher-order fold: {a.hofold.name} ({', '.join(arg.name for arg in a.hofold.args)})",
        f"indexed representation: {a.indexed_rep.name}",
        f"church encoding: {a.church.name}",
    ])
    return "\n".join(lines)


class Command(BaseCommand):
    help = "Derive, emit, evaluate and check dependently typed folds for nested data types"

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest="subcommand", required=True)

        derive = subparsers.add_parser("derive", help="Run the derivation pipeline on a declaration file")
        self._add_program_arguments(derive)
        derive.add_argument("--json", action="store_true", help="Print the artifacts as JSON")

        emit = subparsers.add_parser("emit", help="Write the derived artifacts as Agda or JSON")
        self._add_program_arguments(emit)
        emit.add_argument("--backend", default=Backend.AGDA, help="agda or json. Default: agda")
        emit.add_argument("--include", default=None, help="Comma-separated parts to emit. Default: all")
        emit.add_argument("--module", default=None, help="Agda module name. Default: the root type")
        emit.add_argument("-o", "--out-dir", dest="out_dir", default=None, help="Output directory")

        evaluate = subparsers.add_parser("eval", help="Evaluate a corpus function on a value")
        evaluate.add_argument("--fn", dest="fn", required=True, help="Corpus function name")
        evaluate.add_argument("--index", default=None, help="Subject index, when the function is indexed")
        evaluate.add_argument(
            "--param", action="append", default=[], metavar="NAME=VAL", help="Function parameter (repeatable)",
        )
        evaluate.add_argument("value", help="Value literal or a named corpus literal")

        check = subparsers.add_parser("check", help="Run properties by bounded enumeration")
        which = check.add_mutually_exclusive_group(required=True)
        which.add_argument("--property", action="append", dest="properties", help="Property name (repeatable)")
        which.add_argument("--all", action="store_true", help="Every registered property")
        check.add_argument("--profile", choices=ProfileName.values, default=None, help="Bounds profile")
        check.add_argument("--max-size", dest="max_size", type=int, default=None, help="Value size bound")
        check.add_argument("--max-index", dest="max_index", type=int, default=None, help="Index depth bound")
        check.add_argument("--seed", type=int, default=None, help="Seed for sampled properties")
        check.add_argument("--audit", action="store_true", help="Also audit that recursive calls descend")
        check.add_argument("--json", action="store_true", help="Print reports as JSON")

        corpus = subparsers.add_parser("corpus", help="Browse the corpus registry")
        corpus.add_argument("action", choices=["list"])
        corpus.add_argument("filter", nargs="?", default="", help="Substring of entry names")
        corpus.add_argument("--kind", choices=EntryKind.values, default=None, help="Only entries of one kind")

    @staticmethod
    def _add_program_arguments(parser):
        parser.add_argument("file", help="Declaration file (.ndt)")
        parser.add_argument("--type", dest="root", required=True, help="Root type to derive for")
        parser.add_argument(
            "--case", action="append", default=[], metavar="CTOR=NAME", help="Rename a fold case (repeatable)",
        )

    def handle(self, *args, **options):
        handler = getattr(self, f"_handle_{options['subcommand']}")
        try:
            handler(options)
        except NestfoldError as exc:
            logger.debug("nestfold %s failed", options["subcommand"], exc_info=True)
            raise CommandError(str(exc), returncode=USAGE_ERROR) from exc

    def _derive(self, options: dict[str, Any]) -> DerivedArtifacts:
        path = Path(options["file"])
        try:
            program = load_program_file(path)
        except OSError as exc:
            msg = f"cannot read {path}: {exc.strerror or exc}"
            raise CommandError(msg, returncode=USAGE_ERROR) from exc
        case_names = key_values(options["case"], "--case")
        return derive_artifacts(program, options["root"], case_names or None)

    def _handle_derive(self, options: dict[str, Any]) -> None:
        artifacts = self._derive(options)
        if options["json"]:
            self.stdout.write(dump_artifacts(artifacts), ending="")
        else:
            self.stdout.write(artifact_summary(artifacts))

    def _handle_emit(self, options: dict[str, Any]) -> None:
        opts = EmitOptions.from_arguments(options["backend"], options["include"], options["module"])
        artifacts = self._derive(options)
        out_dir = Path(options["out_dir"]) if options["out_dir"] else None
        path = write_outputs(artifacts, opts, out_dir)
        self.stdout.write(str(path))

    def _handle_eval(self, options: dict[str, Any]) -> None:
        entry = corpus_entry(options["fn"])
        params = key_values(options["param"], "--param")
        if options["index"] is not None:
            index_param = entry.signature.index_param if entry.signature else None
            if index_param is None:
                msg = f"{entry.name} is not indexed; drop --index"
                raise CommandError(msg, returncode=USAGE_ERROR)
            params[index_param] = options["index"]
        result = entry.evaluate(params, resolve_value(options["value"]))
        self.stdout.write(format_value(result))

    def _handle_check(self, options: dict[str, Any]) -> None:
        bounds = Bounds.for_profile(options["profile"]).with_overrides(
            max_size=options["max_size"], max_index=options["max_index"], seed=options["seed"],
        )
        names = None if options["all"] else options["properties"]
        reports = run_suite(bounds=bounds, names=names)
        audit = audit_termination(bounds=bounds, names=names) if options["audit"] or audit_requested() else None
        if options["json"]:
            data: dict[str, Any] = {"bounds": bounds.as_json(), "reports": [r.as_json() for r in reports]}
            if audit is not None:
                data["audit"] = {"checked": audit.checked, "violations": len(audit.violations)}
            self.stdout.write(json.dumps(data, indent=2))
        else:
            for report in reports:
                self.stdout.write(report.summary())
            if audit is not None:
                self.stdout.write(f"termination audit: {audit.checked} calls, {len(audit.violations)} violations")
        failed = [r.property for r in reports if not r.passed]
        if failed:
            msg = f"{len(failed)} of {len(reports)} properties failed: {', '.join(failed)}"
            raise CommandError(msg, returncode=CHECK_FAILED)
        if audit is not None and not audit.ok:
            msg = f"{len(audit.violations)} recursive call(s) did not descend"
            raise CommandError(msg, returncode=CHECK_FAILED)

    def _handle_corpus(self, options: dict[str, Any]) -> None:
        for entry in list_entries(options["filter"], options["kind"]):
            self.stdout.write(f"{entry.name}\t{entry.kind}\t{entry.section}")
