"""
Service for writing emitted artifacts to disk.
"""
from __future__ import annotations

import logging
from pathlib import Path

from django.conf import settings

from nestfold.derive.artifacts import DerivedArtifacts
from nestfold.derive.services.serialization import dump_artifacts
from nestfold.emit.models import EmitOptions
from nestfold.emit.services.agda import emit_agda
from nestfold.utils.enums import Backend
from nestfold.utils.exceptions import EmitError

logger = logging.getLogger(__name__)

SUFFIXES = {Backend.AGDA: ".agda", Backend.JSON: ".artifacts.json"}


def emit_json(artifacts: DerivedArtifacts) -> str:
    """Canonical JSON of every derived artifact; load_artifacts reads it back."""
    return dump_artifacts(artifacts)


def emit_text(artifacts: DerivedArtifacts, opts: EmitOptions) -> str:
    if opts.backend == Backend.JSON:
        return emit_json(artifacts)
    return emit_agda(artifacts, opts)


def output_path(artifacts: DerivedArtifacts, opts: EmitOptions, out_dir: str | Path | None = None) -> Path:
    directory = Path(out_dir if out_dir is not None else settings.NESTFOLD_EMIT_DIR)
    stem = opts.module or artifacts.root
    return directory / f"{stem}{SUFFIXES[Backend(opts.backend)]}"


def write_outputs(
    artifacts: DerivedArtifacts,
    opts: EmitOptions | None = None,
    out_dir: str | Path | None = None,
) -> Path:
    """Write `<Root>.agda` or `<Root>.artifacts.json` under out_dir (NESTFOLD_EMIT_DIR by default)."""
    opts = (opts or EmitOptions()).validated()
    text = emit_text(artifacts, opts)
    path = output_path(artifacts, opts, out_dir)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        msg = f"cannot write {path}: {exc}"
        raise EmitError(msg) from exc
    logger.info("Wrote %s (%d bytes)", path, len(text.encode("utf-8")))
    return path
