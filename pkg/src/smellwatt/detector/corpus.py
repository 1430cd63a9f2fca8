"""Reading files from disk into a :class:`Corpus`."""

from __future__ import annotations

import logging
import os
from pathlib import Path

from ..errors import EmptyCorpus, IoFailure
from .java import JavaParseError, parse_java
from .model import Corpus, SourceUnit
from .python import PythonParseError, parse_python

log = logging.getLogger(__name__)

EXTENSIONS = {"java": ".java", "python": ".py"}
FLAVOR_ALIASES = {"java": "java", "java-like": "java", "python": "python", "python-like": "python", "py": "python"}


def _module_name(rel: Path) -> tuple[str, bool]:
    parts = list(rel.with_suffix("").parts)
    is_package = parts[-1] == "__init__"
    if is_package:
        parts = parts[:-1]
    return ".".join(parts) or rel.stem, is_package


def _collect(paths, ext: str) -> list[tuple[Path, Path]]:
    """(file, root) pairs; a directory argument is the root of the files below it."""
    found = []
    for p in paths:
        p = Path(p)
        if not p.exists():
            raise IoFailure(p, "no such file or directory")
        if p.is_dir():
            if not os.access(p, os.R_OK | os.X_OK):
                raise IoFailure(p, "permission denied")
            found.extend((f, p) for f in sorted(p.rglob(f"*{ext}")) if f.is_file())
        else:
            found.append((p, p.parent))
    return found


def parse_source(path: str, source: str, flavor: str, module: str | None = None, is_package: bool = False) -> SourceUnit:
    if flavor == "python":
        return parse_python(path, source, module or Path(path).stem, is_package)
    return parse_java(path, source)


def ingest_corpus(paths, flavor: str = "java") -> Corpus:
    """Parse every source file under ``paths``.

    Files that fail structural parsing are listed in ``Corpus.skipped`` with
    the reason instead of aborting the whole ingest.
    """
    flavor = FLAVOR_ALIASES.get(flavor, flavor)
    if flavor not in EXTENSIONS:
        raise ValueError(f"unknown language flavor {flavor!r}")
    paths = list(paths)
    if not paths:
        raise EmptyCorpus("no paths given")
    files = _collect(paths, EXTENSIONS[flavor])
    if not files:
        raise EmptyCorpus(f"no {EXTENSIONS[flavor]} files under {', '.join(map(str, paths))}")
    units: dict[str, SourceUnit] = {}
    skipped: list[tuple[str, str]] = []
    seen: set[Path] = set()
    for f, root in files:
        real = f.resolve()
        if real in seen:
            continue
        seen.add(real)
        rel = f.relative_to(root)
        display = rel.as_posix()
        if display in units:
            display = f.as_posix()
        try:
            source = f.read_text(encoding="utf-8", errors="replace")
        except OSError as exc:
            raise IoFailure(f, exc.strerror or str(exc)) from exc
        module, is_package = _module_name(rel)
        try:
            units[display] = parse_source(display, source, flavor, module, is_package)
        except (JavaParseError, PythonParseError, RecursionError) as exc:
            log.warning("skipping %s: %s", display, exc)
            skipped.append((display, str(exc)))
    ordered = [units[k] for k in sorted(units)]
    return Corpus(ordered, flavor, sorted(skipped))
