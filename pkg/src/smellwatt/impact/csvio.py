"""Impact and batch CSV files.

Floats are written with ``repr`` and unknown cells are left empty, so
reading a file and writing it back reproduces the same bytes.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path

from ..catalog import SmellKind
from ..errors import DuplicateKey, InvariantViolation, IoFailure, SchemaMismatch, ValidationError
from .model import AppCategory, BatchMode, BatchRecord, ImpactDataset, ImpactRecord

IMPACT_HEADER = [
    "app", "category", "kind", "instance_count",
    "dcpu_total_pct", "dmem_total_pct", "dcpu_per_instance", "dmem_per_instance",
]
BATCH_HEADER = ["app", "mode", "kinds", "dcpu_total_pct", "dmem_total_pct"]


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _num(text: str, cast=float):
    text = text.strip()
    return None if text == "" else cast(text)


def _read_rows(path, header: list[str]):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoFailure(path, exc.strerror or str(exc)) from exc
    reader = csv.reader(io.StringIO(text))
    got = next(reader, None)
    if got != header:
        raise SchemaMismatch(f"{path}: expected header {','.join(header)}, got {got}")
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(header):
            raise SchemaMismatch(f"{path}:{lineno}: expected {len(header)} columns, got {len(row)}")
        yield lineno, row


def ingest_impact_csv(path) -> ImpactDataset:
    records: list[ImpactRecord] = []
    seen = set()
    for lineno, row in _read_rows(path, IMPACT_HEADER):
        try:
            rec = ImpactRecord(
                row[0], AppCategory.parse(row[1]), SmellKind.parse(row[2]), _num(row[3], int),
                _num(row[4]), _num(row[5]), _num(row[6]), _num(row[7]),
            )
        except (ValueError, ValidationError) as exc:
            raise InvariantViolation(lineno, str(exc)) from exc
        if rec.key in seen:
            raise DuplicateKey(rec.app, rec.kind.value)
        seen.add(rec.key)
        records.append(rec)
    return ImpactDataset(records)


def export_impact_csv(dataset: ImpactDataset) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(IMPACT_HEADER)
    for r in dataset.records:
        w.writerow([
            r.app, r.category.value, r.kind.value, _fmt(r.instance_count),
            _fmt(r.dcpu_total_pct), _fmt(r.dmem_total_pct),
            _fmt(r.dcpu_per_instance), _fmt(r.dmem_per_instance),
        ])
    return buf.getvalue()


def ingest_batch_csv(path) -> list[BatchRecord]:
    out = []
    for lineno, row in _read_rows(path, BATCH_HEADER):
        try:
            kinds = tuple(SmellKind.parse(k) for k in row[2].split(";") if k.strip())
            out.append(BatchRecord(row[0], BatchMode(row[1].strip().upper()), kinds, _num(row[3]), _num(row[4])))
        except (ValueError, ValidationError) as exc:
            raise InvariantViolation(lineno, str(exc)) from exc
    return out


def export_batch_csv(batches: list[BatchRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(BATCH_HEADER)
    for b in batches:
        w.writerow([b.app, b.mode.value, ";".join(k.value for k in b.kinds),
                    _fmt(b.dcpu_total_pct), _fmt(b.dmem_total_pct)])
    return buf.getvalue()
