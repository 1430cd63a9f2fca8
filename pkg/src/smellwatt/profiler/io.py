"""runs.csv and summary JSON."""

from __future__ import annotations

import csv
import json
from pathlib import Path

from ..errors import IoFailure, SchemaMismatch
from .model import MeasurementSummary, ResourceSample, RunSeries

RUNS_HEADER = ["run_id", "t_ms", "cpu_pct", "rss_bytes"]


def write_runs_csv(series: list[RunSeries], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(RUNS_HEADER)
        for run_id, s in enumerate(series):
            for x in s.samples:
                w.writerow([run_id, repr(round(x.t, 3)), repr(x.cpu_pct), x.rss_bytes])


def read_runs_csv(path: str | Path, spec_id: str = "") -> list[RunSeries]:
    try:
        fh = open(path, newline="")
    except OSError as exc:
        raise IoFailure(path, exc.strerror or str(exc)) from exc
    with fh:
        r = csv.reader(fh)
        header = next(r, None)
        if header != RUNS_HEADER:
            raise SchemaMismatch(f"{path}: expected header {RUNS_HEADER}, got {header}")
        runs: dict[int, RunSeries] = {}
        for row in r:
            rid = int(row[0])
            runs.setdefault(rid, RunSeries(spec_id)).samples.append(
                ResourceSample(float(row[1]), float(row[2]), int(row[3]))
            )
    return [runs[k] for k in sorted(runs)]


def summary_json(summary: MeasurementSummary) -> str:
    return json.dumps(summary.to_dict(), indent=2, sort_keys=True) + "\n"
