"""Packaged reference data: impact records, batch observations and
published model-comparison figures."""

from __future__ import annotations

import csv
import io
import json
from importlib import resources

from .csvio import ingest_batch_csv, ingest_impact_csv
from .model import BatchRecord, ImpactDataset

IMPACT_FILE = "reference_impact.csv"
BATCH_FILE = "reference_batches.csv"
MODEL_MSE_FILE = "model_mse.csv"
RESULTS_FILE = "reference_results.json"
BENCH_FILE = "bench.csv"
PROVENANCE_FILE = "provenance.json"


def data_path(name: str):
    return resources.files("smellwatt") / "data" / name


def reference_dataset() -> ImpactDataset:
    with resources.as_file(data_path(IMPACT_FILE)) as p:
        return ingest_impact_csv(p)


def reference_batches() -> list[BatchRecord]:
    with resources.as_file(data_path(BATCH_FILE)) as p:
        return ingest_batch_csv(p)


def model_mse_table() -> dict[str, dict[str, tuple[float, float]]]:
    """kind -> model -> (mse, rmse), memory prediction errors."""
    out: dict[str, dict[str, tuple[float, float]]] = {}
    text = data_path(MODEL_MSE_FILE).read_text(encoding="utf-8")
    for row in csv.DictReader(io.StringIO(text)):
        out.setdefault(row["kind"], {})[row["model"]] = (float(row["mse"]), float(row["rmse"]))
    return out


def reference_results() -> dict:
    return json.loads(data_path(RESULTS_FILE).read_text(encoding="utf-8"))


def provenance() -> dict:
    return json.loads(data_path(PROVENANCE_FILE).read_text(encoding="utf-8"))
