"""Before/after resource measurement of a subject process."""

from .io import read_runs_csv, summary_json, write_runs_csv
from .model import DeltaReport, MeasurementSummary, PerSmellImpact, ResourceSample, RunSeries, RunSpec
from .sampler import python_subject, run_measurement, run_repeated
from .stats import normalize_per_instance, relative_change, summarize

__all__ = [
    "DeltaReport",
    "MeasurementSummary",
    "PerSmellImpact",
    "ResourceSample",
    "RunSeries",
    "RunSpec",
    "normalize_per_instance",
    "python_subject",
    "read_runs_csv",
    "relative_change",
    "run_measurement",
    "run_repeated",
    "summarize",
    "summary_json",
    "write_runs_csv",
]
