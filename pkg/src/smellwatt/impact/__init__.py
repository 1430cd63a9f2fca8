"""Impact records, batch additivity and category aggregates."""

from .analytics import (
    AdditivityReport,
    AdditivityRow,
    CategoryImpact,
    DeviationStats,
    Extremes,
    additivity_report,
    batch_extremes,
    category_profile,
    plot_rows,
)
from .csvio import export_batch_csv, export_impact_csv, ingest_batch_csv, ingest_impact_csv
from .model import AppCategory, BatchMode, BatchRecord, ImpactDataset, ImpactRecord

__all__ = [
    "AdditivityReport",
    "AdditivityRow",
    "AppCategory",
    "BatchMode",
    "BatchRecord",
    "CategoryImpact",
    "DeviationStats",
    "Extremes",
    "ImpactDataset",
    "ImpactRecord",
    "additivity_report",
    "batch_extremes",
    "category_profile",
    "export_batch_csv",
    "export_impact_csv",
    "ingest_batch_csv",
    "ingest_impact_csv",
    "plot_rows",
]
