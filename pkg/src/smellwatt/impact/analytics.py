"""Batch additivity, per-category profiles and extreme lookups."""

from __future__ import annotations

import math
from decimal import Decimal
from dataclasses import asdict, dataclass, field

from ..catalog import Resource, SmellKind
from ..errors import MissingIndividualRecord, NoData, ValidationError
from .model import AppCategory, BatchMode, BatchRecord, ImpactDataset

_TOTAL = {Resource.CPU: "dcpu_total_pct", Resource.MEMORY: "dmem_total_pct"}
_PER = {Resource.CPU: "dcpu_per_instance", Resource.MEMORY: "dmem_per_instance"}


@dataclass(frozen=True)
class AdditivityRow:
    app: str
    mode: BatchMode
    resource: Resource
    predicted_sum: float
    observed_batch: float
    deviation: float  # |predicted_sum - observed_batch|


@dataclass(frozen=True)
class DeviationStats:
    mean_deviation: float
    min_deviation: float
    max_deviation: float
    min_app: str
    max_app: str
    app_count: int
    mean_observed: float


@dataclass
class AdditivityReport:
    rows: list[AdditivityRow] = field(default_factory=list)
    aggregate: dict[tuple[BatchMode, Resource], DeviationStats] = field(default_factory=dict)

    def row(self, app: str, mode: BatchMode | str, resource: Resource | str) -> AdditivityRow:
        mode, resource = BatchMode(mode), Resource.parse(resource) if isinstance(resource, str) else resource
        for r in self.rows:
            if (r.app, r.mode, r.resource) == (app, mode, resource):
                return r
        raise KeyError((app, mode, resource))

    def stats(self, mode: BatchMode | str, resource: Resource | str) -> DeviationStats:
        resource = Resource.parse(resource) if isinstance(resource, str) else resource
        return self.aggregate[(BatchMode(mode), resource)]

    def to_dict(self) -> dict:
        return {
            "rows": [
                {**asdict(r), "mode": r.mode.value, "resource": r.resource.value} for r in self.rows
            ],
            "aggregate": [
                {"mode": m.value, "resource": res.value, **asdict(s)}
                for (m, res), s in self.aggregate.items()
            ],
        }


def _dec(v: float) -> Decimal:
    # the shortest repr is the decimal text the value was read from
    return Decimal(repr(v))


def additivity_report(dataset: ImpactDataset, batches: list[BatchRecord]) -> AdditivityReport:
    """Compare each batch's observed delta with the sum of its individual deltas.

    Arithmetic is decimal on the stored values, so a deviation of 0.51
    comes out as 0.51 rather than 0.5100000000000016. Batches whose
    observed value is unknown for a resource contribute no row for it.
    """
    report = AdditivityReport()
    for b in batches:
        for res in (Resource.CPU, Resource.MEMORY):
            observed = getattr(b, _TOTAL[res])
            if observed is None:
                continue
            parts = []
            for k in b.kinds:
                rec = dataset.get(b.app, k)
                value = getattr(rec, _TOTAL[res]) if rec is not None else None
                if value is None:
                    raise MissingIndividualRecord(b.app, k.value)
                parts.append(_dec(value))
            predicted = sum(parts, Decimal(0))
            dev = abs(predicted - _dec(observed))
            report.rows.append(AdditivityRow(b.app, b.mode, res, float(predicted), observed, float(dev)))
    groups: dict[tuple[BatchMode, Resource], list[AdditivityRow]] = {}
    for r in report.rows:
        groups.setdefault((r.mode, r.resource), []).append(r)
    for key in sorted(groups, key=lambda k: (k[0].value, k[1].value)):
        rows = groups[key]
        devs = [_dec(r.deviation) for r in rows]
        lo = min(rows, key=lambda r: (r.deviation, r.app))
        hi = max(rows, key=lambda r: (r.deviation, r.app))
        report.aggregate[key] = DeviationStats(
            mean_deviation=float(sum(devs, Decimal(0)) / len(devs)),
            min_deviation=lo.deviation,
            max_deviation=hi.deviation,
            min_app=lo.app,
            max_app=hi.app,
            app_count=len(rows),
            mean_observed=float(sum((_dec(r.observed_batch) for r in rows), Decimal(0)) / len(rows)),
        )
    return report


@dataclass(frozen=True)
class CategoryImpact:
    category: AppCategory
    kind: SmellKind
    dcpu_per_instance: float | None  # mean over apps with a known value
    dmem_per_instance: float | None
    app_count: int
    dcpu_total_pct: float | None  # mean of the apps' total deltas
    dmem_total_pct: float | None
    total_instances: int | None


def _mean(values: list[float | None]) -> float | None:
    vals = [v for v in values if v is not None]
    return math.fsum(vals) / len(vals) if vals else None


def category_profile(dataset: ImpactDataset, category: AppCategory | str, kind: SmellKind | str) -> CategoryImpact:
    category, kind = AppCategory(category), SmellKind(kind)
    rows = [r for r in dataset if r.category is category and r.kind is kind]
    if not rows:
        raise NoData(category.value, kind.value)
    counts = [r.instance_count for r in rows if r.instance_count is not None]
    return CategoryImpact(
        category, kind,
        _mean([r.dcpu_per_instance for r in rows]),
        _mean([r.dmem_per_instance for r in rows]),
        len(rows),
        _mean([r.dcpu_total_pct for r in rows]),
        _mean([r.dmem_total_pct for r in rows]),
        sum(counts) if counts else None,
    )


@dataclass(frozen=True)
class Extremes:
    max_app: str
    max_value: float
    min_app: str
    min_value: float


def batch_extremes(batches: list[BatchRecord], mode: BatchMode | str, resource: Resource | str) -> Extremes:
    """Largest and smallest observed batch delta among apps with a known value."""
    mode = BatchMode(mode)
    resource = Resource.parse(resource) if isinstance(resource, str) else resource
    vals = [(getattr(b, _TOTAL[resource]), b.app) for b in batches if b.mode is mode]
    vals = [(v, a) for v, a in vals if v is not None]
    if not vals:
        raise ValidationError(f"no {mode} batches with a {resource.value} value")
    hi = max(vals)
    lo = min(vals)
    return Extremes(hi[1], hi[0], lo[1], lo[0])


def plot_rows(dataset: ImpactDataset, per_instance: bool = True) -> list[tuple[float, float, SmellKind, str]]:
    """(dcpu, dmem, kind, app) points with both coordinates known."""
    cols = _PER if per_instance else _TOTAL
    out = []
    for r in dataset:
        x, y = getattr(r, cols[Resource.CPU]), getattr(r, cols[Resource.MEMORY])
        if x is not None and y is not None:
            out.append((x, y, r.kind, r.app))
    return out
