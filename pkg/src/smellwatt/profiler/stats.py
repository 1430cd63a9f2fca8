"""Aggregation and normalization of measured runs."""

from __future__ import annotations

import math

from ..errors import DegenerateBaseline, NoInstances, NoRuns, ValidationError
from .model import DeltaReport, MeasurementSummary, PerSmellImpact, RunSeries


def _pop_mean_std(xs: list[float]) -> tuple[float, float]:
    # fsum keeps the result independent of input order
    m = math.fsum(xs) / len(xs)
    var = math.fsum((x - m) ** 2 for x in xs) / len(xs)
    return m, math.sqrt(var)


def summarize(series: list[RunSeries]) -> MeasurementSummary:
    """Mean of per-run means, with population standard deviation across runs."""
    series = list(series)
    if not series:
        raise NoRuns("no runs to summarize")
    ids = {s.spec_id for s in series}
    if len(ids) > 1:
        raise ValidationError(f"series come from different specs: {sorted(ids)}")
    empty = [i for i, s in enumerate(series) if not s.samples]
    if empty:
        raise NoRuns(f"runs {empty} have no samples after warm-up")
    cpu = sorted(math.fsum(x.cpu_pct for x in s.samples) / len(s.samples) for s in series)
    mem = sorted(math.fsum(x.rss_bytes for x in s.samples) / len(s.samples) for s in series)
    mc, sc = _pop_mean_std(cpu)
    mm, sm = _pop_mean_std(mem)
    return MeasurementSummary(mc, sc, mm, sm, len(series))


def relative_change(before: MeasurementSummary, after: MeasurementSummary) -> DeltaReport:
    if before.mean_cpu_pct == 0 or before.mean_mem_bytes == 0:
        raise DegenerateBaseline("baseline mean is zero; percentage change undefined")
    dcpu = 100.0 * (before.mean_cpu_pct - after.mean_cpu_pct) / before.mean_cpu_pct
    dmem = 100.0 * (before.mean_mem_bytes - after.mean_mem_bytes) / before.mean_mem_bytes
    return DeltaReport(dcpu, dmem)


def normalize_per_instance(delta: DeltaReport, instance_count: int) -> PerSmellImpact:
    if instance_count == 0:
        raise NoInstances("no instances; only the total delta can be recorded")
    if instance_count < 0:
        raise ValidationError(f"instance_count must be >= 1, got {instance_count}")
    return PerSmellImpact(delta.dcpu_pct / instance_count, delta.dmem_pct / instance_count)
