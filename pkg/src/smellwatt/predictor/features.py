"""Feature vectors for impact prediction and the benchmark CSV that holds them."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

import numpy as np

from ..catalog import SmellKind
from ..detector.metrics import MetricsTable
from ..detector.rules import SmellInstance
from ..errors import IoFailure, MissingFeature, NonFiniteTarget, SchemaMismatch, ValidationError
from ..impact.model import AppCategory

COUNT_FEATURES = [f"count_{k.value}" for k in SmellKind]
METRIC_FEATURES = ["loc", "smelly_loc", "wmc_mean", "fan_in_mean", "fan_out_mean"]
CATEGORY_FEATURES = [f"cat_{c.value}" for c in AppCategory]
FEATURE_NAMES = COUNT_FEATURES + METRIC_FEATURES + CATEGORY_FEATURES

BENCH_HEADER = (
    ["app", "category"] + METRIC_FEATURES + COUNT_FEATURES + ["target_dcpu_pct", "target_dmem_pct"]
)


@dataclass(frozen=True)
class FeatureVector:
    smell_counts: dict[SmellKind, int]
    loc: int
    smelly_loc: int
    wmc_mean: float
    fan_in_mean: float
    fan_out_mean: float
    category: AppCategory

    def __post_init__(self):
        counts = {k: int(self.smell_counts.get(k, 0)) for k in SmellKind}
        object.__setattr__(self, "smell_counts", counts)
        object.__setattr__(self, "category", AppCategory(self.category))
        for name, v in [("loc", self.loc), ("smelly_loc", self.smelly_loc), ("wmc_mean", self.wmc_mean),
                        ("fan_in_mean", self.fan_in_mean), ("fan_out_mean", self.fan_out_mean),
                        *counts.items()]:
            if not math.isfinite(v) or v < 0:
                raise ValidationError(f"feature {name} must be finite and >= 0, got {v}")

    def as_dict(self) -> dict[str, float]:
        d: dict[str, float] = {f"count_{k.value}": float(v) for k, v in self.smell_counts.items()}
        d.update(
            loc=float(self.loc), smelly_loc=float(self.smelly_loc), wmc_mean=float(self.wmc_mean),
            fan_in_mean=float(self.fan_in_mean), fan_out_mean=float(self.fan_out_mean),
        )
        for c in AppCategory:
            d[f"cat_{c.value}"] = 1.0 if c is self.category else 0.0
        return d

    def to_json(self) -> dict:
        return {
            "category": self.category.value,
            **{k: (int(v) if k.startswith("count_") or k in ("loc", "smelly_loc") else v)
               for k, v in self.as_dict().items() if not k.startswith("cat_")},
        }

    @classmethod
    def from_mapping(cls, d: Mapping) -> "FeatureVector":
        try:
            return cls(
                {k: int(d[f"count_{k.value}"]) for k in SmellKind},
                int(d["loc"]), int(d["smelly_loc"]),
                float(d["wmc_mean"]), float(d["fan_in_mean"]), float(d["fan_out_mean"]),
                AppCategory.parse(str(d["category"])),
            )
        except KeyError as exc:
            raise MissingFeature(exc.args[0]) from None


def feature_row(fv: FeatureVector | Mapping, names: list[str]) -> np.ndarray:
    """Values of ``names`` in order; a plain mapping may omit unselected features."""
    d = fv.as_dict() if isinstance(fv, FeatureVector) else fv
    out = np.empty(len(names))
    for i, n in enumerate(names):
        if n not in d:
            raise MissingFeature(n)
        out[i] = float(d[n])
    return out


def smelly_lines(smells: list[SmellInstance]) -> int:
    lines = set()
    for s in smells:
        a, b = s.line_span
        lines.update((s.unit_path, ln) for ln in range(a, b + 1))
    return len(lines)


def build_feature_vector(metrics: MetricsTable, smells: list[SmellInstance], category: AppCategory | str) -> FeatureVector:
    counts = {k: 0 for k in SmellKind}
    for s in smells:
        counts[s.kind] += 1
    classes = list(metrics.classes.values())
    mean = (lambda xs: math.fsum(xs) / len(xs)) if classes else (lambda xs: 0.0)
    return FeatureVector(
        counts,
        loc=metrics.loc,
        smelly_loc=smelly_lines(smells),
        wmc_mean=mean([c.wmc for c in classes]),
        fan_in_mean=mean([c.fan_in for c in classes]),
        fan_out_mean=mean([c.fan_out for c in classes]),
        category=AppCategory(category),
    )


@dataclass(frozen=True)
class LabeledExample:
    """Features with measured targets; a plain name -> value mapping also
    serves as features for synthetic data."""

    features: FeatureVector | Mapping[str, float]
    target_dcpu_pct: float
    target_dmem_pct: float
    app: str = field(default="", compare=False)

    def __post_init__(self):
        for name in ("target_dcpu_pct", "target_dmem_pct"):
            if not math.isfinite(getattr(self, name)):
                raise NonFiniteTarget(f"{self.app or 'example'}: {name} = {getattr(self, name)}")

    def target(self, which: str) -> float:
        return self.target_dcpu_pct if which == "cpu" else self.target_dmem_pct


def design(data: list[LabeledExample], names: list[str]) -> np.ndarray:
    return np.array([feature_row(ex.features, names) for ex in data]).reshape(len(data), len(names))


def targets(data: list[LabeledExample], which: str) -> np.ndarray:
    return np.array([ex.target(which) for ex in data], dtype=float)


def read_bench_csv(path) -> list[LabeledExample]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoFailure(path, exc.strerror or str(exc)) from exc
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != BENCH_HEADER:
        raise SchemaMismatch(f"{path}: bench header does not match {','.join(BENCH_HEADER)}")
    out = []
    for row in reader:
        try:
            out.append(LabeledExample(
                FeatureVector.from_mapping(row),
                float(row["target_dcpu_pct"]),
                float(row["target_dmem_pct"]),
                app=row["app"],
            ))
        except ValueError as exc:
            if isinstance(exc, ValidationError):
                raise
            raise SchemaMismatch(f"{path}: {exc}") from exc
    return out


def write_bench_csv(data: list[LabeledExample]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(BENCH_HEADER)
    for ex in data:
        fv = ex.features
        w.writerow(
            [ex.app, fv.category.value, fv.loc, fv.smelly_loc, repr(float(fv.wmc_mean)),
             repr(float(fv.fan_in_mean)), repr(float(fv.fan_out_mean))]
            + [fv.smell_counts[k] for k in SmellKind]
            + [repr(ex.target_dcpu_pct), repr(ex.target_dmem_pct)]
        )
    return buf.getvalue()
