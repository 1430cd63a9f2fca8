"""Batch-refactoring plans under a resource objective, and report rendering."""

from __future__ import annotations

import csv
import enum
import io
import json
from collections import Counter
from dataclasses import dataclass, field, replace
from decimal import Decimal
from typing import Iterable, Mapping

from .catalog import ImpactDirection, SmellKind, catalog_lookup
from .detector.rules import SmellInstance
from .errors import EmptyInventory, NoImpactSource, UnsupportedFormat, ValidationError
from .impact.analytics import AdditivityReport, category_profile
from .impact.model import AppCategory, ImpactDataset
from .predictor.features import FeatureVector
from .predictor.training import ImpactPrediction, TrainedModel, predict

FORMATS = ("json", "markdown", "csv-plotdata")

REASON_WORSENS_BOTH = "worsens CPU and memory"
REASON_MIXED_CATALOG = "improves CPU but worsens memory"
REASON_MIXED_UNKNOWN = "model and measured impact disagree in sign"
REASON_OVER_BUDGET = "predicted memory worsening exceeds the budget"
REASON_NO_MEMORY_ESTIMATE = "memory impact unknown, budget cannot be checked"
REASON_INCLUDED = "improves CPU and memory"


class ObjectiveMode(str, enum.Enum):
    MINIMIZE_BOTH = "MINIMIZE_BOTH"
    CPU_ONLY = "CPU_ONLY"
    MEMORY_ONLY = "MEMORY_ONLY"
    MAINTAINABILITY_FIRST = "MAINTAINABILITY_FIRST"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> "ObjectiveMode":
        return cls(text.strip().upper().replace("-", "_"))


@dataclass(frozen=True)
class Objective:
    mode: ObjectiveMode = ObjectiveMode.MINIMIZE_BOTH
    budget: float | None = None  # largest tolerated memory worsening, percent

    def __post_init__(self):
        object.__setattr__(self, "mode", ObjectiveMode.parse(self.mode) if isinstance(self.mode, str) else self.mode)
        if self.budget is not None:
            if self.budget < 0:
                raise ValidationError(f"budget must be >= 0, got {self.budget}")
            if self.mode is not ObjectiveMode.CPU_ONLY:
                raise ValidationError("a memory budget only applies to CPU_ONLY")


@dataclass(frozen=True)
class PlanEntry:
    kind: SmellKind
    instances: int
    reason: str
    cpu_direction: ImpactDirection
    mem_direction: ImpactDirection
    additive: ImpactPrediction | None = None  # per-instance impact x count
    model: ImpactPrediction | None = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "instances": self.instances,
            "reason": self.reason,
            "cpu_direction": self.cpu_direction.value,
            "mem_direction": self.mem_direction.value,
            "additive": self.additive.to_dict() if self.additive else None,
            "model": self.model.to_dict() if self.model else None,
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "PlanEntry":
        pred = lambda x: ImpactPrediction(x["dcpu_pct"], x["dmem_pct"]) if x else None  # noqa: E731
        return cls(SmellKind.parse(d["kind"]), int(d["instances"]), d["reason"],
                   ImpactDirection(d["cpu_direction"]), ImpactDirection(d["mem_direction"]),
                   pred(d.get("additive")), pred(d.get("model")))


@dataclass(frozen=True)
class RefactoringPlan:
    objective: Objective
    include: list[PlanEntry] = field(default_factory=list)
    exclude: list[PlanEntry] = field(default_factory=list)
    additive_total: ImpactPrediction | None = None
    model_total: ImpactPrediction | None = None

    def included_kinds(self) -> list[SmellKind]:
        return [e.kind for e in self.include]

    def excluded_kinds(self) -> list[SmellKind]:
        return [e.kind for e in self.exclude]

    def to_dict(self) -> dict:
        return {
            "objective": {"mode": self.objective.mode.value, "budget": self.objective.budget},
            "include": [e.to_dict() for e in self.include],
            "exclude": [e.to_dict() for e in self.exclude],
            "additive_total": self.additive_total.to_dict() if self.additive_total else None,
            "model_total": self.model_total.to_dict() if self.model_total else None,
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "RefactoringPlan":
        pred = lambda x: ImpactPrediction(x["dcpu_pct"], x["dmem_pct"]) if x else None  # noqa: E731
        obj = d.get("objective", {})
        return cls(
            Objective(ObjectiveMode.parse(obj.get("mode", "MINIMIZE_BOTH")), obj.get("budget")),
            [PlanEntry.from_dict(e) for e in d.get("include", [])],
            [PlanEntry.from_dict(e) for e in d.get("exclude", [])],
            pred(d.get("additive_total")),
            pred(d.get("model_total")),
        )


def _d(v: float) -> Decimal:
    return Decimal(repr(float(v)))


def _scale(per: float | None, count: int) -> Decimal | None:
    # decimal product, so 0.33 x 10 is 3.3 and doubling a count doubles the result exactly
    return None if per is None else _d(per) * count


def _total(parts: list[Decimal | None]) -> float | None:
    kept = [x for x in parts if x is not None]
    return float(sum(kept, Decimal(0))) if kept else None


def _f(x: Decimal | None) -> float | None:
    return None if x is None else float(x)


def _per_instance(dataset: ImpactDataset, kind: SmellKind, category: AppCategory | None) -> tuple[float | None, float | None]:
    """Mean per-instance impact of ``kind``, within ``category`` when it has rows."""
    rows = [r for r in dataset if r.kind is kind]
    if category is not None and any(r.category is category for r in rows):
        c = category_profile(dataset, category, kind)
        return c.dcpu_per_instance, c.dmem_per_instance
    cpu = [r.dcpu_per_instance for r in rows if r.dcpu_per_instance is not None]
    mem = [r.dmem_per_instance for r in rows if r.dmem_per_instance is not None]
    mean = lambda xs: float(sum(map(_d, xs), Decimal(0)) / len(xs)) if xs else None  # noqa: E731
    return mean(cpu), mean(mem)


def _only(fv: FeatureVector, counts: Mapping[SmellKind, int]) -> FeatureVector:
    return replace(fv, smell_counts={k: counts.get(k, 0) for k in SmellKind})


def _model_total(model: TrainedModel, fv: FeatureVector, counts: Mapping[SmellKind, int]) -> ImpactPrediction:
    """Model estimate for refactoring ``counts``: per-instance prediction on a
    vector holding only those counts, times their instance total."""
    n = sum(counts.values())
    p = predict(model, _only(fv, counts))
    return ImpactPrediction(_f(_scale(p.dcpu_pct, n)), _f(_scale(p.dmem_pct, n)))


def _signs_disagree(a: float | None, b: float | None) -> bool:
    return a is not None and b is not None and a * b < 0


def inventory_counts(inventory: Iterable[SmellInstance] | Mapping) -> dict[SmellKind, int]:
    if isinstance(inventory, Mapping):
        counts = {SmellKind(k) if not isinstance(k, SmellKind) else k: int(v) for k, v in inventory.items()}
        if any(v < 0 for v in counts.values()):
            raise ValidationError("instance counts must be >= 0")
        return {k: v for k, v in counts.items() if v}
    return dict(Counter(s.kind for s in inventory))


def plan_batch(inventory, model_or_dataset, objective: Objective | None = None, *,
               features: FeatureVector | None = None, category: AppCategory | str | None = None) -> RefactoringPlan:
    """Decide which smell kinds of an inventory to refactor together.

    ``inventory`` is a list of detected instances or a kind -> count
    mapping. ``model_or_dataset`` is an ImpactDataset, a TrainedModel
    (needs ``features``), or a tuple holding one of each.
    """
    objective = objective or Objective()
    counts = inventory_counts(inventory)
    if not counts:
        raise EmptyInventory("inventory has no smell instances")
    sources = model_or_dataset if isinstance(model_or_dataset, tuple) else (model_or_dataset,)
    dataset = next((s for s in sources if isinstance(s, ImpactDataset)), None)
    model = next((s for s in sources if isinstance(s, TrainedModel)), None)
    if dataset is None and model is None:
        raise NoImpactSource("need an impact dataset or a trained model")
    if model is not None and features is None:
        raise NoImpactSource("a model needs the application's feature vector")
    cat = AppCategory(category) if category is not None else (features.category if features else None)

    include, exclude = [], []
    exact: dict[SmellKind, tuple] = {}
    mode = objective.mode
    for kind in sorted(counts, key=lambda k: k.order):
        n = counts[kind]
        desc = catalog_lookup(kind)
        additive = None
        if dataset is not None:
            pc, pm = _per_instance(dataset, kind, cat)
            if pc is not None or pm is not None:
                exact[kind] = (_scale(pc, n), _scale(pm, n))
                additive = ImpactPrediction(*map(_f, exact[kind]))
        predicted = _model_total(model, features, {kind: n}) if model is not None else None
        cpu_dir, mem_dir = desc.cpu_direction, desc.mem_direction
        if additive and predicted:
            if _signs_disagree(additive.dcpu_pct, predicted.dcpu_pct):
                cpu_dir = ImpactDirection.MIXED_UNKNOWN
            if _signs_disagree(additive.dmem_pct, predicted.dmem_pct):
                mem_dir = ImpactDirection.MIXED_UNKNOWN
        entry = lambda reason: PlanEntry(kind, n, reason, cpu_dir, mem_dir, additive, predicted)  # noqa: E731

        improves = ImpactDirection.IMPROVES
        if mode is ObjectiveMode.MAINTAINABILITY_FIRST:
            include.append(entry(_cost_note(cpu_dir, mem_dir)))
        elif ImpactDirection.MIXED_UNKNOWN in (cpu_dir, mem_dir) and (
            mode is ObjectiveMode.MINIMIZE_BOTH
            or (mode is ObjectiveMode.CPU_ONLY and cpu_dir is ImpactDirection.MIXED_UNKNOWN)
            or (mode is ObjectiveMode.MEMORY_ONLY and mem_dir is ImpactDirection.MIXED_UNKNOWN)
        ):
            exclude.append(entry(REASON_MIXED_UNKNOWN))
        elif cpu_dir is improves and mem_dir is improves:
            include.append(entry(REASON_INCLUDED))
        elif desc.cpu_direction is ImpactDirection.WORSENS and desc.mem_direction is ImpactDirection.WORSENS:
            exclude.append(entry(REASON_WORSENS_BOTH))
        elif mode is ObjectiveMode.CPU_ONLY and cpu_dir is improves:
            reason = _budget_check(objective.budget, additive, predicted)
            (exclude if reason else include).append(entry(reason or REASON_MIXED_CATALOG))
        else:
            exclude.append(entry(REASON_MIXED_CATALOG))

    chosen = {e.kind: e.instances for e in include}
    additive_total = None
    if dataset is not None:
        parts = [exact[e.kind] for e in include if e.kind in exact]
        additive_total = ImpactPrediction(_total([p[0] for p in parts]), _total([p[1] for p in parts]))
    model_total = _model_total(model, features, chosen) if model is not None and chosen else None
    return RefactoringPlan(objective, include, exclude, additive_total, model_total)


def _budget_check(budget, additive, predicted) -> str | None:
    if budget is None:
        return None
    worst = [p.dmem_pct for p in (additive, predicted) if p is not None and p.dmem_pct is not None]
    if not worst:
        return REASON_NO_MEMORY_ESTIMATE
    return REASON_OVER_BUDGET if -min(worst) > budget else None


def _cost_note(cpu: ImpactDirection, mem: ImpactDirection) -> str:
    if cpu is ImpactDirection.IMPROVES and mem is ImpactDirection.IMPROVES:
        return REASON_INCLUDED
    bad = [name for name, d in (("CPU", cpu), ("memory", mem)) if d is not ImpactDirection.IMPROVES]
    return "included for maintainability; expected cost on " + " and ".join(bad)


# -- reports ---------------------------------------------------------------------

def _fmt(v) -> str:
    return "" if v is None else f"{v:.4f}".rstrip("0").rstrip(".") if isinstance(v, float) else str(v)


def _plan_markdown(plan: RefactoringPlan) -> str:
    out = [f"# Refactoring plan ({plan.objective.mode.value})", ""]
    if plan.objective.budget is not None:
        out += [f"Memory budget: {plan.objective.budget}%", ""]
    for title, entries in (("Include", plan.include), ("Exclude", plan.exclude)):
        out += [f"## {title}", "", "| kind | instances | dCPU % | dMem % | reason |", "|---|---|---|---|---|"]
        for e in entries:
            a = e.additive or ImpactPrediction(None, None)
            out.append(f"| {e.kind.value} | {e.instances} | {_fmt(a.dcpu_pct)} | {_fmt(a.dmem_pct)} | {e.reason} |")
        out.append("")
    out += ["## Predicted deltas", ""]
    for label, p in (("additive estimate", plan.additive_total), ("model", plan.model_total)):
        if p is not None:
            out.append(f"- {label}: CPU {_fmt(p.dcpu_pct)}%, memory {_fmt(p.dmem_pct)}%")
    if plan.additive_total is None and plan.model_total is None:
        out.append("- none")
    return "\n".join(out) + "\n"


def _dataset_markdown(ds: ImpactDataset) -> str:
    out = ["# Impact records", "", "| app | category | kind | instances | dCPU % | dMem % |", "|---|---|---|---|---|---|"]
    for r in ds:
        out.append(f"| {r.app} | {r.category.value} | {r.kind.value} | {_fmt(r.instance_count)} | "
                   f"{_fmt(r.dcpu_total_pct)} | {_fmt(r.dmem_total_pct)} |")
    return "\n".join(out) + "\n"


def _additivity_markdown(rep: AdditivityReport) -> str:
    out = ["# Batch additivity", "", "| mode | resource | apps | mean dev | min dev (app) | max dev (app) |",
           "|---|---|---|---|---|---|"]
    for (mode, res), s in rep.aggregate.items():
        out.append(f"| {mode.value} | {res.value} | {s.app_count} | {_fmt(s.mean_deviation)} | "
                   f"{_fmt(s.min_deviation)} ({s.min_app}) | {_fmt(s.max_deviation)} ({s.max_app}) |")
    out += ["", "| app | mode | resource | predicted | observed | deviation |", "|---|---|---|---|---|---|"]
    for r in rep.rows:
        out.append(f"| {r.app} | {r.mode.value} | {r.resource.value} | {_fmt(r.predicted_sum)} | "
                   f"{_fmt(r.observed_batch)} | {_fmt(r.deviation)} |")
    return "\n".join(out) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["dcpu", "dmem", "kind", "app"])
    for x, y, kind, app in rows:
        w.writerow(["" if x is None else repr(x), "" if y is None else repr(y), kind, app])
    return buf.getvalue()


def _dataset_json(ds: ImpactDataset) -> dict:
    return {"records": [
        {"app": r.app, "category": r.category.value, "kind": r.kind.value, "instance_count": r.instance_count,
         "dcpu_total_pct": r.dcpu_total_pct, "dmem_total_pct": r.dmem_total_pct,
         "dcpu_per_instance": r.dcpu_per_instance, "dmem_per_instance": r.dmem_per_instance}
        for r in ds
    ]}


def emit_report(obj, fmt: str = "json") -> str:
    """Render a plan, impact dataset or additivity report.

    csv-plotdata rows are (dcpu, dmem, kind, app): CPU change on the x axis,
    memory change on the y axis, in percent.
    """
    if fmt not in FORMATS:
        raise UnsupportedFormat(f"format must be one of {', '.join(FORMATS)}, got {fmt!r}")
    if isinstance(obj, RefactoringPlan):
        if fmt == "json":
            return json.dumps(obj.to_dict(), indent=2) + "\n"
        if fmt == "markdown":
            return _plan_markdown(obj)
        rows = []
        for e in obj.include + obj.exclude:
            a = e.additive or ImpactPrediction(None, None)
            rows.append((a.dcpu_pct, a.dmem_pct, e.kind.value, "include" if e in obj.include else "exclude"))
        return _csv(rows)
    if isinstance(obj, ImpactDataset):
        if fmt == "json":
            return json.dumps(_dataset_json(obj), indent=2) + "\n"
        if fmt == "markdown":
            return _dataset_markdown(obj)
        return _csv((r.dcpu_total_pct, r.dmem_total_pct, r.kind.value, r.app) for r in obj)
    if isinstance(obj, AdditivityReport):
        if fmt == "json":
            return json.dumps(obj.to_dict(), indent=2) + "\n"
        if fmt == "markdown":
            return _additivity_markdown(obj)
        by_key: dict[tuple[str, str], dict] = {}
        for r in obj.rows:
            by_key.setdefault((r.app, r.mode.value), {})[r.resource.value] = r.observed_batch
        return _csv((v.get("CPU"), v.get("MEMORY"), mode, app) for (app, mode), v in by_key.items())
    raise ValidationError(f"cannot render {type(obj).__name__}")


__all__ = [
    "FORMATS",
    "Objective",
    "ObjectiveMode",
    "PlanEntry",
    "RefactoringPlan",
    "emit_report",
    "inventory_counts",
    "plan_batch",
]
