"""Per-application impact records and batch observations."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from ..catalog import ImpactDirection, SmellKind, catalog_lookup
from ..errors import DuplicateKey, ValidationError

# |per_instance * instance_count - total| allowed by the record invariant
RECORD_TOL = 1e-9


class AppCategory(str, enum.Enum):
    EMAIL_CLIENT = "email-client"
    TESTING = "testing"
    EDITOR = "editor"
    PROJECT_MANAGEMENT = "project-management"
    PARSER = "parser"
    CLOUD = "cloud"
    ERROR_LOGGING = "error-logging"
    MACHINE_LEARNING = "machine-learning"
    API_INTEGRATOR = "api-integrator"
    WEB_SERVER = "web-server"
    CODE_ANALYZER = "code-analyzer"
    WEB_FRAMEWORK = "web-framework"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> "AppCategory":
        return cls(text.strip().lower().replace("_", "-").replace(" ", "-"))


class BatchMode(str, enum.Enum):
    ALL = "ALL"
    IMPROVING = "IMPROVING"
    WORSENING = "WORSENING"

    def __str__(self) -> str:
        return self.value


def _check_finite(name: str, v: float | None) -> None:
    if v is not None and not math.isfinite(v):
        raise ValidationError(f"{name} is not finite: {v}")


@dataclass(frozen=True)
class ImpactRecord:
    """Impact of refactoring every instance of one kind in one application.

    Numeric cells may be ``None`` when the value is unknown; the
    total/per-instance invariant is only checked when all three are present.
    Positive deltas are improvements.
    """

    app: str
    category: AppCategory
    kind: SmellKind
    instance_count: int | None
    dcpu_total_pct: float | None
    dmem_total_pct: float | None
    dcpu_per_instance: float | None
    dmem_per_instance: float | None

    def __post_init__(self):
        for name in ("dcpu_total_pct", "dmem_total_pct", "dcpu_per_instance", "dmem_per_instance"):
            _check_finite(name, getattr(self, name))
        n = self.instance_count
        if n is not None and n < 0:
            raise ValidationError(f"instance_count must be >= 0, got {n}")
        if n == 0 and (self.dcpu_per_instance is not None or self.dmem_per_instance is not None):
            raise ValidationError("per-instance impact is undefined with zero instances")
        if n:
            for per, tot, res in (
                (self.dcpu_per_instance, self.dcpu_total_pct, "cpu"),
                (self.dmem_per_instance, self.dmem_total_pct, "mem"),
            ):
                if per is not None and tot is not None and abs(per * n - tot) > RECORD_TOL:
                    raise ValidationError(
                        f"{res}: per_instance {per} x count {n} = {per * n} != total {tot}"
                    )

    @property
    def key(self) -> tuple[str, SmellKind]:
        return (self.app, self.kind)

    @classmethod
    def from_totals(cls, app, category, kind, count, dcpu, dmem) -> "ImpactRecord":
        """Build a record from measured totals, deriving the per-instance columns."""
        per = (lambda v: None if v is None or not count else v / count)
        return cls(app, AppCategory(category), SmellKind(kind), count, dcpu, dmem, per(dcpu), per(dmem))


@dataclass(frozen=True)
class BatchRecord:
    """Observed impact of refactoring several kinds together in one pass."""

    app: str
    mode: BatchMode
    kinds: tuple[SmellKind, ...]
    dcpu_total_pct: float | None
    dmem_total_pct: float | None

    def __post_init__(self):
        kinds = tuple(sorted(set(self.kinds), key=lambda k: k.order))
        object.__setattr__(self, "kinds", kinds)
        if not kinds:
            raise ValidationError(f"batch for {self.app} has no kinds")
        _check_finite("dcpu_total_pct", self.dcpu_total_pct)
        _check_finite("dmem_total_pct", self.dmem_total_pct)
        if self.mode is BatchMode.ALL:
            return
        want = ImpactDirection.IMPROVES if self.mode is BatchMode.IMPROVING else ImpactDirection.WORSENS
        for k in kinds:
            d = catalog_lookup(k)
            if want not in (d.cpu_direction, d.mem_direction):
                raise ValidationError(f"{k} cannot be part of a {self.mode} batch")


@dataclass
class ImpactDataset:
    """Records in file order, indexed by (app, kind)."""

    records: list[ImpactRecord] = field(default_factory=list)

    def __post_init__(self):
        self._index: dict[tuple[str, SmellKind], ImpactRecord] = {}
        for r in self.records:
            if r.key in self._index:
                raise DuplicateKey(r.app, r.kind.value)
            self._index[r.key] = r

    def __eq__(self, other) -> bool:
        return isinstance(other, ImpactDataset) and self.records == other.records

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def get(self, app: str, kind: SmellKind | str) -> ImpactRecord | None:
        return self._index.get((app, SmellKind(kind)))

    def apps(self) -> list[str]:
        return sorted({r.app for r in self.records})

    def category_of(self, app: str) -> AppCategory:
        for r in self.records:
            if r.app == app:
                return r.category
        raise KeyError(app)
