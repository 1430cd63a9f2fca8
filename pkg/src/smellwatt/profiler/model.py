"""Records produced by the measurement protocol."""

from __future__ import annotations

import hashlib
import json
import shlex
from dataclasses import asdict, dataclass, field

from ..errors import ValidationError


@dataclass(frozen=True)
class RunSpec:
    command: tuple[str, ...]
    workload_args: tuple[str, ...] = ()
    duration_limit: float = 60.0  # seconds
    sample_interval: float = 10.0  # milliseconds
    warmup_discard: float = 1.0  # seconds
    repetitions: int = 7

    def __post_init__(self):
        object.__setattr__(self, "command", tuple(self.command))
        object.__setattr__(self, "workload_args", tuple(self.workload_args))
        if not self.command:
            raise ValidationError("RunSpec.command is empty")
        if self.sample_interval <= 0:
            raise ValidationError("sample_interval must be > 0")
        if self.repetitions < 1:
            raise ValidationError("repetitions must be >= 1")
        if self.warmup_discard < 0 or self.duration_limit <= self.warmup_discard:
            raise ValidationError("duration_limit must exceed warmup_discard")

    @classmethod
    def from_shell(cls, cmd: str, **kw) -> "RunSpec":
        return cls(tuple(shlex.split(cmd)), **kw)

    @property
    def argv(self) -> list[str]:
        return [*self.command, *self.workload_args]

    @property
    def spec_id(self) -> str:
        blob = json.dumps(asdict(self), sort_keys=True).encode()
        return hashlib.sha1(blob).hexdigest()[:12]


@dataclass(frozen=True)
class ResourceSample:
    t: float  # ms since subject start
    cpu_pct: float  # percent of one core over the preceding interval
    rss_bytes: int


@dataclass
class RunSeries:
    spec_id: str
    samples: list[ResourceSample] = field(default_factory=list)
    exit_status: int | None = None
    timed_out: bool = False
    pinned_cpu: int | None = None

    @property
    def mean_cpu(self) -> float:
        return sum(s.cpu_pct for s in self.samples) / len(self.samples)

    @property
    def mean_rss(self) -> float:
        return sum(s.rss_bytes for s in self.samples) / len(self.samples)


@dataclass(frozen=True)
class MeasurementSummary:
    mean_cpu_pct: float
    std_cpu_pct: float
    mean_mem_bytes: float
    std_mem_bytes: float
    run_count: int

    def to_dict(self) -> dict:
        d = asdict(self)
        d["std_kind"] = "population"
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "MeasurementSummary":
        return cls(
            float(d["mean_cpu_pct"]), float(d["std_cpu_pct"]),
            float(d["mean_mem_bytes"]), float(d["std_mem_bytes"]), int(d["run_count"]),
        )


@dataclass(frozen=True)
class DeltaReport:
    """Relative change in percent; positive means the resource use went down."""

    dcpu_pct: float
    dmem_pct: float


@dataclass(frozen=True)
class PerSmellImpact:
    dcpu_per_instance: float
    dmem_per_instance: float
