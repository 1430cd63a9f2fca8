"""Per-entity size, complexity and coupling metrics."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from . import java, python
from .model import ClassRecord, Corpus, MethodRecord, SourceUnit
from .resolve import CorpusIndex


@dataclass(frozen=True)
class MethodMetrics:
    entity: str
    unit_path: str
    start: int
    end: int
    nloc: int
    parameter_count: int
    cyclomatic_complexity: int
    fan_in: int  # distinct classes calling a method of this name on the owner


@dataclass(frozen=True)
class ClassMetrics:
    entity: str
    unit_path: str
    start: int
    end: int
    nloc: int
    wmc: int
    fan_in: int
    fan_out: int
    method_count: int


@dataclass
class MetricsTable:
    methods: dict[tuple[str, int], MethodMetrics] = field(default_factory=dict)
    classes: dict[str, ClassMetrics] = field(default_factory=dict)
    loc: int = 0  # code lines over the whole corpus

    def method(self, entity: str, start: int) -> MethodMetrics:
        return self.methods[(entity, start)]

    def cls(self, entity: str) -> ClassMetrics:
        return self.classes[entity]

    def row_for(self, entity: str, start: int) -> dict:
        """Metric row of whichever entity is named, as a plain dict."""
        if (entity, start) in self.methods:
            return asdict(self.methods[(entity, start)])
        if entity in self.classes:
            return asdict(self.classes[entity])
        raise KeyError(entity)

    def __len__(self) -> int:
        return len(self.methods) + len(self.classes)


def nloc(unit: SourceUnit, start: int, end: int) -> int:
    """Lines in ``[start, end]`` carrying at least one token (blank and comment lines excluded)."""
    return sum(1 for ln in unit.code_lines if start <= ln <= end)


def complexity(method: MethodRecord, flavor: str) -> int:
    fn = python.complexity_of if flavor == "python" else java.complexity_of
    return fn(method.body)


def compute_metrics(corpus: Corpus, index: CorpusIndex | None = None) -> MetricsTable:
    index = index or CorpusIndex.build(corpus)
    table = MetricsTable()
    for u in corpus.units:
        lines = u.code_lines
        table.loc += len(lines)
        def count(a: int, b: int) -> int:
            return sum(1 for ln in lines if a <= ln <= b)
        for m in u.all_methods():
            fi = index.method_fan_in(m.owner, m.name) if m.in_class and not m.is_constructor else 0
            table.methods[(m.qualname, m.start)] = MethodMetrics(
                entity=m.qualname,
                unit_path=u.path,
                start=m.start,
                end=m.end,
                nloc=count(m.start, m.end),
                parameter_count=len(m.params),
                cyclomatic_complexity=complexity(m, corpus.language_flavor),
                fan_in=fi,
            )
        for c in u.classes:
            table.classes[c.qualname] = ClassMetrics(
                entity=c.qualname,
                unit_path=u.path,
                start=c.start,
                end=c.end,
                nloc=count(c.start, c.end),
                wmc=sum(complexity(m, corpus.language_flavor) for m in c.methods),
                fan_in=index.fan_in(c.qualname),
                fan_out=index.fan_out(c.qualname),
                method_count=len(c.methods),
            )
    return table


def class_of(corpus: Corpus, qualname: str) -> ClassRecord:
    for c in corpus.classes():
        if c.qualname == qualname:
            return c
    raise KeyError(qualname)
