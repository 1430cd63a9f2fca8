"""Source ingestion, metrics, dependency cycles and rule-based smell detection."""

from .corpus import ingest_corpus, parse_source
from .graph import DependencyGraph, build_dependency_graph, find_cycles
from .metrics import ClassMetrics, MethodMetrics, MetricsTable, compute_metrics
from .model import ClassRecord, Corpus, FieldRecord, MethodRecord, SourceUnit
from .rules import (
    RuleConfig,
    SmellInstance,
    count_by_kind,
    detect_smells,
    dump_instances,
    load_instances,
)

__all__ = [
    "ClassMetrics",
    "ClassRecord",
    "Corpus",
    "DependencyGraph",
    "FieldRecord",
    "MethodMetrics",
    "MethodRecord",
    "MetricsTable",
    "RuleConfig",
    "SmellInstance",
    "SourceUnit",
    "build_dependency_graph",
    "compute_metrics",
    "count_by_kind",
    "detect_smells",
    "dump_instances",
    "find_cycles",
    "ingest_corpus",
    "load_instances",
    "parse_source",
]
