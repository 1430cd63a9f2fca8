"""The sixteen rule-based smell detectors."""

from __future__ import annotations

import json
import re
from collections import defaultdict
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

from ..catalog import SmellKind
from ..errors import BadRuleConfig
from .graph import DependencyGraph, build_dependency_graph, find_cycles
from .metrics import MetricsTable, compute_metrics
from .model import ClassRecord, Corpus, MethodRecord, SourceUnit, Token
from .resolve import RECEIVER_SELF, CorpusIndex

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib


@dataclass(frozen=True)
class RuleConfig:
    """Detection thresholds; comparisons are documented next to each field."""

    long_parameter_max: int = 5  # parameter_count > max
    god_method_nloc: int = 100  # nloc > value
    god_class_nloc: int = 1000  # nloc > value
    lazy_class_nloc: int = 20  # nloc < value ...
    lazy_class_wmc: int = 3  # ... and wmc < value
    duplicate_window: int = 25  # identical token window length
    shotgun_fan_in: int = 7  # distinct calling classes >= value
    long_statement_tokens: int = 120  # statement tokens > value
    switch_cases: int = 10  # case labels > value
    spaghetti_nloc: int = 40  # nloc > value ...
    spaghetti_complexity: int = 15  # ... and complexity > value
    refused_bequest_ratio: float = 1 / 3  # used / inherited < value
    refused_bequest_min_inherited: int = 3
    primitive_prefix_fields: int = 3  # same-prefix primitive fields >= value
    orphan_min_external: int = 2  # referencing classes >= value
    middleman_ratio: float = 0.5  # delegating / methods > value

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, bool) or not isinstance(v, (int, float)) or v <= 0:
                raise BadRuleConfig(f"{f.name} must be a positive number, got {v!r}")

    @classmethod
    def from_mapping(cls, data: dict) -> "RuleConfig":
        names = {f.name for f in fields(cls)}
        flat = {}
        for key, value in data.items():
            k = key.replace("-", "_").replace(".", "_")
            if k not in names:
                raise BadRuleConfig(f"unknown rule threshold {key!r}")
            flat[k] = value
        return cls(**flat)

    @classmethod
    def from_toml(cls, path: str | Path) -> "RuleConfig":
        with open(path, "rb") as fh:
            try:
                data = tomllib.load(fh)
            except tomllib.TOMLDecodeError as exc:
                raise BadRuleConfig(f"{path}: {exc}") from exc
        return cls.from_mapping(data)


@dataclass(frozen=True)
class SmellInstance:
    kind: SmellKind
    unit_path: str
    entity_name: str
    line_span: tuple[int, int]
    evidence: dict = field(hash=False)

    def sort_key(self):
        return (self.unit_path, self.line_span[0], self.kind.order, self.entity_name, self.line_span[1])

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "unit_path": self.unit_path,
            "entity_name": self.entity_name,
            "line_span": list(self.line_span),
            "evidence": dict(sorted(self.evidence.items())),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SmellInstance":
        return cls(
            SmellKind.parse(d["kind"]),
            d["unit_path"],
            d["entity_name"],
            (int(d["line_span"][0]), int(d["line_span"][1])),
            dict(d.get("evidence", {})),
        )


def dump_instances(instances: list[SmellInstance]) -> str:
    return json.dumps([i.to_dict() for i in instances], indent=2, sort_keys=True) + "\n"


def load_instances(text: str) -> list[SmellInstance]:
    return [SmellInstance.from_dict(d) for d in json.loads(text)]


_ASSIGN_OPS = frozenset({"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", "++", "--", "//=", "**=", "@="})
_CAMEL_PREFIX = re.compile(r"^_*([a-z][a-z0-9]*)(?:[A-Z]|_[a-z0-9])")
_SKIP_UNUSED_PARAM_ANNOTATIONS = frozenset({"Override", "override"})


class _Detector:
    def __init__(self, corpus: Corpus, cfg: RuleConfig):
        self.corpus = corpus
        self.cfg = cfg
        self.python = corpus.language_flavor == "python"
        self.index = CorpusIndex.build(corpus)
        self.metrics = compute_metrics(corpus, self.index)
        self.graph = build_dependency_graph(corpus, self.index)
        self.out: list[SmellInstance] = []

    def emit(self, kind, unit: SourceUnit, entity: str, start: int, end: int, **evidence) -> None:
        self.out.append(SmellInstance(kind, unit.path, entity, (start, end), evidence))

    def run(self) -> list[SmellInstance]:
        self.cyclic_dependency()
        for u in self.corpus.units:
            for m in u.all_methods():
                self.method_rules(u, m)
            for c in u.classes:
                self.class_rules(u, c)
        self.duplicate_code()
        uniq = {(i.sort_key(), json.dumps(i.evidence, sort_keys=True)): i for i in self.out}
        return sorted(uniq.values(), key=SmellInstance.sort_key)

    # -- corpus level -------------------------------------------------------

    def cyclic_dependency(self) -> None:
        units = {u.path: u for u in self.corpus.units}
        for cycle in find_cycles(self.graph):
            members = set(cycle)
            head = cycle[0]
            wit = sorted(
                w for (a, b), w in self.graph.witness.items() if a == head and b in members
            )
            path, line = wit[0]
            self.emit(
                SmellKind.CYCLIC_DEPENDENCY, units[path], ",".join(cycle), line, line,
                cycle_size=len(cycle),
            )

    def duplicate_code(self) -> None:
        w = self.cfg.duplicate_window
        methods: list[tuple[SourceUnit, MethodRecord]] = [
            (u, m) for u in self.corpus.units for m in u.all_methods() if len(m.body) >= w
        ]
        where: dict[tuple[str, ...], list[tuple[int, int]]] = defaultdict(list)
        for mi, (_u, m) in enumerate(methods):
            texts = [t.text for t in m.body]
            for p in range(len(texts) - w + 1):
                where[tuple(texts[p : p + w])].append((mi, p))
        covered: dict[int, set[int]] = defaultdict(set)
        for locs in where.values():
            if len(locs) < 2:
                continue
            for mi, p in locs:
                others = [
                    (mj, q) for mj, q in locs if mj != mi or abs(q - p) >= w
                ]
                if others:
                    covered[mi].update(range(p, p + w))
        for mi, idxs in covered.items():
            u, m = methods[mi]
            lines = [m.body[i].line for i in idxs]
            self.emit(
                SmellKind.DUPLICATE_CODE, u, m.qualname, min(lines), max(lines),
                duplicate_tokens=len(idxs),
            )

    # -- method level -------------------------------------------------------

    def method_rules(self, u: SourceUnit, m: MethodRecord) -> None:
        cfg = self.cfg
        mm = self.metrics.method(m.qualname, m.start)
        if mm.parameter_count > cfg.long_parameter_max:
            self.emit(SmellKind.LONG_PARAMETER, u, m.qualname, m.start, m.end,
                      parameter_count=mm.parameter_count)
        if mm.nloc > cfg.god_method_nloc:
            self.emit(SmellKind.GOD_METHOD, u, m.qualname, m.start, m.end, nloc=mm.nloc)
        if mm.nloc > cfg.spaghetti_nloc and mm.cyclomatic_complexity > cfg.spaghetti_complexity:
            self.emit(SmellKind.SPAGHETTI_CODE, u, m.qualname, m.start, m.end,
                      nloc=mm.nloc, cyclomatic_complexity=mm.cyclomatic_complexity)
        for st in m.statements:
            if st.tokens > cfg.long_statement_tokens:
                self.emit(SmellKind.LONG_STATEMENT, u, m.qualname, st.start, st.end,
                          statement_tokens=st.tokens)
        for sw in m.switches:
            if sw.cases > cfg.switch_cases:
                self.emit(SmellKind.LONG_STATEMENT, u, m.qualname, sw.start, sw.end,
                          switch_cases=sw.cases)
        unused = self.unused_params(m)
        if unused:
            self.emit(SmellKind.SPECULATIVE_GENERALITY, u, m.qualname, m.start, m.end,
                      unused_parameters=len(unused))
        sb = sum(1 for t in m.body if t.text == "StringBuffer")
        if sb:
            self.emit(SmellKind.PRIMITIVE_OBSESSION, u, m.qualname, m.start, m.end,
                      string_buffer_uses=sb)

    def unused_params(self, m: MethodRecord) -> list[str]:
        if m.is_abstract or not m.body or not m.params:
            return []
        if _SKIP_UNUSED_PARAM_ANNOTATIONS & set(m.annotations):
            return []
        if m.name == "main" or (m.name.startswith("__") and m.name.endswith("__") and not m.is_constructor):
            return []
        used = {t.text for t in m.body if t.kind == "id"}
        return [p.name for p in m.params if p.name not in used]

    # -- class level --------------------------------------------------------

    def class_rules(self, u: SourceUnit, c: ClassRecord) -> None:
        cfg = self.cfg
        cm = self.metrics.cls(c.qualname)
        if cm.nloc > cfg.god_class_nloc:
            self.emit(SmellKind.GOD_CLASS, u, c.qualname, c.start, c.end, nloc=cm.nloc)
        if (
            c.kind == "class"
            and not c.is_abstract
            and cm.nloc < cfg.lazy_class_nloc
            and cm.wmc < cfg.lazy_class_wmc
        ):
            self.emit(SmellKind.LAZY_CLASS, u, c.qualname, c.start, c.end, nloc=cm.nloc, wmc=cm.wmc)
        self.dead_and_temporary(u, c)
        self.shotgun_surgery(u, c)
        self.refused_bequest(u, c)
        self.speculative_type(u, c)
        self.primitive_fields(u, c)
        self.orphan_variables(u, c)
        self.middleman(u, c)

    def _name_count(self, u: SourceUnit, name: str) -> int:
        return sum(1 for t in u.tokens if t.kind == "id" and t.text == name)

    def dead_and_temporary(self, u: SourceUnit, c: ClassRecord) -> None:
        for m in c.methods:
            if m.visibility == "private" and not m.is_constructor and self._name_count(u, m.name) <= 1:
                self.emit(SmellKind.DEAD_CODE, u, m.qualname, m.start, m.end, references=0)
        for f in c.fields:
            if f.name == "serialVersionUID":
                continue
            occurrences = self._name_count(u, f.name)
            if f.visibility == "private" and occurrences <= 1:
                self.emit(SmellKind.DEAD_CODE, u, f"{c.qualname}.{f.name}", f.line, f.line, references=0)
                continue
            if f.is_static or f.is_constant:
                continue
            self.temporary_field(u, c, f.name, f.line)

    def _field_uses(self, tokens: list[Token], name: str) -> list[int]:
        """Indices of tokens in ``tokens`` that denote the field ``name`` of the enclosing object."""
        idx = []
        for i, t in enumerate(tokens):
            if t.kind != "id" or t.text != name:
                continue
            prev = tokens[i - 1].text if i > 0 else ""
            if prev == ".":
                recv = tokens[i - 2].text if i > 1 else ""
                if recv in RECEIVER_SELF:
                    idx.append(i)
            elif not self.python:
                idx.append(i)
        return idx

    def temporary_field(self, u: SourceUnit, c: ClassRecord, name: str, line: int) -> None:
        using: list[MethodRecord] = []
        written = False
        for m in c.methods:
            uses = self._field_uses(m.body, name)
            if uses:
                using.append(m)
                for i in uses:
                    nxt = m.body[i + 1].text if i + 1 < len(m.body) else ""
                    prv = m.body[i - 1].text if i > 0 else ""
                    pprv = m.body[i - 3].text if i > 2 else ""
                    if nxt in _ASSIGN_OPS or (self.python and nxt == ":") or prv in ("++", "--") or pprv in ("++", "--"):
                        written = True
        if len(using) != 1 or not written:
            return
        # public fields may still be read from outside the class
        for other in self.corpus.classes():
            if other is c:
                continue
            toks = other.tokens
            for i, t in enumerate(toks):
                if t.text == name and i > 1 and toks[i - 1].text == "." and toks[i - 2].text not in RECEIVER_SELF:
                    return
        self.emit(SmellKind.TEMPORARY_FIELD, u, f"{c.qualname}.{name}", line, line,
                  using_methods=1)

    def shotgun_surgery(self, u: SourceUnit, c: ClassRecord) -> None:
        seen = set()
        for m in c.methods:
            if m.is_constructor or m.visibility == "private" or m.name in seen:
                continue
            seen.add(m.name)
            fan_in = self.metrics.method(m.qualname, m.start).fan_in
            if fan_in >= self.cfg.shotgun_fan_in:
                self.emit(SmellKind.SHOTGUN_SURGERY, u, m.qualname, m.start, m.end, fan_in=fan_in)

    def refused_bequest(self, u: SourceUnit, c: ClassRecord) -> None:
        bases, _ = self.index.resolved_supertypes(c)
        parents = [self.index.classes[b] for b in bases if self.index.classes[b].kind == "class"]
        if not parents:
            return
        parent = parents[0]
        inherited = {
            m.name for m in parent.methods
            if m.visibility != "private" and not m.is_constructor and not m.is_abstract
        } | {f.name for f in parent.fields if f.visibility != "private"}
        if len(inherited) < self.cfg.refused_bequest_min_inherited:
            return
        own = {m.name for m in c.methods}
        body_ids = {t.text for m in c.methods for t in m.body if t.kind == "id"}
        used = {n for n in inherited if n in body_ids}
        # an override is a redefinition, not a use of the inherited member
        used -= {n for n in own if n in used and not self._calls_super(c, n)}
        if len(used) / len(inherited) < self.cfg.refused_bequest_ratio:
            self.emit(SmellKind.REFUSED_BEQUEST, u, c.qualname, c.start, c.end,
                      inherited_members=len(inherited), used_members=len(used))

    @staticmethod
    def _calls_super(c: ClassRecord, name: str) -> bool:
        for m in c.methods:
            b = m.body
            for i in range(len(b) - 1):
                if b[i].text == name and i > 0 and b[i - 1].text == "." and "super" in (
                    b[i - 2].text, b[i - 4].text if i > 3 else ""
                ):
                    return True
        return False

    def speculative_type(self, u: SourceUnit, c: ClassRecord) -> None:
        if not c.is_abstract_type:
            return
        implementers = 0
        for other in self.corpus.classes():
            if other is c:
                continue
            bases, ifaces = self.index.resolved_supertypes(other)
            if c.qualname in bases or c.qualname in ifaces:
                implementers += 1
        if implementers == 1:
            self.emit(SmellKind.SPECULATIVE_GENERALITY, u, c.qualname, c.start, c.end, implementers=1)

    def primitive_fields(self, u: SourceUnit, c: ClassRecord) -> None:
        for f in c.fields:
            if f.uses_string_buffer:
                self.emit(SmellKind.PRIMITIVE_OBSESSION, u, f"{c.qualname}.{f.name}", f.line, f.line,
                          string_buffer_uses=1)
        groups: dict[str, list] = defaultdict(list)
        for f in c.fields:
            if not f.is_primitive or f.is_constant:
                continue
            m = _CAMEL_PREFIX.match(f.name)
            if m:
                groups[m.group(1)].append(f)
        for prefix, fs in sorted(groups.items()):
            if len(fs) >= self.cfg.primitive_prefix_fields:
                lines = [f.line for f in fs]
                self.emit(SmellKind.PRIMITIVE_OBSESSION, u, f"{c.qualname}.{prefix}*", min(lines), max(lines),
                          prefix_fields=len(fs))

    def orphan_variables(self, u: SourceUnit, c: ClassRecord) -> None:
        for f in c.fields:
            if not f.is_constant or f.visibility != "public":
                continue
            own = self._name_count_tokens(c.tokens, f.name) - 1
            if own > 0:
                continue
            external = 0
            for other in self.corpus.classes():
                if other is c or c.qualname not in self.index.refs.get(other.qualname, ()):
                    continue
                toks = other.tokens
                if any(
                    toks[i].text == f.name and toks[i - 1].text == "."
                    for i in range(1, len(toks))
                ):
                    external += 1
            if external >= self.cfg.orphan_min_external:
                self.emit(SmellKind.ORPHAN_VARIABLE, u, f"{c.qualname}.{f.name}", f.line, f.line,
                          external_references=external)

    @staticmethod
    def _name_count_tokens(tokens: list[Token], name: str) -> int:
        return sum(1 for t in tokens if t.kind == "id" and t.text == name)

    def middleman(self, u: SourceUnit, c: ClassRecord) -> None:
        if c.kind != "class":
            return
        methods = [m for m in c.methods if not m.is_constructor and not m.is_abstract]
        if not methods:
            return
        field_names = {f.name for f in c.fields}
        delegating = sum(1 for m in methods if self._is_delegation(m, field_names))
        if delegating / len(methods) > self.cfg.middleman_ratio:
            self.emit(SmellKind.MIDDLEMAN, u, c.qualname, c.start, c.end,
                      methods=len(methods), delegating_methods=delegating)

    def _is_delegation(self, m: MethodRecord, field_names: set[str]) -> bool:
        b = list(m.body)
        if self.python and b and b[0].kind == "str":
            b = b[1:]
        if b and b[-1].text == ";":
            b = b[:-1]
        i = 0
        if i < len(b) and b[i].text == "return":
            i += 1
        if i + 1 < len(b) and b[i].text in RECEIVER_SELF and b[i + 1].text == ".":
            i += 2
        if i + 3 >= len(b) or b[i].text not in field_names:
            return False
        if b[i + 1].text != "." or b[i + 2].kind != "id" or b[i + 3].text != "(":
            return False
        depth = 0
        for j in range(i + 3, len(b)):
            if b[j].text == "(":
                depth += 1
            elif b[j].text == ")":
                depth -= 1
                if depth == 0:
                    return j == len(b) - 1
        return False


def detect_smells(corpus: Corpus, ruleset: RuleConfig | None = None) -> list[SmellInstance]:
    """Apply all sixteen rules; output sorted by (unit path, start line, kind)."""
    return _Detector(corpus, ruleset or RuleConfig()).run()


def count_by_kind(instances: list[SmellInstance]) -> dict[SmellKind, int]:
    counts = {k: 0 for k in SmellKind}
    for i in instances:
        counts[i.kind] += 1
    return counts
