"""Cross-file name resolution by qualified-name matching.

Names that do not resolve to a class of the corpus are ignored, so every
derived relation (references, calls, inheritance) errs toward missing an
edge rather than inventing one.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .model import ClassRecord, Corpus, MethodRecord, SourceUnit, Token

RECEIVER_SELF = frozenset({"this", "self", "super", "cls"})


def chains(tokens: list[Token]) -> list[tuple[list[Token], int]]:
    """Dotted identifier chains ``a.b.c`` with the index just past each one."""
    out = []
    i = 0
    n = len(tokens)
    while i < n:
        t = tokens[i]
        prev = tokens[i - 1].text if i > 0 else ""
        if t.kind in ("id", "kw") and prev != ".":
            chain = [t]
            j = i + 1
            while j + 1 < n and tokens[j].text == "." and tokens[j + 1].kind in ("id", "kw"):
                chain.append(tokens[j + 1])
                j += 2
            out.append((chain, j))
            i = j
        else:
            i += 1
    return out


@dataclass
class CorpusIndex:
    corpus: Corpus
    classes: dict[str, ClassRecord] = field(default_factory=dict)
    unit_of_class: dict[str, SourceUnit] = field(default_factory=dict)
    visible: dict[str, dict[str, str]] = field(default_factory=dict)  # unit path -> name -> qualname
    module_alias: dict[str, dict[str, str]] = field(default_factory=dict)  # unit path -> alias -> module
    refs: dict[str, set[str]] = field(default_factory=dict)  # class -> referenced classes
    ref_lines: dict[str, dict[str, int]] = field(default_factory=dict)  # class -> target -> first line
    calls: dict[str, set[tuple[str, str]]] = field(default_factory=dict)  # class -> {(class, method)}

    @classmethod
    def build(cls, corpus: Corpus) -> "CorpusIndex":
        idx = cls(corpus)
        for u in corpus.units:
            for c in u.classes:
                idx.classes[c.qualname] = c
                idx.unit_of_class[c.qualname] = u
        modules = {u.package_or_module for u in corpus.units}
        by_package: dict[str, list[ClassRecord]] = defaultdict(list)
        for u in corpus.units:
            for c in u.classes:
                if _is_top_level(c):
                    by_package[c.package].append(c)
        for u in corpus.units:
            idx.visible[u.path], idx.module_alias[u.path] = idx._visible_names(u, by_package, modules)
        for u in corpus.units:
            for c in u.classes:
                idx._scan_refs(u, c)
        for u in corpus.units:
            for c in u.classes:
                idx._scan_calls(u, c)
        return idx

    def _visible_names(self, u: SourceUnit, by_package, modules) -> tuple[dict[str, str], dict[str, str]]:
        vis: dict[str, str] = {}
        aliases: dict[str, str] = {}
        python = self.corpus.language_flavor == "python"
        # lowest priority first; later assignments win
        for imp in u.imports:
            if imp.is_wildcard:
                for c in by_package.get(imp.target, []):
                    vis[c.name] = c.qualname
        if not python:
            for c in by_package.get(u.package_or_module, []):
                vis[c.name] = c.qualname
        for imp in u.imports:
            if imp.is_wildcard:
                continue
            if imp.target in self.classes:
                name = imp.alias or imp.target.rsplit(".", 1)[-1]
                vis[name] = imp.target
            elif python and imp.target in modules:
                aliases[imp.alias or imp.target] = imp.target
        for c in u.classes:
            vis[c.name] = c.qualname
        return vis, aliases

    def resolve_chain(self, unit_path: str, names: list[str]) -> tuple[str | None, int]:
        """Class a chain names and how many leading segments that used."""
        vis = self.visible[unit_path]
        if names[0] in vis:
            return vis[names[0]], 1
        aliases = self.module_alias[unit_path]
        for k in range(len(names) - 1, 0, -1):
            prefix = ".".join(names[:k])
            mod = aliases.get(prefix)
            if mod is not None and f"{mod}.{names[k]}" in self.classes:
                return f"{mod}.{names[k]}", k + 1
        for k in range(len(names), 0, -1):
            q = ".".join(names[:k])
            if q in self.classes:
                return q, k
        return None, 0

    def resolve_name(self, unit_path: str, dotted: str) -> str | None:
        return self.resolve_chain(unit_path, dotted.split("."))[0]

    def _scan_refs(self, u: SourceUnit, c: ClassRecord) -> None:
        found: dict[str, int] = {}
        for chain, _ in chains(c.tokens):
            target, _used = self.resolve_chain(u.path, [t.text for t in chain])
            if target is not None and target != c.qualname and target not in found:
                found[target] = chain[0].line
        self.refs[c.qualname] = set(found)
        self.ref_lines[c.qualname] = found

    def _scan_calls(self, u: SourceUnit, c: ClassRecord) -> None:
        out: set[tuple[str, str]] = set()
        toks = c.tokens
        referenced = self.refs[c.qualname]
        for chain, end in chains(toks):
            if len(chain) < 2 or end >= len(toks) or toks[end].text != "(":
                continue
            if chain[0].text in RECEIVER_SELF:
                # self.m() stays inside the class; self.attr.m() goes through a field
                if len(chain) == 2:
                    continue
                chain = chain[1:]
            method = chain[-1].text
            names = [t.text for t in chain[:-1]]
            target, used = self.resolve_chain(u.path, names)
            if target is not None and used == len(names):
                if method in self.method_names(target):
                    out.add((target, method))
                continue
            for r in sorted(referenced):
                if method in self.method_names(r):
                    out.add((r, method))
        self.calls[c.qualname] = out

    def method_names(self, qualname: str) -> set[str]:
        c = self.classes.get(qualname)
        if c is None:
            return set()
        return {m.name for m in c.methods if not m.is_constructor}

    def fan_in(self, qualname: str) -> int:
        return sum(1 for src, targets in self.refs.items() if qualname in targets)

    def fan_out(self, qualname: str) -> int:
        return len(self.refs.get(qualname, ()))

    def method_fan_in(self, owner: str, name: str) -> int:
        return sum(
            1 for src, calls in self.calls.items() if src != owner and (owner, name) in calls
        )

    def resolved_supertypes(self, c: ClassRecord) -> tuple[list[str], list[str]]:
        path = self.unit_of_class[c.qualname].path
        bases = [q for q in (self.resolve_name(path, b) for b in c.bases) if q and q != c.qualname]
        ifaces = [q for q in (self.resolve_name(path, b) for b in c.interfaces) if q and q != c.qualname]
        return bases, ifaces

    def owner_class(self, m: MethodRecord) -> ClassRecord | None:
        return self.classes.get(m.owner) if m.in_class else None


def _is_top_level(c: ClassRecord) -> bool:
    prefix = c.qualname[: -len(c.name) - 1] if c.qualname != c.name else ""
    return prefix == c.package or (prefix == "" and c.package in ("", "(default)"))
