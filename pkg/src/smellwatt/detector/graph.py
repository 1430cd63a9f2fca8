"""Package/module dependency graph and its cycles."""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import Corpus
from .resolve import CorpusIndex


@dataclass
class DependencyGraph:
    nodes: list[str]
    edges: set[tuple[str, str]]
    # (src, dst) -> (unit path, line) of the first import or reference creating the edge
    witness: dict[tuple[str, str], tuple[str, int]] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        self.nodes = sorted(set(self.nodes))
        self.edges = {(a, b) for a, b in self.edges if a != b}

    def successors(self, node: str) -> list[str]:
        return sorted(b for a, b in self.edges if a == node)

    @classmethod
    def from_edges(cls, edges, nodes=()) -> "DependencyGraph":
        edges = set(edges)
        ns = set(nodes) | {a for a, _ in edges} | {b for _, b in edges}
        return cls(sorted(ns), edges)


def build_dependency_graph(corpus: Corpus, index: CorpusIndex | None = None) -> DependencyGraph:
    index = index or CorpusIndex.build(corpus)
    nodes = {u.package_or_module for u in corpus.units}
    witness: dict[tuple[str, str], tuple[str, int]] = {}

    def add(src: str, dst: str | None, path: str, line: int) -> None:
        if dst is None or dst == src or dst not in nodes:
            return
        key = (src, dst)
        if key not in witness or (path, line) < witness[key]:
            witness[key] = (path, line)

    python = corpus.language_flavor == "python"
    for u in corpus.units:
        src = u.package_or_module
        for imp in u.imports:
            add(src, _import_target(imp, index, nodes, python), u.path, imp.line)
        for c in u.classes:
            for target, line in index.ref_lines[c.qualname].items():
                add(src, index.classes[target].package, u.path, line)
    return DependencyGraph(sorted(nodes), set(witness), witness)


def _import_target(imp, index: CorpusIndex, nodes: set[str], python: bool) -> str | None:
    target = imp.target
    if python:
        if target in nodes:
            return target
        if imp.from_module and imp.from_module in nodes:
            return imp.from_module
        parts = target.split(".")
        for k in range(len(parts) - 1, 0, -1):
            if ".".join(parts[:k]) in nodes:
                return ".".join(parts[:k])
        return None
    if imp.is_wildcard and target in nodes:
        return target
    parts = target.split(".")
    for k in range(len(parts), 0, -1):
        q = ".".join(parts[:k])
        if q in index.classes:
            return index.classes[q].package
    if target in nodes:
        return target
    return None


def strongly_connected_components(nodes: list[str], succ: dict[str, list[str]]) -> list[list[str]]:
    """Tarjan's algorithm, iterative so deep graphs do not hit the recursion limit."""
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    comps: list[list[str]] = []
    counter = 0
    for root in nodes:
        if root in index:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, i = work[-1]
            children = succ.get(v, [])
            if i < len(children):
                work[-1] = (v, i + 1)
                w = children[i]
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, 0))
                elif w in on_stack:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def find_cycles(graph: DependencyGraph) -> list[list[str]]:
    """Every strongly connected component with two or more nodes, sorted."""
    succ: dict[str, list[str]] = {n: [] for n in graph.nodes}
    for a, b in sorted(graph.edges):
        succ[a].append(b)
    comps = strongly_connected_components(graph.nodes, succ)
    return sorted(sorted(c) for c in comps if len(c) >= 2)
