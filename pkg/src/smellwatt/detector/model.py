"""Entity model shared by the Java-like and Python-like front ends."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class Token:
    kind: str  # id | kw | num | str | op
    text: str
    line: int


@dataclass
class Param:
    name: str
    type: str = ""


@dataclass
class Import:
    target: str  # dotted name as written (java: a.b.C / a.b.*, python: resolved absolute)
    line: int
    is_wildcard: bool = False
    alias: Optional[str] = None
    # python "from X import N": the module part and the imported name
    from_module: Optional[str] = None
    name: Optional[str] = None


@dataclass
class Statement:
    tokens: int
    start: int
    end: int


@dataclass
class SwitchBlock:
    cases: int
    start: int
    end: int


@dataclass
class FieldRecord:
    name: str
    type: str
    line: int
    visibility: str  # public | protected | package | private
    is_static: bool = False
    is_final: bool = False
    is_constant: bool = False
    is_primitive: bool = False
    uses_string_buffer: bool = False


@dataclass
class MethodRecord:
    name: str
    owner: str  # qualified class name, or the module for module-level functions
    params: list[Param]
    start: int
    end: int
    body: list[Token] = field(default_factory=list)
    visibility: str = "public"
    annotations: list[str] = field(default_factory=list)
    is_abstract: bool = False
    is_constructor: bool = False
    statements: list[Statement] = field(default_factory=list)
    switches: list[SwitchBlock] = field(default_factory=list)
    in_class: bool = True  # False for module-level functions (owner is then the module)

    @property
    def qualname(self) -> str:
        return f"{self.owner}.{self.name}" if self.owner else self.name


@dataclass
class ClassRecord:
    name: str
    qualname: str
    package: str
    start: int
    end: int
    kind: str = "class"  # class | interface | enum | record
    is_abstract: bool = False
    bases: list[str] = field(default_factory=list)  # names as written (extends)
    interfaces: list[str] = field(default_factory=list)  # implements
    fields: list[FieldRecord] = field(default_factory=list)
    methods: list[MethodRecord] = field(default_factory=list)
    tokens: list[Token] = field(default_factory=list)  # header + body, nested types excluded

    @property
    def is_abstract_type(self) -> bool:
        return self.kind == "interface" or self.is_abstract


@dataclass
class SourceUnit:
    path: str
    package_or_module: str
    line_count: int
    imports: list[Import] = field(default_factory=list)
    classes: list[ClassRecord] = field(default_factory=list)
    functions: list[MethodRecord] = field(default_factory=list)  # module level
    tokens: list[Token] = field(default_factory=list)

    @property
    def code_lines(self) -> set[int]:
        return {t.line for t in self.tokens}

    def all_methods(self) -> list[MethodRecord]:
        out = list(self.functions)
        for c in self.classes:
            out.extend(c.methods)
        return out

    def entity_counts(self) -> dict[str, int]:
        return {
            "classes": len(self.classes),
            "methods": len(self.all_methods()),
            "fields": sum(len(c.fields) for c in self.classes),
            "imports": len(self.imports),
        }


@dataclass
class Corpus:
    units: list[SourceUnit]
    language_flavor: str  # java | python
    skipped: list[tuple[str, str]] = field(default_factory=list)

    def classes(self) -> list[ClassRecord]:
        return [c for u in self.units for c in u.classes]

    def methods(self) -> list[MethodRecord]:
        return [m for u in self.units for m in u.all_methods()]

    def unit_of(self, qualname: str) -> SourceUnit:
        for u in self.units:
            for c in u.classes:
                if c.qualname == qualname:
                    return u
        raise KeyError(qualname)
