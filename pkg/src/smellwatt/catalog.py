"""The sixteen smell kinds, their refactoring techniques and resource direction.

Enumeration order is fixed: it is the order of ``SmellKind`` below and every
report, plan and CSV that lists kinds uses it.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass


class SmellKind(str, enum.Enum):
    CYCLIC_DEPENDENCY = "cyclic-dependency"
    GOD_METHOD = "god-method"
    SPAGHETTI_CODE = "spaghetti-code"
    SHOTGUN_SURGERY = "shotgun-surgery"
    GOD_CLASS = "god-class"
    LAZY_CLASS = "lazy-class"
    REFUSED_BEQUEST = "refused-bequest"
    TEMPORARY_FIELD = "temporary-field"
    SPECULATIVE_GENERALITY = "speculative-generality"
    DEAD_CODE = "dead-code"
    DUPLICATE_CODE = "duplicate-code"
    LONG_PARAMETER = "long-parameter"
    LONG_STATEMENT = "long-statement"
    PRIMITIVE_OBSESSION = "primitive-obsession"
    ORPHAN_VARIABLE = "orphan-variable"
    MIDDLEMAN = "middleman"

    def __str__(self) -> str:
        return self.value

    @property
    def order(self) -> int:
        return _ORDER[self]

    @classmethod
    def parse(cls, text: str) -> "SmellKind":
        """Accept ``god-class``, ``god_class`` or ``GOD_CLASS``."""
        norm = text.strip().lower().replace("_", "-").replace(" ", "-")
        return cls(norm)


_ORDER = {k: i for i, k in enumerate(SmellKind)}


class ImpactDirection(str, enum.Enum):
    IMPROVES = "IMPROVES"
    MIXED_UNKNOWN = "MIXED-UNKNOWN"
    WORSENS = "WORSENS"

    # str already defines the rich comparisons, so all four are spelled out
    def __lt__(self, other):
        if not isinstance(other, ImpactDirection):
            return NotImplemented
        return _RANK[self] < _RANK[other]

    def __le__(self, other):
        if not isinstance(other, ImpactDirection):
            return NotImplemented
        return _RANK[self] <= _RANK[other]

    def __gt__(self, other):
        if not isinstance(other, ImpactDirection):
            return NotImplemented
        return _RANK[self] > _RANK[other]

    def __ge__(self, other):
        if not isinstance(other, ImpactDirection):
            return NotImplemented
        return _RANK[self] >= _RANK[other]

    def __str__(self) -> str:
        return self.value


_RANK = {
    ImpactDirection.IMPROVES: 0,
    ImpactDirection.MIXED_UNKNOWN: 1,
    ImpactDirection.WORSENS: 2,
}


class Resource(str, enum.Enum):
    CPU = "CPU"
    MEMORY = "MEMORY"

    @classmethod
    def parse(cls, text: str) -> "Resource":
        t = text.strip().upper()
        if t in ("MEM", "MEMORY"):
            return cls.MEMORY
        return cls(t)


@dataclass(frozen=True)
class SmellDescriptor:
    kind: SmellKind
    property: str
    refactoring_technique: str
    cpu_direction: ImpactDirection
    mem_direction: ImpactDirection

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "property": self.property,
            "technique": self.refactoring_technique,
            "cpu_direction": self.cpu_direction.value,
            "mem_direction": self.mem_direction.value,
        }


_I = ImpactDirection.IMPROVES
_W = ImpactDirection.WORSENS

# (property, technique, cpu, mem)
_TABLE = {
    SmellKind.CYCLIC_DEPENDENCY: (
        "Packages depend on each other in a cycle, breaking the acyclic dependency structure",
        "Encapsulate the packages of the cycle into one unit owned by a single team",
        _I, _I),
    SmellKind.GOD_METHOD: (
        "A single method carries out many unrelated activities",
        "Extract the method into several smaller methods",
        _W, _W),
    SmellKind.SPAGHETTI_CODE: (
        "New code piled onto old code without removing what became obsolete",
        "Replace procedural segments with an object-oriented structure",
        _I, _I),
    SmellKind.SHOTGUN_SURGERY: (
        "One behaviour is spread across many classes",
        "Move Method / Move Field to gather the behaviour into one class",
        _I, _I),
    SmellKind.GOD_CLASS: (
        "One class does the work of many classes",
        "Extract the large class into several smaller classes",
        _W, _W),
    SmellKind.LAZY_CLASS: (
        "A class does too little to justify its existence",
        "Inline the class; use diamond operators instead of re-implementing interfaces",
        _I, _I),
    SmellKind.REFUSED_BEQUEST: (
        "A subclass ignores most of what it inherits",
        "Replace inheritance with delegation",
        _I, _I),
    SmellKind.TEMPORARY_FIELD: (
        "An instance field is only set and used in particular cases",
        "Turn the field into a local; drop unused parameters and throws",
        _I, _I),
    SmellKind.SPECULATIVE_GENERALITY: (
        "Code written for anticipated needs that never materialised",
        "Remove the unused generality; use static string conversion instead of boxing",
        _I, _I),
    SmellKind.DEAD_CODE: (
        "Declarations that are never used",
        "Remove the unreferenced code",
        _I, _I),
    SmellKind.DUPLICATE_CODE: (
        "The same block of code appears in several places",
        "Pull the shared block up into one place reached through inheritance",
        _I, _I),
    SmellKind.LONG_PARAMETER: (
        "A method takes more than five parameters",
        "Introduce a parameter object or replace lambdas with method references",
        _I, _W),
    SmellKind.LONG_STATEMENT: (
        "A single statement, or a switch with too many cases, is overly long",
        "Split the statement into smaller communicating statements",
        _I, _I),
    SmellKind.PRIMITIVE_OBSESSION: (
        "Primitive values stand in for a missing object (or legacy synchronised string buffers)",
        "Group the primitives into an object; use an unsynchronised string builder",
        _I, _I),
    SmellKind.ORPHAN_VARIABLE: (
        "A constant is owned by a class that never uses it while others do",
        "Move the variable to the class that uses it",
        _I, _I),
    SmellKind.MIDDLEMAN: (
        "A class delegates almost all of its work to other classes",
        "Remove the middle man and call the delegate directly",
        _I, _I),
}

_DESCRIPTORS = {
    kind: SmellDescriptor(kind, prop, tech, cpu, mem)
    for kind, (prop, tech, cpu, mem) in _TABLE.items()
}


def all_kinds() -> list[SmellKind]:
    return list(SmellKind)


def catalog_lookup(kind: SmellKind | str) -> SmellDescriptor:
    if not isinstance(kind, SmellKind):
        kind = SmellKind.parse(kind)
    return _DESCRIPTORS[kind]


def expected_direction(kind: SmellKind | str, resource: Resource | str) -> ImpactDirection:
    desc = catalog_lookup(kind)
    if not isinstance(resource, Resource):
        resource = Resource.parse(resource)
    return desc.cpu_direction if resource is Resource.CPU else desc.mem_direction


def improves_both(kind: SmellKind) -> bool:
    d = catalog_lookup(kind)
    return d.cpu_direction is _I and d.mem_direction is _I


def worsens_both(kind: SmellKind) -> bool:
    d = catalog_lookup(kind)
    return d.cpu_direction is _W and d.mem_direction is _W


def export_catalog() -> str:
    """JSON array, one object per kind, in enumeration order."""
    return json.dumps([_DESCRIPTORS[k].to_dict() for k in SmellKind], indent=2)
