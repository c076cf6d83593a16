"""Configurations of mixed Tate components and the class of their union.

Classes live in the Grothendieck ring, where the localization triangles used
to show that a configuration is mixed Tate collapse to inclusion-exclusion.
Intersections are supplied by the caller, keyed by sets of 1-based component
indices of size at least two.  A missing intersection is acceptable only when
it is forced empty by an empty subset.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

from .errors import ConfigurationError, SizeGuardError
from .tate import LPolynomial

MAX_COMPONENTS = 20


class _Empty:
    __slots__ = ()

    def __repr__(self):
        return "EMPTY"

    def __reduce__(self):
        return "EMPTY"


EMPTY = _Empty()


@dataclass(frozen=True)
class Component:
    name: str
    cls: LPolynomial


@dataclass(frozen=True, eq=False)
class Configuration:
    components: tuple[Component, ...]
    intersections: Mapping[frozenset, object] = field(default_factory=dict)

    def __post_init__(self):
        comps = tuple(c if isinstance(c, Component) else Component(*c) for c in self.components)
        object.__setattr__(self, "components", comps)
        inter = {frozenset(k): v for k, v in dict(self.intersections).items()}
        object.__setattr__(self, "intersections", inter)

    def __eq__(self, other):
        if not isinstance(other, Configuration):
            return NotImplemented
        return self.components == other.components and self.intersections == other.intersections

    def to_json(self) -> dict:
        inters = sorted(self.intersections.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
        return {
            "components": [{"name": c.name, "class": c.cls.to_json()} for c in self.components],
            "intersections": [
                {"subset": sorted(s), "class": "empty" if v is EMPTY else v.to_json()}
                for s, v in inters
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Configuration":
        comps = tuple(
            Component(str(c.get("name", "")), LPolynomial.from_json(c["class"]))
            for c in data["components"]
        )
        inter = {}
        for entry in data.get("intersections", []):
            value = entry["class"]
            inter[frozenset(int(i) for i in entry["subset"])] = (
                EMPTY if value == "empty" else LPolynomial.from_json(value)
            )
        return cls(comps, inter)


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[str, ...]

    def to_json(self) -> dict:
        return {"valid": self.valid, "violations": list(self.violations)}


def _fmt(s) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def validate_configuration(c: Configuration) -> ValidationReport:
    m = len(c.components)
    if m > MAX_COMPONENTS:
        raise SizeGuardError("configuration subset lattice", 2**m, 2**MAX_COMPONENTS)
    problems = []
    for s in c.intersections:
        if len(s) < 2:
            problems.append(f"intersection key {_fmt(s)} must name at least two components")
        elif not all(1 <= i <= m for i in s):
            problems.append(f"intersection {_fmt(s)} refers to components outside 1..{m}")
    if problems:
        return ValidationReport(False, tuple(problems))

    # witness[mask] = an empty subset of mask (as a mask), or 0 if none
    witness = [0] * (1 << m)

    def bits(mask):
        return frozenset(i + 1 for i in range(m) if mask >> i & 1)

    for mask in range(1 << m):
        if bin(mask).count("1") < 2:
            continue
        key = bits(mask)
        declared = c.intersections.get(key)
        inherited = 0
        for i in range(m):
            sub = mask & ~(1 << i)
            if mask >> i & 1 and witness[sub]:
                inherited = witness[sub]
                break
        if declared is None:
            if inherited:
                witness[mask] = inherited
            else:
                problems.append(f"missing intersection {_fmt(key)}")
        elif declared is EMPTY:
            witness[mask] = inherited or mask
        elif inherited:
            problems.append(
                f"monotonicity break: {_fmt(key)} has a class but its subset "
                f"{_fmt(bits(inherited))} is empty"
            )
            witness[mask] = inherited
    return ValidationReport(not problems, tuple(problems))


def union_class(c: Configuration) -> LPolynomial:
    """``Σ_S (-1)^{|S|+1} [X_S]`` over nonempty subsets; empty intersections add 0."""
    report = validate_configuration(c)
    if not report.valid:
        raise ConfigurationError(report)
    total = LPolynomial()
    for comp in c.components:
        total = total + comp.cls
    for s, v in c.intersections.items():
        if v is not EMPTY:
            total = total + (v if len(s) % 2 else -v)
    return total


def configuration_from_classes(
    names: Sequence[str], classes: Sequence[LPolynomial], intersection_of
) -> Configuration:
    """Build an intersection-complete configuration from a callback on index sets."""
    m = len(names)
    inter = {}
    for size in range(2, m + 1):
        for s in combinations(range(1, m + 1), size):
            value = intersection_of(frozenset(s))
            inter[frozenset(s)] = EMPTY if value is None else value
    return Configuration(tuple(Component(n, k) for n, k in zip(names, classes)), inter)
