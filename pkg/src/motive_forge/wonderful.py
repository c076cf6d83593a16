"""Orbit closures in the wonderful compactification of an adjoint group.

Orbits of ``G x G`` on the compactification correspond to subsets ``I`` of the
simple roots: ``I = Delta`` is the whole compactification, ``I = {}`` the closed
orbit ``G/B x G/B``, and the orbit of ``J`` lies in the closure of the orbit of
``I`` exactly when ``J`` is contained in ``I``.  The closure ``D_I`` is a
disjoint union of cells indexed by pairs ``(u, v)`` in ``W x W`` of dimension

    n(u, v) = l(w0) - l(u) + |I ∩ I_u| + l(v).

``I_u`` is read as the right-ascent set of ``u`` by default.  The literal
alternative (simple roots missing from a reduced word of ``u``) is available as
``Interpretation.SUPPORT``; it breaks Poincaré duality already for A2.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .cellular import CellDecomposition
from .configurations import Configuration, configuration_from_classes
from .errors import SizeGuardError
from .flags import flag_motive
from .rootsys import (
    ParabolicSubset,
    RootSystem,
    WeylElement,
    ascent_set,
    check_weyl_size,
    enumerate_weyl,
    levi_subsystem,
    support_complement,
    weyl_poincare,
)
from .tate import L, LPolynomial, TateSum, euler_class

DEFAULT_CELL_CAP = 10**7


class Interpretation(str, enum.Enum):
    ASCENT = "ascent"
    SUPPORT = "support"

    def __str__(self):
        return self.value


def _subset_of(rs, u: WeylElement, interpretation) -> ParabolicSubset:
    if Interpretation(interpretation) is Interpretation.ASCENT:
        return ascent_set(rs, u)
    return support_complement(rs, u)


@dataclass(frozen=True)
class Face:
    parabolic: ParabolicSubset
    dim: int
    codim: int

    def contains(self, other: "Face") -> bool:
        """Incidence: the orbit of ``other`` lies in the closure of this one."""
        return set(other.parabolic) <= set(self.parabolic)

    def __str__(self):
        return f"F{self.parabolic}"


def face(rs: RootSystem, parabolic: ParabolicSubset) -> Face:
    return Face(parabolic, 2 * rs.num_positive + len(parabolic), rs.rank - len(parabolic))


def face_lattice(rs: RootSystem) -> tuple[Face, ...]:
    """All ``2^rank`` faces, ordered by size of ``I`` then lexicographically."""
    return tuple(
        face(rs, ParabolicSubset.of(rs, idx))
        for k in range(rs.rank + 1)
        for idx in combinations(range(1, rs.rank + 1), k)
    )


def check_cell_budget(rs: RootSystem, faces: int, cap: int | None) -> None:
    order = check_weyl_size(rs, cap)
    cap = DEFAULT_CELL_CAP if cap is None else cap
    evaluations = order * order * faces
    if evaluations > cap:
        raise SizeGuardError(f"cell tables of {rs} ({faces} face(s))", evaluations, cap)


class CellTable:
    """Cell dimensions ``n(u, v)`` for one orbit closure.

    Entries are produced on demand; the dimension splits as a ``u``-part plus
    ``l(v)``, which keeps the histogram cheap even for F4.
    """

    def __init__(self, rs: RootSystem, parabolic: ParabolicSubset, interpretation):
        self.rs = rs
        self.parabolic = parabolic
        self.interpretation = Interpretation(interpretation)
        self.elements = enumerate_weyl(rs, cap=max(rs.weyl_order, 1))
        n = rs.num_positive
        self._offset = {
            u: n - u.length + len(parabolic & _subset_of(rs, u, self.interpretation))
            for u in self.elements
        }

    def __len__(self):
        return len(self.elements) ** 2

    def __getitem__(self, key: tuple[WeylElement, WeylElement]) -> int:
        u, v = key
        return self._offset[u] + v.length

    def entries(self) -> Iterator[tuple[WeylElement, WeylElement, int]]:
        for u in self.elements:
            a = self._offset[u]
            for v in self.elements:
                yield u, v, a + v.length

    def histogram(self) -> list[int]:
        """Number of cells of each dimension ``0..max``."""
        left = Counter(self._offset.values())
        right = Counter(v.length for v in self.elements)
        hist = Counter()
        for a, ca in left.items():
            for b, cb in right.items():
                hist[a + b] += ca * cb
        return [hist[d] for d in range(max(hist) + 1)]

    @property
    def max_dim(self) -> int:
        return len(self.histogram()) - 1

    def as_cell_decomposition(self) -> CellDecomposition:
        return CellDecomposition.from_dims(
            (n for _, _, n in self.entries()),
            total_dim=2 * self.rs.num_positive + len(self.parabolic),
        )

    def to_json(self) -> dict:
        return {
            "face": list(self.parabolic),
            "interpretation": self.interpretation.value,
            "cells": len(self),
            "histogram": self.histogram(),
        }


def orbit_closure_cells(
    rs: RootSystem,
    parabolic: ParabolicSubset,
    interpretation=Interpretation.ASCENT,
    cap: int | None = None,
) -> CellTable:
    check_cell_budget(rs, 1, cap)
    return _cells(rs, parabolic, Interpretation(interpretation))


@lru_cache(maxsize=256)
def _cells(rs, parabolic, interpretation) -> CellTable:
    return CellTable(rs, parabolic, interpretation)


def orbit_closure_motive(
    rs: RootSystem,
    parabolic: ParabolicSubset,
    interpretation=Interpretation.ASCENT,
    cap: int | None = None,
) -> TateSum:
    """``⊕ Z(n)[2n]`` over the cells of the closure ``D_I``."""
    table = orbit_closure_cells(rs, parabolic, interpretation, cap)
    return TateSum.from_pure_coefficients(table.histogram())


def orbit_class(
    rs: RootSystem,
    parabolic: ParabolicSubset,
    interpretation=Interpretation.ASCENT,
    cap: int | None = None,
) -> LPolynomial:
    """Class of the open orbit, by Möbius inversion over the faces below ``I``."""
    check_cell_budget(rs, 2 ** len(parabolic), cap)
    total = LPolynomial()
    idx = tuple(parabolic)
    for k in range(len(idx) + 1):
        sign = -1 if (len(idx) - k) % 2 else 1
        for sub in combinations(idx, k):
            closure = euler_class(
                orbit_closure_motive(rs, ParabolicSubset.of(rs, sub), interpretation, cap=2**62)
            )
            total = total + sign * closure
    return total


def _adjoint_class(rs: RootSystem) -> LPolynomial:
    # split adjoint group: L^N (L-1)^rank P_W(L)
    return L**rs.num_positive * (L - 1) ** rs.rank * weyl_poincare(rs)


def orbit_class_oracle(rs: RootSystem, parabolic: ParabolicSubset) -> LPolynomial:
    """Orbit class from the fibration over ``G/P_I x G/P_I`` with Levi-group fiber."""
    flag = euler_class(flag_motive(rs, parabolic))
    return flag * flag * _adjoint_class(levi_subsystem(rs, parabolic))


def face_boundary_configuration(
    rs: RootSystem,
    parabolic: ParabolicSubset,
    interpretation=Interpretation.ASCENT,
    cap: int | None = None,
) -> Configuration:
    """Closures of the codimension-one faces of ``F_I``, as a configuration.

    Component ``k`` is the face with the ``k``-th element of ``I`` deleted; a set
    of components meets in the face with all their deleted roots removed.
    """
    idx = tuple(parabolic)

    def closure(sub) -> LPolynomial:
        return euler_class(
            orbit_closure_motive(rs, ParabolicSubset.of(rs, sub), interpretation, cap)
        )

    names = [f"D{ParabolicSubset.of(rs, [j for j in idx if j != i])}" for i in idx]
    classes = [closure([j for j in idx if j != i]) for i in idx]

    def intersection(s):
        removed = {idx[k - 1] for k in s}
        return closure([j for j in idx if j not in removed])

    return configuration_from_classes(names, classes, intersection)


def boundary_configuration(
    rs: RootSystem, interpretation=Interpretation.ASCENT, cap: int | None = None
) -> Configuration:
    """Irreducible components of the boundary divisor, one per simple root."""
    return face_boundary_configuration(rs, ParabolicSubset.full(rs), interpretation, cap)
