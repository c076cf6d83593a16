"""Cell decompositions and the motives of (relatively) cellular schemes.

The output is always the compactly supported decomposition: a cell of
dimension ``d`` contributes ``Z(d)[2d]``, a stratum fibred in ``d``-dimensional
affine spaces over ``Y`` contributes ``M^c(Y)(d)[2d]``.  Characteristic-zero
cellular and positive-characteristic motivic-cellular inputs give the same sum,
so the model does not tell them apart.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import AdmissibilityError, PurityError
from .tate import TateSum, is_pure_tate, twist_shift


@dataclass(frozen=True)
class Cell:
    dim: int
    label: str = ""


@dataclass(frozen=True)
class CellDecomposition:
    cells: tuple[Cell, ...]
    total_dim: int | None = None

    def __post_init__(self):
        cells = tuple(c if isinstance(c, Cell) else Cell(*c) for c in self.cells)
        object.__setattr__(self, "cells", cells)
        if not cells:
            raise AdmissibilityError("a cell decomposition needs at least one cell")
        for c in cells:
            if c.dim < 0:
                raise AdmissibilityError(f"negative cell dimension {c.dim}")
            if self.total_dim is not None and c.dim > self.total_dim:
                raise AdmissibilityError(
                    f"cell {c.label or c.dim} exceeds declared dimension {self.total_dim}"
                )

    @classmethod
    def from_dims(cls, dims: Iterable[int], total_dim: int | None = None):
        return cls(tuple(Cell(d) for d in dims), total_dim)

    def to_json(self) -> dict:
        return {"cells": [{"dim": c.dim, "label": c.label} for c in self.cells]}

    @classmethod
    def from_json(cls, data: Mapping) -> "CellDecomposition":
        return cls(tuple(Cell(int(c["dim"]), c.get("label", "")) for c in data["cells"]))


def motive_of_cells(c: CellDecomposition) -> TateSum:
    return TateSum(((cell.dim, 2 * cell.dim), 1) for cell in c.cells)


def chow_ranks(c: CellDecomposition) -> list[int]:
    """Histogram of cell dimensions: rank of ``CH_p`` is the number of ``p``-cells."""
    hist = Counter(cell.dim for cell in c.cells)
    return [hist[p] for p in range(max(hist) + 1)]


@dataclass(frozen=True)
class Stratum:
    base: TateSum
    twist: int
    label: str = ""


@dataclass(frozen=True)
class RelativeCellFiltration:
    strata: tuple[Stratum, ...]

    def __post_init__(self):
        strata = tuple(s if isinstance(s, Stratum) else Stratum(*s) for s in self.strata)
        object.__setattr__(self, "strata", strata)
        for s in strata:
            if s.twist < 0:
                raise AdmissibilityError(f"negative relative dimension {s.twist}")

    def to_json(self) -> dict:
        return {
            "strata": [
                {"base": s.base.to_json(), "twist": s.twist, "label": s.label}
                for s in self.strata
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "RelativeCellFiltration":
        return cls(
            tuple(
                Stratum(TateSum.from_json(s["base"]), int(s["twist"]), s.get("label", ""))
                for s in data["strata"]
            )
        )


def relative_cellular_motive(f: RelativeCellFiltration) -> TateSum:
    """``⊕_i M^c(Y_i)(d_i)[2d_i]``."""
    total = TateSum()
    for s in f.strata:
        if not is_pure_tate(s.base):
            raise PurityError(f"stratum {s.label or s.twist} has a non-pure base {s.base}")
        total = total + twist_shift(s.base, s.twist, 2 * s.twist)
    return total
