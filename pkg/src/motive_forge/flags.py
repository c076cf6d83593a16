"""Flag varieties, Leray-Hirsch products and towers of cellular fibrations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import AdmissibilityError
from .rootsys import (
    ParabolicSubset,
    RootSystem,
    build_root_system,
    minimal_coset_reps,
)
from .tate import TateSum, pure_coefficients, twist_shift


@dataclass(frozen=True)
class FiberData:
    """Chow ranks of a cellular fiber satisfying Poincaré duality."""

    chow_ranks: tuple[int, ...]
    fiber_dim: int | None = None

    def __post_init__(self):
        ranks = tuple(int(r) for r in self.chow_ranks)
        object.__setattr__(self, "chow_ranks", ranks)
        dim = len(ranks) - 1 if self.fiber_dim is None else self.fiber_dim
        object.__setattr__(self, "fiber_dim", dim)
        if not ranks or ranks[0] != 1:
            raise AdmissibilityError(f"fiber rank CH_0 must be 1, got {ranks[:1]}")
        if any(r < 0 for r in ranks):
            raise AdmissibilityError(f"negative Chow rank in {ranks}")
        if len(ranks) - 1 > dim:
            raise AdmissibilityError(f"Chow ranks {ranks} exceed fiber dimension {dim}")
        padded = ranks + (0,) * (dim + 1 - len(ranks))
        for p in range(dim + 1):
            if padded[p] != padded[dim - p]:
                raise AdmissibilityError(
                    f"fiber violates Poincaré duality: CH_{p} has rank {padded[p]} "
                    f"but CH_{dim - p} has rank {padded[dim - p]}"
                )

    @classmethod
    def parse(cls, text: str) -> "FiberData":
        """``"1,2,1"`` (rank vector) or ``"A2/1"`` (flag variety G/P_I)."""
        text = text.strip()
        if text and text[0].isalpha():
            type_part, _, idx = text.partition("/")
            rs = build_root_system(type_part)
            return cls.of_flag(rs, ParabolicSubset.parse(idx, rs))
        try:
            ranks = tuple(int(t) for t in text.split(","))
        except ValueError:
            raise AdmissibilityError(
                f"malformed fiber {text!r}: expected ranks like 1,1,1 or a flag like A2/1"
            ) from None
        return cls(ranks)

    @classmethod
    def of_flag(cls, rs: RootSystem, parabolic: ParabolicSubset) -> "FiberData":
        return cls(tuple(pure_coefficients(flag_motive(rs, parabolic))))

    def pure_sum(self) -> TateSum:
        return TateSum.from_pure_coefficients(self.chow_ranks)


def flag_motive(rs: RootSystem, parabolic: ParabolicSubset, cap: int | None = None) -> TateSum:
    """Motive of ``G/P_I``: one ``Z(l(w))[2l(w)]`` per ``w`` in ``W^I``."""
    return TateSum(((w.length, 2 * w.length), 1) for w in minimal_coset_reps(rs, parabolic, cap))


def leray_hirsch(fiber: FiberData, base: TateSum) -> TateSum:
    """``⊕_p CH_p(F) ⊗ M(X)(p)[2p]``."""
    total = TateSum()
    for p, rank in enumerate(fiber.chow_ranks):
        if rank:
            total = total + rank * twist_shift(base, p, 2 * p)
    return total


def tower_motive(fibers: Sequence[FiberData], base: TateSum) -> TateSum:
    """Ambient object of a tower of cellular fibrations over ``base``.

    The motive of a variety resolved by the tower is only a direct summand of
    the returned sum.
    """
    out = base
    for fiber in reversed(fibers):
        out = leray_hirsch(fiber, out)
    return out
