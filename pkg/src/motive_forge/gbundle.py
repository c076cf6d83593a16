"""Class-level machinery for G-bundles.

Distinguished triangles ``A -> B -> C`` become the additive relation
``[A] + [C] = [B]`` in the Grothendieck ring; the nested filtration over the
face lattice of the wonderful compactification is emitted as a tree of such
relations, each one checked when the node is built.  Bundles are treated as
Zariski-locally trivial, so the class of a bundle is the product of the
classes of base and fiber.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .configurations import union_class
from .errors import InvariantError
from .rootsys import ParabolicSubset, RootSystem, root_system_from_cartan, weyl_poincare
from .tate import L, LPolynomial, TateSum, euler_class, twist_shift
from .wonderful import (
    Face,
    Interpretation,
    check_cell_budget,
    face,
    face_boundary_configuration,
    orbit_class,
    orbit_closure_motive,
)


@dataclass(frozen=True)
class TorusPiece:
    rank: int
    piece: TateSum


@dataclass(frozen=True)
class TorusFiltration:
    pieces: tuple[TorusPiece, ...]

    def to_json(self) -> dict:
        return {
            "pieces": [
                {"p": p, "rank": tp.rank, "piece": tp.piece.to_json()}
                for p, tp in enumerate(self.pieces)
            ]
        }


def torus_filtration_pieces(r: int, base: TateSum | None = None) -> TorusFiltration:
    """Graded pieces ``lambda_p = M(X)(p)[p] ⊗ Λ^p(Ξ)`` for ``p = 0..r``."""
    if r < 0:
        raise ValueError("torus rank must be nonnegative")
    base = TateSum.tate(0) if base is None else base
    return TorusFiltration(
        tuple(TorusPiece(comb(r, p), comb(r, p) * twist_shift(base, p, p)) for p in range(r + 1))
    )


def torus_class(r: int) -> LPolynomial:
    return (L - 1) ** r


def reductive_group_class(rs: RootSystem | None, central_rank: int = 0) -> LPolynomial:
    """``[G] = L^N (L-1)^{rank+z} P_W(L)`` for a split reductive group.

    ``rs=None`` stands for the empty root system, so the result is a split torus.
    """
    if central_rank < 0:
        raise ValueError("central torus rank must be nonnegative")
    if rs is None:
        rs = root_system_from_cartan(())
    return L**rs.num_positive * (L - 1) ** (rs.rank + central_rank) * weyl_poincare(rs)


def g_bundle_class(base_class: LPolynomial, group_class: LPolynomial) -> LPolynomial:
    return base_class * group_class


@dataclass(frozen=True)
class Triangle:
    label: str
    middle: LPolynomial
    left: LPolynomial
    right: LPolynomial

    @property
    def ok(self) -> bool:
        return self.left + self.right == self.middle

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "middle": self.middle.to_json(),
            "left": self.left.to_json(),
            "right": self.right.to_json(),
            "verdict": "ok" if self.ok else "fail",
        }


@dataclass(frozen=True)
class FiltrationNode:
    """Triangle ``M^c(∂F) -> M^c(D_F) -> M^c(D_F minus ∂F)`` and its refinements."""

    face: Face
    middle: LPolynomial
    left: LPolynomial
    right: LPolynomial
    levels: tuple[Triangle, ...] = ()
    children: tuple["FiltrationNode", ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.left + self.right == self.middle and all(t.ok for t in self.levels)

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()

    def to_json(self) -> dict:
        return {
            "face": list(self.face.parabolic),
            "dim": self.face.dim,
            "middle": self.middle.to_json(),
            "left": self.left.to_json(),
            "right": self.right.to_json(),
            "verdict": "ok" if self.ok else "fail",
            "levels": [t.to_json() for t in self.levels],
            "children": [c.to_json() for c in self.children],
        }


# the whole tree's budget is checked once up front
_UNCAPPED = 2**62


def _closure(rs, idx, interpretation) -> LPolynomial:
    parabolic = ParabolicSubset.of(rs, idx)
    return euler_class(orbit_closure_motive(rs, parabolic, interpretation, _UNCAPPED))


def _union_of_faces(rs, faces, interpretation) -> LPolynomial:
    # closures meet along the face of the common subset
    total = LPolynomial()
    for k in range(1, len(faces) + 1):
        sign = 1 if k % 2 else -1
        for group in combinations(faces, k):
            common = set(group[0]).intersection(*group[1:])
            total = total + sign * _closure(rs, sorted(common), interpretation)
    return total


def _levels(rs, idx, base, interpretation) -> tuple[Triangle, ...]:
    n = len(idx)
    out = []
    for r in range(1, n + 1):
        q_r = list(combinations(idx, n - r))
        q_next = list(combinations(idx, n - r - 1)) if r < n else []
        middle = _union_of_faces(rs, q_r, interpretation)
        left = _union_of_faces(rs, q_next, interpretation)
        right = LPolynomial()
        for sub in q_r:
            right = right + orbit_class(rs, ParabolicSubset.of(rs, sub), interpretation, _UNCAPPED)
        out.append(Triangle(f"codim {r}", base * middle, base * left, base * right))
    return tuple(out)


def _node(rs, idx, base, interpretation, is_root) -> FiltrationNode:
    parabolic = ParabolicSubset.of(rs, idx)
    middle = _closure(rs, idx, interpretation)
    left = LPolynomial()
    if idx:
        left = union_class(face_boundary_configuration(rs, parabolic, interpretation, _UNCAPPED))
    if is_root:
        right = reductive_group_class(rs, 0)
    else:
        right = orbit_class(rs, parabolic, interpretation, _UNCAPPED)
    node = FiltrationNode(
        face(rs, parabolic),
        base * middle,
        base * left,
        base * right,
        _levels(rs, idx, base, interpretation),
        tuple(
            _node(rs, tuple(j for j in idx if j != i), base, interpretation, False) for i in idx
        ),
    )
    if not node.ok:
        raise InvariantError(f"triangle additivity fails at face {node.face}")
    return node


def nested_filtration_report(
    rs: RootSystem,
    base_class: LPolynomial | int = 1,
    interpretation=Interpretation.ASCENT,
    cap: int | None = None,
) -> FiltrationNode:
    """Nested filtration of a G-bundle over a base of class ``base_class``.

    The root is the whole compactification ``D_P``; every face ``F`` refines to
    the filtration obtained by replacing the polytope with ``F``.
    """
    check_cell_budget(rs, 2**rs.rank, cap)
    base = LPolynomial.constant(base_class) if isinstance(base_class, int) else base_class
    return _node(rs, tuple(range(1, rs.rank + 1)), base, Interpretation(interpretation), True)
