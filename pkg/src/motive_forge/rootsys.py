"""Root systems from Cartan types, and Weyl group combinatorics.

Roots are integer vectors in simple-root coordinates.  The Cartan matrix uses
the convention ``A[i][j] = <alpha_i^vee, alpha_j>``, so the simple reflection
``s_i`` acts by ``s_i(beta) = beta - (A beta)_i alpha_i``.  A Weyl group
element is stored with its integer action matrix on the root lattice (columns
are the images of the simple roots) and its canonical reduced word, the
lexicographically smallest one.  Simple roots are indexed ``1..rank``.
"""

from __future__ import annotations

import os
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import prod
from typing import Iterable

import numpy as np

from .errors import AdmissibilityError, InvariantError, SizeGuardError
from .tate import LPolynomial

DEFAULT_CAP = 10**6
CAP_ENV = "MOTIVE_FORGE_CAP"

CARTAN_TYPE_RE = re.compile(r"^[ABCDEFG][1-9][0-9]*$")


def default_cap() -> int:
    """Global enumeration cap, overridable through ``MOTIVE_FORGE_CAP``."""
    raw = os.environ.get(CAP_ENV)
    if raw is None or raw == "":
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise AdmissibilityError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise AdmissibilityError(f"{CAP_ENV} must be positive")
    return cap


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        ok = (
            (f == "A" and n >= 1)
            or (f in "BC" and n >= 2)
            or (f == "D" and n >= 4)
            or (f == "E" and n in (6, 7, 8))
            or (f == "F" and n == 4)
            or (f == "G" and n == 2)
        )
        if len(f) != 1 or not ok:
            raise AdmissibilityError(
                f"inadmissible Cartan type {f}{n}: expected A n>=1, B/C n>=2, "
                f"D n>=4, E6/E7/E8, F4 or G2"
            )

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        """Parse ``"A2"``, ``"F4"``...; ``C2`` is normalized to ``B2``."""
        text = text.strip()
        if not CARTAN_TYPE_RE.match(text):
            raise AdmissibilityError(
                f"malformed Cartan type {text!r}: expected a family letter A-G "
                f"followed by the rank, e.g. A2 or F4"
            )
        ct = cls(text[0], int(text[1:]))
        if ct.family == "C" and ct.rank == 2:
            return cls("B", 2)
        return ct

    def __str__(self):
        return f"{self.family}{self.rank}"

    def expected_positive_roots(self) -> int:
        n = self.rank
        return {
            "A": n * (n + 1) // 2,
            "B": n * n,
            "C": n * n,
            "D": n * (n - 1),
            "E": {6: 36, 7: 63, 8: 120}.get(n, 0),
            "F": 24,
            "G": 6,
        }[self.family]


def cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix in Bourbaki numbering."""
    n = ct.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    f = ct.family
    if f in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if f == "B":
            a[n - 1][n - 2] = -2
        elif f == "C":
            a[n - 2][n - 1] = -2
    elif f == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif f == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif f == "F":
        link(0, 1)
        link(1, 2)
        link(2, 3)
        a[2][1] = -2
    elif f == "G":
        link(0, 1, -1, -3)
    return tuple(tuple(row) for row in a)


def _reflect(cm, i, beta):
    c = sum(cm[i][j] * beta[j] for j in range(len(beta)))
    out = list(beta)
    out[i] -= c
    return tuple(out)


def _close_roots(cm) -> list[tuple[int, ...]]:
    n = len(cm)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    stack = list(simple)
    while stack:
        beta = stack.pop()
        for i in range(n):
            gamma = _reflect(cm, i, beta)
            if gamma not in seen:
                seen.add(gamma)
                stack.append(gamma)
    positive = [r for r in seen if all(x >= 0 for x in r)]
    positive.sort(key=lambda r: (sum(r), r))
    return positive


def _exponents_from_heights(positive, rank) -> tuple[int, ...]:
    # exponents are the conjugate partition of the root-height multiplicities
    heights = Counter(sum(r) for r in positive)
    counts = [heights[k] for k in range(1, max(heights, default=0) + 1)]
    return tuple(sorted(sum(1 for c in counts if c >= i) for i in range(1, rank + 1)))


@dataclass(frozen=True)
class RootSystem:
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    exponents: tuple[int, ...]
    name: str = ""
    cartan_type: CartanType | None = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return len(self.cartan_matrix)

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def simple_roots(self) -> dict[int, tuple[int, ...]]:
        n = self.rank
        return {i + 1: tuple(int(i == j) for j in range(n)) for i in range(n)}

    @property
    def weyl_order(self) -> int:
        return prod(e + 1 for e in self.exponents)

    @cached_property
    def reflections(self) -> tuple[np.ndarray, ...]:
        n = self.rank
        mats = []
        for i in range(n):
            s = np.eye(n, dtype=np.int64)
            s[i, :] -= np.asarray(self.cartan_matrix[i], dtype=np.int64)
            s.setflags(write=False)
            mats.append(s)
        return tuple(mats)

    @cached_property
    def _positive_array(self) -> np.ndarray:
        return np.array(self.positive_roots, dtype=np.int64).reshape(-1, self.rank).T

    def __str__(self):
        return self.name or f"rank-{self.rank} root system"


def build_root_system(ct: CartanType | str) -> RootSystem:
    """Root system of ``ct`` with positive roots generated by reflection closure."""
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    elif ct.family == "C" and ct.rank == 2:
        ct = CartanType("B", 2)
    return _build(ct)


@lru_cache(maxsize=None)
def _build(ct: CartanType) -> RootSystem:
    cm = cartan_matrix(ct)
    positive = _close_roots(cm)
    if len(positive) != ct.expected_positive_roots():
        raise InvariantError(
            f"{ct}: closure produced {len(positive)} positive roots, "
            f"expected {ct.expected_positive_roots()}"
        )
    exps = _exponents_from_heights(positive, ct.rank)
    if sum(exps) != len(positive):
        raise InvariantError(f"{ct}: exponents {exps} do not sum to N")
    return RootSystem(cm, tuple(positive), exps, str(ct), ct)


def root_system_from_cartan(cm, name: str = "") -> RootSystem:
    """Root system for an arbitrary (possibly reducible, possibly empty) finite-type Cartan matrix."""
    cm = tuple(tuple(int(x) for x in row) for row in cm)
    n = len(cm)
    for i, row in enumerate(cm):
        if len(row) != n or row[i] != 2 or any(row[j] > 0 for j in range(n) if j != i):
            raise AdmissibilityError("not a Cartan matrix: need 2 on the diagonal, <= 0 off it")
    positive = _close_roots(cm)
    return RootSystem(cm, tuple(positive), _exponents_from_heights(positive, n), name)


# parabolic subsets


@dataclass(frozen=True)
class ParabolicSubset:
    """A subset ``I`` of the simple roots, as sorted 1-based indices."""

    indices: tuple[int, ...]
    rank: int

    def __post_init__(self):
        idx = tuple(self.indices)
        if len(set(idx)) != len(idx):
            raise AdmissibilityError(f"duplicate indices in parabolic subset {idx}")
        bad = [i for i in idx if not 1 <= i <= self.rank]
        if bad:
            raise AdmissibilityError(
                f"parabolic indices {bad} out of range 1..{self.rank}"
            )
        object.__setattr__(self, "indices", tuple(sorted(idx)))

    @classmethod
    def of(cls, rs: RootSystem | int, indices: Iterable[int] = ()) -> "ParabolicSubset":
        rank = rs if isinstance(rs, int) else rs.rank
        return cls(tuple(indices), rank)

    @classmethod
    def full(cls, rs: RootSystem | int) -> "ParabolicSubset":
        rank = rs if isinstance(rs, int) else rs.rank
        return cls(tuple(range(1, rank + 1)), rank)

    @classmethod
    def parse(cls, text: str, rs: RootSystem | int) -> "ParabolicSubset":
        """Comma-separated 1-based indices; empty string is the empty subset."""
        rank = rs if isinstance(rs, int) else rs.rank
        text = text.strip()
        if not text:
            return cls((), rank)
        try:
            idx = tuple(int(t) for t in text.split(","))
        except ValueError:
            raise AdmissibilityError(
                f"malformed parabolic subset {text!r}: expected indices like 1,3"
            ) from None
        return cls(idx, rank)

    def complement(self) -> "ParabolicSubset":
        return ParabolicSubset(
            tuple(i for i in range(1, self.rank + 1) if i not in self.indices), self.rank
        )

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def __contains__(self, i):
        return i in self.indices

    def __and__(self, other: "ParabolicSubset") -> "ParabolicSubset":
        return ParabolicSubset(tuple(i for i in self.indices if i in other), self.rank)

    def __str__(self):
        return "{" + ",".join(map(str, self.indices)) + "}"


# Weyl group


@dataclass(frozen=True)
class WeylElement:
    word: tuple[int, ...]
    length: int
    action: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.action, dtype=np.int64)

    def __str__(self):
        if not self.word:
            return "e"
        return "·".join(f"s{i}" for i in self.word)


def _as_tuple(m: np.ndarray) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in m)


def _check_overflow(m: np.ndarray) -> None:
    if m.size and int(np.abs(m).max()) > 2**40:
        raise OverflowError("Weyl action entries left the checked range")


def inversion_count(rs: RootSystem, action) -> int:
    """Number of positive roots sent to negative roots."""
    m = np.asarray(action, dtype=np.int64)
    if rs.rank == 0:
        return 0
    images = m @ rs._positive_array
    return int(np.sum(np.any(images < 0, axis=0)))


def _right_ascents(m: np.ndarray) -> list[int]:
    # w(alpha_i) is column i; positive iff no negative entry
    return [i for i in range(m.shape[1]) if not (m[:, i] < 0).any()]


def canonical_word(rs: RootSystem, action) -> tuple[int, ...]:
    """Lexicographically smallest reduced word, by peeling smallest left descents."""
    m = np.array(action, dtype=np.int64)
    length = inversion_count(rs, m)
    word = []
    while length:
        for i, s in enumerate(rs.reflections):
            cand = s @ m
            cl = inversion_count(rs, cand)
            if cl < length:
                word.append(i + 1)
                m, length = cand, cl
                break
        else:  # pragma: no cover
            raise InvariantError("nonidentity element without a left descent")
    return tuple(word)


def element_from_action(rs: RootSystem, action) -> WeylElement:
    m = np.asarray(action, dtype=np.int64)
    word = canonical_word(rs, m)
    return WeylElement(word, len(word), _as_tuple(m))


def element_from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    """Element represented by an arbitrary (not necessarily reduced) word."""
    m = np.eye(rs.rank, dtype=np.int64)
    for i in word:
        if not 1 <= i <= rs.rank:
            raise AdmissibilityError(f"simple index {i} out of range 1..{rs.rank}")
        m = m @ rs.reflections[i - 1]
    return element_from_action(rs, m)


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement((), 0, _as_tuple(np.eye(rs.rank, dtype=np.int64)))


def multiply(rs: RootSystem, u: WeylElement, v: WeylElement) -> WeylElement:
    return element_from_action(rs, u.matrix @ v.matrix)


def check_weyl_size(rs: RootSystem, cap: int | None = None) -> int:
    cap = default_cap() if cap is None else cap
    order = rs.weyl_order
    if order > cap:
        raise SizeGuardError(f"Weyl group of {rs}", order, cap)
    return order


def enumerate_weyl(rs: RootSystem, cap: int | None = None) -> tuple[WeylElement, ...]:
    """All of ``W``, ordered by length then canonical word."""
    check_weyl_size(rs, cap)
    return _enumerate(rs)


@lru_cache(maxsize=32)
def _enumerate(rs: RootSystem) -> tuple[WeylElement, ...]:
    n = rs.rank
    ident = np.eye(n, dtype=np.int64)
    levels = [{ident.tobytes(): ident}]
    length_of = {ident.tobytes(): 0}
    while True:
        nxt = {}
        for m in levels[-1].values():
            for i in _right_ascents(m):
                w = m @ rs.reflections[i]
                key = w.tobytes()
                if key not in nxt:
                    nxt[key] = w
        if not nxt:
            break
        for w in nxt.values():
            _check_overflow(w)
        for key in nxt:
            length_of[key] = len(levels)
        levels.append(nxt)

    words = {ident.tobytes(): ()}
    out = [WeylElement((), 0, _as_tuple(ident))]
    for k in range(1, len(levels)):
        level = []
        for key, m in levels[k].items():
            for i, s in enumerate(rs.reflections):
                prev = (s @ m).tobytes()
                if length_of.get(prev) == k - 1:
                    word = (i + 1,) + words[prev]
                    break
            else:  # pragma: no cover
                raise InvariantError("element without a left descent during enumeration")
            words[key] = word
            level.append(WeylElement(word, k, _as_tuple(m)))
        level.sort(key=lambda w: w.word)
        out.extend(level)
    if len(out) != rs.weyl_order:
        raise InvariantError(
            f"{rs}: enumerated {len(out)} elements, product of (e_i + 1) is {rs.weyl_order}"
        )
    return tuple(out)


def longest_element(rs: RootSystem) -> WeylElement:
    """``w0``, found by climbing right ascents (no enumeration needed)."""
    m = np.eye(rs.rank, dtype=np.int64)
    while True:
        asc = _right_ascents(m)
        if not asc:
            break
        m = m @ rs.reflections[asc[0]]
    return element_from_action(rs, m)


def length_histogram(elements: Iterable[WeylElement]) -> LPolynomial:
    """``Σ t^{l(w)}`` over the given elements."""
    return LPolynomial((w.length, 1) for w in elements)


def weyl_poincare(rs: RootSystem, cap: int | None = None) -> LPolynomial:
    return length_histogram(enumerate_weyl(rs, cap))


def is_right_ascent(w: WeylElement, i: int) -> bool:
    """``l(w s_i) > l(w)``, i.e. ``w(alpha_i)`` is a positive root."""
    return all(row[i - 1] >= 0 for row in w.action)


def minimal_coset_reps(
    rs: RootSystem, parabolic: ParabolicSubset, cap: int | None = None
) -> tuple[WeylElement, ...]:
    """``W^I``: elements with ``l(w s_alpha) > l(w)`` for every ``alpha`` in ``I``."""
    return tuple(
        w for w in enumerate_weyl(rs, cap) if all(is_right_ascent(w, i) for i in parabolic)
    )


def ascent_set(rs: RootSystem, w: WeylElement) -> ParabolicSubset:
    """Right ascents ``{alpha in Delta : l(w s_alpha) > l(w)}``."""
    return ParabolicSubset(
        tuple(i for i in range(1, rs.rank + 1) if is_right_ascent(w, i)), rs.rank
    )


def support_complement(rs: RootSystem, w: WeylElement) -> ParabolicSubset:
    """Simple roots absent from the reduced word of ``w``."""
    used = set(w.word)
    return ParabolicSubset(
        tuple(i for i in range(1, rs.rank + 1) if i not in used), rs.rank
    )


def levi_subsystem(rs: RootSystem, parabolic: ParabolicSubset) -> RootSystem:
    """Root system on the simple roots in ``I`` with the induced Cartan submatrix."""
    idx = [i - 1 for i in parabolic]
    cm = tuple(tuple(rs.cartan_matrix[i][j] for j in idx) for i in idx)
    return _levi(cm, f"{rs}{parabolic}")


@lru_cache(maxsize=None)
def _levi(cm, name):
    return root_system_from_cartan(cm, name)
