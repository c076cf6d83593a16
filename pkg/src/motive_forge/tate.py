"""Formal sums of Tate objects and polynomials in the Lefschetz class.

A :class:`TateSum` stands for a finite direct sum ``⊕ m·Z(p)[q]``; it is stored
as a sparse map ``(p, q) -> m`` with signed multiplicities so that virtual
classes (open complements) can be written down.  An :class:`LPolynomial` is an
integer polynomial in ``L``, the class of the affine line, and is what a Tate
sum becomes in the Grothendieck ring under ``Z(p)[q] -> (-1)^q L^p``.

Both types are immutable and hashable.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import PurityError


def _sparse(items: Iterable[tuple[object, int]]) -> dict:
    out: dict = {}
    for key, value in items:
        if not isinstance(value, int):
            raise TypeError(f"coefficients must be integers, got {value!r}")
        out[key] = out.get(key, 0) + value
    return {k: v for k, v in sorted(out.items()) if v != 0}


class LPolynomial:
    """Sparse integer polynomial in one variable (``L`` by default)."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        data = _sparse((int(e), c) for e, c in items)
        if any(e < 0 for e in data):
            raise ValueError("LPolynomial exponents must be nonnegative")
        self._coeffs = data
        self._hash = hash(tuple(data.items()))

    @classmethod
    def from_list(cls, coefficients: Iterable[int]) -> "LPolynomial":
        """Build from a dense coefficient list ``[c0, c1, ...]``."""
        return cls(enumerate(coefficients))

    @classmethod
    def constant(cls, c: int) -> "LPolynomial":
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> "LPolynomial":
        return cls({exponent: c})

    @property
    def degree(self) -> int:
        """Largest stored exponent; ``-1`` for the zero polynomial."""
        return max(self._coeffs, default=-1)

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def items(self) -> list[tuple[int, int]]:
        return list(self._coeffs.items())

    def to_list(self) -> list[int]:
        """Dense coefficient list, ascending; ``[]`` for zero."""
        return [self._coeffs.get(k, 0) for k in range(self.degree + 1)]

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_palindromic(self) -> bool:
        d = self.degree
        return all(self.coefficient(k) == self.coefficient(d - k) for k in range(d + 1))

    def __call__(self, x):
        total = 0
        for e, c in self._coeffs.items():
            total += c * x**e
        return total

    evaluate = __call__

    # arithmetic

    @staticmethod
    def _coerce(other) -> "LPolynomial | None":
        if isinstance(other, LPolynomial):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LPolynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LPolynomial(list(self._coeffs.items()) + list(other._coeffs.items()))

    __radd__ = __add__

    def __neg__(self):
        return LPolynomial({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LPolynomial(
            (e1 + e2, c1 * c2)
            for e1, c1 in self._coeffs.items()
            for e2, c2 in other._coeffs.items()
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = LPolynomial.constant(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return self._hash

    def format(self, var: str = "L") -> str:
        """Ascending-order text form, e.g. ``1 - 2L + L^2``."""
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in self._coeffs.items():
            if e == 0:
                mono = str(abs(c))
            else:
                power = var if e == 1 else f"{var}^{e}"
                mono = power if abs(c) == 1 else f"{abs(c)}{power}"
            if not parts:
                parts.append(mono if c > 0 else "-" + mono)
            else:
                parts.append(("+ " if c > 0 else "- ") + mono)
        return " ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LPolynomial({self._coeffs!r})"

    def to_json(self) -> dict:
        return {"coeffs": [[e, c] for e, c in self._coeffs.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "LPolynomial":
        return cls((int(e), int(c)) for e, c in data["coeffs"])


L = LPolynomial.monomial(1)


class TateSum:
    """Finite formal sum of Tate objects ``Z(p)[q]`` with integer multiplicities."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self._terms = _sparse(((int(p), int(q)), m) for (p, q), m in items)
        self._hash = hash(tuple(self._terms.items()))

    @classmethod
    def tate(cls, p: int = 0, q: int | None = None, mult: int = 1) -> "TateSum":
        """``mult`` copies of ``Z(p)[q]``; ``q`` defaults to ``2p``."""
        return cls({(p, 2 * p if q is None else q): mult})

    @classmethod
    def from_pure_coefficients(cls, ranks: Iterable[int]) -> "TateSum":
        """``⊕_p ranks[p]·Z(p)[2p]``, the motive of a cellular variety."""
        return cls(((p, 2 * p), c) for p, c in enumerate(ranks))

    def terms(self) -> list[tuple[tuple[int, int], int]]:
        return list(self._terms.items())

    def multiplicity(self, p: int, q: int) -> int:
        return self._terms.get((p, q), 0)

    @property
    def is_effective(self) -> bool:
        return all(m > 0 for m in self._terms.values())

    def total_multiplicity(self) -> int:
        return sum(self._terms.values())

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other):
        if not isinstance(other, TateSum):
            return NotImplemented
        return TateSum(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return TateSum({k: -m for k, m in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TateSum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TateSum):
            return TateSum(
                ((p1 + p2, q1 + q2), m1 * m2)
                for (p1, q1), m1 in self._terms.items()
                for (p2, q2), m2 in other._terms.items()
            )
        if isinstance(other, int) and not isinstance(other, bool):
            return TateSum({k: m * other for k, m in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TateSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"TateSum({self._terms!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (p, q), m in self._terms.items():
            obj = "Z" if (p, q) == (0, 0) else f"Z({p})[{q}]"
            parts.append(obj if m == 1 else f"{m}·{obj}")
        return " ⊕ ".join(parts)

    def to_json(self) -> dict:
        return {
            "terms": [
                {"twist": p, "shift": q, "mult": m} for (p, q), m in self._terms.items()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "TateSum":
        return cls(
            ((int(t["twist"]), int(t["shift"])), int(t["mult"])) for t in data["terms"]
        )


ZERO = TateSum()
UNIT = TateSum.tate(0)


def direct_sum(a: TateSum, b: TateSum) -> TateSum:
    return a + b


def tensor(a: TateSum, b: TateSum) -> TateSum:
    """``Z(p)[q] ⊗ Z(p')[q'] = Z(p+p')[q+q']`` extended bilinearly."""
    return a * b


def twist_shift(a: TateSum, p: int, q: int) -> TateSum:
    return TateSum(((p0 + p, q0 + q), m) for (p0, q0), m in a.terms())


def is_pure_tate(a: TateSum) -> bool:
    """Every term is ``Z(p)[2p]`` with positive multiplicity."""
    return all(q == 2 * p and m > 0 for (p, q), m in a.terms())


def euler_class(a: TateSum) -> LPolynomial:
    """Grothendieck-ring image ``Σ m·(-1)^q L^p``."""
    out = []
    for (p, q), m in a.terms():
        if p < 0:
            raise ValueError(f"negative twist {p} has no polynomial class")
        out.append((p, -m if q % 2 else m))
    return LPolynomial(out)


def pure_coefficients(a: TateSum) -> list[int]:
    """Chow ranks ``c[p]`` = multiplicity of ``Z(p)[2p]``."""
    if not is_pure_tate(a):
        raise PurityError(f"not pure Tate: {a}")
    if a.is_zero():
        return []
    if min(p for (p, _), _ in a.terms()) < 0:
        raise PurityError("negative twists have no Chow-rank vector")
    top = max(p for (p, _), _ in a.terms())
    return [a.multiplicity(p, 2 * p) for p in range(top + 1)]


def self_duality_check(a: TateSum, n: int) -> bool:
    """Poincaré duality for a pure sum: ``c[p] == c[n-p]`` and ``c[0] == 1``."""
    c = pure_coefficients(a)
    if not c or c[0] != 1 or len(c) - 1 > n:
        return False
    c = c + [0] * (n + 1 - len(c))
    return all(c[p] == c[n - p] for p in range(n + 1))
