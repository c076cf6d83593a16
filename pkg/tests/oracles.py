"""Brute-force reference computations, deliberately independent of the package.

Nothing here imports ``motive_forge``: Weyl groups are generated as
permutation groups on the full root set and lengths are Cayley-graph distances,
so they check the inversion-count machinery instead of repeating it.
"""

from collections import Counter, deque
from itertools import permutations, product

# exponents as tabulated in the standard literature (Bourbaki, Humphreys)
KNOWN_EXPONENTS = {
    "A1": [1], "A2": [1, 2], "A3": [1, 2, 3], "A4": [1, 2, 3, 4],
    "B2": [1, 3], "B3": [1, 3, 5], "B4": [1, 3, 5, 7],
    "C3": [1, 3, 5], "D4": [1, 3, 3, 5],
    "E6": [1, 4, 5, 7, 8, 11],
    "F4": [1, 5, 7, 11], "G2": [1, 5],
}


def all_roots(cm):
    """Every root (positive and negative) by closing the simple roots under reflections."""
    n = len(cm)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(n):
            pairing = sum(cm[i][j] * beta[j] for j in range(n))
            gamma = list(beta)
            gamma[i] -= pairing
            gamma = tuple(gamma)
            if gamma not in found:
                found.add(gamma)
                queue.append(gamma)
    return sorted(found)


class PermWeyl:
    """Weyl group as permutations of the root set; lengths from BFS distance."""

    def __init__(self, cm):
        self.cm = cm
        self.n = len(cm)
        self.roots = all_roots(cm)
        index = {r: k for k, r in enumerate(self.roots)}
        self.gens = []
        for i in range(self.n):
            perm = []
            for beta in self.roots:
                pairing = sum(cm[i][j] * beta[j] for j in range(self.n))
                gamma = list(beta)
                gamma[i] -= pairing
                perm.append(index[tuple(gamma)])
            self.gens.append(tuple(perm))
        ident = tuple(range(len(self.roots)))
        self.length = {ident: 0}
        queue = deque([ident])
        while queue:
            w = queue.popleft()
            for s in self.gens:
                ws = self.mul(w, s)
                if ws not in self.length:
                    self.length[ws] = self.length[w] + 1
                    queue.append(ws)
        self.identity = ident

    @staticmethod
    def mul(u, v):
        return tuple(u[j] for j in v)

    def elements(self):
        return list(self.length)

    def order(self):
        return len(self.length)

    def length_histogram(self):
        c = Counter(self.length.values())
        return [c[k] for k in range(max(c) + 1)]

    def is_right_ascent(self, w, i):
        return self.length[self.mul(w, self.gens[i - 1])] > self.length[w]

    def min_coset_lengths(self, parabolic):
        return [
            self.length[w]
            for w in self.length
            if all(self.is_right_ascent(w, i) for i in parabolic)
        ]

    def subgroup_histogram(self, parabolic):
        """Length histogram of the subgroup generated by the reflections in ``parabolic``."""
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            w = queue.popleft()
            for i in parabolic:
                ws = self.mul(w, self.gens[i - 1])
                if ws not in seen:
                    seen.add(ws)
                    queue.append(ws)
        c = Counter(self.length[w] for w in seen)
        return [c[k] for k in range(max(c) + 1)]


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def product_of_q_integers(exponents):
    """∏ (1 + t + ... + t^e) as a dense coefficient list."""
    out = [1]
    for e in exponents:
        out = poly_mul(out, [1] * (e + 1))
    return out


def permutation_inversion_histogram(m):
    """Inversion-number histogram of the symmetric group on ``m`` letters (type A_{m-1})."""
    c = Counter(
        sum(1 for i in range(m) for j in range(i + 1, m) if p[i] > p[j])
        for p in permutations(range(m))
    )
    return [c[k] for k in range(max(c) + 1)]


def _det_mod(mat, q):
    n = len(mat)
    if n == 1:
        return mat[0][0] % q
    if n == 2:
        return (mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]) % q
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        total += (-1) ** j * mat[0][j] * _det_mod(minor, q)
    return total % q


def count_gl(n, q):
    """|GL_n(F_q)| by enumerating every matrix (``q`` prime)."""
    count = 0
    for entries in product(range(q), repeat=n * n):
        mat = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
        if _det_mod(mat, q):
            count += 1
    return count


def count_projective_points(dim, q):
    """Points of P^dim over F_q, as lines through the origin of F_q^{dim+1}."""
    nonzero = sum(1 for v in product(range(q), repeat=dim + 1) if any(v))
    return nonzero // (q - 1)


def count_complete_flags_3(q):
    """Complete flags line ⊂ plane in F_q^3, by enumerating subspaces."""
    vecs = [v for v in product(range(q), repeat=3) if any(v)]

    def span(gens):
        out = set()
        for coeffs in product(range(q), repeat=len(gens)):
            out.add(tuple(sum(c * g[k] for c, g in zip(coeffs, gens)) % q for k in range(3)))
        return frozenset(out)

    lines = {span([v]) for v in vecs}
    planes = {span([v, w]) for v in vecs for w in vecs}
    planes = {p for p in planes if len(p) == q * q}
    return sum(1 for line in lines for plane in planes if line <= plane)


def brute_leray_hirsch(fiber_cell_dims, base_terms):
    """Künneth on cells: each fiber cell of dim d times each base summand Z(p)[q]."""
    out = Counter()
    for d in fiber_cell_dims:
        for (p, q), m in base_terms.items():
            for _ in range(m):
                out[(p + d, q + 2 * d)] += 1
    return {k: v for k, v in out.items() if v}
