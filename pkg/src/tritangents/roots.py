"""Euclidean models of the ADE root systems.

Vectors are tuples of integer numerators over one denominator per system
(A_n: n+1, D_n and E7/E8: 2, E6: 6).  E7 and E6 live inside the E8
coordinates as orthogonal complements of one resp. two norm-2 glue vectors;
the simple basis is extracted from the root list by lexicographic
positivity, so no fixed Dynkin node numbering is assumed anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

from . import intlinalg as la


def _lex_positive(v) -> bool:
    for x in v:
        if x:
            return x > 0
    return False


class RootSystem:
    __slots__ = (
        "kind", "n", "dim", "den", "roots", "basis", "gram",
        "discr_size", "_glue", "_dual_cache",
    )

    def __init__(self, kind: str, n: int, dim: int, den: int, roots, glue_reps):
        self.kind = kind
        self.n = n
        self.dim = dim
        self.den = den
        self.roots = tuple(sorted(roots))
        self._glue = tuple(glue_reps)
        self._dual_cache = {}
        for r in self.roots:
            if self.inner(r, r) != 2:
                raise AssertionError("non-root in root list")
        self.basis = self._simple_basis()
        g = []
        for u in self.basis:
            row = []
            for v in self.basis:
                val = self.inner(u, v)
                if val.denominator != 1:
                    raise AssertionError("basis Gram is not integral")
                row.append(int(val))
            g.append(row)
        self.gram = g
        self.discr_size = la.bareiss_det([r[:] for r in g])
        if len(self._glue) != self.discr_size:
            raise AssertionError("glue class count must equal the discriminant order")
        for k, rep in enumerate(self._glue):
            if self.class_of(rep) != k:
                raise AssertionError("glue representative labels are inconsistent")

    # -- arithmetic -------------------------------------------------------

    def inner(self, u, v) -> Fraction:
        return Fraction(la.dot(u, v), self.den * self.den)

    def reflect(self, v, root):
        c = self.inner(v, root)
        if c.denominator != 1:
            raise ValueError("reflection pairing is not integral")
        c = int(c)
        return tuple(x - c * r for x, r in zip(v, root))

    def negate(self, v):
        return tuple(-x for x in v)

    def _simple_basis(self):
        pos = [r for r in self.roots if _lex_positive(r)]
        pos_set = set(pos)
        simple = []
        for r in pos:
            if any(
                tuple(a - b for a, b in zip(r, q)) in pos_set
                for q in pos
                if q != r
            ):
                continue
            simple.append(r)
        if len(simple) != self.n:
            raise AssertionError(
                f"simple system has {len(simple)} roots, expected {self.n}"
            )
        return tuple(sorted(simple))

    def coords_in_basis(self, v):
        cols = la.transpose([list(b) for b in self.basis])
        sol = la.solve_rational(cols, list(v))
        return sol

    def in_lattice(self, v) -> bool:
        sol = self.coords_in_basis(v)
        return sol is not None and all(c.denominator == 1 for c in sol)

    # -- discriminant classes ----------------------------------------------

    def glue_rep(self, k: int):
        return self._glue[k % self.discr_size]

    def class_of(self, v) -> int:
        raise NotImplementedError

    def class_add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def class_neg(self, a: int) -> int:
        return self.class_add_inverse(a)

    def class_add_inverse(self, a: int) -> int:
        for b in range(self.discr_size):
            if self.class_add(a, b) == 0:
                return b
        raise AssertionError("class has no inverse")

    def min_class_norm(self, k: int) -> Fraction:
        raise NotImplementedError

    # -- coset vector enumeration -------------------------------------------

    def dual_vectors(self, bound):
        """{class: sorted vectors of that class with norm <= bound}."""
        bound = Fraction(bound)
        if bound in self._dual_cache:
            return self._dual_cache[bound]
        out = {}
        cols = la.transpose([list(b) for b in self.basis])
        for k in range(self.discr_size):
            rep = self._glue[k]
            shift = la.solve_rational(cols, list(rep))
            if shift is None:
                raise AssertionError("glue representative outside the rational span")
            vecs = []
            for coeffs, _ in la.shifted_vectors(self.gram, shift, bound):
                num = list(rep)
                for c, b in zip(coeffs, self.basis):
                    for i in range(self.dim):
                        num[i] += c * b[i]
                vecs.append(tuple(num))
            out[k] = tuple(sorted(vecs))
        self._dual_cache[bound] = out
        return out


class _ASystem(RootSystem):
    def class_of(self, v) -> int:
        m = self.n + 1
        k = v[0] % m
        if any(x % m != k for x in v):
            raise ValueError("vector is not in the dual lattice")
        return k

    def class_add(self, a, b):
        return (a + b) % (self.n + 1)

    def min_class_norm(self, k):
        k %= self.n + 1
        return Fraction(k * (self.n + 1 - k), self.n + 1)


class _DSystem(RootSystem):
    def class_of(self, v) -> int:
        if all(x % 2 == 0 for x in v):
            return 0 if sum(v) // 2 % 2 == 0 else 2
        if any(x % 2 == 0 for x in v):
            raise ValueError("vector is not in the dual lattice")
        return 1 if sum(v) % 4 == self.n % 4 else 3

    def class_add(self, a, b):
        if self.n % 2 == 0:
            return a ^ b
        return (a + b) % 4

    def min_class_norm(self, k):
        if k == 0:
            return Fraction(0)
        return Fraction(1) if k == 2 else Fraction(self.n, 4)


class _ESystem(RootSystem):
    def class_of(self, v) -> int:
        if self.n == 8:
            return 0
        g = self._glue[1]
        pairing = self.inner(v, g)
        order = self.discr_size
        scaled = pairing * order
        if scaled.denominator != 1:
            raise ValueError("vector is not in the dual lattice")
        return int(scaled) % order

    def class_add(self, a, b):
        return (a + b) % self.discr_size

    def min_class_norm(self, k):
        if k % self.discr_size == 0:
            return Fraction(0)
        return Fraction(4, 3) if self.n == 6 else Fraction(3, 2)


def _a_system(n: int) -> _ASystem:
    den = n + 1
    dim = n + 1
    roots = []
    for i in range(dim):
        for j in range(dim):
            if i != j:
                r = [0] * dim
                r[i] = den
                r[j] = -den
                roots.append(tuple(r))
    glue = []
    for k in range(n + 1):
        rep = tuple([k] * (dim - k) + [k - den] * k)
        glue.append(rep)
    return _ASystem("A", n, dim, den, roots, glue)


def _d_system(n: int) -> _DSystem:
    den = 2
    dim = n
    roots = []
    for i, j in combinations(range(dim), 2):
        for si, sj in product((1, -1), repeat=2):
            r = [0] * dim
            r[i] = 2 * si
            r[j] = 2 * sj
            roots.append(tuple(r))
    glue = [
        tuple([0] * dim),
        tuple([1] * dim),
        tuple([0] * (dim - 1) + [2]),
        tuple([1] * (dim - 1) + [-1]),
    ]
    return _DSystem("D", n, dim, den, roots, glue)


def _e8_roots():
    roots = []
    for i, j in combinations(range(8), 2):
        for si, sj in product((1, -1), repeat=2):
            r = [0] * 8
            r[i] = 2 * si
            r[j] = 2 * sj
            roots.append(tuple(r))
    for signs in product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(signs)
    return roots


def _e_system(n: int) -> _ESystem:
    base = _e8_roots()
    if n == 8:
        return _ESystem("E", 8, 8, 2, base, [tuple([0] * 8)])
    w7 = (0, 0, 0, 0, 0, 0, 1, 1)
    sub = [r for r in base if la.dot(r, w7) == 0]
    if n == 7:
        zero = tuple([0] * 8)
        g = (0, 0, 0, 0, 0, 2, -1, 1)
        return _ESystem("E", 7, 8, 2, sub, [zero, g])
    w6 = (0, 0, 0, 0, 0, 1, 1, 0)
    sub = [r for r in sub if la.dot(r, w6) == 0]
    scaled = [tuple(3 * x for x in r) for r in sub]
    zero = tuple([0] * 8)
    g1 = (0, 0, 0, 0, 0, 4, -4, 4)
    g2 = tuple(-x for x in g1)
    return _ESystem("E", 6, 8, 6, scaled, [zero, g1, g2])


_CACHE: dict[tuple[str, int], RootSystem] = {}


def root_system(kind: str, n: int) -> RootSystem:
    key = (kind, n)
    if key not in _CACHE:
        if kind == "A":
            if n < 1:
                raise ValueError("A_n needs n >= 1")
            _CACHE[key] = _a_system(n)
        elif kind == "D":
            if n < 4:
                raise ValueError("D_n needs n >= 4")
            _CACHE[key] = _d_system(n)
        elif kind == "E":
            if n not in (6, 7, 8):
                raise ValueError("E_n needs n in {6, 7, 8}")
            _CACHE[key] = _e_system(n)
        else:
            raise ValueError(f"unknown root system kind {kind!r}")
    return _CACHE[key]
