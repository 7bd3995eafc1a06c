"""The 23 even unimodular rank-24 lattices with a full root system.

Each lattice is a sum of ADE root lattices glued along an isotropic code
in the product of their discriminant groups.  The glue data below is
validated when a lattice is built: code size squared must equal the
discriminant order, every word must have even minimal norm, and nonzero
words must have minimal norm above 2 so gluing adds no roots.  The basis
Gram matrix is then assembled and checked to be even of determinant 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from . import intlinalg as la
from .golay import binary_golay, ternary_golay
from .roots import RootSystem, root_system


def _cyclic(prefix, block, suffix=()):
    out = []
    b = list(block)
    for i in range(len(b)):
        out.append(tuple(prefix) + tuple(b[i:] + b[:i]) + tuple(suffix))
    return out


def _hexacode_gens():
    # additive generators of the hexacode: three GF(4) rows and their
    # omega-multiples, with Klein classes 1,2,3 playing 1,omega,omega^2
    rows = [(1, 0, 0, 1, 2, 3), (0, 1, 0, 1, 3, 2), (0, 0, 1, 1, 1, 1)]
    wmul = {0: 0, 1: 2, 2: 3, 3: 1}
    return rows + [tuple(wmul[x] for x in r) for r in rows]


def _even_perm_words():
    from itertools import permutations

    out = []
    for p in permutations(range(4)):
        inv = sum(
            1
            for i in range(4)
            for j in range(i + 1, 4)
            if p[i] > p[j]
        )
        if inv % 2 == 0:
            out.append(tuple(p))
    return out


# label, components, glue generators ("binary"/"ternary" pull in the
# Golay codes whole)
NIEMEIER_TABLE = (
    ("D24", (("D", 24),), ((1,),)),
    ("D16+E8", (("D", 16), ("E", 8)), ((1, 0),)),
    ("3E8", (("E", 8),) * 3, ()),
    ("A24", (("A", 24),), ((5,),)),
    ("2D12", (("D", 12),) * 2, ((1, 2), (2, 1))),
    ("A17+E7", (("A", 17), ("E", 7)), ((3, 1),)),
    ("D10+2E7", (("D", 10), ("E", 7), ("E", 7)), ((1, 1, 0), (3, 0, 1))),
    ("A15+D9", (("A", 15), ("D", 9)), ((2, 1),)),
    ("3D8", (("D", 8),) * 3, tuple(_cyclic((), (1, 2, 2)))),
    ("2A12", (("A", 12),) * 2, ((1, 5),)),
    ("A11+D7+E6", (("A", 11), ("D", 7), ("E", 6)), ((1, 1, 1),)),
    ("4E6", (("E", 6),) * 4, tuple(_cyclic((1,), (0, 1, 2)))),
    ("2A9+D6", (("A", 9), ("A", 9), ("D", 6)), ((1, 3, 2), (5, 0, 1))),
    ("4D6", (("D", 6),) * 4, tuple(_even_perm_words())),
    ("3A8", (("A", 8),) * 3, tuple(_cyclic((), (1, 1, 4)))),
    ("2A7+2D5", (("A", 7), ("A", 7), ("D", 5), ("D", 5)),
     ((1, 1, 1, 2), (1, 7, 2, 1))),
    ("4A6", (("A", 6),) * 4, tuple(_cyclic((1,), (2, 1, 6)))),
    ("4A5+D4", (("A", 5),) * 4 + (("D", 4),),
     tuple(_cyclic((2,), (0, 2, 4), (0,)))
     + ((3, 3, 0, 0, 1), (3, 0, 3, 0, 2), (3, 0, 0, 3, 3))),
    ("6D4", (("D", 4),) * 6, tuple(_hexacode_gens())),
    ("6A4", (("A", 4),) * 6, tuple(_cyclic((1,), (0, 1, 4, 4, 1)))),
    ("8A3", (("A", 3),) * 8, tuple(_cyclic((3,), (2, 0, 0, 1, 0, 1, 1)))),
    ("12A2", (("A", 2),) * 12, "ternary"),
    ("24A1", (("A", 1),) * 24, "binary"),
)

LABELS = tuple(row[0] for row in NIEMEIER_TABLE)


class GlueError(ValueError):
    pass


def _expand_span(systems, gens):
    words = {tuple([0] * len(systems))}
    for g in gens:
        frontier = set(words)
        while frontier:
            new = set()
            for w in frontier:
                nw = tuple(
                    s.class_add(a, b) for s, a, b in zip(systems, w, g)
                )
                if nw not in words:
                    new.add(nw)
            words |= new
            frontier = new
    return words


class NiemeierLattice:
    """One glued lattice: component root systems plus a glue code."""

    __slots__ = ("label", "systems", "glue_gens", "glue_words", "gram",
                 "root_count", "_offsets", "basis_rows", "basis_den",
                 "_basis_inv", "_coords_cache", "rank", "unimodular")

    def __init__(self, label, components, gens, unimodular=True):
        self.label = label
        self.systems = tuple(root_system(k, n) for k, n in components)
        self.rank = sum(s.n for s in self.systems)
        self.unimodular = unimodular
        if unimodular and self.rank != 24:
            raise GlueError("component ranks must sum to 24")
        if gens == "binary":
            bg = binary_golay()
            self.glue_gens = tuple(
                tuple(b >> i & 1 for i in range(24)) for b in bg.basis
            )
            self.glue_words = frozenset(
                tuple(w >> i & 1 for i in range(24)) for w in bg.words
            )
        elif gens == "ternary":
            tg = ternary_golay()
            self.glue_gens = tuple(tg.basis)
            self.glue_words = frozenset(tg.words)
        else:
            self.glue_gens = tuple(tuple(g) for g in gens)
            self.glue_words = frozenset(_expand_span(self.systems, gens))
        self._validate_code()
        self._offsets = []
        off = 0
        for s in self.systems:
            self._offsets.append(off)
            off += s.dim
        self.gram = self._build_gram()
        self.root_count = sum(len(s.roots) for s in self.systems)

    def _validate_code(self):
        if self.unimodular:
            dprod = 1
            for s in self.systems:
                dprod *= s.discr_size
            if len(self.glue_words) ** 2 != dprod:
                raise GlueError(
                    f"{self.label}: glue code order {len(self.glue_words)} "
                    f"does not square to {dprod}"
                )
        for w in self.glue_words:
            m = sum(
                (s.min_class_norm(k) for s, k in zip(self.systems, w)),
                Fraction(0),
            )
            if m % 2 != 0:
                raise GlueError(f"{self.label}: word {w} is not isotropic")
            if any(w) and m <= 2:
                raise GlueError(f"{self.label}: word {w} would add roots")

    def _build_gram(self):
        # rows in block root-basis coordinates, scaled integral
        rk = self.rank
        den = lcm(*(s.discr_size for s in self.systems))
        rows = [
            [den if i == j else 0 for j in range(rk)] for i in range(rk)
        ]
        for w in self.glue_gens:
            coords: list[int] = []
            for s, k in zip(self.systems, w):
                part = s.coords_in_basis(s.glue_rep(k))
                for c in part:
                    sc = c * den
                    if sc.denominator != 1:
                        raise GlueError(
                            f"{self.label}: glue coordinates not "
                            f"{den}-integral"
                        )
                    coords.append(sc.numerator)
            rows.append(coords)
        hbasis = la.hnf(rows)
        if len(hbasis) != rk:
            raise GlueError(f"{self.label}: glue span has wrong rank")
        self.basis_rows = tuple(tuple(r) for r in hbasis)
        self.basis_den = den
        self._basis_inv = None
        self._coords_cache = {}
        blocks = [[0] * rk for _ in range(rk)]
        pos = 0
        for s in self.systems:
            for i in range(s.n):
                for j in range(s.n):
                    blocks[pos + i][pos + j] = s.gram[i][j]
            pos += s.n
        gram = []
        for u in hbasis:
            row = []
            gu = [sum(blocks[i][j] * u[j] for j in range(rk))
                  for i in range(rk)]
            for v in hbasis:
                num = sum(gu[i] * v[i] for i in range(rk))
                if num % (den * den):
                    raise GlueError(f"{self.label}: non-integral gram")
                row.append(num // (den * den))
            gram.append(row)
        if any(gram[i][i] % 2 for i in range(rk)):
            raise GlueError(f"{self.label}: odd diagonal")
        if self.unimodular and la.bareiss_det(gram) != 1:
            raise GlueError(f"{self.label}: determinant is not 1")
        return gram

    # -- vectors are tuples of per-component numerator tuples -------------

    def zero(self):
        return tuple(tuple([0] * s.dim) for s in self.systems)

    def coords(self, v) -> tuple[int, ...]:
        """Integer coordinates of a lattice vector in the stored basis."""
        cached = self._coords_cache.get(v)
        if cached is not None:
            return cached
        c: list[Fraction] = []
        for s, part in zip(self.systems, v):
            c.extend(s.coords_in_basis(part))
        if self._basis_inv is None:
            self._basis_inv = la.rational_inverse(
                [list(r) for r in self.basis_rows]
            )
        inv = self._basis_inv
        out = []
        for j in range(self.rank):
            x = sum(
                (c[i] * inv[i][j] for i in range(self.rank)), Fraction(0)
            ) * self.basis_den
            if x.denominator != 1:
                raise ValueError("vector is not in the lattice")
            out.append(x.numerator)
        res = tuple(out)
        self._coords_cache[v] = res
        return res

    def vector_from_coords(self, x):
        """Inverse of coords: basis coordinates to component numerators."""
        c = [
            Fraction(
                sum(x[i] * self.basis_rows[i][j] for i in range(self.rank)),
                self.basis_den,
            )
            for j in range(self.rank)
        ]
        parts = []
        pos = 0
        for s in self.systems:
            nums = [Fraction(0)] * s.dim
            for i in range(s.n):
                bv = s.basis[i]
                coeff = c[pos + i]
                for t in range(s.dim):
                    nums[t] += coeff * bv[t]
            pos += s.n
            if any(u.denominator != 1 for u in nums):
                raise ValueError("coordinates do not give a lattice vector")
            parts.append(tuple(u.numerator for u in nums))
        return tuple(parts)

    def inner(self, u, v) -> Fraction:
        return sum(
            (s.inner(a, b) for s, a, b in zip(self.systems, u, v)),
            Fraction(0),
        )

    def class_word(self, v):
        return tuple(s.class_of(a) for s, a in zip(self.systems, v))

    def contains(self, v) -> bool:
        try:
            return self.class_word(v) in self.glue_words
        except ValueError:
            return False

    def add(self, u, v):
        return tuple(
            tuple(x + y for x, y in zip(a, b)) for a, b in zip(u, v)
        )

    def sub(self, u, v):
        return tuple(
            tuple(x - y for x, y in zip(a, b)) for a, b in zip(u, v)
        )

    def neg(self, v):
        return tuple(tuple(-x for x in a) for a in v)

    def summary(self) -> dict:
        return {
            "label": self.label,
            "components": [f"{s.kind}{s.n}" for s in self.systems],
            "glue_order": len(self.glue_words),
            "root_count": self.root_count,
            "det": 1 if self.unimodular else la.bareiss_det(self.gram),
            "even": True,
        }


_CACHE: dict[str, NiemeierLattice] = {}


def niemeier(label: str) -> NiemeierLattice:
    if label not in _CACHE:
        for row in NIEMEIER_TABLE:
            if row[0] == label:
                _CACHE[label] = NiemeierLattice(*row)
                break
        else:
            raise KeyError(f"unknown lattice label {label!r}")
    return _CACHE[label]


def glued_lattice(label, components, gens=()) -> NiemeierLattice:
    """Even glued root lattice of any rank, without the unimodularity gate.

    Glue words must still be isotropic and add no roots. Mainly for small
    synthetic configurations in tests and experiments.
    """
    return NiemeierLattice(label, tuple(components), gens, unimodular=False)


def all_labels() -> tuple[str, ...]:
    return LABELS
