"""Binary and ternary Golay codes with load-time validation.

The binary code is built as the extended quadratic-residue code of length
23 + 1 (cyclic code generated by a degree-11 factor of x^23 + 1 over GF(2),
plus a parity coordinate).  Nothing downstream trusts the construction:
the weight distribution, self-duality, and the Steiner S(5,8,24) covering
are all checked when the module loads, and the octad-through-five-points
index built during that check is what the automorphism search uses.
"""

from __future__ import annotations

from itertools import combinations


# ---------------------------------------------------------------------------
# GF(2) polynomial helpers (coefficient bitmasks, bit i = coefficient of x^i)


def _gf2_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _gf2_mod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a.bit_length() - 1 >= dm and a:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


# degree-11 factors of x^23 + 1 over GF(2) (reciprocal pair); the product
# identity is verified below, the code properties further down
_G1 = 0b101011100011  # x^11+x^9+x^7+x^6+x^5+x+1
_G2 = 0b110001110101  # x^11+x^10+x^6+x^5+x^4+x^2+1
_X23_1 = (1 << 23) | 1

if _gf2_mul(_gf2_mul(_G1, _G2), 0b11) != _X23_1:
    raise AssertionError("quadratic-residue factorization of x^23+1 is wrong")


def _popcount(x: int) -> int:
    return bin(x).count("1")


class BinaryGolay:
    """The [24,12,8] binary Golay code on points 0..23 (bitmask words)."""

    def __init__(self):
        basis = []
        for i in range(12):
            word23 = _gf2_mod(_G1 << i, _X23_1)
            parity = _popcount(word23) & 1
            basis.append(word23 | (parity << 23))
        self.basis = tuple(basis)
        words = {0}
        for b in basis:
            words |= {w ^ b for w in words}
        if len(words) != 4096:
            raise AssertionError("code dimension is not 12")
        self.words = frozenset(words)
        dist = {}
        for w in words:
            dist[_popcount(w)] = dist.get(_popcount(w), 0) + 1
        if dist != {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}:
            raise AssertionError(f"wrong weight distribution: {dist}")
        for w in words:
            for b in basis:
                if _popcount(w & b) & 1:
                    raise AssertionError("code is not self-dual")
        self.octads = tuple(sorted(w for w in words if _popcount(w) == 8))
        self.dodecads = tuple(sorted(w for w in words if _popcount(w) == 12))
        # Steiner system: every 5-set of points lies in exactly one octad
        index: dict[tuple[int, ...], int] = {}
        for o in self.octads:
            pts = [i for i in range(24) if o >> i & 1]
            for five in combinations(pts, 5):
                if five in index:
                    raise AssertionError("two octads share a 5-set")
                index[five] = o
        from math import comb

        if len(index) != comb(24, 5):
            raise AssertionError("octads do not cover every 5-set")
        self._steiner = index
        self.octads_by_point = tuple(
            tuple(o for o in self.octads if o >> i & 1) for i in range(24)
        )
        self._auto_cache: dict[tuple, tuple] = {}

    def contains(self, mask: int) -> bool:
        return mask in self.words

    def octad_through(self, points) -> int:
        """The unique octad containing five given points."""
        key = tuple(sorted(points))
        if len(key) != 5:
            raise ValueError("need exactly five distinct points")
        return self._steiner[key]

    # -- colored automorphisms ---------------------------------------------

    def colored_automorphisms(self, colors) -> list[tuple[int, ...]]:
        """All point permutations preserving the code and the coloring.

        Backtracking over point images; once five mapped points share an
        octad, the octad image is forced through the Steiner index, which
        collapses the branching.  Callers must pass a coloring rich enough
        to keep the group small (plain M24 has order 2.4e8).
        """
        if len(colors) != 24:
            raise ValueError("coloring must assign all 24 points")
        cache_key = tuple(colors)
        cached = self._auto_cache.get(cache_key)
        if cached is not None:
            return list(cached)
        by_color: dict = {}
        for i, c in enumerate(colors):
            by_color.setdefault(c, []).append(i)

        octads = self.octads
        oct_points = [
            tuple(i for i in range(24) if o >> i & 1) for o in octads
        ]
        idx_by_point = [
            tuple(j for j, o in enumerate(octads) if o >> i & 1)
            for i in range(24)
        ]

        # assignment order: grow along octads that already have many
        # mapped points so the Steiner forcing activates early
        order: list[int] = []
        placed = [False] * 24
        placed_count = [0] * len(octads)
        color_sizes = {c: len(v) for c, v in by_color.items()}
        first = min(range(24), key=lambda i: (color_sizes[colors[i]], i))
        while len(order) < 24:
            if order:
                best = None
                best_key = None
                for p in range(24):
                    if placed[p]:
                        continue
                    inoct = max(placed_count[j] for j in idx_by_point[p])
                    key = (-inoct, color_sizes[colors[p]], p)
                    if best is None or key < best_key:
                        best, best_key = p, key
            else:
                best = first
            order.append(best)
            placed[best] = True
            for j in idx_by_point[best]:
                placed_count[j] += 1

        image = [-1] * 24
        used = [False] * 24
        map_count = [0] * len(octads)
        # once an octad has five mapped points its image octad is forced;
        # later points of that octad must map into the stored target
        oct_target: list = [None] * len(octads)
        results: list[tuple[int, ...]] = []
        steiner = self._steiner

        def assign(p: int, q: int) -> bool:
            image[p] = q
            used[q] = True
            ok = True
            for j in idx_by_point[p]:
                c = map_count[j] + 1
                map_count[j] = c
                if c == 5:
                    key = sorted(
                        image[r] for r in oct_points[j] if image[r] >= 0
                    )
                    oct_target[j] = steiner[tuple(key)]
                elif c >= 6 and not oct_target[j] >> q & 1:
                    ok = False
            return ok

        def unassign(p: int, q: int) -> None:
            image[p] = -1
            used[q] = False
            for j in idx_by_point[p]:
                c = map_count[j] - 1
                map_count[j] = c
                if c == 4:
                    oct_target[j] = None

        def candidates(p: int):
            for j in idx_by_point[p]:
                t = oct_target[j]
                if t is None:
                    continue
                out = []
                while t:
                    x = (t & -t).bit_length() - 1
                    if not used[x] and colors[x] == colors[p]:
                        out.append(x)
                    t &= t - 1
                return out
            return [x for x in by_color[colors[p]] if not used[x]]

        def rec(k: int):
            if k == 24:
                pi = tuple(image)
                for b in self.basis:
                    m = 0
                    for i in range(24):
                        if b >> i & 1:
                            m |= 1 << pi[i]
                    if m not in self.words:
                        return
                results.append(pi)
                return
            p = order[k]
            for q in candidates(p):
                if assign(p, q):
                    rec(k + 1)
                unassign(p, q)

        rec(0)
        self._auto_cache[cache_key] = tuple(results)
        return results


class TernaryGolay:
    """The [12,6,6] ternary Golay code (words are tuples over GF(3))."""

    # x^5 + x^4 + 2x^3 + x^2 + 2, a degree-5 factor of x^11 - 1 over GF(3)
    _GEN = (2, 0, 1, 2, 1, 1)

    def __init__(self):
        gen = self._GEN
        basis11 = []
        for i in range(6):
            row = [0] * 11
            for j, c in enumerate(gen):
                row[(i + j) % 11] = (row[(i + j) % 11] + c) % 3
            basis11.append(row)
        basis = []
        for row in basis11:
            s = sum(row) % 3
            basis.append(tuple(row + [(-s) % 3]))
        words = {tuple([0] * 12)}
        for b in basis:
            new = set()
            for w in words:
                for m in (1, 2):
                    new.add(tuple((x + m * y) % 3 for x, y in zip(w, b)))
            words |= new
        if len(words) != 729:
            raise AssertionError("ternary code dimension is not 6")
        dist: dict[int, int] = {}
        for w in words:
            k = sum(1 for x in w if x)
            dist[k] = dist.get(k, 0) + 1
        if dist != {0: 1, 6: 264, 9: 440, 12: 24}:
            raise AssertionError(f"wrong ternary weight distribution: {dist}")
        for w in words:
            for b in basis:
                if sum(x * y for x, y in zip(w, b)) % 3:
                    raise AssertionError("ternary code is not self-dual")
        self.words = frozenset(words)
        self.basis = tuple(basis)

    def contains(self, word) -> bool:
        return tuple(x % 3 for x in word) in self.words


_BINARY: BinaryGolay | None = None
_TERNARY: TernaryGolay | None = None


def binary_golay() -> BinaryGolay:
    global _BINARY
    if _BINARY is None:
        _BINARY = BinaryGolay()
    return _BINARY


def ternary_golay() -> TernaryGolay:
    global _TERNARY
    if _TERNARY is None:
        _TERNARY = TernaryGolay()
    return _TERNARY
