"""Even integral lattices, finite quadratic forms, and embedding predicates.

Discriminant groups are computed from the Smith normal form of the Gram
matrix.  Square-class comparisons of p-adic determinants use Legendre
symbols on the odd part and units mod 8 at p = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import intlinalg as la


class DegenerateLatticeError(ValueError):
    """Operation requires a nondegenerate lattice."""


class OddLatticeError(ValueError):
    """Operation requires an even lattice."""


class ConstructionError(ValueError):
    """A lattice construction's preconditions are not met."""


def _mod2(x) -> Fraction:
    f = Fraction(x)
    return f - 2 * (f / 2).__floor__()


def _mod1(x) -> Fraction:
    f = Fraction(x)
    return f - f.__floor__()


def _prime_factors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def legendre_symbol(a: int, p: int) -> int:
    """(a/p) for odd prime p."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def is_padic_square(r: Fraction, p: int) -> bool:
    """Is the nonzero rational r a square in Q_p?"""
    if r == 0:
        raise ValueError("square class of zero")
    num, den = r.numerator, r.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    if v % 2 != 0:
        return False
    u = num * den  # same square class as the unit part num/den
    if p == 2:
        return u % 8 == 1
    return legendre_symbol(u, p) == 1


class ExactLattice:
    """Integral lattice described by a symmetric integer Gram matrix."""

    __slots__ = ("gram", "name", "_det", "_sig")

    def __init__(self, gram, name: str = ""):
        g = tuple(tuple(int(x) for x in row) for row in gram)
        n = len(g)
        for row in g:
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        self.gram = g
        self.name = name
        self._det = None
        self._sig = None

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def det(self) -> int:
        if self._det is None:
            self._det = la.bareiss_det([list(r) for r in self.gram])
        return self._det

    @property
    def signature(self) -> tuple[int, int, int]:
        if self._sig is None:
            self._sig = la.signature([list(r) for r in self.gram])
        return self._sig

    @property
    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    @property
    def is_nondegenerate(self) -> bool:
        return self.det != 0

    def direct_sum(self, other: "ExactLattice") -> "ExactLattice":
        n, m = self.rank, other.rank
        g = [[0] * (n + m) for _ in range(n + m)]
        for i in range(n):
            for j in range(n):
                g[i][j] = self.gram[i][j]
        for i in range(m):
            for j in range(m):
                g[n + i][n + j] = other.gram[i][j]
        return ExactLattice(g, name=f"{self.name}+{other.name}" if self.name else "")

    def inner(self, u, v) -> Fraction:
        return sum(
            Fraction(u[i]) * self.gram[i][j] * Fraction(v[j])
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def discriminant_form(self) -> "FinQuadForm":
        if not self.is_nondegenerate:
            raise DegenerateLatticeError("discriminant form needs det != 0")
        if not self.is_even:
            raise OddLatticeError("discriminant form implemented for even lattices")
        n = self.rank
        g = [list(r) for r in self.gram]
        u, d, _ = la.snf_with_transforms(g)
        uinv = la.int_matrix_inverse(u)
        ginv = la.rational_inverse(g)
        # b(g_i, g_j) with g_i the class of the dual vector G^-1 U^-1 e_i
        big = la.mat_mul(la.mat_mul(la.transpose(uinv), ginv), uinv)
        orders = []
        q = []
        rows = []
        keep = [i for i in range(n) if d[i][i] > 1]
        for i in keep:
            orders.append(d[i][i])
            q.append(_mod2(big[i][i]))
        for i in keep:
            rows.append(tuple(_mod1(big[i][j]) for j in keep))
        return FinQuadForm(tuple(orders), tuple(q), tuple(rows))

    def to_dict(self) -> dict:
        return {"rank": self.rank, "gram": [list(r) for r in self.gram]}

    @classmethod
    def from_dict(cls, data: dict) -> "ExactLattice":
        lat = cls(data["gram"], name=data.get("name", ""))
        if lat.rank != data["rank"]:
            raise ValueError("rank does not match Gram matrix size")
        return lat

    def __repr__(self) -> str:
        label = self.name or f"rank {self.rank}"
        return f"ExactLattice({label}, det={self.det})"


class FinQuadForm:
    """Finite quadratic form: values q in Q/2Z on a group sum(Z/d_i)."""

    __slots__ = ("orders", "q", "b")

    def __init__(self, orders, q, b):
        self.orders = tuple(int(d) for d in orders)
        self.q = tuple(_mod2(x) for x in q)
        self.b = tuple(tuple(_mod1(x) for x in row) for row in b)
        k = len(self.orders)
        if len(self.q) != k or len(self.b) != k or any(len(r) != k for r in self.b):
            raise ValueError("inconsistent sizes")
        for d in self.orders:
            if d < 2:
                raise ValueError("generator orders must be at least 2")
        for i in range(k):
            for j in range(k):
                if self.b[i][j] != self.b[j][i]:
                    raise ValueError("bilinear matrix must be symmetric")
                if _mod1(self.orders[i] * self.b[i][j]) != 0:
                    raise ValueError("bilinear values incompatible with orders")
            if _mod2(self.orders[i] ** 2 * self.q[i]) != 0:
                raise ValueError("quadratic values incompatible with orders")
            if _mod1(self.q[i] - self.b[i][i]) != 0:
                raise ValueError("q must refine b on the diagonal")

    # -- basic structure -------------------------------------------------

    @property
    def length(self) -> int:
        return len(self.orders)

    @property
    def order(self) -> int:
        n = 1
        for d in self.orders:
            n *= d
        return n

    @property
    def is_trivial(self) -> bool:
        return not self.orders

    def elements(self):
        """All group elements as tuples."""

        def rec(i):
            if i == len(self.orders):
                yield ()
                return
            for rest in rec(i + 1):
                for x in range(self.orders[i]):
                    yield (x,) + rest

        return rec(0)

    def reduce(self, elem) -> tuple[int, ...]:
        return tuple(int(x) % d for x, d in zip(elem, self.orders))

    def add(self, e1, e2) -> tuple[int, ...]:
        return tuple((x + y) % d for x, y, d in zip(e1, e2, self.orders))

    def neg(self, e) -> tuple[int, ...]:
        return tuple((-x) % d for x, d in zip(e, self.orders))

    def scale(self, e, m: int) -> tuple[int, ...]:
        return tuple((x * m) % d for x, d in zip(e, self.orders))

    def element_order(self, e) -> int:
        n = 1
        for x, d in zip(e, self.orders):
            if x:
                g = la.xgcd(x, d)[0]
                m = d // g
                n = n * m // la.xgcd(n, m)[0]
        return n

    def q_of(self, e) -> Fraction:
        e = self.reduce(e)
        total = Fraction(0)
        for i, x in enumerate(e):
            if x:
                total += x * x * self.q[i]
        for i in range(len(e)):
            for j in range(i + 1, len(e)):
                if e[i] and e[j]:
                    total += 2 * e[i] * e[j] * self.b[i][j]
        return _mod2(total)

    def b_of(self, e1, e2) -> Fraction:
        e1, e2 = self.reduce(e1), self.reduce(e2)
        total = Fraction(0)
        for i, x in enumerate(e1):
            for j, y in enumerate(e2):
                if x and y:
                    total += x * y * self.b[i][j]
        return _mod1(total)

    # -- derived forms ---------------------------------------------------

    def orthogonal_sum(self, other: "FinQuadForm") -> "FinQuadForm":
        k1, k2 = self.length, other.length
        orders = self.orders + other.orders
        q = self.q + other.q
        b = []
        for i in range(k1):
            b.append(tuple(self.b[i]) + (Fraction(0),) * k2)
        for i in range(k2):
            b.append((Fraction(0),) * k1 + tuple(other.b[i]))
        return FinQuadForm(orders, q, tuple(b))

    def p_primary(self, p: int) -> "FinQuadForm":
        orders = []
        q = []
        idx = []
        mult = []
        for i, d in enumerate(self.orders):
            k = 0
            dd = d
            while dd % p == 0:
                dd //= p
                k += 1
            if k == 0:
                continue
            m = d // p**k  # this multiple of g_i generates the p-part of <g_i>
            idx.append(i)
            mult.append(m)
            orders.append(p**k)
            q.append(_mod2(m * m * self.q[i]))
        b = []
        for a, (i, mi) in enumerate(zip(idx, mult)):
            row = []
            for c, (j, mj) in enumerate(zip(idx, mult)):
                row.append(_mod1(mi * mj * self.b[i][j]))
            b.append(tuple(row))
        return FinQuadForm(tuple(orders), tuple(q), tuple(b))

    def is_even_at_2(self) -> bool:
        """True iff every order-2 element has integral square.

        The order-2 subgroup is generated by (d_i/2) g_i over even d_i, and
        q is additive mod Z on it, so checking the generators suffices.
        """
        for i, d in enumerate(self.orders):
            if d % 2 == 0:
                h = d // 2
                if _mod1(h * h * self.q[i]) != 0:
                    return False
        return True

    def subform(self, generators) -> "FinQuadForm":
        """Induced form on the subgroup generated by the given elements."""
        gens = [self.reduce(g) for g in generators]
        gens = [g for g in gens if any(g)]
        if not gens:
            return FinQuadForm((), (), ())
        k = len(gens)
        n = self.length
        # relation lattice K = {x in Z^k : sum x_j gens_j = 0 in the group}
        stacked = [list(g) for g in gens] + [
            [-self.orders[i] if i == j else 0 for i in range(n)] for j in range(n)
        ]
        ker = la.kernel_int(stacked)
        rel = [row[:k] for row in ker]
        rel_h = la.hnf(rel)
        if len(rel_h) != k:
            raise ValueError("subgroup relations are not full rank")
        u, d, v = la.snf_with_transforms(rel_h)
        vinv = la.int_matrix_inverse(v)
        new_gens = []
        new_orders = []
        for i in range(k):
            e = d[i][i]
            if e == 1:
                continue
            coeffs = vinv[i]
            g = (0,) * n
            for c, gen in zip(coeffs, gens):
                g = self.add(g, self.scale(gen, c))
            new_orders.append(e)
            new_gens.append(g)
        q = tuple(self.q_of(g) for g in new_gens)
        b = tuple(
            tuple(self.b_of(g1, g2) for g2 in new_gens) for g1 in new_gens
        )
        return FinQuadForm(tuple(new_orders), q, b)

    def orthogonal_complement(self, elems) -> "FinQuadForm":
        """Induced form on {y : b(y, e) = 0 in Q/Z for all given e}."""
        elems = [self.reduce(e) for e in elems]
        members = [g for g in self.elements() if all(self.b_of(g, e) == 0 for e in elems)]
        return self.subform(members)

    # -- p-adic determinants ----------------------------------------------

    def det_of_primary(self, p: int) -> Fraction:
        """Determinant of the p-primary part, well-defined mod (Q_p*)^2.

        Computed from an orthogonal block splitting (1x1 blocks, plus 2x2
        blocks at p = 2 where the bilinear form is alternating), so the
        result's unit part does not depend on representative choices.
        """
        pp = self.p_primary(p)
        det = _primary_det_by_splitting(pp, p)
        expected_val = -sum(_valuation(d, p) for d in pp.orders)
        if pp.length and _val_frac(det, p) != expected_val:
            raise ArithmeticError(f"block splitting lost valuation at p={p}")
        return det

    def det_square_class_matches(self, p: int, target) -> bool:
        """Compare det of the p-primary part against target mod (Q_p*)^2."""
        target = Fraction(target)
        return is_padic_square(self.det_of_primary(p) / target, p)


def _val_frac(r: Fraction, p: int) -> int:
    return _valuation(r.numerator, p) - _valuation(r.denominator, p)


def _rational_coeff_mod(alpha: Fraction, p: int, modulus: int) -> int:
    """Reduce a p-integral rational to an integer mod a power of p."""
    if _val_frac(alpha, p) < 0 if alpha != 0 else False:
        raise ArithmeticError("coefficient is not p-integral")
    den = alpha.denominator
    return alpha.numerator * pow(den, -1, modulus) % modulus


def _primary_det_by_splitting(pp: FinQuadForm, p: int) -> Fraction:
    """Product of block determinants of an orthogonal splitting of pp.

    Elements are tracked as tuples in pp's generator coordinates; at every
    step the maximal-order block found is split off and the remaining
    generators are projected onto its orthogonal complement.
    """

    def val(x: Fraction) -> int:
        return 10**9 if x == 0 else _val_frac(x, p)

    gens = []
    for i in range(pp.length):
        gens.append(tuple(1 if j == i else 0 for j in range(pp.length)))
    det = Fraction(1)
    while True:
        gens = [g for g in gens if pp.element_order(g) > 1]
        if not gens:
            break
        kmax = max(_valuation(pp.element_order(g), p) for g in gens)
        order = p**kmax
        top = [g for g in gens if pp.element_order(g) == order]
        x = next((g for g in top if val(pp.b_of(g, g)) == -kmax), None)
        pair = None
        if x is None:
            for cand in top:
                y = next(
                    (h for h in gens if h != cand and val(pp.b_of(cand, h)) == -kmax),
                    None,
                )
                if y is not None:
                    if p == 2:
                        pair = (cand, y)
                    else:
                        # odd p: 2 b(x,y) keeps the unit scale on the diagonal
                        x = pp.add(cand, y)
                        if val(pp.b_of(x, x)) != -kmax:
                            raise ArithmeticError("diagonal repair failed")
                    break
            if x is None and pair is None:
                raise ArithmeticError("degenerate p-primary form in splitting")
        if pair is None:
            det *= pp.q_of(x)
            bxx = pp.b_of(x, x)
            rest = []
            for g in gens:
                if g == x:
                    continue
                alpha = pp.b_of(g, x) / bxx
                coeff = _rational_coeff_mod(alpha, p, order)
                g2 = pp.add(g, pp.scale(pp.neg(x), coeff))
                if pp.b_of(g2, x) != 0:
                    raise ArithmeticError("projection failed to kill pairing")
                rest.append(g2)
            gens = rest
        else:
            x, y = pair
            bxy = pp.b_of(x, y)
            bxx, byy = pp.b_of(x, x), pp.b_of(y, y)
            det *= pp.q_of(x) * pp.q_of(y) - bxy * bxy
            delta = bxx * byy - bxy * bxy
            rest = []
            for g in gens:
                if g == x or g == y:
                    continue
                bgx, bgy = pp.b_of(g, x), pp.b_of(g, y)
                alpha = (bgx * byy - bgy * bxy) / delta
                beta = (bgy * bxx - bgx * bxy) / delta
                ca = _rational_coeff_mod(alpha, p, order)
                cb = _rational_coeff_mod(beta, p, order)
                g2 = pp.add(g, pp.scale(pp.neg(x), ca))
                g2 = pp.add(g2, pp.scale(pp.neg(y), cb))
                if pp.b_of(g2, x) != 0 or pp.b_of(g2, y) != 0:
                    raise ArithmeticError("projection failed to kill pairing")
                rest.append(g2)
            gens = rest
    return det


# ---------------------------------------------------------------------------
# Isomorphism of finite quadratic forms


def _group_invariant(f: FinQuadForm):
    # generator orders are presentation-dependent (Z/6 vs Z/2+Z/3); the
    # per-prime order multisets are not
    return {p: sorted(f.p_primary(p).orders) for p in _prime_factors(f.order)}


def _iso_backtrack(a: FinQuadForm, b: FinQuadForm, collect_all: bool):
    """Order/q/b-preserving generator images of a into b that generate b."""
    if a.order != b.order or _group_invariant(a) != _group_invariant(b):
        return [] if collect_all else None
    b_elems = list(b.elements())
    by_order_q = {}
    for e in b_elems:
        key = (b.element_order(e), b.q_of(e))
        by_order_q.setdefault(key, []).append(e)
    results = []
    images: list = []

    def span_size(gens) -> int:
        seen = {(0,) * b.length}
        frontier = [(0,) * b.length]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = b.add(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return len(seen)

    def rec(i):
        if i == a.length:
            if span_size(images) == b.order:
                results.append(list(images))
                return not collect_all
            return False
        key = (a.orders[i], a.q[i])
        for cand in by_order_q.get(key, []):
            ok = True
            for j in range(i):
                if b.b_of(images[j], cand) != a.b[j][i]:
                    ok = False
                    break
            if not ok:
                continue
            images.append(cand)
            if rec(i + 1):
                return True
            images.pop()
        return False

    rec(0)
    if collect_all:
        return results
    return results[0] if results else None


def forms_isomorphic(a: FinQuadForm, b: FinQuadForm) -> bool:
    if a.length == 0 and b.length == 0:
        return True
    return _iso_backtrack(a, b, collect_all=False) is not None


def form_automorphisms(a: FinQuadForm) -> list[list[tuple[int, ...]]]:
    """All automorphisms, as generator-image lists."""
    if a.length == 0:
        return [[]]
    return _iso_backtrack(a, a, collect_all=True)


# ---------------------------------------------------------------------------
# Geometricity predicate


@dataclass(frozen=True)
class GeometricityReport:
    rank_ok: bool
    per_prime: tuple
    overall: bool


def geometricity_check(s_discr: FinQuadForm, rank_l: int) -> GeometricityReport:
    """Prime-wise embeddability conditions for the span of a line set.

    delta = 22 - rank; at each prime the length of the p-part must stay
    under delta, with determinant-class escape hatches at equality (and an
    extra unit of slack at p = 3).
    """
    delta = 22 - rank_l
    rank_ok = rank_l <= 20
    total = s_discr.order
    # The complementary transcendental lattice has signature (2, delta - 2)
    # and discriminant obtained from s_discr by splitting off the order-3
    # polarization class of square 2/3 (det contribution 6, order 3).  The
    # determinant targets below are that lattice's existence conditions
    # rewritten on s_discr itself; (-1)^delta carries its negative-index
    # part.
    sign = 1 if delta % 2 == 0 else -1
    primes = sorted(set(_prime_factors(total)) | {2, 3})
    per_prime = []
    overall = rank_ok
    for p in primes:
        ell = s_discr.p_primary(p).length
        if p == 3:
            ok = ell <= delta or (
                ell == delta + 1
                and s_discr.det_square_class_matches(3, 2 * sign * total)
            )
        elif p == 2:
            if ell < delta:
                ok = True
            elif ell == delta:
                ok = (
                    not s_discr.p_primary(2).is_even_at_2()
                    or s_discr.det_square_class_matches(2, 3 * total)
                    or s_discr.det_square_class_matches(2, -3 * total)
                )
            else:
                ok = False
        else:
            ok = ell < delta or (
                ell == delta
                and s_discr.det_square_class_matches(p, 3 * sign * total)
            )
        per_prime.append((p, ell, ok))
        overall = overall and ok
    return GeometricityReport(rank_ok, tuple(per_prime), overall)


def mild_det_bound(span_det: int) -> bool:
    """Whether a rank-20 integral span determinant forces a unique mild extension."""
    return span_det < 1296


# ---------------------------------------------------------------------------
# The 2 <-> 6 polarity swap (Neron-Severi lattice vs definite line span)


@dataclass
class SwapResult:
    lattice: ExactLattice
    pol_coords: tuple[int, ...]
    # rows mapping the new lattice's basis into (source coords) x (new pol coeff),
    # scaled by `den` to integers
    embedding: tuple
    den: int


def _pairing_vector(lat: ExactLattice, pol) -> list[int]:
    return [sum(lat.gram[i][j] * pol[j] for j in range(lat.rank)) for i in range(lat.rank)]


def two_six_swap(lat: ExactLattice, pol, new_square: int) -> SwapResult:
    """Shared core of the forward and inverse polarized constructions.

    Given (lat, pol) with pol^2 = s in {2, 6}, build the index-2 extension of
    (-pol^perp) + Z*newpol, newpol^2 = new_square, glued by (projection of a
    half-pairing vector, newpol/2).
    """
    n = lat.rank
    s = int(lat.inner(pol, pol))
    if (s, new_square) not in ((2, 6), (6, 2)):
        raise ConstructionError(f"polarization square {s} -> {new_square} unsupported")
    pair = _pairing_vector(lat, pol)
    if s == 6:
        if any(c % 3 != 0 for c in pair):
            raise ConstructionError("polarization is not divisible by 3 in the dual")
        half = [c // 3 for c in pair]  # x.pol = 3 * (half . x); need odd value
    else:
        half = pair  # x.pol odd for the glue vector
    x0 = None
    for i, c in enumerate(half):
        if c % 2 != 0:
            x0 = [1 if j == i else 0 for j in range(n)]
            break
    if x0 is None:
        raise ConstructionError("gluing class absent: all pairings lie in the even coset")
    pair_x0 = sum(pair[i] * x0[i] for i in range(n))
    # projection of x0 to pol^perp (rational, in source coords)
    proj = [Fraction(x0[i]) - Fraction(pair_x0, s) * pol[i] for i in range(n)]
    perp = la.kernel_int([[c] for c in pair])
    # basis rows in (source coords) x (newpol coefficient)
    rows = [[Fraction(x) for x in r] + [Fraction(0)] for r in perp]
    rows.append([Fraction(0)] * n + [Fraction(1)])
    rows.append(proj + [Fraction(1, 2)])
    den = 1
    for r in rows:
        for x in r:
            den = den * x.denominator // la.xgcd(den, x.denominator)[0]
    int_rows = [[int(x * den) for x in r] for r in rows]
    basis = la.hnf(int_rows)
    m = len(basis)

    def form(u, v) -> Fraction:
        a = Fraction(
            -sum(u[i] * lat.gram[i][j] * v[j] for i in range(n) for j in range(n)),
            den * den,
        )
        return a + Fraction(new_square * u[n] * v[n], den * den)

    gram = []
    for r1 in basis:
        row = []
        for r2 in basis:
            val = form(r1, r2)
            if val.denominator != 1:
                raise ConstructionError("glued lattice is not integral")
            row.append(int(val))
        gram.append(row)
    out = ExactLattice(gram)
    if any(gram[i][i] % 2 for i in range(m)):
        raise ConstructionError("glued lattice is not even")
    # coordinates of the new polarization vector (0,...,0, den) in the basis
    target = [0] * n + [den]
    coords = la.solve_rational([list(c) for c in zip(*basis)], target)
    if coords is None or any(c.denominator != 1 for c in coords):
        raise ConstructionError("new polarization vector escaped the lattice")
    return SwapResult(
        lattice=out,
        pol_coords=tuple(int(c) for c in coords),
        embedding=tuple(tuple(r) for r in basis),
        den=den,
    )


def inverse_construction(s_lat: ExactLattice, hbar) -> SwapResult:
    """From the definite line span (S, hbar) to the hyperbolic pair (NS, h)."""
    if int(s_lat.inner(hbar, hbar)) != 6:
        raise ConstructionError("polarization square must be 6")
    if not s_lat.is_even:
        raise OddLatticeError("S must be even")
    pos, neg, zero = s_lat.signature
    if neg or zero:
        raise ConstructionError("S must be positive definite")
    return two_six_swap(s_lat, list(hbar), 2)


def forward_construction(ns_lat: ExactLattice, h) -> SwapResult:
    """From a 2-polarized hyperbolic lattice (NS, h) to the definite (S, hbar)."""
    if int(ns_lat.inner(h, h)) != 2:
        raise ConstructionError("polarization square must be 2")
    if not ns_lat.is_even:
        raise OddLatticeError("NS must be even")
    pos, _, zero = ns_lat.signature
    if pos != 1 or zero:
        raise ConstructionError("NS must be hyperbolic")
    return two_six_swap(ns_lat, list(h), 6)


# ---------------------------------------------------------------------------
# Serialization of finite forms


def finform_to_dict(f: FinQuadForm) -> dict:
    return {
        "gens": list(f.orders),
        "q": [str(x) for x in f.q],
        "b": [[str(x) for x in row] for row in f.b],
    }


def finform_from_dict(data: dict) -> FinQuadForm:
    return FinQuadForm(
        tuple(data["gens"]),
        tuple(Fraction(x) for x in data["q"]),
        tuple(tuple(Fraction(x) for x in row) for row in data["b"]),
    )
