"""Exact integer and rational linear algebra.

Everything here works on plain lists of ints or Fractions.  No floats
anywhere: determinants are fraction-free (Bareiss), signatures come from
congruent symmetric reduction, and short-vector enumeration uses an exact
rational LDL^T decomposition with integer-square-root bounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    """Matrix product; entries int or Fraction."""
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            row.append(sum(ai[t] * b[t][j] for t in range(k)))
        out.append(row)
    return out


def mat_vec(a, v):
    return [sum(a[i][t] * v[t] for t in range(len(v))) for i in range(len(a))]


def vec_mat(v, a):
    m = len(a[0]) if a else 0
    return [sum(v[t] * a[t][j] for t in range(len(v))) for j in range(m)]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def bareiss_det(mat: list[list[int]]) -> int:
    """Exact determinant of an integer matrix (fraction-free elimination)."""
    n = len(mat)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def fraction_det(mat) -> Fraction:
    """Determinant of a rational matrix, via clearing denominators."""
    n = len(mat)
    if n == 0:
        return Fraction(1)
    rows = [[Fraction(x) for x in row] for row in mat]
    scale = Fraction(1)
    int_rows = []
    for row in rows:
        d = 1
        for x in row:
            d = d * x.denominator // _gcd(d, x.denominator)
        scale /= d
        int_rows.append([int(x * d) for x in row])
    return scale * bareiss_det(int_rows)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


# ---------------------------------------------------------------------------
# Row spans in Hermite normal form


class IntRowSpan:
    """Mutable Z-span of integer row vectors, kept in row HNF.

    Pivots are positive, entries above a pivot are reduced into [0, pivot).
    """

    __slots__ = ("width", "rows", "_pivots")

    def __init__(self, width: int, rows=None):
        self.width = width
        self.rows: list[list[int]] = []
        self._pivots: list[int] = []
        if rows:
            for r in rows:
                self.add(r)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _pivot_col(self, vec) -> int:
        for j, x in enumerate(vec):
            if x != 0:
                return j
        return -1

    def reduce(self, vec) -> list[int]:
        """Reduce vec modulo the span; returns the (possibly nonzero) residual."""
        v = list(map(int, vec))
        for row, p in zip(self.rows, self._pivots):
            if v[p] != 0:
                q = v[p] // row[p]
                if q:
                    for j in range(p, self.width):
                        v[j] -= q * row[j]
        return v

    def contains(self, vec) -> bool:
        return all(x == 0 for x in self.reduce(vec))

    def add(self, vec) -> bool:
        """Add a vector to the span.  Returns True if the rank grew."""
        v = list(map(int, vec))
        i = 0
        changed = False
        grew = False
        while True:
            c = self._pivot_col(v)
            if c == -1:
                break
            # find insertion point among existing rows
            while i < len(self.rows) and self._pivots[i] < c:
                i += 1
            if i == len(self.rows) or self._pivots[i] > c:
                if v[c] < 0:
                    v = [-x for x in v]
                self.rows.insert(i, v)
                self._pivots.insert(i, c)
                changed = True
                grew = True
                break
            row = self.rows[i]
            p = c
            if v[p] % row[p] == 0:
                q = v[p] // row[p]
                for j in range(p, self.width):
                    v[j] -= q * row[j]
            else:
                g, x, y = xgcd(row[p], v[p])
                new_row = [x * row[j] + y * v[j] for j in range(self.width)]
                coef_r, coef_v = row[p] // g, v[p] // g
                v = [coef_r * v[j] - coef_v * row[j] for j in range(self.width)]
                self.rows[i] = new_row
                changed = True
                # new_row has pivot g at column p, still sorted
        if changed:
            self._normalize()
        return grew

    def _normalize(self):
        """Reduce entries above each pivot."""
        for i in range(len(self.rows) - 1, -1, -1):
            p = self._pivots[i]
            piv = self.rows[i][p]
            for k in range(i):
                q = self.rows[k][p] // piv
                if q:
                    for j in range(p, self.width):
                        self.rows[k][j] -= q * self.rows[i][j]

    def basis(self) -> list[list[int]]:
        self._normalize()
        return [row[:] for row in self.rows]


def hnf(rows: list[list[int]]) -> list[list[int]]:
    """Row Hermite normal form (nonzero rows only)."""
    if not rows:
        return []
    span = IntRowSpan(len(rows[0]), rows)
    return span.basis()


# ---------------------------------------------------------------------------
# Smith normal form with transforms


def hnf_with_transform(mat: list[list[int]]):
    """Row HNF with transform: returns (H, U) with U*mat = H, U unimodular.

    Pivots positive, entries above a pivot reduced into [0, pivot), zero rows
    at the bottom.  Quotients are rounded to nearest during elimination to
    keep intermediate entries small.
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    A = [list(map(int, row)) for row in mat]
    U = identity_matrix(m)

    def add_row(src, dst, c):
        arow, urow = A[src], U[src]
        ad, ud = A[dst], U[dst]
        for j in range(n):
            ad[j] += c * arow[j]
        for j in range(m):
            ud[j] += c * urow[j]

    r = 0
    for col in range(n):
        # euclid the column entries below r down to a single nonzero pivot
        while True:
            piv = None
            for i in range(r, m):
                if A[i][col] != 0 and (piv is None or abs(A[i][col]) < abs(A[piv][col])):
                    piv = i
            if piv is None:
                break
            if piv != r:
                A[r], A[piv] = A[piv], A[r]
                U[r], U[piv] = U[piv], U[r]
            done = True
            p = A[r][col]
            for i in range(r + 1, m):
                if A[i][col] != 0:
                    # rounded quotient: remainder in [-|p|/2, |p|/2]
                    q = (2 * A[i][col] + p) // (2 * p) if p > 0 else -((2 * A[i][col] - p) // (-2 * p))
                    add_row(r, i, -q)
                    if A[i][col] != 0:
                        done = False
            if done:
                break
        if r < m and A[r][col] != 0:
            if A[r][col] < 0:
                A[r] = [-x for x in A[r]]
                U[r] = [-x for x in U[r]]
            p = A[r][col]
            for k in range(r):
                q = A[k][col] // p
                if q:
                    add_row(r, k, -q)
            r += 1
            if r == m:
                break
    return A, U


def _is_diagonal(a) -> bool:
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            if i != j and x != 0:
                return False
    return True


def snf_with_transforms(mat: list[list[int]]):
    """Return (U, D, V) with U*mat*V = D, U and V unimodular.

    D is m x n with diagonal d_1 | d_2 | ... | d_r, d_i > 0, rest zero.
    Diagonalization alternates row and column HNF passes (entry growth stays
    bounded by pivot products, unlike single-pivot chasing).
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    A = [list(map(int, row)) for row in mat]
    U = identity_matrix(m)
    V = identity_matrix(n)
    for _ in range(200):
        if _is_diagonal(A):
            break
        h, p = hnf_with_transform(A)
        A = h
        U = mat_mul(p, U)
        if _is_diagonal(A):
            break
        ht, q = hnf_with_transform(transpose(A))
        A = transpose(ht)
        V = mat_mul(V, transpose(q))
    else:
        raise RuntimeError("Smith normal form did not converge")

    # move pivots onto the leading diagonal (columns can be out of order when
    # the matrix is singular)
    diag = []
    r = 0
    for i in range(m):
        col = next((j for j in range(n) if A[i][j] != 0), None)
        if col is None:
            continue
        if col != r:
            for row in A:
                row[col], row[r] = row[r], row[col]
            for row in V:
                row[col], row[r] = row[r], row[col]
        if i != r:
            A[i], A[r] = A[r], A[i]
            U[i], U[r] = U[r], U[i]
        r += 1

    # an already-diagonal input skips every HNF pass, so pivot signs may
    # still be negative here
    for i in range(r):
        if A[i][i] < 0:
            A[i][i] = -A[i][i]
            U[i] = [-x for x in U[i]]

    # enforce the divisibility chain with explicit 2x2 unimodular moves
    changed = True
    while changed:
        changed = False
        for i in range(r):
            for j in range(i + 1, r):
                a, b = A[i][i], A[j][j]
                if b % a == 0:
                    continue
                changed = True
                g, x, y = xgcd(a, b)
                lcm = a * b // g
                # rows i,j of U: left factor [[x, y], [-b//g, a//g]]
                ui, uj = U[i], U[j]
                U[i] = [x * s + y * t for s, t in zip(ui, uj)]
                U[j] = [(-b // g) * s + (a // g) * t for s, t in zip(ui, uj)]
                # cols i,j of V: right factor [[1, -y*b//g], [1, x*a//g]]
                for row in V:
                    ci, cj = row[i], row[j]
                    row[i] = ci + cj
                    row[j] = (-y * b // g) * ci + (x * a // g) * cj
                A[i][i], A[j][j] = g, lcm
    return U, A, V


def invariant_factors(mat: list[list[int]]) -> list[int]:
    _, d, _ = snf_with_transforms(mat)
    out = []
    for i in range(min(len(d), len(d[0]) if d else 0)):
        if d[i][i] != 0:
            out.append(d[i][i])
    return out


def rational_inverse(mat) -> list[list[Fraction]]:
    """Inverse of a square matrix over Q (Gauss-Jordan)."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        d = a[col][col]
        a[col] = [x / d for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def int_matrix_inverse(mat: list[list[int]]) -> list[list[int]]:
    """Inverse of a unimodular integer matrix, as an integer matrix."""
    inv = rational_inverse(mat)
    out = []
    for row in inv:
        r = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            r.append(int(x))
        out.append(r)
    return out


def solve_rational(a, b) -> list[Fraction] | None:
    """Solve a * x = b over Q for square or overdetermined a; None if inconsistent."""
    m = len(a)
    n = len(a[0]) if m else 0
    rows = [[Fraction(x) for x in a[i]] + [Fraction(b[i])] for i in range(m)]
    pivots = []
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, m):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        d = rows[r][col]
        rows[r] = [x / d for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if rows[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = rows[i][n]
    return x


def kernel_int(mat: list[list[int]]) -> list[list[int]]:
    """Basis of the left integer kernel {x : x * mat = 0}; saturated."""
    m = len(mat)
    if m == 0:
        return []
    u, d, _ = snf_with_transforms(mat)
    n = len(mat[0])
    rank = sum(1 for i in range(min(m, n)) if d[i][i] != 0)
    return [u[i][:] for i in range(rank, m)]


# ---------------------------------------------------------------------------
# Signatures


def signature(gram) -> tuple[int, int, int]:
    """(positive, negative, zero) inertia of a symmetric rational matrix."""
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    active = list(range(n))
    pos = neg = 0
    while active:
        k = next((i for i in active if a[i][i] != 0), None)
        if k is not None:
            d = a[k][k]
            if d > 0:
                pos += 1
            else:
                neg += 1
            active.remove(k)
            for i in active:
                if a[i][k] != 0:
                    f = a[i][k] / d
                    for j in active:
                        a[i][j] -= f * a[k][j]
            for i in active:
                a[k][i] = a[i][k] = Fraction(0)
            continue
        # all active diagonals zero: look for an off-diagonal hyperbolic pair
        pair = None
        for ii, i in enumerate(active):
            for j in active[ii + 1:]:
                if a[i][j] != 0:
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            return pos, neg, n - pos - neg
        i, j = pair
        b = a[i][j]
        pos += 1
        neg += 1
        active.remove(i)
        active.remove(j)
        for s in active:
            for t in active:
                a[s][t] -= (a[s][i] * a[j][t] + a[s][j] * a[i][t]) / b
        for s in active:
            a[s][i] = a[i][s] = a[s][j] = a[j][s] = Fraction(0)
    return pos, neg, n - pos - neg


# ---------------------------------------------------------------------------
# Exact square-root bounds and short vectors


def sqrt_floor(fr) -> int:
    """Largest integer t with t*t <= fr (fr a nonnegative Fraction or int)."""
    fr = Fraction(fr)
    if fr < 0:
        raise ValueError("negative radicand")
    p, q = fr.numerator, fr.denominator
    t = isqrt(p * q) // q
    while (t + 1) * (t + 1) * q <= p:
        t += 1
    while t * t * q > p:
        t -= 1
    return t


def _range_for_level(center, dcoef, budget) -> tuple[int, int]:
    """Integer x range with dcoef*(x + center)^2 <= budget (dcoef > 0)."""
    s2 = budget / dcoef
    if s2 < 0:
        return 1, 0
    p, q = center.numerator, center.denominator
    f = s2 * q * q
    t = sqrt_floor(f)
    hi = (t - p) // q          # floor((t - p) / q)
    lo = -((t + p) // q)       # ceil((-t - p) / q)
    return lo, hi


def ldlt(gram) -> tuple[list[Fraction], list[list[Fraction]]]:
    """G = L D L^T with unit lower-triangular L; requires positive definite G."""
    n = len(gram)
    d = [Fraction(0)] * n
    low = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        s = Fraction(gram[j][j])
        for k in range(j):
            s -= low[j][k] * low[j][k] * d[k]
        if s <= 0:
            raise ValueError("matrix is not positive definite")
        d[j] = s
        low[j][j] = Fraction(1)
        for i in range(j + 1, n):
            v = Fraction(gram[i][j])
            for k in range(j):
                v -= low[i][k] * low[j][k] * d[k]
            low[i][j] = v / d[j]
    return d, low


def short_vectors(gram, bound):
    """All nonzero integer x with x G x^T <= bound, up to overall sign.

    Yields (coeffs, norm) pairs.  G must be positive definite.  The sign
    convention: the last nonzero coordinate is positive.
    """
    n = len(gram)
    if n == 0:
        return
    bound = Fraction(bound)
    d, low = ldlt(gram)
    # Q(x) = sum_i d[i] * (x_i + sum_{j>i} low[j][i] * x_j)^2
    x = [0] * n
    zero = Fraction(0)

    def rec(level, budget):
        if level < 0:
            norm = bound - budget
            if any(x):
                yield tuple(x), norm
            return
        center = zero
        for j in range(level + 1, n):
            if x[j]:
                center += low[j][level] * x[j]
        lo, hi = _range_for_level(center, d[level], budget)
        if all(x[j] == 0 for j in range(level + 1, n)):
            lo = max(lo, 0)  # canonical sign: topmost nonzero coordinate positive
        for xi in range(lo, hi + 1):
            x[level] = xi
            t = Fraction(xi) + center
            used = d[level] * t * t
            yield from rec(level - 1, budget - used)
        x[level] = 0

    yield from rec(n - 1, bound)


def shifted_vectors(gram, shift, bound):
    """All integer x with (x+s) G (x+s)^T <= bound for rational shift s.

    Yields (coeffs, norm) pairs; no sign canonicalization (a shifted coset
    is not symmetric).  G must be positive definite.
    """
    n = len(gram)
    if n == 0:
        if bound >= 0:
            yield (), Fraction(0)
        return
    bound = Fraction(bound)
    s = [Fraction(v) for v in shift]
    d, low = ldlt(gram)
    x = [0] * n

    def rec(level, budget):
        if level < 0:
            yield tuple(x), bound - budget
            return
        center = s[level]
        for j in range(level + 1, n):
            center += low[j][level] * (x[j] + s[j])
        lo, hi = _range_for_level(center, d[level], budget)
        for xi in range(lo, hi + 1):
            x[level] = xi
            t = Fraction(xi) + center
            used = d[level] * t * t
            yield from rec(level - 1, budget - used)
        x[level] = 0

    yield from rec(n - 1, bound)


def vectors_of_norm(gram, value):
    """All integer x with x G x^T == value, up to sign."""
    value = Fraction(value)
    return [v for v, norm in short_vectors(gram, value) if norm == value]


def has_vector_of_norm(gram, value) -> bool:
    value = Fraction(value)
    for _, norm in short_vectors(gram, value):
        if norm == value:
            return True
    return False


def gram_matrix(vectors, inner=None):
    """Gram matrix of a list of vectors under the standard dot product."""
    if inner is None:
        inner = dot
    return [[inner(u, v) for v in vectors] for u in vectors]
