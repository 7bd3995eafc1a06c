from __future__ import annotations

import itertools
import random
from fractions import Fraction

from sympy import Matrix

from tritangents.intlinalg import (
    IntRowSpan,
    bareiss_det,
    fraction_det,
    gram_matrix,
    has_vector_of_norm,
    hnf,
    identity_matrix,
    int_matrix_inverse,
    invariant_factors,
    kernel_int,
    mat_mul,
    rational_inverse,
    shifted_vectors,
    short_vectors,
    signature,
    snf_with_transforms,
    solve_rational,
    sqrt_floor,
    vectors_of_norm,
    xgcd,
)


def test_xgcd() -> None:
    for a, b in [(12, 18), (-4, 6), (0, 5), (7, 0), (0, 0), (-9, -6)]:
        g, x, y = xgcd(a, b)
        assert a * x + b * y == g
        assert g >= 0


def test_bareiss_det_small() -> None:
    assert bareiss_det([[2]]) == 2
    assert bareiss_det([[1, 2], [3, 4]]) == -2
    assert bareiss_det([[2, -1], [-1, 2]]) == 3
    assert bareiss_det([]) == 1


def test_bareiss_det_random_vs_sympy() -> None:
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 6)
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert bareiss_det(m) == int(Matrix(m).det())


def test_fraction_det() -> None:
    m = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 5), Fraction(1, 7)]]
    expect = Fraction(1, 2) * Fraction(1, 7) - Fraction(1, 3) * Fraction(1, 5)
    assert fraction_det(m) == expect


def test_int_row_span_contains_and_rank() -> None:
    span = IntRowSpan(3)
    assert span.add([2, 0, 0])
    assert span.add([0, 3, 0])
    assert not span.add([2, 3, 0])
    assert span.contains([4, -3, 0])
    assert not span.contains([1, 0, 0])
    assert span.rank == 2


def test_hnf_is_canonical() -> None:
    rng = random.Random(3)
    for _ in range(20):
        rows = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(5)]
        h1 = hnf(rows)
        rng.shuffle(rows)
        h2 = hnf(rows)
        assert h1 == h2
        # pivot structure: strictly increasing pivot columns, positive pivots
        last = -1
        for row in h1:
            p = next(j for j, x in enumerate(row) if x != 0)
            assert p > last
            assert row[p] > 0
            last = p


def test_snf_transforms_multiply_out() -> None:
    rng = random.Random(11)
    for _ in range(50):
        m = rng.randint(1, 5)
        n = rng.randint(1, 5)
        a = [[rng.randint(-8, 8) for _ in range(n)] for _ in range(m)]
        u, d, v = snf_with_transforms(a)
        assert mat_mul(mat_mul(u, a), v) == d
        assert abs(bareiss_det(u)) == 1
        assert abs(bareiss_det(v)) == 1
        diag = [d[i][i] for i in range(min(m, n))]
        assert all(x >= 0 for x in diag)
        for x, y in zip(diag, diag[1:]):
            if y != 0:
                assert x != 0 and y % x == 0


def test_snf_already_diagonal_inputs() -> None:
    # diagonal inputs skip the HNF passes; signs and ordering must still
    # come out normalized
    cases = [
        [[-2]],
        [[-2, 0], [0, -3]],
        [[4, 0], [0, -2]],
        [[0, 0], [0, -5]],
    ]
    for a in cases:
        u, d, v = snf_with_transforms(a)
        assert mat_mul(mat_mul(u, a), v) == d
        n = len(a)
        diag = [d[i][i] for i in range(n)]
        assert all(x >= 0 for x in diag)
        nz = [x for x in diag if x]
        for x, y in zip(nz, nz[1:]):
            assert y % x == 0
    assert invariant_factors([[-2]]) == [2]


def test_invariant_factors_vs_sympy_oracle() -> None:
    # independent elementary-divisors oracle on random integer Gram matrices
    from sympy.matrices.normalforms import smith_normal_form

    rng = random.Random(2024)
    for _ in range(50):
        n = rng.randint(1, 8)
        b = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        g = [[sum(b[i][k] * b[j][k] for k in range(n)) for j in range(n)] for i in range(n)]
        mine = invariant_factors(g)
        s = smith_normal_form(Matrix(g))
        theirs = [abs(int(s[i, i])) for i in range(min(s.shape)) if s[i, i] != 0]
        assert mine == theirs


def test_int_matrix_inverse_roundtrip() -> None:
    u = [[1, 2, 0], [0, 1, 3], [0, 0, 1]]
    ui = int_matrix_inverse(u)
    assert mat_mul(u, ui) == identity_matrix(3)


def test_rational_inverse_and_solve() -> None:
    a = [[2, 1], [1, 3]]
    ai = rational_inverse(a)
    assert mat_mul(a, ai) == [[1, 0], [0, 1]]
    x = solve_rational(a, [5, 5])
    assert x == [Fraction(2), Fraction(1)]
    assert solve_rational([[1, 1], [2, 2]], [1, 3]) is None


def test_kernel_int() -> None:
    a = [[1, 2], [2, 4], [0, 0]]
    ker = kernel_int(a)
    assert len(ker) == 2
    for row in ker:
        assert all(sum(row[i] * a[i][j] for i in range(3)) == 0 for j in range(2))


def test_signature_examples() -> None:
    assert signature([[2, -1], [-1, 2]]) == (2, 0, 0)
    assert signature([[-2, 1], [1, -2]]) == (0, 2, 0)
    assert signature([[0, 1], [1, 0]]) == (1, 1, 0)
    assert signature([[0, 0], [0, 0]]) == (0, 0, 2)
    assert signature([[2, 0, 0], [0, -3, 0], [0, 0, 0]]) == (1, 1, 1)
    # 0-diagonal block interacting with another row
    assert signature([[0, 1, 1], [1, 0, 0], [1, 0, 2]]) == (2, 1, 0)


def test_signature_random_vs_descartes_oracle() -> None:
    # symmetric matrices have real spectra, so Descartes' rule of signs on the
    # characteristic polynomial counts positive/negative eigenvalues exactly
    def descartes(coeffs: list[int]) -> int:
        signs = [c for c in coeffs if c != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))

    rng = random.Random(5)
    for _ in range(25):
        n = rng.randint(1, 5)
        b = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        g = [[b[i][j] + b[j][i] for j in range(n)] for i in range(n)]
        pos, neg, zero = signature(g)
        poly = Matrix(g).charpoly()
        coeffs = [int(c) for c in poly.all_coeffs()]
        szero = 0
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
            szero += 1
        spos = descartes(coeffs)
        sneg = descartes([c if i % 2 == 0 else -c for i, c in enumerate(coeffs)])
        assert (pos, neg, zero) == (spos, sneg, szero)


def test_sqrt_floor() -> None:
    assert sqrt_floor(0) == 0
    assert sqrt_floor(Fraction(1, 2)) == 0
    assert sqrt_floor(Fraction(9, 4)) == 1
    assert sqrt_floor(4) == 2
    assert sqrt_floor(Fraction(25, 4)) == 2
    assert sqrt_floor(Fraction(26, 4)) == 2
    assert sqrt_floor(Fraction(36, 4)) == 3


def test_short_vectors_a2_roots() -> None:
    a2 = [[2, -1], [-1, 2]]
    roots = vectors_of_norm(a2, 2)
    assert len(roots) == 3  # 6 roots up to sign
    all_short = list(short_vectors(a2, 2))
    assert len(all_short) == 3
    assert has_vector_of_norm(a2, 2)
    assert not has_vector_of_norm(a2, 1)


def test_short_vectors_counts_vs_brute_force() -> None:
    rng = random.Random(9)
    for _ in range(10):
        n = rng.randint(1, 3)
        while True:
            b = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
            g = gram_matrix(b)
            if bareiss_det(g) > 0 and all(g[i][i] > 0 for i in range(n)):
                found = {v for v, _ in short_vectors(g, 12)}
                break
        # exact coordinate box: |x_i|^2 <= bound * (G^-1)_ii
        ginv = rational_inverse(g)
        radii = [sqrt_floor(12 * ginv[i][i]) + 1 for i in range(n)]
        brute = set()
        for coords in _box(radii):
            if not any(coords):
                continue
            norm = sum(coords[i] * g[i][j] * coords[j] for i in range(n) for j in range(n))
            if norm <= 12:
                # canonicalize sign: last nonzero positive
                v = coords
                for x in reversed(v):
                    if x != 0:
                        if x < 0:
                            v = tuple(-y for y in v)
                        break
                brute.add(v)
        assert found == brute


def _box(radii: list[int]):
    if not radii:
        yield ()
        return
    for rest in _box(radii[:-1]):
        for x in range(-radii[-1], radii[-1] + 1):
            yield rest + (x,)


def test_gram_matrix() -> None:
    assert gram_matrix([[1, 0], [1, 1]]) == [[1, 1], [1, 2]]


def test_shifted_vectors_a2_coset() -> None:
    # nontrivial dual coset of the hexagonal lattice: three minimal
    # vectors of norm 2/3, none shorter
    gram = [[2, -1], [-1, 2]]
    shift = (Fraction(2, 3), Fraction(1, 3))
    hits = list(shifted_vectors(gram, shift, Fraction(2, 3)))
    assert len(hits) == 3
    assert all(norm == Fraction(2, 3) for _, norm in hits)


def test_shifted_vectors_vs_brute_force() -> None:
    rng = random.Random(23)
    for _ in range(10):
        n = rng.randint(1, 3)
        while True:
            b = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
            g = [[sum(b[i][k] * b[j][k] for k in range(n)) + (2 if i == j else 0)
                  for j in range(n)] for i in range(n)]
            if bareiss_det(g) > 0:
                break
        shift = [Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(n)]
        bound = Fraction(rng.randint(2, 9))

        def norm_of(x):
            y = [Fraction(xi) + si for xi, si in zip(x, shift)]
            return sum(y[i] * g[i][j] * y[j] for i in range(n) for j in range(n))

        got = sorted(shifted_vectors(g, shift, bound))
        box = 12
        brute = []
        for x in itertools.product(range(-box, box + 1), repeat=n):
            nn = norm_of(x)
            if nn <= bound:
                brute.append((tuple(x), nn))
        assert got == sorted(brute)


def test_shifted_vectors_integral_shift_includes_zero() -> None:
    hits = dict(shifted_vectors([[2]], (Fraction(1),), 2))
    assert hits[(-1,)] == 0
    assert hits[(0,)] == 2
    assert hits[(-2,)] == 2
