import itertools
from fractions import Fraction

import pytest

from tritangents.roots import root_system


ROOT_COUNTS = {
    ("A", 1): 2,
    ("A", 2): 6,
    ("A", 4): 20,
    ("A", 11): 132,
    ("D", 4): 24,
    ("D", 5): 40,
    ("D", 8): 112,
    ("E", 6): 72,
    ("E", 7): 126,
    ("E", 8): 240,
}


def test_root_counts():
    for (kind, n), count in ROOT_COUNTS.items():
        assert len(root_system(kind, n).roots) == count


def test_basis_is_simple_system():
    for kind, n in ROOT_COUNTS:
        rs = root_system(kind, n)
        assert len(rs.basis) == n
        for b in rs.basis:
            assert b in rs.roots
        for i in range(n):
            assert rs.gram[i][i] == 2
            for j in range(n):
                if i != j:
                    assert rs.gram[i][j] in (0, -1)


def test_discriminant_sizes():
    assert root_system("A", 5).discr_size == 6
    assert root_system("D", 7).discr_size == 4
    assert root_system("E", 6).discr_size == 3
    assert root_system("E", 7).discr_size == 2
    assert root_system("E", 8).discr_size == 1


def test_all_roots_in_lattice():
    for kind, n in [("A", 3), ("D", 5), ("E", 6), ("E", 7)]:
        rs = root_system(kind, n)
        for r in rs.roots:
            assert rs.in_lattice(r)
            assert rs.class_of(r) == 0


def test_glue_rep_classes_and_addition():
    for kind, n in [("A", 4), ("A", 5), ("D", 4), ("D", 5), ("D", 6), ("E", 6), ("E", 7)]:
        rs = root_system(kind, n)
        m = rs.discr_size
        for k in range(m):
            assert rs.class_of(rs.glue_rep(k)) == k
        for a in range(m):
            for b in range(m):
                s = tuple(x + y for x, y in zip(rs.glue_rep(a), rs.glue_rep(b)))
                assert rs.class_of(s) == rs.class_add(a, b)
            neg = tuple(-x for x in rs.glue_rep(a))
            assert rs.class_of(neg) == rs.class_neg(a)


def test_min_class_norm_values():
    a5 = root_system("A", 5)
    assert a5.min_class_norm(1) == Fraction(5, 6)
    assert a5.min_class_norm(2) == Fraction(4, 3)
    assert a5.min_class_norm(3) == Fraction(3, 2)
    d8 = root_system("D", 8)
    assert d8.min_class_norm(1) == 2
    assert d8.min_class_norm(2) == 1
    assert d8.min_class_norm(3) == 2
    assert root_system("E", 6).min_class_norm(1) == Fraction(4, 3)
    assert root_system("E", 7).min_class_norm(1) == Fraction(3, 2)


MINIMAL_COSET_COUNTS = [
    ("A", 2, 1, 3),
    ("A", 5, 2, 15),
    ("A", 5, 3, 20),
    ("D", 8, 1, 128),
    ("D", 8, 2, 16),
    ("D", 4, 1, 8),
    ("D", 4, 2, 8),
    ("D", 4, 3, 8),
    ("E", 6, 1, 27),
    ("E", 6, 2, 27),
    ("E", 7, 1, 56),
]


def test_minimal_coset_vector_counts():
    for kind, n, k, count in MINIMAL_COSET_COUNTS:
        rs = root_system(kind, n)
        target = rs.min_class_norm(k)
        vecs = rs.dual_vectors(target)[k]
        minimal = [v for v in vecs if rs.inner(v, v) == target]
        assert len(minimal) == count
        assert all(rs.inner(v, v) >= target for v in vecs if v != tuple([0] * rs.dim))


def test_dual_vectors_class_zero_contains_roots():
    rs = root_system("D", 5)
    vecs = rs.dual_vectors(2)[0]
    assert tuple([0] * rs.dim) in vecs
    for r in rs.roots:
        assert r in vecs


def test_e6_duality_negation():
    rs = root_system("E", 6)
    d = rs.dual_vectors(Fraction(4, 3))
    neg = sorted(tuple(-x for x in v) for v in d[1])
    assert neg == list(d[2])


def test_reflections_preserve_norm_and_class():
    for kind, n in [("A", 3), ("D", 5), ("E", 6)]:
        rs = root_system(kind, n)
        k = 1
        v = rs.glue_rep(k)
        for r in rs.roots[:20]:
            w = rs.reflect(v, r)
            assert rs.inner(w, w) == rs.inner(v, v)
            assert rs.class_of(w) == k


def test_a1_dual_vectors_for_line_budget():
    # the per-component menu behind the 24 A1 line counting: class 0
    # offers norms 0 and 2, class 1 only norm 1/2, within budget 4
    rs = root_system("A", 1)
    d = rs.dual_vectors(4)
    norms0 = sorted(rs.inner(v, v) for v in d[0])
    norms1 = sorted(rs.inner(v, v) for v in d[1])
    assert norms0 == [0, 2, 2]
    assert norms1 == [Fraction(1, 2), Fraction(1, 2)]


def test_invalid_parameters():
    with pytest.raises(ValueError):
        root_system("D", 3)
    with pytest.raises(ValueError):
        root_system("E", 5)
    with pytest.raises(ValueError):
        root_system("B", 2)
    with pytest.raises(ValueError):
        root_system("A", 0)


def test_class_of_rejects_non_dual_vectors():
    a2 = root_system("A", 2)
    with pytest.raises(ValueError):
        a2.class_of((1, 0, 0))  # numerators must agree mod 3
    d4 = root_system("D", 4)
    with pytest.raises(ValueError):
        d4.class_of((1, 0, 0, 0))  # mixed parity
