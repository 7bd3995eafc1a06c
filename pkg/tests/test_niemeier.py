from fractions import Fraction

import pytest

from tritangents import intlinalg as la
from tritangents.lattice import ExactLattice
from tritangents.niemeier import all_labels, niemeier

ROOT_COUNTS = {
    "D24": 1104, "D16+E8": 720, "3E8": 720, "A24": 600, "2D12": 528,
    "A17+E7": 432, "D10+2E7": 432, "A15+D9": 384, "3D8": 336, "2A12": 312,
    "A11+D7+E6": 288, "4E6": 288, "2A9+D6": 240, "4D6": 240, "3A8": 216,
    "2A7+2D5": 192, "4A6": 168, "4A5+D4": 144, "6D4": 144, "6A4": 120,
    "8A3": 96, "12A2": 72, "24A1": 48,
}

GLUE_ORDERS = {
    "24A1": 4096, "12A2": 729, "8A3": 256, "6A4": 125, "4A5+D4": 72,
    "6D4": 64, "4A6": 49, "2A7+2D5": 32, "2A9+D6": 20, "4D6": 16,
    "3E8": 1,
}


def test_all_build_and_root_counts():
    assert len(all_labels()) == 23
    for label in all_labels():
        n = niemeier(label)
        assert n.root_count == ROOT_COUNTS[label]
        # root counts are 24 times a common Coxeter number
        assert n.root_count % 24 == 0


def test_glue_orders():
    for label, size in GLUE_ORDERS.items():
        assert len(niemeier(label).glue_words) == size


def test_gram_is_even_unimodular():
    for label in ("D24", "A24", "4A5+D4", "24A1", "12A2"):
        n = niemeier(label)
        g = n.gram
        assert len(g) == 24
        assert all(g[i][i] % 2 == 0 for i in range(24))
        assert la.bareiss_det(g) == 1
        assert la.signature(g) == (24, 0, 0)


def test_trivial_discriminant():
    n = niemeier("2A9+D6")
    assert ExactLattice(n.gram).discriminant_form().is_trivial


def _lift(n, word):
    return tuple(
        s.glue_rep(k) for s, k in zip(n.systems, word)
    )


def test_membership():
    n = niemeier("24A1")
    assert n.contains(n.zero())
    # single component root, zeros elsewhere
    root = n.systems[0].roots[0]
    v = (root,) + n.zero()[1:]
    assert n.contains(v)
    # weight-1 word is not in the Golay code
    w1 = (n.systems[0].glue_rep(1),) + n.zero()[1:]
    assert not n.contains(w1)
    # octad word lifts lie in the lattice
    octword = next(w for w in n.glue_words if sum(w) == 8)
    assert n.contains(_lift(n, octword))


def test_glue_lift_arithmetic():
    for label in ("A17+E7", "2A9+D6", "4E6"):
        n = niemeier(label)
        lifts = [_lift(n, g) for g in n.glue_gens]
        for u in lifts:
            nu = n.inner(u, u)
            assert nu.denominator == 1 and nu.numerator % 2 == 0
            for v in lifts:
                assert n.inner(u, v).denominator == 1
        zero = n.zero()
        for u in lifts:
            assert n.add(u, n.neg(u)) == zero
            assert n.sub(u, u) == zero


def test_vector_inner():
    n = niemeier("2D12")
    r0 = (n.systems[0].roots[0],) + n.zero()[1:]
    assert n.inner(r0, r0) == Fraction(2)


def test_unknown_label():
    with pytest.raises(KeyError):
        niemeier("E9")


def test_summary():
    s = niemeier("12A2").summary()
    assert s["components"] == ["A2"] * 12
    assert s["glue_order"] == 729
    assert s["root_count"] == 72
    assert s["det"] == 1
