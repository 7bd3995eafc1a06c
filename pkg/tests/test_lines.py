from fractions import Fraction

import pytest

from tritangents import intlinalg as la
from tritangents import lines as ln
from tritangents.golay import binary_golay
from tritangents.niemeier import niemeier
from tritangents.roots import root_system


def _e8_hbar():
    e8 = root_system("E", 8)
    cands = [c for c, nrm in la.short_vectors(e8.gram, 6) if nrm == 6]
    coeffs = min(cands)
    vec = tuple(
        sum(coeffs[i] * e8.basis[i][t] for i in range(8)) for t in range(8)
    )
    return e8, coeffs, vec


@pytest.fixture(scope="module")
def e8cfg():
    n = niemeier("3E8")
    e8, coeffs, vec = _e8_hbar()
    zero = tuple([0] * 8)
    return ln.PolarizedConfig(lattice=n, hbar=(vec, zero, zero), name="e8")


def test_e8_universe_matches_brute_force(e8cfg):
    # independent count through homogeneous norm enumeration on one E8
    e8, coeffs, vec = _e8_hbar()
    gh = [sum(e8.gram[i][j] * coeffs[j] for j in range(8)) for i in range(8)]
    n43 = n23 = 0
    for c, nrm in la.short_vectors(e8.gram, 4):
        d = sum(c[i] * gh[i] for i in range(8))
        if nrm == 4 and abs(d) == 3:
            n43 += 1
        if nrm == 2 and abs(d) == 3:
            n23 += 1
    expected = n43 + n23 * 480
    universe = ln.line_universe(e8cfg)
    assert len(universe) == expected
    assert len(set(universe)) == len(universe)
    for l in universe[:40]:
        assert e8cfg.lattice.inner(l, l) == 4
        assert e8cfg.lattice.inner(l, e8cfg.hbar) == 3


def test_e8_universe_closed_under_dual(e8cfg):
    universe = set(ln.line_universe(e8cfg))
    for l in universe:
        assert ln.dual_line(e8cfg, l) in universe


@pytest.fixture(scope="module")
def dodecfg():
    n = niemeier("24A1")
    bg = binary_golay()
    dode = bg.dodecads[0]
    a1 = n.systems[0]
    half = a1.glue_rep(1)
    zero = (0, 0)
    hbar = tuple(half if dode >> i & 1 else zero for i in range(24))
    return dode, ln.PolarizedConfig(lattice=n, hbar=hbar, name="dodecad")


def test_dodecad_universe_count(dodecfg):
    dode, cfg = dodecfg
    bg = binary_golay()
    n6 = sum(1 for o in bg.octads if bin(o & dode).count("1") == 6)
    universe = ln.line_universe(cfg)
    # each octad meeting the dodecad in 6 points gives sign choices on
    # its two points outside
    assert len(universe) == 4 * n6
    assert list(universe) == sorted(universe)
    for l in universe[:60]:
        assert cfg.lattice.contains(l)
        assert cfg.lattice.inner(l, l) == 4
        assert cfg.lattice.inner(l, cfg.hbar) == 3


def test_dodecad_universe_with_marked_root(dodecfg):
    dode, cfg = dodecfg
    bg = binary_golay()
    j = next(i for i in range(24) if not dode >> i & 1)
    a1 = cfg.lattice.systems[0]
    zero = (0, 0)
    rbar = tuple(a1.roots[0] if i == j else zero for i in range(24))
    cfg_r = ln.PolarizedConfig(lattice=cfg.lattice, hbar=cfg.hbar, rbar=rbar)
    n6_avoid = sum(
        1
        for o in bg.octads
        if bin(o & dode).count("1") == 6 and not o >> j & 1
    )
    universe = ln.line_universe(cfg_r)
    assert len(universe) == 4 * n6_avoid
    for l in universe[:40]:
        assert cfg.lattice.inner(l, rbar) == 0


def test_config_validation(dodecfg):
    dode, cfg = dodecfg
    n = cfg.lattice
    a1 = n.systems[0]
    zero = (0, 0)
    with pytest.raises(ln.ConfigError):
        ln.PolarizedConfig(lattice=n, hbar=n.zero())
    bad_root = tuple(a1.glue_rep(1) if i == 0 else zero for i in range(24))
    with pytest.raises(ln.ConfigError):
        ln.PolarizedConfig(lattice=n, hbar=cfg.hbar, rbar=bad_root)
    j = next(i for i in range(24) if dode >> i & 1)
    non_perp = tuple(a1.roots[0] if i == j else zero for i in range(24))
    with pytest.raises(ln.ConfigError):
        ln.PolarizedConfig(lattice=n, hbar=cfg.hbar, rbar=non_perp)


def test_products_and_duality(dodecfg):
    _, cfg = dodecfg
    universe = ln.line_universe(cfg)
    l = universe[0]
    m = ln.dual_line(cfg, l)
    assert ln.product(cfg, l, m) == -1
    assert ln.product(cfg, l, l) == 4
    assert ln.dual_line(cfg, m) == l


def test_dual_pair_is_admissible_complete_geometric(dodecfg):
    _, cfg = dodecfg
    universe = ln.line_universe(cfg)
    l = universe[0]
    pair = (l, ln.dual_line(cfg, l))
    assert ln.is_symmetric(cfg, pair)
    assert ln.pair_products_ok(cfg, pair)
    assert ln.is_admissible(cfg, pair)
    spn = ln.span_rows(cfg, pair)
    assert len(spn) == 2
    assert ln.is_complete(cfg, pair)
    assert ln.is_saturated(cfg, pair)
    rep = ln.geometricity(cfg, pair)
    assert rep.admissible and rep.rank == 2 and rep.rank_ok
    assert rep.geometric
    assert rep.models
    exts = ln.mild_extensions(cfg, pair)
    assert exts and exts[0].index3 == 1


def test_single_line_not_symmetric(dodecfg):
    _, cfg = dodecfg
    l = ln.line_universe(cfg)[0]
    assert not ln.is_symmetric(cfg, (l,))
    assert not ln.is_admissible(cfg, (l,))


def test_product_zero_pair_not_admissible(dodecfg):
    _, cfg = dodecfg
    universe = ln.line_universe(cfg)
    a = universe[0]
    b = next(x for x in universe if ln.product(cfg, a, x) == 0)
    four = (a, ln.dual_line(cfg, a), b, ln.dual_line(cfg, b))
    assert ln.is_symmetric(cfg, four)
    assert not ln.pair_products_ok(cfg, four)
    assert not ln.is_admissible(cfg, four)


def test_closure_idempotent_and_monotone(dodecfg):
    _, cfg = dodecfg
    universe = ln.line_universe(cfg)
    a = universe[0]
    pair = (a, ln.dual_line(cfg, a))
    c1 = ln.closure(cfg, pair)
    assert set(pair) <= set(c1)
    assert ln.closure(cfg, c1) == c1


def test_span_chain_indices(dodecfg):
    _, cfg = dodecfg
    universe = ln.line_universe(cfg)
    # a few lines to get an interesting span
    sample = list(universe[:3])
    sample += [ln.dual_line(cfg, l) for l in sample]
    z = ln.span_z_rows(cfg, sample)
    s = ln.span_rows(cfg, sample)
    q = ln.span_q_rows(cfg, sample)
    assert len(z) == len(s) == len(q)
    dz = abs(la.bareiss_det(ln.sub_gram(cfg, z)))
    ds = abs(la.bareiss_det(ln.sub_gram(cfg, s)))
    dq = abs(la.bareiss_det(ln.sub_gram(cfg, q)))
    assert dz % ds == 0 and ds % dq == 0
    m2 = dz // ds
    m = la.sqrt_floor(m2)
    assert m * m == m2 and m % 3 != 0
    t2 = ds // dq
    t = la.sqrt_floor(t2)
    assert t * t == t2
    while t % 3 == 0:
        t //= 3
    assert t == 1

    def inside(rows_small, rows_big):
        tr = la.transpose([list(r) for r in rows_big])
        for row in rows_small:
            sol = la.solve_rational(tr, list(row))
            if sol is None or any(c.denominator != 1 for c in sol):
                return False
        return True

    assert inside(z, s) and inside(s, q)


def test_lines_in_span_matches_universe_on_small_span(dodecfg):
    _, cfg = dodecfg
    universe = set(ln.line_universe(cfg))
    a = next(iter(sorted(universe)))
    pair = (a, ln.dual_line(cfg, a))
    for l in ln.closure(cfg, pair):
        assert l in universe
