from fractions import Fraction

import pytest

from oracles import family_oracle, max_clique_oracle
from tritangents.bounds import (
    BruteForceBudgetError,
    block_bounds,
    bound_ledger,
    brute_force_bnd,
    component_defects,
    elkies_bound,
    elkies_rank_bound,
    lemma3_bound,
    max_set_A,
    max_set_D,
    max_set_D_is_sharp,
    max_weight_clique,
    product_bound,
    two_block_bound,
)
from tritangents.lines import is_admissible, dual_line
from tritangents.orbits import decompose_orbits
from tritangents.registry import config


# -- closed forms -----------------------------------------------------------


def test_elkies_bound_exact_rational():
    assert elkies_bound(2, Fraction(-1, 2), Fraction(1, 2)) == 3
    assert elkies_bound(10, Fraction(-1, 2), Fraction(-1, 2)) == Fraction(
        9 * 10, 4 * (1 + Fraction(10, 4))
    )


def test_elkies_bound_hypotheses():
    with pytest.raises(ValueError):
        elkies_bound(4, Fraction(1, 2), Fraction(1, 4))  # tau1+tau2 > 0
    with pytest.raises(ValueError):
        elkies_bound(9, Fraction(-1), Fraction(1))  # denominator <= 0


def test_elkies_rank_bound_key_values():
    assert elkies_rank_bound(20) == 152
    assert elkies_rank_bound(19) == 122


def test_elkies_rank_bound_always_even():
    for r in range(2, 26):
        assert elkies_rank_bound(r) % 2 == 0
    with pytest.raises(ValueError):
        elkies_rank_bound(26)


# -- set-family tables ------------------------------------------------------


A_TABLE = {
    (6, 3): 4,
    (7, 3): 7,
    (8, 3): 8,
    (9, 3): 12,
    (10, 3): 13,
    (11, 3): 17,
    (8, 4): 9,
    (9, 4): 12,
    (10, 5): 24,
}


def test_max_set_A_table():
    for (n, m), want in A_TABLE.items():
        assert max_set_A(n, m) == want
    assert max_set_A(9, 1) == 1
    assert max_set_A(12, 2) == 6
    assert max_set_A(12, 3) == 20  # general cap for triples
    assert max_set_A(9, 6) == 12  # complement of (9, 3)


def test_max_set_A_oracle_small():
    # exhaustive cross-check for every tabulated case on at most 8 points
    for (n, m), want in A_TABLE.items():
        if n <= 8:
            assert family_oracle(n, [m]) == want
    assert family_oracle(7, [2]) == 3
    assert family_oracle(8, [1]) == 1


def test_max_set_A_rejects_bad_input():
    with pytest.raises(ValueError):
        max_set_A(5, 6)
    with pytest.raises(ValueError):
        max_set_A(12, 4)  # no table entry, no budget
    with pytest.raises(BruteForceBudgetError):
        max_set_A(12, 4, budget=10)


def test_max_set_D_table_and_sharpness():
    wants = [1, 1, 1, 2, 2, 4, 8, 10, 16, 32]
    for n, want in zip(range(1, 11), wants):
        assert max_set_D(n) == want
        assert max_set_D_is_sharp(n) == (n <= 8)
    with pytest.raises(ValueError):
        max_set_D(11)


def test_max_set_D_oracle_to_seven():
    # n = 8 is covered by the acceptance suite; keep this module quick
    for n in range(1, 8):
        assert family_oracle(n, range(n + 1)) == max_set_D(n)


# -- combination rules ------------------------------------------------------


def test_lemma3_bound_values():
    assert lemma3_bound(2, 2, 1) == 4
    assert lemma3_bound(4, 6, 1) == 8
    assert lemma3_bound(0, 9, 3) == 0
    assert lemma3_bound(4, 8, 4) == 10


def test_two_block_bound():
    assert two_block_bound(3, 1, 4, 2) == min(3 * 2, 1 * 4) == 4


def test_product_bound_single_block_is_exact():
    assert product_bound([(7, 5)]) == 5
    assert product_bound([(4, 2), (8, 4)]) == 16


def test_max_weight_clique_vs_oracle():
    import random

    rng = random.Random(11)
    for _ in range(15):
        n = rng.randrange(4, 14)
        adj = [set() for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.5:
                    adj[i].add(j)
                    adj[j].add(i)
        w, members = max_weight_clique([1] * n, adj)
        assert w == max_clique_oracle(n, adj)
        for a in members:
            for b in members:
                assert a == b or b in adj[a]


# -- real orbits ------------------------------------------------------------


def test_defects_sum_to_five_on_self_dual_orbits():
    cfg = config("24A1-3roots")
    dec = decompose_orbits(cfg)
    for o in dec.comb_orbits:
        assert o.self_dual
        for i in o.members[:4]:
            d = component_defects(cfg, dec.lines[i])
            assert sum(d) == 5
            assert all(0 <= x <= 5 for x in d)


def test_block_pair_differences_bounded_by_defect():
    # within one component, the square-minus-product of two restrictions
    # stays between 0 and the component defect
    cfg = config("24A1-3roots")
    dec = decompose_orbits(cfg)
    o = dec.comb_orbits[0]
    rep = dec.lines[o.members[0]]
    defs = component_defects(cfg, rep)
    systems = cfg.lattice.systems
    for c in dec.support(0):
        vals = {dec.lines[i][c] for i in o.members}
        sq = systems[c].inner(rep[c], rep[c])
        for v in vals:
            for w in vals:
                d = sq - systems[c].inner(v, w)
                assert 0 <= d <= defs[c]


def test_lemma3_blocks_reproduce_sharp_bound():
    # grouping two defect-1 components against the rest gives blocks of
    # defects 2 and 3 whose combination matches the exhaustive bound
    cfg = config("24A1-3roots")
    dec = decompose_orbits(cfg)
    rep = dec.lines[dec.comb_orbits[0].members[0]]
    defs = component_defects(cfg, rep)
    free = [c for c in dec.support(0) if defs[c] == 1]
    b2, b3 = block_bounds(
        dec,
        0,
        [tuple(free[:2]), tuple(c for c in range(24) if c not in free[:2])],
    )
    assert (b2.cnt, b2.bnd, b2.defect) == (4, 2, 2)
    assert (b3.cnt, b3.bnd, b3.defect) == (8, 4, 3)
    assert lemma3_bound(b2.cnt, b3.cnt, b3.bnd) == 10
    assert brute_force_bnd(dec, 0).bnd == 10


def test_brute_force_witness_is_admissible():
    cfg = config("24A1-3roots")
    dec = decompose_orbits(cfg)
    res = brute_force_bnd(dec, 0)
    assert res.sharp and res.reason == "full-brute-force"
    lines = [dec.lines[dec.comb_orbits[0].members[i]] for i in res.witness]
    assert len(lines) == res.bnd
    closed = set(lines) | {dual_line(cfg, l) for l in lines}
    assert is_admissible(cfg, sorted(closed))


def test_ledger_three_roots():
    led = bound_ledger(config("24A1-3roots"))
    assert len(led.rows) == 16
    assert all(r.bnd == 10 and r.sharp for r in led.rows)
    assert all(r.orbit_self_dual and r.parent_self_dual for r in led.rows)
    assert led.bnd_total == 160
    assert led.cnt_total == 512
    assert led.defect_vs_goal(122) == 38


def test_ledger_octad():
    led = bound_ledger(config("24A1-octad"))
    assert led.bnd_total == 184
    assert led.cnt_total == 464
    by_mult = {}
    for r in led.rows:
        by_mult.setdefault(r.multiplicity, []).append(r)
    assert all(r.bnd == 1 for r in by_mult[8])
    assert all(r.bnd == 3 for r in by_mult[56])
    assert all(not r.orbit_self_dual for r in led.rows)
    assert all(r.parent_self_dual for r in by_mult[56])
    assert not any(r.parent_self_dual for r in by_mult[8])
    assert led.defect_vs_goal(132) == 52


def test_ledger_dodecad():
    led = bound_ledger(config("24A1-dodecad"))
    assert len(led.rows) == 110
    assert all(r.bnd == 2 and r.sharp for r in led.rows)
    assert led.bnd_total == 220
    assert led.defect_vs_goal(132) == 88


def test_ledger_exports():
    import csv
    import io
    import json

    led = bound_ledger(config("24A1-3roots"))
    data = json.loads(led.to_json())
    assert data["totals"] == {"cnt": 512, "bnd": 160}
    assert len(data["rows"]) == 16
    rows = list(csv.reader(io.StringIO(led.to_csv())))
    assert rows[0][:6] == ["orbit", "parent", "m", "support", "cnt", "bnd"]
    assert len(rows) == 17
    # byte-identical on repeated export
    assert led.to_csv() == bound_ledger(config("24A1-3roots")).to_csv()
