"""Counting and bounding of lines per combinatorial orbit.

The per-orbit bound is the size of the largest subset that stays
admissible once closed under duality; exhaustive search certifies
sharpness, and when it would be too expensive there are two cheaper
fallbacks (fixing the restriction to one component, or multiplying
per-block counts and bounds).  The ledger assembles the per-orbit data
into the global a-priori bound on the size of a geometric set.
"""

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, floor

from .lines import dual_line, is_admissible, product
from .orbits import OrbitDecomposition, decompose_orbits


class BruteForceBudgetError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# closed-form and table bounds


def elkies_bound(n, tau1, tau2) -> Fraction:
    """Largest number of unit vectors with pairwise products in [tau1, tau2]."""
    t1, t2 = Fraction(tau1), Fraction(tau2)
    n = Fraction(n)
    if t1 + t2 > 0:
        raise ValueError("requires tau1 + tau2 <= 0")
    denom = 1 + t1 * t2 * n
    if denom <= 0:
        raise ValueError("requires 1 + tau1*tau2*n > 0")
    return (1 - t1) * (1 - t2) * n / denom


def elkies_rank_bound(rank: int) -> int:
    """Cap on the size of a line set of the given rank; always even."""
    if not 2 <= rank <= 25:
        raise ValueError("rank out of range")
    cap = Fraction(48 * (rank - 1), 26 - rank)
    out = floor(cap)
    return out - (out % 2)


_TABLE_A = {
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

# allowed symmetric differences between distinct member subsets
_DIF_OK = frozenset({4, 6, 10})


def max_set_A(n: int, m: int, budget: int | None = None) -> int:
    """Largest family of m-subsets of an n-set with pairwise symmetric
    differences in {4, 6, 10}; for (10, 5) the family must be closed
    under complement."""
    if n < 1 or not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n, n >= 1")
    if 2 * m > n:
        m = n - m  # complementing every member preserves the conditions
    if m == 0:
        return 1
    if m == 1:
        return 1
    if m == 2:
        return n // 2
    if (n, m) in _TABLE_A:
        return _TABLE_A[(n, m)]
    if m == 3:
        # any two members share at most one point
        return (n * ((n - 1) // 2)) // 3
    if budget is None:
        raise ValueError(
            "no closed form for (%d, %d); pass a brute-force budget" % (n, m)
        )
    if comb(n, m) > budget:
        raise BruteForceBudgetError("%d subsets exceed budget" % comb(n, m))
    return _brute_max_family(n, m)


def _brute_max_family(n: int, m: int) -> int:
    subs = [frozenset(c) for c in combinations(range(n), m)]
    adj = []
    for i, r in enumerate(subs):
        nb = set()
        for j, s in enumerate(subs):
            if i != j and len(r ^ s) in _DIF_OK:
                nb.add(j)
        adj.append(frozenset(nb))
    w, _ = max_weight_clique([1] * len(subs), adj)
    return w


_TABLE_D = (1, 1, 1, 2, 2, 4, 8, 10, 16, 32)


def max_set_D(n: int) -> int:
    """Largest family of subsets of an n-set (n <= 10, any cardinalities)
    with pairwise symmetric differences in {4, 6, 10}; complement-closed
    when n = 10."""
    if not 1 <= n <= 10:
        raise ValueError("only proved for 1 <= n <= 10")
    return _TABLE_D[n - 1]


def max_set_D_is_sharp(n: int) -> bool:
    if not 1 <= n <= 10:
        raise ValueError("only proved for 1 <= n <= 10")
    return n <= 8


def lemma3_bound(cnt2: int, cnt3: int, bnd3: int) -> int:
    """Bound for a self-dual orbit split into blocks of defects 2 and 3.

    u counts the defect-2 restrictions whose full dual quadruple is
    used; each such quadruple consumes two defect-3 restrictions.
    """
    if min(cnt2, cnt3, bnd3) < 0:
        raise ValueError("counts and bounds must be nonnegative")
    best = 0
    for u in range(min(cnt2, cnt3) // 2 + 1):
        best = max(best, 4 * u + min(cnt3 - 2 * u, (cnt2 - 2 * u) * bnd3))
    return best


def two_block_bound(cnt1: int, bnd1: int, cnt2: int, bnd2: int) -> int:
    return min(cnt1 * bnd2, bnd1 * cnt2)


def product_bound(blocks) -> int:
    """Naive bound from per-block (cnt, bnd) pairs; cnt is multiplicative."""
    total = 1
    for cnt, _ in blocks:
        total *= cnt
    best = None
    for cnt, bnd in blocks:
        cur = (total // cnt) * bnd
        best = cur if best is None else min(best, cur)
    return best if best is not None else 1


# ---------------------------------------------------------------------------
# exact max-weight clique (branch and bound, deterministic)


def max_weight_clique(weights, adj):
    """Exact maximum-weight clique; adj[i] is a set of neighbor indices."""
    n = len(weights)
    order = sorted(range(n), key=lambda i: (-weights[i], i))
    best_w = 0
    best_set: tuple = ()

    def grow(chosen, chosen_w, cand):
        nonlocal best_w, best_set
        if chosen_w > best_w:
            best_w = chosen_w
            best_set = tuple(sorted(chosen))
        if chosen_w + sum(weights[i] for i in cand) <= best_w:
            return
        rest = list(cand)
        while rest:
            if chosen_w + sum(weights[i] for i in rest) <= best_w:
                return
            v = rest.pop(0)
            grow(
                chosen + [v],
                chosen_w + weights[v],
                [u for u in rest if u in adj[v]],
            )

    grow([], 0, order)
    return best_w, best_set


# ---------------------------------------------------------------------------
# defects and block restrictions


def component_defects(cfg, line) -> tuple:
    """Per-component defect 2*l_k^2 - l_k.hbar_k as exact fractions."""
    systems = cfg.lattice.systems
    out = []
    for c, comp in enumerate(line):
        sq = systems[c].inner(comp, comp)
        hprod = systems[c].inner(comp, cfg.hbar[c])
        out.append(2 * sq - hprod)
    return tuple(out)


def restrict_orbit(dec: OrbitDecomposition, oid: int, components) -> tuple:
    """Distinct restrictions of the orbit's lines to the given components."""
    comps = tuple(components)
    seen = []
    have = set()
    for i in dec.comb_orbits[oid].members:
        v = tuple(dec.lines[i][c] for c in comps)
        if v not in have:
            have.add(v)
            seen.append(v)
    return tuple(seen)


@dataclass(frozen=True)
class BlockBound:
    components: tuple
    cnt: int
    bnd: int
    defect: Fraction | None  # None unless the orbit is self-dual


def _block_inner(systems, comps, v, w) -> Fraction:
    return sum(
        systems[c].inner(v[i], w[i]) for i, c in enumerate(comps)
    )


def block_bounds(dec: OrbitDecomposition, oid: int, blocks) -> tuple:
    """Per-block (cnt, bnd, defect) data for a partition of the components.

    bnd counts restrictions whose pairwise square-minus-product values
    stay in {0 (equal), 2, 3, 5 (dual pair)}.  No dual-closure is imposed
    on the subsets: the bound must cover slices of a line set over one
    fixed restriction to the other blocks, and such slices are not
    dual-closed.  Imposing closure here would undercut the two-defect
    combination bound below.
    """
    cfg = dec.cfg
    systems = cfg.lattice.systems
    self_dual = dec.comb_orbits[oid].self_dual
    out = []
    for comps in blocks:
        comps = tuple(comps)
        vecs = list(restrict_orbit(dec, oid, comps))
        hb = tuple(cfg.hbar[c] for c in comps)
        bar = {}
        for i, v in enumerate(vecs):
            vb = tuple(
                tuple(h - x for h, x in zip(hb[a], v[a]))
                for a in range(len(comps))
            )
            bar[i] = vecs.index(vb) if vb in vecs else None
        sq = _block_inner(systems, comps, vecs[0], vecs[0])
        defect = None
        if self_dual:
            assert bar[0] is not None, "self-dual orbit must restrict dually"
            defect = sq - _block_inner(systems, comps, vecs[0], vecs[bar[0]])

        def allowed(i, j):
            d = sq - _block_inner(systems, comps, vecs[i], vecs[j])
            if d == 5:
                return bar[i] == j
            return d in (2, 3)

        adj = []
        for i in range(len(vecs)):
            adj.append(
                frozenset(
                    j for j in range(len(vecs)) if j != i and allowed(i, j)
                )
            )
        bnd, _ = max_weight_clique([1] * len(vecs), adj)
        out.append(BlockBound(comps, len(vecs), bnd, defect))
    return tuple(out)


# ---------------------------------------------------------------------------
# exhaustive per-orbit bound


@dataclass(frozen=True)
class BndResult:
    bnd: int
    sharp: bool
    reason: str
    witness: tuple  # member indices of an attaining admissible subset


def _max_admissible(cfg, members, units, budget) -> tuple:
    """Largest union of units whose dual closure is admissible.

    Returns (size, witness unit tuple); raises on budget exhaustion.
    units are tuples of indices into members; compatibility is pruned
    by pairwise products first, full admissibility at every extension.
    """
    prod_ok = {}
    n = len(units)
    lines_of = [tuple(members[i] for i in u) for u in units]

    def compatible(a, b):
        key = (a, b) if a < b else (b, a)
        got = prod_ok.get(key)
        if got is None:
            got = all(
                product(cfg, x, y) in (-1, 1, 2)
                for x in lines_of[a]
                for y in lines_of[b]
            )
            prod_ok[key] = got
        return got

    nodes = [0]
    best = [0, ()]

    def closed_set(chosen):
        out = set()
        for u in chosen:
            for l in lines_of[u]:
                out.add(l)
                out.add(dual_line(cfg, l))
        return sorted(out)

    def grow(chosen, size, cand):
        nodes[0] += 1
        if nodes[0] > budget:
            raise BruteForceBudgetError("node budget exhausted")
        if size > best[0]:
            best[0], best[1] = size, tuple(chosen)
        if size + sum(len(units[i]) for i in cand) <= best[0]:
            return
        rest = list(cand)
        while rest:
            if size + sum(len(units[i]) for i in rest) <= best[0]:
                return
            v = rest.pop(0)
            nxt = chosen + [v]
            if not is_admissible(cfg, closed_set(nxt)):
                continue
            grow(
                nxt,
                size + len(units[v]),
                [u for u in rest if compatible(u, v)],
            )

    grow([], 0, list(range(n)))
    return best[0], best[1]


def brute_force_bnd(
    dec: OrbitDecomposition, oid: int, budget: int = 1 << 20
) -> BndResult:
    """Exact bound for one combinatorial orbit, with graceful fallbacks."""
    cfg = dec.cfg
    orb = dec.comb_orbits[oid]
    members = [dec.lines[i] for i in orb.members]
    if orb.self_dual:
        pos = {l: i for i, l in enumerate(members)}
        units = []
        done = set()
        for i, l in enumerate(members):
            if i in done:
                continue
            j = pos[dual_line(cfg, l)]
            done.update((i, j))
            units.append((i, j) if i != j else (i,))
    else:
        units = [(i,) for i in range(len(members))]

    try:
        size, chosen = _max_admissible(cfg, members, units, budget)
        witness = tuple(sorted(i for u in chosen for i in units[u]))
        return BndResult(size, True, "full-brute-force", witness)
    except BruteForceBudgetError:
        pass

    # fall back: fix the restriction to the first supporting component
    supp = dec.support(oid)
    if supp:
        c1 = supp[0]
        by_value = {}
        for i, l in enumerate(members):
            by_value.setdefault(l[c1], []).append(i)
        best_sub = 0
        ok = True
        for idxs in by_value.values():
            sub_units = [(i,) for i in idxs]
            try:
                size, _ = _max_admissible(cfg, members, sub_units, budget)
            except BruteForceBudgetError:
                ok = False
                break
            best_sub = max(best_sub, size)
        if ok:
            return BndResult(
                len(by_value) * best_sub, False, "block-brute-force", ()
            )

    # last resort: per-component product bound
    blocks = block_bounds(dec, oid, [(c,) for c in supp])
    bnd = product_bound([(b.cnt, b.bnd) for b in blocks])
    return BndResult(bnd, False, "naive-product", ())


# ---------------------------------------------------------------------------
# the ledger


@dataclass(frozen=True)
class LedgerRow:
    oid: int
    parent: int
    multiplicity: int
    support: tuple
    cnt: int
    bnd: int
    reason: str
    sharp: bool
    orbit_self_dual: bool
    parent_self_dual: bool


@dataclass(frozen=True)
class BoundLedger:
    config_name: str
    rows: tuple

    @property
    def bnd_total(self) -> int:
        return sum(r.bnd for r in self.rows)

    @property
    def cnt_total(self) -> int:
        return sum(r.cnt for r in self.rows)

    def defect_vs_goal(self, goal: int) -> int:
        return self.bnd_total - goal

    def to_json(self) -> str:
        data = {
            "config": self.config_name,
            "rows": [
                {
                    "orbit": r.oid,
                    "parent": r.parent,
                    "m": r.multiplicity,
                    "support": list(r.support),
                    "cnt": r.cnt,
                    "bnd": r.bnd,
                    "reason": r.reason,
                    "sharp": r.sharp,
                    "orbit_self_dual": r.orbit_self_dual,
                    "parent_self_dual": r.parent_self_dual,
                }
                for r in self.rows
            ],
            "totals": {"cnt": self.cnt_total, "bnd": self.bnd_total},
        }
        return json.dumps(data, indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(
            [
                "orbit",
                "parent",
                "m",
                "support",
                "cnt",
                "bnd",
                "reason",
                "sharp",
                "orbit_self_dual",
                "parent_self_dual",
            ]
        )
        for r in self.rows:
            w.writerow(
                [
                    r.oid,
                    r.parent,
                    r.multiplicity,
                    "-".join(str(c) for c in r.support),
                    r.cnt,
                    r.bnd,
                    r.reason,
                    int(r.sharp),
                    int(r.orbit_self_dual),
                    int(r.parent_self_dual),
                ]
            )
        return buf.getvalue()


_LEDGERS: dict = {}


def bound_ledger(cfg, budget: int = 1 << 20) -> BoundLedger:
    """Per-orbit counts and bounds for the whole universe; cached."""
    key = (cfg, budget)
    cached = _LEDGERS.get(key)
    if cached is not None:
        return cached
    dec = decompose_orbits(cfg)
    per_parent = {}
    for p in dec.parents:
        rep = p.comb_ids[0]
        res = brute_force_bnd(dec, rep, budget)
        duals = {dec.comb_orbits[o].dual for o in p.comb_ids}
        per_parent[p.pid] = (res, duals == set(p.comb_ids))
    rows = []
    for o in dec.comb_orbits:
        res, parent_sd = per_parent[o.parent]
        rows.append(
            LedgerRow(
                oid=o.oid,
                parent=o.parent,
                multiplicity=dec.parents[o.parent].multiplicity,
                support=dec.support(o.oid),
                cnt=len(o),
                bnd=res.bnd,
                reason=res.reason,
                sharp=res.sharp,
                orbit_self_dual=o.self_dual,
                parent_self_dual=parent_sd,
            )
        )
    out = BoundLedger(cfg.name or cfg.lattice.label, tuple(rows))
    _LEDGERS[key] = out
    return out
