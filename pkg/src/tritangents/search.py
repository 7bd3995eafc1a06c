"""Pattern-driven search for large geometric line sets.

A pattern prescribes how many lines of each combinatorial orbit a
candidate set may keep.  The builder walks the orbits in dual pairs,
closes the partial set under the lattice span after every step, prunes
by the hereditary necessary conditions (no root orthogonal to the
polarization in the span, rank at most 20), de-duplicates partial sets
by their least image under the reflection group, and runs the full
geometricity test only at the leaves.  Cluster search stages the same
engine over a transitive cover of the orbits with a running deficiency
budget; exceeding a node or wall-clock budget yields a typed incomplete
result, never an exception or a silent truncation.
"""

import time
from collections import Counter
from dataclasses import dataclass

from . import intlinalg as la
from . import perms
from .bounds import BoundLedger, BruteForceBudgetError, bound_ledger
from .lines import (
    coords,
    dual_line,
    geometricity,
    has_root_perp_h,
    is_saturated,
    saturate_rows,
    span_q_rows,
    span_rows,
    span_z_rows,
)
from .orbits import OrbitDecomposition


class ClusterShapeError(ValueError):
    """Cluster cover violates the constant-multiplicity requirement."""


class ExtensionHypothesisError(ValueError):
    """Second-largest-value inequality fails; use the general extender."""


@dataclass(frozen=True)
class Pattern:
    """Per-orbit line counts; zero everywhere outside the cluster."""

    values: tuple
    cluster: tuple  # sorted orbit ids the pattern constrains

    @property
    def total(self) -> int:
        return sum(self.values[o] for o in self.cluster)

    def value(self, oid: int) -> int:
        return self.values[oid]


@dataclass(frozen=True)
class FoundSet:
    indices: tuple  # sorted positions in the universe ordering
    size: int
    rank: int
    saturated: bool
    maximal: bool | None  # None = not determined
    pattern: tuple  # per-orbit counts of the finished set

    def lines(self, dec: OrbitDecomposition) -> tuple:
        return tuple(dec.lines[i] for i in self.indices)


@dataclass(frozen=True)
class SearchResult:
    found: tuple
    complete: bool
    reason: str  # "node-budget" or "time-budget" when incomplete
    nodes: int
    dedup_exact: bool

    def sizes(self) -> tuple:
        return tuple(sorted((f.size for f in self.found), reverse=True))


# ---------------------------------------------------------------------------
# per-orbit admissible subsets


_SUBSETS: dict = {}


def orbit_subsets(dec: OrbitDecomposition, oid: int) -> dict:
    """Subsets of one orbit whose dual closure is admissible, grouped by
    size.  Subsets are sorted tuples of universe indices."""
    key = (dec.cfg, oid)
    cached = _SUBSETS.get(key)
    if cached is not None:
        return cached
    cfg = dec.cfg
    orb = dec.comb_orbits[oid]
    members = list(orb.members)
    mlines = [dec.lines[i] for i in members]
    if orb.self_dual:
        # subsets of a self-dual orbit meet it in full dual pairs
        pos = {l: i for i, l in enumerate(mlines)}
        units, done = [], set()
        for i in range(len(mlines)):
            if i in done:
                continue
            j = pos[dual_line(cfg, mlines[i])]
            done.update((i, j))
            units.append((i, j) if i != j else (i,))
    else:
        units = [(i,) for i in range(len(members))]

    def admissible(chosen):
        out = set()
        for u in chosen:
            for i in u:
                out.add(mlines[i])
                out.add(dual_line(cfg, mlines[i]))
        rows = span_rows(cfg, sorted(out))
        return not has_root_perp_h(cfg, rows)

    out: dict = {0: [()]}
    stack = [((), 0)]
    while stack:
        chosen, start = stack.pop()
        for ci in range(start, len(units)):
            nxt = chosen + (units[ci],)
            if not admissible(nxt):
                continue
            idxs = tuple(sorted(members[i] for unit in nxt for i in unit))
            out.setdefault(len(idxs), []).append(idxs)
            stack.append((nxt, ci + 1))
    result = {k: tuple(sorted(v)) for k, v in out.items()}
    _SUBSETS[key] = result
    return result


def achievable_sizes(dec: OrbitDecomposition, oid: int) -> tuple:
    return tuple(sorted(orbit_subsets(dec, oid).keys()))


def free_components(cfg) -> tuple:
    """Component indices where both polarization vectors vanish."""

    def zero(comp):
        return all(x == 0 for x in comp)

    return tuple(
        k
        for k in range(len(cfg.hbar))
        if zero(cfg.hbar[k]) and zero(cfg.rbar[k])
    )


# ---------------------------------------------------------------------------
# reflection-group canonical forms


def canonical_indices(dec: OrbitDecomposition, indices, budget: int = 1 << 15):
    """Least image of a set of universe indices under the reflection
    group; returns (key, exact).  A blown orbit budget falls back to the
    sorted set itself and reports exact=False."""
    try:
        return (
            perms.min_image_set(dec.reflection_gens, indices, budget=budget),
            True,
        )
    except perms.OrbitBudgetError:
        return tuple(sorted(indices)), False


# ---------------------------------------------------------------------------
# pattern enumeration


def _dual_slots(dec: OrbitDecomposition, oids):
    """Group a dual-closed orbit id collection into dual-pair slots."""
    ids = sorted(oids)
    idset = set(ids)
    slots, done = [], set()
    for o in ids:
        if o in done:
            continue
        d = dec.comb_orbits[o].dual
        if d not in idset:
            raise ValueError("orbit collection is not closed under duality")
        done.update((o, d))
        slots.append((o,) if d == o else (o, d))
    return slots


def _slot_perm_gens(dec, maps, slots):
    """Permutations of the slot list induced by the orbit maps that fix
    the slot set, reduced to a small generating set."""
    pos = {}
    for i, slot in enumerate(slots):
        for o in slot:
            pos[o] = i
    induced = set()
    for m in maps:
        img = [0] * len(slots)
        ok = True
        for i, slot in enumerate(slots):
            j = pos.get(m[slot[0]])
            if j is None:
                ok = False
                break
            img[i] = j
        if ok:
            induced.add(tuple(img))
    gens: list = []
    have = {perms.identity(len(slots))}
    for p in sorted(induced):
        if p in have:
            continue
        gens.append(p)
        have = set(perms.group_closure(gens))
        if len(have) == len(induced):
            break
    return tuple(gens)


def enumerate_patterns(
    dec: OrbitDecomposition,
    cluster_ids,
    d: int,
    ledger: BoundLedger | None = None,
    maps=None,
) -> tuple:
    """Star-invariant patterns on the cluster whose total is at least
    bnd(cluster) - d, one representative per class under the given orbit
    permutations (none by default: every pattern is its own class)."""
    cluster_ids = tuple(sorted(cluster_ids))
    if d < 0:
        return ()
    if ledger is None:
        ledger = bound_ledger(dec.cfg)
    bnd_of = {r.oid: r.bnd for r in ledger.rows}
    slots = _dual_slots(dec, cluster_ids)
    threshold = sum(bnd_of[o] for o in cluster_ids) - d
    sizes = {}
    for slot in slots:
        s0 = achievable_sizes(dec, slot[0])
        for o in slot[1:]:
            assert achievable_sizes(dec, o) == s0, (
                "dual orbits must admit the same subset sizes"
            )
        sizes[slot] = tuple(sorted(s0, reverse=True))
        assert sizes[slot][0] <= bnd_of[slot[0]]
    suffix = [0] * (len(slots) + 1)
    for i in range(len(slots) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + len(slots[i]) * sizes[slots[i]][0]

    gens = _slot_perm_gens(dec, maps, slots) if maps else ()

    n_orb = len(dec.comb_orbits)
    raw = []

    def rec(i, acc, total):
        if total + suffix[i] < threshold:
            return
        if i == len(slots):
            raw.append(tuple(acc))
            return
        for s in sizes[slots[i]]:
            rec(i + 1, acc + [s], total + len(slots[i]) * s)

    rec(0, [], 0)

    visited = set()
    reps = []
    for acc in raw:
        if acc in visited:
            continue
        # mark the whole symmetry orbit, keep its least member
        best = acc
        frontier = [acc]
        visited.add(acc)
        while frontier:
            cur = frontier.pop()
            for g in gens:
                img = [0] * len(cur)
                for i, v in enumerate(cur):
                    img[g[i]] = v
                t = tuple(img)
                if t not in visited:
                    visited.add(t)
                    frontier.append(t)
                    if t < best:
                        best = t
        reps.append(best)

    out = []
    for acc in sorted(set(reps)):
        values = [0] * n_orb
        for slot, s in zip(slots, acc):
            for o in slot:
                values[o] = s
        out.append(Pattern(values=tuple(values), cluster=cluster_ids))
    return tuple(sorted(out, key=lambda p: (-p.total, p.values)))


# ---------------------------------------------------------------------------
# span closure of partial sets

# The span of a partial set is carried through the recursion as a raw
# Hermite basis (polarization row included) and grown incrementally;
# only the small grown basis gets saturated.  The closure never leaves
# the universe, so it is read off by membership scans instead of a
# short-vector enumeration.

_CLOSE_CACHE: dict = {}
_UCOORDS: dict = {}


def _ucoords(dec: OrbitDecomposition):
    cached = _UCOORDS.get(dec.cfg)
    if cached is None:
        cached = tuple(coords(dec.cfg, l) for l in dec.lines)
        _UCOORDS[dec.cfg] = cached
    return cached


def _base_rows(dec: OrbitDecomposition):
    """Span basis of the empty set: the polarization alone."""
    return span_z_rows(dec.cfg, ())


def _zrows_of(dec: OrbitDecomposition, indices):
    uc = _ucoords(dec)
    span = la.IntRowSpan(24, [list(r) for r in _base_rows(dec)])
    for i in sorted(indices):
        span.add(uc[i])
    return tuple(tuple(r) for r in span.basis())


def _extend_closed(dec: OrbitDecomposition, zrows, add, committed, max_rank=20):
    """Grow the raw span basis by the added universe indices and close.

    Returns (closed index frozenset, grown basis) or None when the span
    exceeds the rank cap, its saturation contains a root orthogonal to
    the polarization, or a committed per-orbit count breaks."""
    cfg = dec.cfg
    uc = _ucoords(dec)
    span = la.IntRowSpan(24, [list(r) for r in zrows])
    for i in sorted(add):
        span.add(uc[i])
        if span.rank > max_rank:
            return None
    zr = tuple(tuple(r) for r in span.basis())
    key = (cfg, zr)
    closed = _CLOSE_CACHE.get(key)
    if closed is None:
        sat = saturate_rows(zr)
        if has_root_perp_h(cfg, sat):
            closed = ()
        else:
            mspan = la.IntRowSpan(24, [list(r) for r in sat])
            closed = frozenset(
                i for i, c in enumerate(uc) if mspan.contains(c)
            )
        _CLOSE_CACHE[key] = closed
    if closed == ():
        return None
    got = Counter(dec.orbit_of_line[i] for i in closed)
    for oid, need in committed.items():
        if got.get(oid, 0) != need:
            return None
    return closed, zr


def _leaf_found(dec: OrbitDecomposition, idx_set) -> FoundSet | None:
    lines = [dec.lines[i] for i in sorted(idx_set)]
    rep = geometricity(dec.cfg, lines)
    if not rep.geometric:
        return None
    sat = is_saturated(dec.cfg, lines)
    counts = Counter(dec.orbit_of_line[i] for i in idx_set)
    return FoundSet(
        indices=tuple(sorted(idx_set)),
        size=len(idx_set),
        rank=rep.rank,
        saturated=sat,
        maximal=True if (rep.rank == 20 and sat) else None,
        pattern=tuple(counts.get(o, 0) for o in range(len(dec.comb_orbits))),
    )


class _Budget:
    def __init__(self, node_budget, time_budget):
        self.nodes = 0
        self.node_budget = node_budget
        self.deadline = (
            time.monotonic() + time_budget
            if time_budget is not None
            else None
        )
        self.exceeded = ""

    def tick(self) -> bool:
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            self.exceeded = "node-budget"
            return False
        if self.deadline is not None and time.monotonic() > self.deadline:
            self.exceeded = "time-budget"
            return False
        return True


def _mirror(dec: OrbitDecomposition, sub):
    return {dec.index[dual_line(dec.cfg, dec.lines[i])] for i in sub}


def _slot_candidates(dec, slot, need, idx_set):
    """Size-`need` subsets of the slot's first orbit containing whatever
    the closure has already forced into the slot."""
    o = slot[0]
    forced = {i for i in idx_set if dec.orbit_of_line[i] == o}
    if len(slot) == 2:
        forced |= _mirror(
            dec, (i for i in idx_set if dec.orbit_of_line[i] == slot[1])
        )
    if len(forced) > need:
        return
    for sub in orbit_subsets(dec, o).get(need, ()):
        if forced <= set(sub):
            yield sub


def _pattern_dfs(dec, pattern, budget, dedup_budget, flags, emit):
    """Walk the pattern's dual-pair slots in decreasing value order and
    call emit(closed_index_set, span_basis) for every closed set
    realizing it."""
    slots = [
        s
        for s in _dual_slots(dec, pattern.cluster)
        if pattern.value(s[0]) > 0
    ]
    slots.sort(key=lambda s: (-pattern.value(s[0]), s[0]))
    zeros = {o: 0 for o in pattern.cluster if pattern.value(o) == 0}

    def rec(level, idx_set, zrows):
        if flags["incomplete"]:
            return
        if level == len(slots):
            emit(idx_set, zrows)
            return
        slot = slots[level]
        need = pattern.value(slot[0])
        done = dict(zeros)
        for s in slots[: level + 1]:
            for o in s:
                done[o] = pattern.value(o)
        seen = set()
        for sub in _slot_candidates(dec, slot, need, idx_set):
            if not budget.tick():
                flags["incomplete"] = budget.exceeded
                return
            add = set(sub)
            if len(slot) == 2:
                add |= _mirror(dec, sub)
            grown = _extend_closed(dec, zrows, add, done)
            if grown is None:
                continue
            closed, zr = grown
            key, exact = canonical_indices(dec, closed, budget=dedup_budget)
            if not exact:
                flags["dedup_exact"] = False
            if key in seen:
                continue
            seen.add(key)
            rec(level + 1, closed, zr)

    if slots:
        rec(0, frozenset(), _base_rows(dec))
    else:
        emit(frozenset(), _base_rows(dec))


def build_from_pattern(
    dec: OrbitDecomposition,
    pattern: Pattern,
    node_budget: int | None = 1 << 16,
    time_budget: float | None = None,
    dedup_budget: int = 1 << 15,
) -> SearchResult:
    """All complete geometric sets realizing the pattern, one per
    reflection class."""
    budget = _Budget(node_budget, time_budget)
    flags = {"incomplete": "", "dedup_exact": True}
    hits: dict = {}

    def emit(idx_set, _zrows):
        counts = Counter(dec.orbit_of_line[i] for i in idx_set)
        if any(
            counts.get(o, 0) != pattern.value(o) for o in pattern.cluster
        ):
            return
        key, exact = canonical_indices(dec, idx_set)
        if not exact:
            flags["dedup_exact"] = False
        if key in hits:
            return
        hits[key] = _leaf_found(dec, idx_set)  # cache misses too

    _pattern_dfs(dec, pattern, budget, dedup_budget, flags, emit)
    out = tuple(
        sorted(
            (f for f in hits.values() if f is not None),
            key=lambda f: f.indices,
        )
    )
    return SearchResult(
        found=out,
        complete=not flags["incomplete"],
        reason=flags["incomplete"],
        nodes=budget.nodes,
        dedup_exact=flags["dedup_exact"],
    )


def full_search(
    dec: OrbitDecomposition,
    d: int,
    node_budget: int | None = 1 << 18,
    time_budget: float | None = None,
    dedup_budget: int = 1 << 15,
    maps=None,
    ledger: BoundLedger | None = None,
) -> SearchResult:
    """Union of the pattern searches over every pattern with defect at
    most d on the full orbit set."""
    all_ids = tuple(range(len(dec.comb_orbits)))
    patterns = enumerate_patterns(dec, all_ids, d, ledger=ledger, maps=maps)
    budget = _Budget(node_budget, time_budget)
    hits: dict = {}
    dedup_exact = True
    reason = ""
    for pat in patterns:
        left = (
            None if node_budget is None else max(1, node_budget - budget.nodes)
        )
        tleft = (
            None
            if budget.deadline is None
            else max(0.01, budget.deadline - time.monotonic())
        )
        res = build_from_pattern(
            dec,
            pat,
            node_budget=left,
            time_budget=tleft,
            dedup_budget=dedup_budget,
        )
        budget.nodes += res.nodes
        dedup_exact = dedup_exact and res.dedup_exact
        for f in res.found:
            hits.setdefault(f.indices, f)
        if not res.complete:
            reason = res.reason
            break
    out = tuple(sorted(hits.values(), key=lambda f: f.indices))
    return SearchResult(
        found=out,
        complete=not reason,
        reason=reason,
        nodes=budget.nodes,
        dedup_exact=dedup_exact,
    )


# ---------------------------------------------------------------------------
# cluster-staged search


def clusters_by_support_point(dec: OrbitDecomposition, points) -> tuple:
    """One cluster per marked component: the orbits supported there."""
    return tuple(
        tuple(o.oid for o in dec.comb_orbits if k in dec.support(o.oid))
        for k in points
    )


def _validate_clusters(dec: OrbitDecomposition, clusters):
    counts = Counter()
    for c in clusters:
        for o in c:
            counts[o] += 1
    mult = set(counts.values())
    if len(mult) != 1:
        raise ClusterShapeError(
            "every covered orbit must lie in the same number of clusters"
        )
    return mult.pop()


def cluster_search(
    dec: OrbitDecomposition,
    clusters,
    d: int,
    goal: int = 0,
    node_budget: int | None = 1 << 18,
    time_budget: float | None = None,
    dedup_budget: int = 1 << 15,
    ledger: BoundLedger | None = None,
    maps=None,
) -> SearchResult:
    """Stage the pattern search over a transitive cluster cover.

    The total deficiency budget m*d is spread over the n clusters: the
    first cluster (the largest intersection, up to symmetry) misses at
    most floor(m*d/n); every unprocessed cluster must still absorb at
    least the first cluster's deficiency, and that reservation bounds
    what each later cluster may miss.  Clusters are processed in a fixed
    order, so only order-free inequalities are used."""
    cfg = dec.cfg
    clusters = tuple(tuple(sorted(c)) for c in clusters)
    m = _validate_clusters(dec, clusters)
    n = len(clusters)
    if ledger is None:
        ledger = bound_ledger(cfg)
    bnd_of = {r.oid: r.bnd for r in ledger.rows}
    cluster_bnd = {sum(bnd_of[o] for o in c) for c in clusters}
    assert len(cluster_bnd) == 1, (
        "a transitive cluster cover must have equal cluster bounds"
    )
    cbnd = cluster_bnd.pop()
    total_budget = m * d
    first_lo = cbnd - total_budget // n
    covered = {o for c in clusters for o in c}

    budget = _Budget(node_budget, time_budget)
    flags = {"incomplete": "", "dedup_exact": True}
    found: dict = {}

    def upper_reach(idx_set, committed):
        loose = sum(bnd_of[o] for o in covered if o not in committed)
        return len(idx_set) + loose

    def rec_cluster(ci, idx_set, zrows, committed, used, first_total):
        if flags["incomplete"] or used > total_budget:
            return
        if upper_reach(idx_set, committed) < goal:
            return
        if ci == n:
            if len(idx_set) < goal:
                return
            key, exact = canonical_indices(dec, idx_set, budget=dedup_budget)
            if not exact:
                flags["dedup_exact"] = False
            if key not in found:
                found[key] = _leaf_found(dec, idx_set)
            return
        c = clusters[ci]
        dmin = cbnd - first_total
        lo = cbnd - (total_budget - used - (n - 1 - ci) * dmin)
        hi = first_total
        fixed = sum(committed[o] for o in c if o in committed)
        free = _dual_slots(dec, [o for o in c if o not in committed])
        free.sort(key=lambda s: s[0])
        sizes = {
            s: tuple(sorted(achievable_sizes(dec, s[0]), reverse=True))
            for s in free
        }
        sufmax = [0] * (len(free) + 1)
        for i in range(len(free) - 1, -1, -1):
            sufmax[i] = sufmax[i + 1] + len(free[i]) * sizes[free[i]][0]

        def rec_slot(fi, idx, zr, com, run):
            if flags["incomplete"]:
                return
            if fixed + run + sufmax[fi] < lo or fixed + run > hi:
                return
            if fi == len(free):
                total = fixed + run
                rec_cluster(
                    ci + 1, idx, zr, com, used + cbnd - total, first_total
                )
                return
            slot = free[fi]
            seen = set()
            for s in sizes[slot]:
                for sub in _slot_candidates(dec, slot, s, idx):
                    if not budget.tick():
                        flags["incomplete"] = budget.exceeded
                        return
                    add = set(sub)
                    if len(slot) == 2:
                        add |= _mirror(dec, sub)
                    nc = dict(com)
                    for o in slot:
                        nc[o] = s
                    grown = _extend_closed(dec, zr, add, nc)
                    if grown is None:
                        continue
                    closed, nzr = grown
                    key, exact = canonical_indices(
                        dec, closed, budget=dedup_budget
                    )
                    if not exact:
                        flags["dedup_exact"] = False
                    if (s, key) in seen:
                        continue
                    seen.add((s, key))
                    rec_slot(fi + 1, closed, nzr, nc, run + len(slot) * s)

        rec_slot(0, idx_set, zrows, committed, 0)

    # seed: patterns on the first cluster, taken up to its stabilizer
    c0 = clusters[0]
    pats = enumerate_patterns(dec, c0, cbnd - first_lo, ledger=ledger, maps=maps)
    for pat in pats:
        if flags["incomplete"]:
            break
        seeds = []

        def emit(idx_set, zrows, _pat=pat, _seeds=seeds):
            counts = Counter(dec.orbit_of_line[i] for i in idx_set)
            if all(counts.get(o, 0) == _pat.value(o) for o in _pat.cluster):
                _seeds.append((idx_set, zrows))

        _pattern_dfs(dec, pat, budget, dedup_budget, flags, emit)
        committed = {o: pat.value(o) for o in pat.cluster}
        for idx_set, zrows in seeds:
            rec_cluster(
                1, idx_set, zrows, committed, cbnd - pat.total, pat.total
            )

    out = tuple(
        sorted(
            (f for f in found.values() if f is not None),
            key=lambda f: f.indices,
        )
    )
    return SearchResult(
        found=out,
        complete=not flags["incomplete"],
        reason=flags["incomplete"],
        nodes=budget.nodes,
        dedup_exact=flags["dedup_exact"],
    )


# ---------------------------------------------------------------------------
# extension strategies


def second_largest_size(dec: OrbitDecomposition, oid: int) -> int:
    sizes = achievable_sizes(dec, oid)
    return sizes[-2] if len(sizes) >= 2 else 0


def extend_by_maximal_orbit(
    dec: OrbitDecomposition,
    indices,
    cluster_ids,
    goal: int,
    ledger: BoundLedger | None = None,
    node_budget: int = 1 << 16,
) -> tuple:
    """One-step extensions raising some deficient orbit outside the
    cluster to its bound, keeping the cluster intersection fixed.

    Sound when the deficiency slack (sum over deficient orbits of the
    bound minus the second-largest achievable size) covers the distance
    from the naive bound to the goal; otherwise raises, and the general
    extender applies."""
    cfg = dec.cfg
    if ledger is None:
        ledger = bound_ledger(cfg)
    bnd_of = {r.oid: r.bnd for r in ledger.rows}
    idx_set = frozenset(indices)
    per_orbit = Counter(dec.orbit_of_line[i] for i in idx_set)
    deficient = [
        o
        for o in range(len(dec.comb_orbits))
        if per_orbit.get(o, 0) < bnd_of[o]
    ]
    slack = sum(bnd_of[o] - second_largest_size(dec, o) for o in deficient)
    if slack < ledger.bnd_total - goal:
        raise ExtensionHypothesisError(
            "deficiency slack %d below required %d"
            % (slack, ledger.bnd_total - goal)
        )
    cluster = set(cluster_ids)
    base_cluster = {i for i in idx_set if dec.orbit_of_line[i] in cluster}
    budget = _Budget(node_budget, None)
    zrows0 = _zrows_of(dec, idx_set)
    results: dict = {}
    for o in deficient:
        if o in cluster:
            continue  # extensions must be proper over the cluster
        slot = (
            (o,)
            if dec.comb_orbits[o].self_dual
            else (o, dec.comb_orbits[o].dual)
        )
        for sub in _slot_candidates(dec, slot, bnd_of[o], idx_set):
            if not budget.tick():
                raise BruteForceBudgetError("extension node budget exhausted")
            add = set(sub)
            if len(slot) == 2:
                add |= _mirror(dec, sub)
            grown = _extend_closed(dec, zrows0, add, {})
            if grown is None:
                continue
            closed, _ = grown
            if {
                i for i in closed if dec.orbit_of_line[i] in cluster
            } != base_cluster:
                continue
            if not idx_set < closed:
                continue
            leaf = _leaf_found(dec, closed)
            if leaf is None:
                continue
            key, _ = canonical_indices(dec, closed)
            results.setdefault(key, leaf)
    return tuple(sorted(results.values(), key=lambda f: f.indices))


def extend_general(
    dec: OrbitDecomposition,
    indices,
    max_extra_lines: int,
) -> tuple:
    """Geometric extensions by at most the given number of extra lines
    (closing afterwards).  Rank-20 inputs draw candidates from the
    rational span only; adding zero lines returns the input unchanged."""
    cfg = dec.cfg
    idx_set = frozenset(indices)
    base = [dec.lines[i] for i in sorted(idx_set)]
    rows = span_rows(cfg, base)
    rank = len(rows)
    sat = is_saturated(cfg, base) if base else True
    counts = Counter(dec.orbit_of_line[i] for i in idx_set)
    self_found = FoundSet(
        indices=tuple(sorted(idx_set)),
        size=len(idx_set),
        rank=rank,
        saturated=sat,
        maximal=True if (rank == 20 and sat) else None,
        pattern=tuple(counts.get(o, 0) for o in range(len(dec.comb_orbits))),
    )
    if max_extra_lines == 0:
        return (self_found,)
    if rank == 20:
        qspan = la.IntRowSpan(24, [list(r) for r in span_q_rows(cfg, base)])
        cands = {
            i for i, c in enumerate(_ucoords(dec)) if qspan.contains(c)
        } - idx_set
    else:
        cands = set(range(len(dec.lines))) - idx_set
    # a symmetric extension adds whole dual pairs
    pairs, done = [], set()
    for i in sorted(cands):
        if i in done:
            continue
        j = dec.index[dual_line(cfg, dec.lines[i])]
        if j in cands and j != i:
            done.update((i, j))
            pairs.append((i, j) if i < j else (j, i))
    from itertools import combinations

    zrows0 = _zrows_of(dec, idx_set)
    out: dict = {canonical_indices(dec, idx_set)[0]: self_found}
    for k in range(1, max_extra_lines // 2 + 1):
        for combo in combinations(pairs, k):
            add = set()
            for i, j in combo:
                add.update((i, j))
            grown = _extend_closed(dec, zrows0, add, {})
            if grown is None:
                continue
            closed, _ = grown
            leaf = _leaf_found(dec, closed)
            if leaf is None:
                continue
            key, _ = canonical_indices(dec, closed)
            out.setdefault(key, leaf)
    return tuple(sorted(out.values(), key=lambda f: f.indices))


def pattern_of_set(dec: OrbitDecomposition, indices) -> Pattern:
    counts = Counter(dec.orbit_of_line[i] for i in indices)
    return Pattern(
        values=tuple(counts.get(o, 0) for o in range(len(dec.comb_orbits))),
        cluster=tuple(range(len(dec.comb_orbits))),
    )
