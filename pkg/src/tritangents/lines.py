"""Line universes over a polarized 24-dimensional glued lattice.

A polarization is a vector hbar of square 6; lines are lattice vectors l
with l*l = 4 and l*hbar = 3.  An optional root rbar orthogonal to hbar
cuts the universe down to the lines orthogonal to it.  Everything here
is exact: vectors are tuples of per-component numerator tuples, span
computations run over integer matrices in the 24-dimensional basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import intlinalg as la
from .lattice import ExactLattice, GeometricityReport, geometricity_check
from .niemeier import NiemeierLattice


class ConfigError(ValueError):
    pass


class ExtensionBudgetError(RuntimeError):
    """Raised when the overlattice enumeration exceeds its cap."""


@dataclass(frozen=True)
class PolarizedConfig:
    lattice: NiemeierLattice
    hbar: tuple
    rbar: tuple | None = None
    name: str = ""

    def __post_init__(self):
        n = self.lattice
        if not n.contains(self.hbar):
            raise ConfigError("polarization is not a lattice vector")
        if n.inner(self.hbar, self.hbar) != 6:
            raise ConfigError("polarization must have square 6")
        if self.rbar is not None:
            if not n.contains(self.rbar):
                raise ConfigError("marked root is not a lattice vector")
            if n.inner(self.rbar, self.rbar) != 2:
                raise ConfigError("marked root must have square 2")
            if n.inner(self.hbar, self.rbar) != 0:
                raise ConfigError("marked root must be orthogonal")


_DATA: dict = {}
_UNIVERSE: dict = {}


def _cfg_data(cfg: PolarizedConfig) -> dict:
    d = _DATA.get(cfg)
    if d is not None:
        return d
    n = cfg.lattice
    rk = n.rank
    hc = n.coords(cfg.hbar)
    ghb = [sum(n.gram[i][j] * hc[j] for j in range(rk)) for i in range(rk)]
    d = {"hcoords": hc, "ghb": tuple(ghb)}
    if cfg.rbar is not None:
        rc = n.coords(cfg.rbar)
        d["rcoords"] = rc
        d["grb"] = tuple(
            sum(n.gram[i][j] * rc[j] for j in range(rk)) for i in range(rk)
        )
    _DATA[cfg] = d
    return d


def coords(cfg: PolarizedConfig, v) -> tuple[int, ...]:
    return cfg.lattice.coords(v)


def product(cfg: PolarizedConfig, u, v) -> int:
    p = cfg.lattice.inner(u, v)
    if p.denominator != 1:
        raise ValueError("non-integral product of lattice vectors")
    return p.numerator


def dual_line(cfg: PolarizedConfig, line):
    return cfg.lattice.sub(cfg.hbar, line)


# ---------------------------------------------------------------------------
# universe enumeration: meet over glue words with exact integer pruning


def line_universe(cfg: PolarizedConfig):
    """All lines of the configuration, sorted; cached per config."""
    cached = _UNIVERSE.get(cfg)
    if cached is not None:
        return cached
    n = cfg.lattice
    systems = n.systems
    m = len(systems)
    scale = lcm(*(s.den * s.den for s in systems))
    hparts = list(cfg.hbar)
    rparts = list(cfg.rbar) if cfg.rbar is not None else None

    def sc(x: Fraction) -> int:
        v = x * scale
        assert v.denominator == 1
        return v.numerator

    h2 = [sc(s.inner(h, h)) for s, h in zip(systems, hparts)]
    r2 = (
        [sc(s.inner(r, r)) for s, r in zip(systems, rparts)]
        if rparts
        else [0] * m
    )
    minn = [
        [sc(s.min_class_norm(k)) for k in range(s.discr_size)]
        for s in systems
    ]
    budget = 4 * scale
    target_h = 3 * scale

    menus: list[dict] = [dict() for _ in range(m)]

    def menu(i: int, k: int):
        got = menus[i].get(k)
        if got is None:
            s = systems[i]
            vecs = s.dual_vectors(4).get(k, ())
            got = []
            for v in vecs:
                got.append(
                    (
                        sc(s.inner(v, v)),
                        sc(s.inner(v, hparts[i])),
                        sc(s.inner(v, rparts[i])) if rparts else 0,
                        v,
                    )
                )
            got.sort()
            menus[i][k] = got
        return got

    out = []
    for word in sorted(n.glue_words):
        if sum(minn[i][k] for i, k in enumerate(word)) > budget:
            continue
        order = sorted(range(m), key=lambda i: (word[i] == 0, i))
        suf_min = [0] * (m + 1)
        suf_h2 = [0] * (m + 1)
        suf_r2 = [0] * (m + 1)
        for t in range(m - 1, -1, -1):
            i = order[t]
            suf_min[t] = suf_min[t + 1] + minn[i][word[i]]
            suf_h2[t] = suf_h2[t + 1] + h2[i]
            suf_r2[t] = suf_r2[t + 1] + r2[i]
        chosen: list = [None] * m

        def rec(t: int, accn: int, acch: int, accr: int):
            if t == m:
                if accn == budget and acch == target_h and accr == 0:
                    parts = [None] * m
                    for u in range(m):
                        parts[order[u]] = chosen[u]
                    out.append(tuple(parts))
                return
            rem = budget - accn
            if suf_min[t] > rem:
                return
            dh = target_h - acch
            if dh * dh > rem * suf_h2[t]:
                return
            if accr * accr > rem * suf_r2[t]:
                return
            i = order[t]
            tail = suf_min[t + 1]
            for nv, dhv, drv, vec in menu(i, word[i]):
                if accn + nv + tail > budget:
                    break
                chosen[t] = vec
                rec(t + 1, accn + nv, acch + dhv, accr + drv)

        rec(0, 0, 0, 0)
    result = tuple(sorted(out))
    _UNIVERSE[cfg] = result
    return result


# ---------------------------------------------------------------------------
# spans


def span_z_rows(cfg: PolarizedConfig, lines):
    rows = [list(_cfg_data(cfg)["hcoords"])]
    for l in lines:
        rows.append(list(coords(cfg, l)))
    return tuple(tuple(r) for r in la.hnf(rows))


def _saturate(rows, keep_three: bool):
    mat = [list(r) for r in rows]
    r = len(mat)
    u, d, v = la.snf_with_transforms(mat)
    vinv = la.int_matrix_inverse(v)
    out = []
    for i in range(r):
        di = d[i][i]
        assert di != 0
        f = 1
        if keep_three:
            while di % 3 == 0:
                f *= 3
                di //= 3
        out.append([f * x for x in vinv[i]])
    return tuple(tuple(q) for q in la.hnf(out))


def span_rows(cfg: PolarizedConfig, lines):
    """Basis of the span saturated away from 3."""
    return _saturate(span_z_rows(cfg, lines), keep_three=True)


def saturate_rows(rows):
    """Saturate an integer row basis away from 3."""
    return _saturate(tuple(rows), keep_three=True)


def span_q_rows(cfg: PolarizedConfig, lines):
    """Basis of the primitive (fully saturated) span."""
    return _saturate(span_z_rows(cfg, lines), keep_three=False)


def sub_gram(cfg: PolarizedConfig, rows):
    g = cfg.lattice.gram
    rk = cfg.lattice.rank
    gr = [
        [sum(g[a][b] * row[b] for b in range(rk)) for a in range(rk)]
        for row in rows
    ]
    return [
        [sum(r1[a] * r2[a] for a in range(rk)) for r2 in rows] for r1 in gr
    ]


def _hvec(cfg: PolarizedConfig, rows):
    ghb = _cfg_data(cfg)["ghb"]
    return [
        sum(row[a] * ghb[a] for a in range(len(ghb))) for row in rows
    ]


def has_root_perp_h(cfg: PolarizedConfig, rows) -> bool:
    """Does the sublattice contain a square-2 vector orthogonal to hbar?"""
    hv = _hvec(cfg, rows)
    ker = la.kernel_int([[x] for x in hv])
    if not ker:
        return False
    gram = sub_gram(cfg, rows)
    kgram = [
        [
            sum(
                y1[a] * gram[a][b] * y2[b]
                for a in range(len(rows))
                for b in range(len(rows))
            )
            for y2 in ker
        ]
        for y1 in ker
    ]
    return la.has_vector_of_norm(kgram, 2)


def is_symmetric(cfg: PolarizedConfig, lines) -> bool:
    s = set(lines)
    return all(dual_line(cfg, l) in s for l in s)


def pair_products_ok(cfg: PolarizedConfig, lines) -> bool:
    ls = sorted(set(lines))
    for i, a in enumerate(ls):
        for b in ls[i + 1:]:
            if product(cfg, a, b) not in (-1, 1, 2):
                return False
    return True


def is_admissible(cfg: PolarizedConfig, lines) -> bool:
    if not is_symmetric(cfg, lines):
        return False
    return not has_root_perp_h(cfg, span_rows(cfg, lines))


def lines_in_span(cfg: PolarizedConfig, rows):
    """All universe-independent lines lying in the given sublattice."""
    if not rows:
        return ()
    gram = sub_gram(cfg, rows)
    hv = _hvec(cfg, rows)
    n = cfg.lattice
    r = len(rows)
    out = []
    for x in la.vectors_of_norm(gram, 4):
        d = sum(x[i] * hv[i] for i in range(r))
        if d == 3:
            pick = x
        elif d == -3:
            pick = [-c for c in x]
        else:
            continue
        nc = tuple(
            sum(pick[i] * rows[i][a] for i in range(r)) for a in range(24)
        )
        out.append(n.vector_from_coords(nc))
    return tuple(sorted(out))


def closure(cfg: PolarizedConfig, lines):
    """Lines of the lattice spanned by the set (and the polarization)."""
    return lines_in_span(cfg, span_rows(cfg, lines))


def closure_q(cfg: PolarizedConfig, lines):
    return lines_in_span(cfg, span_q_rows(cfg, lines))


def is_complete(cfg: PolarizedConfig, lines) -> bool:
    return len(closure(cfg, lines)) == len(set(lines))


def is_q_complete(cfg: PolarizedConfig, lines) -> bool:
    return len(closure_q(cfg, lines)) == len(set(lines))


# ---------------------------------------------------------------------------
# mild extensions: index-3-power overlattices inside N keeping
# hbar divisible by 3 in the dual and acquiring no roots


@dataclass(frozen=True)
class MildExtension:
    rows: tuple
    gram: tuple
    index3: int

    def discr(self):
        return ExactLattice([list(r) for r in self.gram]).discriminant_form()


def _echelon_reduce(rows, x):
    x = list(x)
    for row in rows:
        piv = next((c for c, e in enumerate(row) if e), None)
        if piv is None:
            continue
        q = x[piv] // row[piv]
        if q:
            for c in range(len(x)):
                x[c] -= q * row[c]
    return tuple(x)


def mild_extensions(cfg: PolarizedConfig, lines, cap: int = 729):
    spn = span_rows(cfg, lines)
    r = len(spn)
    satq = span_q_rows(cfg, lines)
    fvals = _hvec(cfg, satq)
    if all(f % 3 == 0 for f in fvals):
        krows = satq
    else:
        ker = la.kernel_int([[f] for f in fvals] + [[3]])
        yparts = [row[:r] for row in ker]
        prod = [
            [
                sum(y[i] * satq[i][a] for i in range(r))
                for a in range(24)
            ]
            for y in yparts
        ]
        krows = tuple(tuple(q) for q in la.hnf(prod))
        assert len(krows) == r
    # spn in K-coordinates
    ktrans = la.transpose([list(q) for q in krows])
    mrows = []
    for row in spn:
        sol = la.solve_rational(ktrans, list(row))
        assert sol is not None and all(c.denominator == 1 for c in sol)
        mrows.append([c.numerator for c in sol])
    idx = abs(la.bareiss_det(mrows))
    t = idx
    while t % 3 == 0:
        t //= 3
    assert t == 1, "saturation quotient must be a 3-group"
    hm = la.hnf(mrows)
    if idx > cap:
        raise ExtensionBudgetError(
            f"overlattice quotient of order {idx} exceeds cap {cap}"
        )
    # all elements of the quotient K/spn
    elems = {tuple([0] * r)}
    frontier = list(elems)
    while frontier:
        nxt = []
        for e in frontier:
            for i in range(r):
                for dlt in (1, -1):
                    cand = list(e)
                    cand[i] += dlt
                    red = _echelon_reduce(hm, cand)
                    if red not in elems:
                        elems.add(red)
                        nxt.append(red)
        frontier = nxt
        if len(elems) > idx:
            raise AssertionError("quotient enumeration overflow")
    assert len(elems) == idx
    # all subgroups of the quotient
    subgroups = {frozenset({tuple([0] * r)})}
    frontier2 = list(subgroups)
    while frontier2:
        nxt2 = []
        for sg in frontier2:
            for e in elems:
                if e in sg:
                    continue
                new = set(sg)
                queue = [e]
                while queue:
                    t = queue.pop()
                    if t in new:
                        continue
                    new.add(t)
                    for u in list(new):
                        s2 = _echelon_reduce(
                            hm, [a + b for a, b in zip(t, u)]
                        )
                        if s2 not in new:
                            queue.append(s2)
                key = frozenset(new)
                if key not in subgroups:
                    subgroups.add(key)
                    nxt2.append(key)
        frontier2 = nxt2
    out = []
    seen = set()
    for sg in subgroups:
        rows = [list(q) for q in spn]
        for e in sg:
            rows.append(
                [
                    sum(e[i] * krows[i][a] for i in range(r))
                    for a in range(24)
                ]
            )
        srows = tuple(tuple(q) for q in la.hnf(rows))
        if srows in seen:
            continue
        seen.add(srows)
        if has_root_perp_h(cfg, srows):
            continue
        gram = sub_gram(cfg, srows)
        dspn = abs(la.bareiss_det(sub_gram(cfg, spn)))
        dS = abs(la.bareiss_det(gram))
        assert dspn % dS == 0
        isq = dspn // dS
        i3 = la.sqrt_floor(isq)
        assert i3 * i3 == isq
        out.append(
            MildExtension(
                rows=srows,
                gram=tuple(tuple(x) for x in gram),
                index3=i3,
            )
        )
    out.sort(key=lambda s: (s.index3, s.rows))
    return out


def is_saturated(cfg: PolarizedConfig, lines, cap: int = 729) -> bool:
    n = len(set(lines))
    for ext in mild_extensions(cfg, lines, cap=cap):
        if len(lines_in_span(cfg, ext.rows)) != n:
            return False
    return True


# ---------------------------------------------------------------------------
# geometricity


@dataclass(frozen=True)
class ExtensionVerdict:
    index3: int
    complete: bool
    conditions: GeometricityReport | None


@dataclass(frozen=True)
class GeometryReport:
    admissible: bool
    rank: int
    rank_ok: bool
    verdicts: tuple
    geometric: bool
    models: tuple


def geometricity(cfg: PolarizedConfig, lines, cap: int = 729):
    """Full decision: admissible, rank at most 20, and some mild
    extension where the set is complete passes the arithmetic tests."""
    admissible = is_admissible(cfg, lines)
    spn = span_rows(cfg, lines)
    rank = len(spn)
    rank_ok = rank <= 20
    if not admissible or not rank_ok:
        return GeometryReport(
            admissible=admissible,
            rank=rank,
            rank_ok=rank_ok,
            verdicts=(),
            geometric=False,
            models=(),
        )
    n_lines = len(set(lines))
    verdicts = []
    models = []
    for ext in mild_extensions(cfg, lines, cap=cap):
        complete = len(lines_in_span(cfg, ext.rows)) == n_lines
        conds = None
        if complete:
            conds = geometricity_check(ext.discr(), rank)
            if conds.overall:
                models.append(ext)
        verdicts.append(
            ExtensionVerdict(
                index3=ext.index3, complete=complete, conditions=conds
            )
        )
    return GeometryReport(
        admissible=admissible,
        rank=rank,
        rank_ok=rank_ok,
        verdicts=tuple(verdicts),
        geometric=bool(models),
        models=tuple(models),
    )


def is_geometric(cfg: PolarizedConfig, lines, cap: int = 729) -> bool:
    return geometricity(cfg, lines, cap=cap).geometric
