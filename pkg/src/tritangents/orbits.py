"""Orbit structure of a line universe.

Two nested decompositions drive everything downstream: the fine orbits
under the group generated by reflections in roots orthogonal to the
polarization and the marked root, and the coarse orbits under the full
stabilizer of the pair.  On 24A1 lattices the stabilizer quotient is
computed exactly by color-preserving Golay point permutations; on other
lattices a conservative generating set (component swaps) is used, which
can only refine, never coarsen incorrectly.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import perms
from .golay import binary_golay
from .lines import PolarizedConfig, dual_line, line_universe, product


@dataclass(frozen=True)
class CombOrbit:
    """Orbit of lines under the reflection subgroup fixing the polarization."""

    oid: int
    members: tuple  # universe indices, sorted
    dual: int  # oid holding the duals of these lines
    parent: int  # coarse orbit id

    @property
    def rep(self) -> int:
        return self.members[0]

    @property
    def self_dual(self) -> bool:
        return self.dual == self.oid

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class ParentOrbit:
    """Orbit of lines under the full stabilizer of (polarization, root)."""

    pid: int
    comb_ids: tuple
    size: int
    support: tuple  # sorted per-component (kind, n, norm) profile of a line

    @property
    def multiplicity(self) -> int:
        return len(self.comb_ids)


@dataclass
class OrbitDecomposition:
    cfg: PolarizedConfig
    lines: tuple
    index: dict
    dual_of: tuple
    reflection_gens: tuple  # universe permutations, identity dropped
    comb_orbits: tuple
    orbit_of_line: tuple
    parents: tuple
    stab_order: int
    stab_exact: bool
    stab_orbit_maps: tuple  # full element list acting on comb-orbit ids
    _stab_point_perms: tuple | None = None
    _line_perm_cache: tuple | None = None

    def orbit(self, oid: int) -> CombOrbit:
        return self.comb_orbits[oid]

    def parent_of(self, oid: int) -> ParentOrbit:
        return self.parents[self.comb_orbits[oid].parent]

    def support(self, oid: int) -> tuple:
        """Component indices where the orbit's lines are nonzero."""
        rep = self.lines[self.comb_orbits[oid].members[0]]
        return tuple(
            c for c, comp in enumerate(rep) if any(x != 0 for x in comp)
        )

    def stab_line_perms(self) -> tuple:
        """Universe permutations of the stabilizer elements (24A1 only)."""
        if self._stab_point_perms is None:
            raise ValueError(
                "line-level stabilizer elements only available on 24A1"
            )
        if self._line_perm_cache is None:
            out = []
            for pt_perm in self._stab_point_perms:
                img = []
                for l in self.lines:
                    moved = [None] * 24
                    for k in range(24):
                        moved[pt_perm[k]] = l[k]
                    img.append(self.index[tuple(moved)])
                out.append(tuple(img))
            self._line_perm_cache = tuple(out)
        return self._line_perm_cache


def _embed_component(cfg: PolarizedConfig, comp: int, vec) -> tuple:
    out = list(cfg.lattice.zero())
    out[comp] = tuple(vec)
    return tuple(out)


def _root_coefficient(component, plus_root) -> Fraction:
    # component is a rational multiple of the positive root of its slot
    for a, b in zip(component, plus_root):
        if b != 0:
            return Fraction(a) / b
    return Fraction(0)


def reflection_generators(cfg: PolarizedConfig):
    """Universe permutations of reflections in roots orthogonal to the pair."""
    lines = line_universe(cfg)
    index = {l: i for i, l in enumerate(lines)}
    systems = cfg.lattice.systems
    gens = []
    seen = set()
    for c, sys_c in enumerate(systems):
        h_c = cfg.hbar[c]
        r_c = cfg.rbar[c] if cfg.rbar is not None else None
        for root in sys_c.roots:
            if not _lex_pos(root):
                continue  # one of each +-pair
            if sys_c.inner(root, h_c) != 0:
                continue
            if r_c is not None and sys_c.inner(root, r_c) != 0:
                continue
            img = []
            moved = False
            for l in lines:
                lc = sys_c.reflect(l[c], root)
                if lc != l[c]:
                    moved = True
                    l2 = list(l)
                    l2[c] = lc
                    img.append(index[tuple(l2)])
                else:
                    img.append(index[l])
            if not moved:
                continue
            perm = tuple(img)
            if perm not in seen:
                seen.add(perm)
                gens.append(perm)
    return tuple(gens)


def _lex_pos(vec) -> bool:
    for x in vec:
        if x != 0:
            return x > 0
    return False


def _line_orbits(n_lines: int, gens):
    orbit_of = [-1] * n_lines
    orbits = []
    for start in range(n_lines):
        if orbit_of[start] >= 0:
            continue
        oid = len(orbits)
        stack = [start]
        orbit_of[start] = oid
        members = [start]
        while stack:
            x = stack.pop()
            for g in gens:
                y = g[x]
                if orbit_of[y] < 0:
                    orbit_of[y] = oid
                    members.append(y)
                    stack.append(y)
        orbits.append(tuple(sorted(members)))
    return orbits, orbit_of


def _stabilizer_maps_24a1(cfg: PolarizedConfig, lines, index, orbit_of):
    bg = binary_golay()
    # every A1 slot uses the same two-coordinate model with positive root (1, -1)
    plus = (1, -1)
    colors = []
    for k in range(24):
        hc = _root_coefficient(cfg.hbar[k], plus)
        rc = (
            _root_coefficient(cfg.rbar[k], plus)
            if cfg.rbar is not None
            else Fraction(0)
        )
        colors.append((hc, rc))
    autos = bg.colored_automorphisms(tuple(colors))
    n_orb = max(orbit_of) + 1
    reps = [None] * n_orb
    for i in range(len(lines)):
        if reps[orbit_of[i]] is None:
            reps[orbit_of[i]] = lines[i]
    # the image orbit of one member determines the image of the whole orbit
    orbit_maps = set()
    for pt_perm in autos:
        omap = []
        for l in reps:
            moved = [None] * 24
            for k in range(24):
                moved[pt_perm[k]] = l[k]
            omap.append(orbit_of[index[tuple(moved)]])
        orbit_maps.add(tuple(omap))
    return len(autos), True, tuple(sorted(orbit_maps)), tuple(autos)


def _stabilizer_maps_generic(cfg: PolarizedConfig, lines, index, orbit_of):
    n = cfg.lattice
    systems = n.systems
    m = len(systems)
    words = set(n.glue_words)
    swaps = []
    for a in range(m):
        for b in range(a + 1, m):
            if (systems[a].kind, systems[a].n) != (
                systems[b].kind,
                systems[b].n,
            ):
                continue
            if cfg.hbar[a] != cfg.hbar[b] or cfg.hbar[b] != cfg.hbar[a]:
                continue
            if cfg.rbar is not None and (
                cfg.rbar[a] != cfg.rbar[b] or cfg.rbar[b] != cfg.rbar[a]
            ):
                continue
            ok = True
            for w in words:
                w2 = list(w)
                w2[a], w2[b] = w2[b], w2[a]
                if tuple(w2) not in words:
                    ok = False
                    break
            if ok:
                swaps.append((a, b))
    n_orb = max(orbit_of) + 1 if orbit_of else 0
    gen_maps = []
    for a, b in swaps:
        img = []
        for l in lines:
            l2 = list(l)
            l2[a], l2[b] = l2[b], l2[a]
            img.append(index[tuple(l2)])
        omap = [-1] * n_orb
        for i in range(len(lines)):
            omap[orbit_of[i]] = orbit_of[img[i]]
        gen_maps.append(tuple(omap))
    elements = perms.group_closure(gen_maps) if gen_maps else (
        perms.identity(n_orb),
    )
    return len(elements), False, tuple(sorted(set(elements))), None


_DECOMP: dict = {}


def decompose_orbits(cfg: PolarizedConfig) -> OrbitDecomposition:
    """Full orbit data of the universe; cached per configuration."""
    cached = _DECOMP.get(cfg)
    if cached is not None:
        return cached
    lines = line_universe(cfg)
    index = {l: i for i, l in enumerate(lines)}
    gens = reflection_generators(cfg)
    raw_orbits, orbit_of = _line_orbits(len(lines), gens)

    dual_of = tuple(index[dual_line(cfg, l)] for l in lines)
    dual_oid = []
    for members in raw_orbits:
        d = orbit_of[dual_of[members[0]]]
        assert all(orbit_of[dual_of[i]] == d for i in members), (
            "duality does not respect reflection orbits"
        )
        dual_oid.append(d)

    if cfg.lattice.label == "24A1":
        stab_order, exact, orbit_maps, point_perms = _stabilizer_maps_24a1(
            cfg, lines, index, orbit_of
        )
    else:
        stab_order, exact, orbit_maps, point_perms = _stabilizer_maps_generic(
            cfg, lines, index, orbit_of
        )

    n_orb = len(raw_orbits)
    parent_of = [-1] * n_orb
    parents_members = []
    for start in range(n_orb):
        if parent_of[start] >= 0:
            continue
        pid = len(parents_members)
        stack = [start]
        parent_of[start] = pid
        group = [start]
        while stack:
            x = stack.pop()
            for g in orbit_maps:
                y = g[x]
                if parent_of[y] < 0:
                    parent_of[y] = pid
                    group.append(y)
                    stack.append(y)
        parents_members.append(tuple(sorted(group)))

    comb_orbits = tuple(
        CombOrbit(
            oid=i,
            members=raw_orbits[i],
            dual=dual_oid[i],
            parent=parent_of[i],
        )
        for i in range(n_orb)
    )

    systems = cfg.lattice.systems
    parents = []
    for pid, group in enumerate(parents_members):
        rep_line = lines[raw_orbits[group[0]][0]]
        profile = []
        for c, comp in enumerate(rep_line):
            nrm = systems[c].inner(comp, comp)
            if nrm != 0:
                profile.append(
                    (systems[c].kind, systems[c].n, nrm.numerator, nrm.denominator)
                )
        size = sum(len(raw_orbits[oid]) for oid in group)
        parents.append(
            ParentOrbit(
                pid=pid,
                comb_ids=group,
                size=size,
                support=tuple(sorted(profile)),
            )
        )

    assert sum(p.size for p in parents) == len(lines)
    out = OrbitDecomposition(
        cfg=cfg,
        lines=lines,
        index=index,
        dual_of=dual_of,
        reflection_gens=gens,
        comb_orbits=comb_orbits,
        orbit_of_line=tuple(orbit_of),
        parents=tuple(parents),
        stab_order=stab_order,
        stab_exact=exact,
        stab_orbit_maps=orbit_maps,
        _stab_point_perms=point_perms,
    )
    _DECOMP[cfg] = out
    return out
