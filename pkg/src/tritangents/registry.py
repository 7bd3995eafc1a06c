"""Catalog of the polarized 24A1 configurations and the named large line sets.

Everything here is deterministic: point sets are taken from the canonical
ordering of the Golay code's octads and dodecads, and each named set picks
the first piece of code data satisfying its stated incidence conditions.
Any valid choice is equivalent under the polarization stabilizer, so the
first one is as good as any.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .golay import binary_golay
from .lines import PolarizedConfig, line_universe, product
from .niemeier import niemeier

CONFIG_LABELS = ("24A1-3roots", "24A1-octad", "24A1-dodecad")
NAMED_SET_LABELS = ("Lmax3", "Lsub4", "Lsub5", "Lsub6", "Lsub7")

_EXPECTED_SIZE = {
    "Lmax3": 144,
    "Lsub4": 132,
    "Lsub5": 132,
    "Lsub6": 132,
    "Lsub7": 132,
}


class UnknownLabelError(KeyError):
    pass


def _points(mask: int) -> list[int]:
    return [i for i in range(24) if mask >> i & 1]


@lru_cache(maxsize=1)
def _plus_root():
    lat = niemeier("24A1")
    comp = lat.systems[0]
    r = comp.roots[0]
    return r if r[0] > 0 else tuple(-x for x in r)


def coefficient_vector(assign: dict) -> tuple:
    """Vector of the ambient lattice space given per-point root coefficients.

    Keys are point indices 0..23, values are the (rational) multiples of the
    positive simple root of that component. Unlisted points get zero.
    """
    plus = _plus_root()
    out = []
    for k in range(24):
        c = assign.get(k, 0)
        out.append(tuple(c * x for x in plus))
    return tuple(out)


def _half_sum(points, sign=1) -> dict:
    return {p: Fraction(sign, 2) for p in points}


@lru_cache(maxsize=None)
def config(label: str) -> PolarizedConfig:
    """One of the three 24A1 verification configurations.

    24A1-3roots:  hbar = r_a + r_b + r_c              (512 lines)
    24A1-octad:   hbar = half the octad sum + r_h     (464 lines)
    24A1-dodecad: hbar = half the dodecad sum         (440 lines)
    """
    lat = niemeier("24A1")
    bg = binary_golay()
    if label == "24A1-3roots":
        a, b, c, j = 0, 1, 2, 3
        hbar = coefficient_vector({a: 1, b: 1, c: 1})
        rbar = coefficient_vector({j: 1})
    elif label == "24A1-octad":
        octad = _points(bg.octads[0])
        rest = [p for p in range(24) if p not in octad]
        h, j = rest[0], rest[1]
        hbar = coefficient_vector({**_half_sum(octad), h: 1})
        rbar = coefficient_vector({j: 1})
    elif label == "24A1-dodecad":
        dodecad = _points(bg.dodecads[0])
        j = next(p for p in range(24) if p not in dodecad)
        hbar = coefficient_vector(_half_sum(dodecad))
        rbar = coefficient_vector({j: 1})
    else:
        raise UnknownLabelError(label)
    return PolarizedConfig(lat, hbar, rbar, name=label)


@dataclass(frozen=True)
class NamedLineSet:
    label: str
    config: PolarizedConfig
    lines: tuple
    cut: tuple  # vectors whose common orthogonal complement carves the set

    def __len__(self) -> int:
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)


def _cut_universe(cfg: PolarizedConfig, vectors) -> tuple:
    return tuple(
        l
        for l in line_universe(cfg)
        if all(product(cfg, l, w) == 0 for w in vectors)
    )


def _octad_with(bg, predicate) -> list[int]:
    for mask in bg.octads:
        pts = _points(mask)
        if predicate(pts):
            return pts
    raise ValueError("no octad satisfies the stated incidence conditions")


def _build_octad_config_set(label: str) -> NamedLineSet:
    cfg = config("24A1-octad")
    bg = binary_golay()
    octad = _points(bg.octads[0])
    rest = [p for p in range(24) if p not in octad]
    h, j = rest[0], rest[1]
    kpts = rest[2:]
    s = octad[0]
    # hbar - 3*r_h; together with rbar it spans the complement of the
    # octad-type orbit, so cutting by it drops the 16 integral lines.
    bh = coefficient_vector({**_half_sum(octad), h: -2})
    # sum of the simple roots over the complement of (octad u {rbar}),
    # with the coefficient at s lowered by 2
    u = coefficient_vector({**{p: 1 for p in kpts}, h: 1, s: -2})
    if label == "Lsub4":
        extra = coefficient_vector({kpts[0]: 1})
    else:  # Lsub5
        o5 = _octad_with(
            bg,
            lambda pts: j in pts
            and h in pts
            and s in pts
            and len(set(pts) & set(octad)) == 2,
        )
        extra = coefficient_vector(
            {
                **_half_sum(p for p in o5 if p not in octad),
                **_half_sum((p for p in o5 if p in octad), sign=-1),
            }
        )
    lines = _cut_universe(cfg, (bh, u, extra))
    return NamedLineSet(label, cfg, lines, (bh, u, extra))


def _build_dodecad_config_set(label: str) -> NamedLineSet:
    cfg = config("24A1-dodecad")
    bg = binary_golay()
    dodecad = _points(bg.dodecads[0])
    rest = [p for p in range(24) if p not in dodecad]
    j = rest[0]
    kpts = rest[1:]
    r, t = kpts[0], kpts[1]
    vk = coefficient_vector({p: 1 for p in kpts})
    r_vec = coefficient_vector({r: 1})
    if label == "Lmax3":
        extra = coefficient_vector({t: 1})
    elif label == "Lsub6":
        o6 = _octad_with(
            bg,
            lambda pts: j not in pts
            and r not in pts
            and len(set(pts) & set(dodecad)) == 2,
        )
        s = next(p for p in o6 if p in dodecad)
        # half the octad sum, with the coefficient at s lowered by 1
        extra = coefficient_vector({**_half_sum(o6), s: Fraction(-1, 2)})
    elif label == "Lsub7":
        o7 = _octad_with(
            bg,
            lambda pts: j in pts
            and r in pts
            and len(set(pts) & set(dodecad)) == 4,
        )
        inside = set(o7) & set(dodecad)
        # 3*(half outside - half inside) + half the dodecad sum
        extra = coefficient_vector(
            {
                **{p: Fraction(3, 2) for p in o7 if p not in dodecad},
                **{p: Fraction(-1) for p in inside},
                **{p: Fraction(1, 2) for p in dodecad if p not in inside},
            }
        )
    else:
        raise UnknownLabelError(label)
    lines = _cut_universe(cfg, (vk, r_vec, extra))
    return NamedLineSet(label, cfg, lines, (vk, r_vec, extra))


@lru_cache(maxsize=None)
def named_set(label: str) -> NamedLineSet:
    """Explicit large line set carved out by orthogonality conditions."""
    if label in ("Lsub4", "Lsub5"):
        out = _build_octad_config_set(label)
    elif label in ("Lmax3", "Lsub6", "Lsub7"):
        out = _build_dodecad_config_set(label)
    else:
        raise UnknownLabelError(label)
    expected = _EXPECTED_SIZE[label]
    if len(out) != expected:
        raise AssertionError(
            f"{label}: cut produced {len(out)} lines, expected {expected}"
        )
    return out
