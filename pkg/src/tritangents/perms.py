"""Permutation machinery used by orbit decomposition and search dedup.

Group-theoretic heavy lifting (order, membership, point stabilizers) is
delegated to sympy's Schreier-Sims implementation. Everything here works
with permutations as tuples of images on 0..n-1 so callers never touch
sympy types, and every potentially exponential walk takes a budget.
"""

from functools import reduce

from sympy.combinatorics import Permutation, PermutationGroup


class OrbitBudgetError(RuntimeError):
    """A set-orbit or element walk exceeded its node budget."""


def compose(p: tuple, q: tuple) -> tuple:
    """Permutation acting as p after q (images p[q[i]])."""
    return tuple(p[q[i]] for i in range(len(q)))


def inverse(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def identity(degree: int) -> tuple:
    return tuple(range(degree))


class PermGroup:
    """Deterministic wrapper over a sympy permutation group."""

    def __init__(self, gens, degree: int):
        self.degree = degree
        seen = {identity(degree)}
        uniq = []
        for g in gens:
            g = tuple(g)
            if len(g) != degree:
                raise ValueError("generator degree mismatch")
            if g not in seen:
                seen.add(g)
                uniq.append(g)
        self.gens = tuple(uniq)
        if uniq:
            self._sym = PermutationGroup([Permutation(g) for g in uniq])
        else:
            self._sym = PermutationGroup([Permutation([], size=degree)])

    def order(self) -> int:
        return int(self._sym.order())

    def contains(self, p) -> bool:
        return self._sym.contains(Permutation(list(p)), strict=False)

    def orbit(self, point: int) -> frozenset:
        return frozenset(int(x) for x in self._sym.orbit(point))

    def orbits(self) -> tuple:
        seen = set()
        out = []
        for p in range(self.degree):
            if p in seen:
                continue
            orb = self.orbit(p)
            seen |= orb
            out.append(orb)
        return tuple(out)

    def stabilizer(self, point: int) -> "PermGroup":
        sub = self._sym.stabilizer(point)
        gens = [tuple(g.array_form + list(range(len(g.array_form), self.degree)))
                for g in sub.generators]
        return PermGroup(gens, self.degree)

    def elements(self, budget: int = 1 << 20) -> tuple:
        """All elements, deterministically ordered by BFS over generators."""
        if self.order() > budget:
            raise OrbitBudgetError(
                f"group order {self.order()} exceeds budget {budget}"
            )
        ident = identity(self.degree)
        seen = {ident}
        frontier = [ident]
        out = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g in self.gens:
                    q = compose(g, p)
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
            nxt.sort()
            out.extend(nxt)
            frontier = nxt
        return tuple(out)


def set_orbit(gens, subset, budget: int = 1 << 20) -> frozenset:
    """All images of a point set under the group generated by gens."""
    start = frozenset(subset)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = frozenset(g[x] for x in s)
                if t not in seen:
                    if len(seen) >= budget:
                        raise OrbitBudgetError(
                            f"set orbit exceeds budget {budget}"
                        )
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return frozenset(seen)


def min_image_set(gens, subset, budget: int = 1 << 20) -> tuple:
    """Lexicographically least sorted image of the set under the group."""
    orb = set_orbit(gens, subset, budget=budget)
    return min(tuple(sorted(s)) for s in orb)


def group_closure(perms, budget: int = 1 << 20) -> tuple:
    """Explicit element list of the group generated by the given perms."""
    if not perms:
        return ()
    degree = len(next(iter(perms)))
    return PermGroup(list(perms), degree).elements(budget=budget)


def product_order(perms) -> int:
    """Order of the permutation obtained by composing left to right."""
    if not perms:
        return 1
    p = reduce(compose, perms)
    n = len(p)
    order = 1
    q = p
    while q != identity(n):
        q = compose(p, q)
        order += 1
    return order
