"""Schreier-Sims stabilizer chains for permutation groups.

Deterministic incremental algorithm: base points are the first moved points
(or a caller-prescribed prefix, which is how pointwise stabilizers are
computed), Schreier generators are processed in orbit order, and residues are
inserted at the deepest level they fix.
"""

from __future__ import annotations

from .perm import Permutation

DEGREE_CAP = 10**4


class StabilizerChain:
    """Base, strong generators per level, and fundamental orbit transversals.

    Level i holds the generators fixing base[0..i-1]; transversal[i][x] maps
    base[i] to x.
    """

    def __init__(self, degree: int, base, level_gens, transversals):
        self.degree = degree
        self.base = list(base)
        self.level_gens = level_gens
        self.transversals = transversals

    def order(self) -> int:
        out = 1
        for t in self.transversals:
            out *= len(t)
        return out

    def sift(self, g: Permutation):
        """Strip g through the chain; returns (level, residue).

        level == len(base) and residue identity iff g is a member.
        """
        for i, b in enumerate(self.base):
            x = g(b)
            if x == b:
                continue
            u = self.transversals[i].get(x)
            if u is None:
                return i, g
            g = g * u.inverse()
        return len(self.base), g

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        _, r = self.sift(g)
        return r.is_identity()

    def stabilizer_generators(self, k: int):
        """Generators of the pointwise stabilizer of base[0..k-1]."""
        if k >= len(self.level_gens):
            return []
        return list(self.level_gens[k])

    def stabilizer_order(self, k: int) -> int:
        out = 1
        for t in self.transversals[k:]:
            out *= len(t)
        return out


def _orbit_transversal(point: int, gens, identity: Permutation):
    transversal = {point: identity}
    queue = [point]
    while queue:
        x = queue.pop(0)
        u = transversal[x]
        for g in gens:
            y = g(x)
            if y not in transversal:
                transversal[y] = u * g
                queue.append(y)
    return transversal


def schreier_sims(generators, degree: int | None = None, base_prefix=()) -> StabilizerChain:
    """Build a stabilizer chain for the group generated by the permutations.

    base_prefix forces the base to start with the given points (in order),
    even where their orbits are trivial; the level-k stabilizer of the result
    is then the pointwise stabilizer of base_prefix[:k].
    """
    generators = [g for g in generators if not g.is_identity()]
    if degree is None:
        if not generators:
            raise ValueError("need a degree for the trivial group")
        degree = generators[0].degree
    if degree > DEGREE_CAP:
        raise ValueError(f"degree {degree} exceeds cap {DEGREE_CAP}")
    for g in generators:
        if g.degree != degree:
            raise ValueError("generator degree mismatch")

    identity = Permutation.identity(degree)
    base: list[int] = []
    level_gens: list[list[Permutation]] = []

    def add_base_point(point: int):
        base.append(point)
        level_gens.append([])

    for b in base_prefix:
        add_base_point(b)

    def first_moved(g: Permutation) -> int:
        return next(i for i in range(degree) if g(i) != i)

    def insert_generator(g: Permutation, from_level: int) -> int:
        """Add g at every level it belongs to; returns the deepest one."""
        j = from_level
        while j < len(base) and g(base[j]) == base[j]:
            j += 1
        if j == len(base):
            add_base_point(first_moved(g))
        for k in range(from_level, j + 1):
            level_gens[k].append(g)
        return j

    for g in generators:
        insert_generator(g, 0)
    if not base:
        return StabilizerChain(degree, [], [], [])

    transversals: list[dict] = [dict() for _ in base]

    def sift_from(level: int, g: Permutation):
        for i in range(level, len(base)):
            x = g(base[i])
            if x == base[i]:
                continue
            u = transversals[i].get(x)
            if u is None:
                return i, g
            g = g * u.inverse()
        return len(base), g

    def process(i: int) -> int | None:
        """Check Schreier generators of level i; returns insertion level or None."""
        transversals[i] = _orbit_transversal(base[i], level_gens[i], identity)
        for x in sorted(transversals[i]):
            u = transversals[i][x]
            for s in level_gens[i]:
                y = s(x)
                h = u * s * transversals[i][y].inverse()
                if h.is_identity():
                    continue
                j, r = sift_from(i + 1, h)
                if not r.is_identity():
                    grew = len(base)
                    deep = insert_generator(r, i + 1)
                    if len(base) > grew:
                        transversals.append(dict())
                    return deep
        return None

    i = len(base) - 1
    while i >= 0:
        added_at = process(i)
        if added_at is None:
            i -= 1
        else:
            i = added_at
    return StabilizerChain(degree, base, level_gens, transversals)
