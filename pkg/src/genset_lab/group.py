"""Finitely generated finite groups: closure, membership, stabilizers, Sylow
subgroups, coset actions, and a constructor catalog.

A GroupHandle wraps a generator list of uniform element kind (Permutation or
FieldMatrix).  Element IDs are BFS order from the identity with generators in
input order, which makes every derived witness reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd

from .arith import factorize, p_part
from .chain import StabilizerChain, schreier_sims
from .field import FieldMatrix
from .perm import Permutation

CLOSURE_CAP = 10**6


class CapExceeded(Exception):
    """A configured resource cap was exceeded."""


class GroupHandle:
    """A finite group given by generators, with cached closure and chain."""

    def __init__(self, generators, identity, closure_cap: int = CLOSURE_CAP):
        self.generators = list(generators)
        self.identity = identity
        self.closure_cap = closure_cap
        self._elements: tuple | None = None
        self._index: dict | None = None
        self._chain: StabilizerChain | None = None
        self._order: int | None = None

    # -- construction helpers -------------------------------------------------

    @property
    def is_permutation_group(self) -> bool:
        return isinstance(self.identity, Permutation)

    def elements(self) -> tuple:
        """Full element set in BFS order (identity first)."""
        if self._elements is None:
            elems = [self.identity]
            index = {self.identity: 0}
            frontier = [self.identity]
            while frontier:
                new = []
                for e in frontier:
                    for g in self.generators:
                        x = e * g
                        if x not in index:
                            if len(elems) >= self.closure_cap:
                                raise CapExceeded(
                                    f"closure exceeds cap {self.closure_cap}"
                                )
                            index[x] = len(elems)
                            elems.append(x)
                            new.append(x)
                frontier = new
            self._elements = tuple(elems)
            self._index = index
            self._order = len(elems)
        return self._elements

    def element_index(self, x) -> int:
        self.elements()
        return self._index[x]

    def chain(self) -> StabilizerChain:
        if not self.is_permutation_group:
            raise ValueError("stabilizer chains require a permutation group")
        if self._chain is None:
            self._chain = schreier_sims(self.generators, self.identity.degree)
        return self._chain

    def order(self) -> int:
        if self._order is None:
            if self.is_permutation_group:
                self._order = self.chain().order()
            else:
                self._order = len(self.elements())
        return self._order

    def __contains__(self, x) -> bool:
        if self._elements is not None:
            return x in self._index
        if self.is_permutation_group:
            return self.chain().contains(x)
        return x in set(self.elements())

    def subgroup(self, generators) -> "GroupHandle":
        return GroupHandle(list(generators), self.identity, self.closure_cap)

    def is_subgroup_of(self, other: "GroupHandle") -> bool:
        return all(g in other for g in self.generators)

    @property
    def degree(self) -> int:
        if not self.is_permutation_group:
            raise ValueError("not a permutation group")
        return self.identity.degree


def close(generators, degree: int | None = None, closure_cap: int = CLOSURE_CAP) -> GroupHandle:
    """Close a generator list into a GroupHandle with cached elements."""
    generators = list(generators)
    if not generators:
        if degree is None:
            raise ValueError("need generators or an explicit degree")
        generators = []
        identity = Permutation.identity(degree)
    else:
        kinds = {type(g) for g in generators}
        if len(kinds) > 1:
            raise ValueError(f"mixed element kinds: {sorted(k.__name__ for k in kinds)}")
        g0 = generators[0]
        if isinstance(g0, Permutation):
            if any(g.degree != g0.degree for g in generators):
                raise ValueError("permutation degree mismatch")
            identity = Permutation.identity(g0.degree)
        elif isinstance(g0, FieldMatrix):
            if any(g.field is not g0.field or g.n != g0.n for g in generators):
                raise ValueError("matrix field/dimension mismatch")
            identity = FieldMatrix.identity(g0.field, g0.n)
        else:
            raise ValueError(f"unsupported element kind {type(g0).__name__}")
    handle = GroupHandle(generators, identity, closure_cap)
    handle.elements()
    return handle


def trivial_group(degree: int) -> GroupHandle:
    return close([], degree=degree)


# -- stabilizers --------------------------------------------------------------


def pointwise_stabilizer(G: GroupHandle, points) -> GroupHandle:
    """Subgroup of G fixing every point in `points`.

    Computed by rebuilding the chain with the points as a base prefix; for
    small cached groups a direct element filter is used instead.
    """
    points = sorted(set(points))
    if not G.is_permutation_group:
        raise ValueError("pointwise stabilizer requires a permutation group")
    if any(p < 0 or p >= G.degree for p in points):
        raise ValueError("point outside the domain")
    if G._elements is not None and len(G._elements) <= 20000:
        gens = [e for e in G.elements() if all(e(p) == p for p in points)]
        return G.subgroup([g for g in gens if not g.is_identity()])
    chain = schreier_sims(G.generators, G.degree, base_prefix=points)
    sub = G.subgroup(chain.stabilizer_generators(len(points)))
    sub._order = chain.stabilizer_order(len(points))
    return sub


def stabilizer_order(G: GroupHandle, points) -> int:
    """Order of the pointwise stabilizer (chain-based, no element listing)."""
    points = sorted(set(points))
    chain = schreier_sims(G.generators, G.degree, base_prefix=points)
    return chain.stabilizer_order(len(points))


# -- Sylow subgroups and p-group rank -----------------------------------------


def _p_element_power(x, p: int, order: int):
    """The p-part of x: a p-element generating the Sylow subgroup of <x>."""
    m = order
    while m % p == 0:
        m //= p
    out = x
    # x**m via repeated multiplication is fine at catalog scale
    result = None
    e = m
    base = x
    while e:
        if e & 1:
            result = base if result is None else result * base
        base = base * base
        e >>= 1
    return result if result is not None else out


def _element_order(G: GroupHandle, x) -> int:
    n = 1
    y = x
    while y != G.identity:
        y = y * x
        n += 1
    return n


def sylow_subgroup(G: GroupHandle, p: int) -> GroupHandle:
    """A Sylow p-subgroup, by normalizer extension from a cyclic p-subgroup."""
    elems = G.elements()
    target = p_part(len(elems), p)
    if target == 1:
        return G.subgroup([])
    # seed: p-part of the first element of order divisible by p
    seed = None
    for x in elems:
        o = _element_order(G, x)
        if o % p == 0:
            seed = _p_element_power(x, p, o)
            break
    H = G.subgroup([seed])
    H.elements()
    while len(H.elements()) < target:
        Hset = set(H.elements())
        normalizer = [
            g
            for g in elems
            if all(g.inverse() * h * g in Hset for h in H.generators)
        ]
        extend = None
        for z in normalizer:
            if z in Hset:
                continue
            o = _element_order(G, z)
            if o == p_part(o, p):
                extend = z
                break
        if extend is None:
            raise AssertionError("Sylow extension step found no p-element")
        H = G.subgroup(H.generators + [extend])
        H.elements()
    return H


def is_p_group(P: GroupHandle, p: int) -> bool:
    n = len(P.elements())
    return n == p_part(n, p)


def p_group_rank(P: GroupHandle, p: int) -> int:
    """d(P) = m(P) for a p-group: log_p of the index of the Frattini subgroup.

    The Frattini subgroup is generated by commutators and p-th powers.
    """
    elems = P.elements()
    if not is_p_group(P, p):
        raise ValueError("not a p-group for the given prime")
    if len(elems) == 1:
        return 0
    gens = []
    for a in P.generators:
        for b in P.generators:
            gens.append(a.inverse() * b.inverse() * a * b)
    for a in elems:
        x = a
        for _ in range(p - 1):
            x = x * a
        gens.append(x)
    frattini = P.subgroup([g for g in gens if g != P.identity])
    quotient = len(elems) // len(frattini.elements())
    rank = 0
    while quotient > 1:
        quotient //= p
        rank += 1
    return rank


# -- coset actions and primitivity --------------------------------------------


@dataclass
class ActionInstance:
    """A group acting faithfully-or-not on {0..domain_size-1}.

    `image` is the permutation group induced on the domain; `faithful` compares
    the image order with the order of the source group.
    """

    image: GroupHandle
    domain_size: int
    faithful: bool
    transitive: bool
    source_order: int
    labels: list = dc_field(default_factory=list, repr=False)

    @property
    def group(self) -> GroupHandle:
        return self.image


def natural_action(G: GroupHandle) -> ActionInstance:
    orbit = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in G.generators:
            y = g(x)
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return ActionInstance(
        image=G,
        domain_size=G.degree,
        faithful=True,
        transitive=len(orbit) == G.degree,
        source_order=G.order(),
    )


def coset_action(G: GroupHandle, H: GroupHandle) -> ActionInstance:
    """Action of G on right cosets of H by right multiplication."""
    if not H.is_subgroup_of(G):
        raise ValueError("H is not a subgroup of G")
    elems = G.elements()
    H_elems = frozenset(H.elements())
    coset_of = {}
    reps = []
    for e in elems:
        if e in coset_of:
            continue
        idx = len(reps)
        reps.append(e)
        for h in H_elems:
            coset_of[h * e] = idx
    degree = len(reps)
    images = []
    for g in G.generators:
        images.append(Permutation([coset_of[r * g] for r in reps]))
    image = close(images, degree=degree) if degree > 1 else trivial_group(1)
    return ActionInstance(
        image=image,
        domain_size=degree,
        faithful=image.order() == len(elems),
        transitive=True,
        source_order=len(elems),
        labels=[r for r in reps],
    )


def is_primitive(A: ActionInstance) -> bool:
    """True iff the transitive action preserves no nontrivial block system.

    Uses the standard minimal-block refinement seeded by each pair {0, b}.
    """
    if not A.transitive:
        raise ValueError("primitivity is defined for transitive actions")
    n = A.domain_size
    if n == 1:
        return True
    gens = A.image.generators
    for b in range(1, n):
        # union-find refinement of the partition generated by {0, b}
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx == ry:
                return None
            parent[ry] = rx
            return rx, ry

        queue = [(0, b)]
        union(0, b)
        while queue:
            x, y = queue.pop()
            for g in gens:
                merged = union(g(x), g(y))
                if merged:
                    queue.append(merged)
        size = sum(1 for i in range(n) if find(i) == find(0))
        if size < n:
            return False
    return True


# -- constructor catalog -------------------------------------------------------


def symmetric(n: int) -> GroupHandle:
    if n < 1:
        raise ValueError("n >= 1 required")
    if n == 1:
        return trivial_group(1)
    gens = [Permutation.from_cycles([(0, 1)], n)]
    if n > 2:
        gens.append(Permutation.from_cycles([tuple(range(n))], n))
    return close(gens)


def alternating(n: int) -> GroupHandle:
    if n < 3:
        return trivial_group(max(n, 1))
    gens = [Permutation.from_cycles([(0, 1, 2)], n)]
    if n > 3:
        if n % 2:
            gens.append(Permutation.from_cycles([tuple(range(n))], n))
        else:
            gens.append(Permutation.from_cycles([tuple(range(1, n))], n))
    return close(gens)


def cyclic(n: int) -> GroupHandle:
    if n < 1:
        raise ValueError("n >= 1 required")
    if n == 1:
        return trivial_group(1)
    return close([Permutation.from_cycles([tuple(range(n))], n)])


def dihedral(n: int) -> GroupHandle:
    """Dihedral group of order 2n acting on n vertices (n >= 3)."""
    if n < 3:
        raise ValueError("n >= 3 required")
    rot = Permutation.from_cycles([tuple(range(n))], n)
    refl = Permutation([(-i) % n for i in range(n)])
    return close([rot, refl])


def quaternion8() -> GroupHandle:
    """Q8 in its regular representation on 8 points."""
    a = Permutation.from_cycles([(0, 1, 2, 3), (4, 7, 6, 5)], 8)
    b = Permutation.from_cycles([(0, 4, 2, 6), (1, 5, 3, 7)], 8)
    return close([a, b])


def direct_product(G: GroupHandle, H: GroupHandle) -> GroupHandle:
    """Direct product acting on the disjoint union of the two domains."""
    n, m = G.degree, H.degree
    gens = [Permutation(list(g.images) + list(range(n, n + m))) for g in G.generators]
    gens += [
        Permutation(list(range(n)) + [n + x for x in h.images]) for h in H.generators
    ]
    return close(gens, degree=n + m)


def _check_metacyclic_params(m: int, n: int, k: int):
    if m < 1 or n < 1:
        raise ValueError("m, n >= 1 required")
    if m == 1:
        return
    if gcd(k, m) != 1:
        raise ValueError(f"gcd(k, m) must be 1, got k={k}, m={m}")
    if (pow(k, n, m) - 1) % m != 0:
        raise ValueError(f"m must divide k**n - 1, got (m,n,k)=({m},{n},{k})")


def metacyclic(m: int, n: int, k: int) -> GroupHandle:
    """Split extension C_m : C_n with conjugation a^b = a^k, order exactly m*n.

    Realized on Z_m + Z_n so the C_n factor is faithful even when the
    multiplicative order of k mod m is a proper divisor of n.
    """
    _check_metacyclic_params(m, n, k)
    deg = m + n
    a = Permutation([(x + 1) % m for x in range(m)] + list(range(m, deg)))
    b = Permutation(
        [(k * x) % m for x in range(m)] + [m + (x + 1) % n for x in range(n)]
    )
    G = close([a, b], degree=deg)
    assert len(G.elements()) == m * n
    return G


def metacyclic_inverted(m: int, n: int, k: int) -> GroupHandle:
    """C_m : (C_n x C_2) with the C_2 generator inverting C_m, order 2*m*n."""
    _check_metacyclic_params(m, n, k)
    deg = m + n + 2
    a = Permutation([(x + 1) % m for x in range(m)] + list(range(m, deg)))
    b = Permutation(
        [(k * x) % m for x in range(m)]
        + [m + (x + 1) % n for x in range(n)]
        + [m + n, m + n + 1]
    )
    c = Permutation(
        [(-x) % m for x in range(m)]
        + list(range(m, m + n))
        + [m + n + 1, m + n]
    )
    G = close([a, b, c], degree=deg)
    assert len(G.elements()) == 2 * m * n
    return G


def frobenius21() -> GroupHandle:
    """The Frobenius group of order 21, as metacyclic(7, 3, 2)."""
    return metacyclic(7, 3, 2)


CONSTRUCTORS = {
    "symmetric": symmetric,
    "alternating": alternating,
    "cyclic": cyclic,
    "dihedral": dihedral,
    "quaternion8": quaternion8,
    "metacyclic": metacyclic,
    "metacyclic_inverted": metacyclic_inverted,
}
