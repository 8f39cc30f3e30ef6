"""Base-size invariants of faithful actions: maximal minimal base B, height H,
maximal irredundant base I, and the relational-complexity upper bound H + 1.

Pointwise stabilizers are compared by order only; they are computed by element
filtering for small groups and by stabilizer-chain base change for larger
degrees, memoized per point set either way.  At every search level the next
point ranges over one representative per orbit of the current pointwise
stabilizer: conjugating by a stabilizer element carries any extension to an
extension of the same size, so this loses nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .arith import omega
from .chain import schreier_sims
from .group import ActionInstance, GroupHandle

FILTER_ORDER_LIMIT = 20000


@dataclass
class BaseReport:
    B: int
    H: int
    I: int
    rc_upper: int
    witness_minimal_base: list = dc_field(default_factory=list)
    witness_independent: list = dc_field(default_factory=list)
    witness_irredundant: list = dc_field(default_factory=list)


class _Stabilizers:
    """Memoized pointwise-stabilizer data for one action."""

    def __init__(self, A: ActionInstance):
        if not A.faithful:
            raise ValueError("invariants are defined for faithful actions only")
        self.action = A
        self.group = A.image
        self.degree = A.domain_size
        self.group_order = self.group.order()
        self.use_filter = self.group_order <= FILTER_ORDER_LIMIT
        self._orders: dict[frozenset, int] = {}
        self._reps: dict[frozenset, list[int]] = {}
        if self.use_filter:
            self._sets: dict[frozenset, tuple] = {
                frozenset(): tuple(self.group.elements())
            }
        else:
            self._chains: dict[frozenset, object] = {}
        self._orders[frozenset()] = self.group_order

    def _chain(self, points: frozenset):
        chain = self._chains.get(points)
        if chain is None:
            chain = schreier_sims(
                self.group.generators, self.degree, base_prefix=sorted(points)
            )
            self._chains[points] = chain
        return chain

    def order(self, points: frozenset) -> int:
        cached = self._orders.get(points)
        if cached is not None:
            return cached
        if self.use_filter:
            # peel the missing points off a cached subset-stabilizer
            best = frozenset()
            for sub in self._sets:
                if sub < points and len(sub) > len(best):
                    best = sub
            elems = self._sets[best]
            for p in points - best:
                elems = tuple(g for g in elems if g(p) == p)
            self._sets[points] = elems
            out = len(elems)
        else:
            out = self._chain(points).stabilizer_order(len(points))
        self._orders[points] = out
        return out

    def stabilizer_orbit_reps(self, points: frozenset) -> list[int]:
        """One point per orbit of the pointwise stabilizer on the rest of the
        domain, in increasing order."""
        cached = self._reps.get(points)
        if cached is not None:
            return cached
        if self.use_filter:
            self.order(points)
            gens = self._sets[points]
        else:
            gens = self._chain(points).stabilizer_generators(len(points))
        seen = set(points)
        reps = []
        for x in range(self.degree):
            if x in seen:
                continue
            reps.append(x)
            orbit = {x}
            frontier = [x]
            while frontier:
                y = frontier.pop()
                for g in gens:
                    z = g(y)
                    if z not in orbit:
                        orbit.add(z)
                        frontier.append(z)
            seen |= orbit
        self._reps[points] = reps
        return reps


def height(A: ActionInstance) -> tuple[int, list[int]]:
    """H: maximum size of an independent point set, with a witness.

    A set is independent when removing any single point strictly enlarges the
    pointwise stabilizer; subsets of independent sets are independent, so the
    search only ever extends independent partial sets.
    """
    st = _Stabilizers(A)
    best = 0
    witness: list[int] = []
    visited: set[frozenset] = set()

    def dfs(S: frozenset):
        nonlocal best, witness
        if S in visited:
            return
        visited.add(S)
        order_S = st.order(S)
        if len(S) > best:
            best = len(S)
            witness = sorted(S)
        if order_S == 1:
            return
        for e in st.stabilizer_orbit_reps(S):
            Se = S | {e}
            order_Se = st.order(Se)
            if order_Se == order_S:
                continue
            if all(st.order(Se - {y}) > order_Se for y in S):
                dfs(Se)

    dfs(frozenset())
    return best, witness


def max_irredundant_base(A: ActionInstance) -> tuple[int, list[int]]:
    """I: maximum length of a strictly descending stabilizer chain ending at
    the identity, with a witness sequence."""
    st = _Stabilizers(A)
    memo: dict[frozenset, tuple[int, list[int]]] = {}

    def best_extension(S: frozenset) -> tuple[int, list[int]]:
        got = memo.get(S)
        if got is not None:
            return got
        order_S = st.order(S)
        best = (0, [])
        if order_S > 1:
            for e in st.stabilizer_orbit_reps(S):
                Se = S | {e}
                if st.order(Se) < order_S:
                    sub_len, sub_seq = best_extension(Se)
                    if 1 + sub_len > best[0]:
                        best = (1 + sub_len, [e] + sub_seq)
        memo[S] = best
        return best

    if st.group_order == 1:
        return 0, []
    length, seq = best_extension(frozenset())
    if st.order(frozenset(seq)) != 1:
        raise AssertionError("irredundant search did not reach a base")
    return length, seq


def max_minimal_base(A: ActionInstance) -> tuple[int, list[int]]:
    """B: maximum size of a base no proper subset of which is a base.

    Enumerated as sets; a point whose addition does not shrink the stabilizer
    can never belong to a minimal base and is pruned.
    """
    st = _Stabilizers(A)
    best = 0
    witness: list[int] = []
    visited: set[frozenset] = set()

    def dfs(S: frozenset):
        nonlocal best, witness
        if S in visited:
            return
        visited.add(S)
        order_S = st.order(S)
        for e in st.stabilizer_orbit_reps(S):
            Se = S | {e}
            order_Se = st.order(Se)
            if order_Se == order_S:
                continue
            if order_Se == 1:
                # a base; minimal iff every co-dimension-1 stabilizer is nontrivial
                if all(st.order(Se - {y}) > 1 for y in S):
                    if len(Se) > best:
                        best = len(Se)
                        witness = sorted(Se)
            else:
                dfs(Se)

    if st.group_order == 1:
        return 0, []
    dfs(frozenset())
    return best, witness


def rc_upper_bound(h: int) -> int:
    """Relational complexity is at most height + 1."""
    return h + 1


def base_report(A: ActionInstance) -> BaseReport:
    b, wb = max_minimal_base(A)
    h, wh = height(A)
    i, wi = max_irredundant_base(A)
    return BaseReport(
        B=b,
        H=h,
        I=i,
        rc_upper=rc_upper_bound(h),
        witness_minimal_base=wb,
        witness_independent=wh,
        witness_irredundant=wi,
    )


def independent_check_full(A: ActionInstance, points) -> bool:
    """Definitional independence check against all proper subsets."""
    st = _Stabilizers(A)
    S = frozenset(points)
    order_S = st.order(S)
    for k in range(len(S)):
        for sub in combinations(sorted(S), k):
            if st.order(frozenset(sub)) <= order_S:
                return False
    return True


def height_by_sequences(A: ActionInstance) -> int:
    """Maximum length of an independent sequence, enumerated naively over all
    point sequences.  Exponential; meant for cross-checking on tiny domains."""
    st = _Stabilizers(A)
    if st.degree > 8:
        raise ValueError("sequence enumeration is limited to domains of size <= 8")
    best = 0

    def dfs(seq: list[int]):
        nonlocal best
        S = frozenset(seq)
        order_S = st.order(S)
        ok = all(
            st.order(frozenset(seq[:i] + seq[i + 1 :])) > order_S
            for i in range(len(seq))
        )
        if not ok:
            return
        best = max(best, len(seq))
        if order_S == 1:
            return
        for e in range(st.degree):
            if e not in S:
                dfs(seq + [e])

    dfs([])
    return best


@dataclass
class CyclicQuotientReport:
    H_G: int
    H_N: int
    omega_index: int
    holds: bool
    witness: list[int]
    delta_subset: list[int]
    delta_independent_for_N: bool


def check_cyclic_quotient_bound(
    A: ActionInstance, N: GroupHandle
) -> CyclicQuotientReport:
    """H(G) <= H(N) + omega(|G/N|) for N normal in G with cyclic quotient.

    Also exhibits the shrinking step: a subset Delta of the G-witness that is
    independent for N with the same N-pointwise-stabilizer.
    """
    G = A.image
    G_elems = G.elements()
    N_set = frozenset(N.elements())
    if any(e not in G for e in N.generators):
        raise ValueError("N is not a subgroup of G")
    for g in G.generators:
        gi = g.inverse()
        if any(gi * h * g not in N_set for h in N.generators):
            raise ValueError("N is not normal in G")
    index = len(G_elems) // len(N_set)
    # cyclic quotient: some single coset generates G over N
    cyclic = index == 1
    if not cyclic:
        for g in G_elems:
            H = G.subgroup(list(N.generators) + [g])
            if len(H.elements()) == len(G_elems):
                cyclic = True
                break
    if not cyclic:
        raise ValueError("G/N is not cyclic")

    h_g, gamma = height(A)
    N_action = ActionInstance(
        image=N,
        domain_size=A.domain_size,
        faithful=True,
        transitive=False,
        source_order=len(N_set),
    )
    h_n, _ = height(N_action)

    # shrink gamma to a subset independent for N with the same N-stabilizer
    st_n = _Stabilizers(N_action)
    delta = list(gamma)
    changed = True
    while changed:
        changed = False
        target = st_n.order(frozenset(delta))
        for y in list(delta):
            if st_n.order(frozenset(d for d in delta if d != y)) == target:
                delta.remove(y)
                changed = True
                break
    delta_ok = all(
        st_n.order(frozenset(d for d in delta if d != y))
        > st_n.order(frozenset(delta))
        for y in delta
    ) and st_n.order(frozenset(delta)) == st_n.order(frozenset(gamma))

    w = omega(index) if index > 1 else 0
    return CyclicQuotientReport(
        H_G=h_g,
        H_N=h_n,
        omega_index=w,
        holds=h_g <= h_n + w,
        witness=gamma,
        delta_subset=sorted(delta),
        delta_independent_for_N=delta_ok,
    )


@dataclass
class HeightBoundReport:
    r: int
    f: int
    H: int
    B: int
    rc_upper: int
    bound: int
    holds: bool
    margin: int


def check_primitive_height_bound(
    A: ActionInstance, r: int, f: int
) -> HeightBoundReport:
    """H, B and the RC bound against 177 r^8 + omega(f) for a faithful
    primitive action of declared rank r over a degree-f field."""
    from .group import is_primitive

    if not A.faithful:
        raise ValueError("action must be faithful")
    if not is_primitive(A):
        raise ValueError("action must be primitive")
    h, _ = height(A)
    b, _ = max_minimal_base(A)
    bound = 177 * r**8 + omega(f)
    return HeightBoundReport(
        r=r,
        f=f,
        H=h,
        B=b,
        rc_upper=h + 1,
        bound=bound,
        holds=h <= bound and b <= bound and h + 1 <= bound + 1,
        margin=bound - max(h, b),
    )
