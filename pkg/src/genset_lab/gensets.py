"""Generation invariants: d(G), m(G), delta(G), nilpotency, and the bound
checks tying them together.

The m(G) search walks independent element sequences: the first slot ranges
over conjugacy-class representatives, later slots over elements in increasing
ID order, and every partial set is kept fully independent (each member outside
the closure of the others).  A leaf where the closure is the whole group is
then a minimal generating set by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .arith import factorize
from .group import GroupHandle, is_p_group, p_group_rank, sylow_subgroup
from .lattice import LATTICE_CAP, GroupTable, length

EXHAUSTIVE_ORDER_LIMIT = 1000
DEFAULT_NODE_BUDGET = 10**8


class BudgetExhausted(Exception):
    """The m(G) search ran out of its node budget."""

    def __init__(self, best: int, witness):
        super().__init__(f"budget exhausted; best lower bound {best}")
        self.best = best
        self.witness = witness


@dataclass
class GenSet:
    """A candidate generating set with its verification flags."""

    group: GroupHandle
    elements: list
    generates: bool
    minimal: bool


@dataclass
class InvariantReport:
    d: int
    m: int
    delta: int
    length: int
    m_exact: bool = True
    witness_min: list = dc_field(default_factory=list)
    witness_max: list = dc_field(default_factory=list)
    witness_chain: list | None = None


def _table(G: GroupHandle, table: GroupTable | None) -> GroupTable:
    return table if table is not None else GroupTable(G)


def is_minimal_genset(G: GroupHandle, X, table: GroupTable | None = None) -> GenSet:
    """Check whether X generates G and whether it is minimal (no proper
    subset generates)."""
    X = list(dict.fromkeys(X))
    for x in X:
        if x not in G:
            raise ValueError(f"element {x!r} not in the group")
    t = _table(G, table)
    ids = [G.element_index(x) for x in X]
    full = t.full_mask
    generates = t.closure_of_ids(ids) == full
    minimal = generates and all(
        t.closure_of_ids([i for i in ids if i != drop]) != full for drop in ids
    )
    return GenSet(G, X, generates, minimal)


def min_genset_size(G: GroupHandle, table: GroupTable | None = None) -> tuple[int, list]:
    """d(G): least size of a generating set, with a witness.

    Searches increasing k; the first slot runs over conjugacy-class
    representatives only.
    """
    t = _table(G, table)
    n = t.n
    if n == 1:
        return 0, []
    reps = t.element_conjugacy_class_reps()
    full = t.full_mask

    def extend(mask: int, start: int, left: int, chosen: list):
        if mask == full:
            return chosen
        if left == 0:
            return None
        for e in range(start, n):
            if mask >> e & 1:
                continue
            got = extend(t.join(mask, e), e + 1, left - 1, chosen + [e])
            if got is not None:
                return got
        return None

    for k in range(1, n + 1):
        for r in reps[1:]:  # skip identity
            got = extend(t.cyclic(r)[0], 0, k - 1, [r])
            if got is not None:
                return k, [t.elems[i] for i in got]
    raise AssertionError("unreachable: the full element set generates")


def max_minimal_genset_size(
    G: GroupHandle,
    table: GroupTable | None = None,
    node_budget: int | None = None,
    depth_cap: int | None = None,
) -> tuple[int, list, bool]:
    """m(G): maximum size of a minimal generating set.

    Returns (m, witness elements, exact).  By default the search is exhaustive
    for |G| <= EXHAUSTIVE_ORDER_LIMIT; larger groups get a node budget and the
    result is flagged inexact if it runs out.
    """
    t = _table(G, table)
    n = t.n
    if n == 1:
        return 0, [], True
    if node_budget is None and n > EXHAUSTIVE_ORDER_LIMIT:
        node_budget = DEFAULT_NODE_BUDGET
    if depth_cap is None:
        try:
            depth_cap, _ = length(G, table=t)
        except ValueError:
            depth_cap = n.bit_length()
    full = t.full_mask
    reps = t.element_conjugacy_class_reps()

    best = 0
    best_witness: list[int] = []
    nodes = 0

    # state per node: elems (ids), H = <elems>, co[i] = <elems - elems[i]>
    def dfs(elems: list[int], H: int, co: list[int], last: int):
        nonlocal best, best_witness, nodes
        for e in range(last + 1, n):
            if H >> e & 1 or e in elems:
                continue
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                raise BudgetExhausted(best, best_witness)
            new_co = []
            ok = True
            for i, y in enumerate(elems):
                m = t.join(co[i], e)
                if m >> y & 1:
                    ok = False
                    break
                new_co.append(m)
            if not ok:
                continue
            H2 = t.join(H, e)
            new_elems = elems + [e]
            if H2 == full:
                # every leave-one-out closure is proper: minimal generating set
                if len(new_elems) > best:
                    best = len(new_elems)
                    best_witness = list(new_elems)
                continue
            if len(new_elems) >= depth_cap:
                continue
            dfs(new_elems, H2, new_co + [H], e)

    exact = True
    try:
        for r in reps[1:]:
            c_mask = t.cyclic(r)[0]
            if c_mask == full:
                if best < 1:
                    best, best_witness = 1, [r]
                continue
            # later slots may use any id, so restart the increasing scan at -1
            dfs([r], c_mask, [1], -1)
    except BudgetExhausted:
        exact = False

    return best, [t.elems[i] for i in best_witness], exact


def delta(G: GroupHandle) -> int:
    """delta(G) = sum over primes p | |G| of d(Sylow_p(G))."""
    n = len(G.elements())
    out = 0
    for p, _ in factorize(n):
        out += p_group_rank(sylow_subgroup(G, p), p)
    return out


def sylow_ranks(G: GroupHandle) -> dict[int, int]:
    n = len(G.elements())
    return {p: p_group_rank(sylow_subgroup(G, p), p) for p, _ in factorize(n)}


def is_nilpotent(G: GroupHandle) -> bool:
    """True iff every Sylow subgroup is normal."""
    elems = G.elements()
    for p, _ in factorize(len(elems)):
        P = sylow_subgroup(G, p)
        Pset = set(P.elements())
        for g in G.generators:
            gi = g.inverse()
            if any(gi * h * g not in Pset for h in P.generators):
                return False
    return True


@dataclass
class BoundsReport:
    d: int
    m: int
    delta: int
    length: int
    nilpotent: bool
    m_le_length: bool
    m_le_global_bound: bool
    nilpotent_equality: bool | None

    @property
    def all_pass(self) -> bool:
        checks = [self.m_le_length, self.m_le_global_bound]
        if self.nilpotent_equality is not None:
            checks.append(self.nilpotent_equality)
        return all(checks)


def check_bounds(G: GroupHandle, table: GroupTable | None = None) -> BoundsReport:
    """Assert m <= l, m <= 10^10 * delta^10, and m = delta when nilpotent."""
    t = _table(G, table)
    d, _ = min_genset_size(G, table=t)
    m, _, exact = max_minimal_genset_size(G, table=t)
    dl = delta(G)
    ell, _ = length(G, table=t)
    nil = is_nilpotent(G)
    return BoundsReport(
        d=d,
        m=m,
        delta=dl,
        length=ell,
        nilpotent=nil,
        m_le_length=m <= ell,
        m_le_global_bound=m <= 10**10 * dl**10,
        nilpotent_equality=(m == dl) if nil else None,
    )


def invariant_report(G: GroupHandle, table: GroupTable | None = None) -> InvariantReport:
    t = _table(G, table)
    d, wd = min_genset_size(G, table=t)
    m, wm, exact = max_minimal_genset_size(G, table=t)
    ell, chain = length(G, table=t)
    return InvariantReport(
        d=d,
        m=m,
        delta=delta(G),
        length=ell,
        m_exact=exact,
        witness_min=wd,
        witness_max=wm,
        witness_chain=chain,
    )
