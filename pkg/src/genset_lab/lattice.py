"""Subgroup lattice enumeration and group length for small cached groups.

The workhorse is GroupTable: a multiplication table over BFS element IDs with
bitmask subgroup arithmetic and a memoized join operation.  Lattices are
enumerated by closing conjugacy-class representatives under joins with cyclic
subgroups and then expanding each class by conjugation, which reaches exactly
the same subgroups as the naive pairwise-join fixpoint but far faster.
"""

from __future__ import annotations

import numpy as np

from .group import GroupHandle

LATTICE_CAP = 2000


class GroupTable:
    """Multiplication table of a fully closed group, with subgroup machinery.

    Subgroups are represented as (bitmask, sorted id array) pairs; masks are
    plain Python ints so they hash and compare cheaply.
    """

    def __init__(self, G: GroupHandle):
        elems = G.elements()
        self.handle = G
        self.n = len(elems)
        self.elems = elems
        self.identity_id = 0
        gen_ids = [G.element_index(g) for g in G.generators]

        # per-generator right-multiplication columns, then full table by BFS
        gen_cols = {
            gid: np.array([G.element_index(e * G.generators[j]) for e in elems], dtype=np.int32)
            for j, gid in enumerate(gen_ids)
        }
        table = np.empty((self.n, self.n), dtype=np.int32)
        table[:, 0] = np.arange(self.n, dtype=np.int32)
        # BFS parents: elems are in BFS order, so e_j = e_parent * gen
        parent = {}
        seen = {0}
        frontier = [0]
        order = [0]
        while frontier:
            new = []
            for eid in frontier:
                for j, gid in enumerate(gen_ids):
                    tid = int(gen_cols[gid][eid])
                    if tid not in seen:
                        seen.add(tid)
                        parent[tid] = (eid, gid)
                        new.append(tid)
                        order.append(tid)
            frontier = new
        for tid in order[1:]:
            peid, gid = parent[tid]
            table[:, tid] = gen_cols[gid][table[:, peid]]
        self.table = table
        self.inv = np.argmax(table == self.identity_id, axis=1).astype(np.int32)
        self.half = self.n // 2
        self.full_mask = (1 << self.n) - 1
        self.full_ids = np.arange(self.n, dtype=np.int32)

        self._pow2 = [1 << i for i in range(self.n)]
        self._cyclic_cache: dict[int, tuple[int, np.ndarray]] = {}
        self._gens_by_mask: dict[int, list[int]] = {}
        self._join_cache: dict[tuple[int, int], int] = {}
        self._ids_by_mask: dict[int, np.ndarray] = {
            1: np.array([0], dtype=np.int32),
            self.full_mask: self.full_ids,
        }

    # -- conversions ----------------------------------------------------------

    def mask_of(self, ids) -> int:
        ids = np.asarray(ids, dtype=np.int64)
        if len(ids) < 16:
            return sum(self._pow2[int(i)] for i in ids)
        bits = np.zeros(self.n, dtype=np.uint8)
        bits[ids] = 1
        padded = np.zeros(-(-self.n // 8) * 8, dtype=np.uint8)
        padded[-self.n :] = bits[::-1]
        return int.from_bytes(np.packbits(padded).tobytes(), "big")

    def ids_of(self, mask: int) -> np.ndarray:
        cached = self._ids_by_mask.get(mask)
        if cached is None:
            cached = np.array(
                [i for i in range(self.n) if mask >> i & 1], dtype=np.int32
            )
            self._ids_by_mask[mask] = cached
        return cached

    def subgroup_handle(self, mask: int) -> GroupHandle:
        ids = self.ids_of(mask)
        gens = [self.elems[i] for i in ids if i != self.identity_id]
        sub = self.handle.subgroup(gens)
        sub._elements = tuple(self.elems[i] for i in ids)
        sub._index = {e: k for k, e in enumerate(sub._elements)}
        sub._order = len(ids)
        return sub

    # -- core subgroup operations ---------------------------------------------

    def cyclic(self, e: int) -> tuple[int, np.ndarray]:
        """Mask and id array of <e>."""
        cached = self._cyclic_cache.get(e)
        if cached is not None:
            return cached
        ids = [self.identity_id]
        x = e
        while x != self.identity_id:
            ids.append(x)
            x = int(self.table[x, e])
        arr = np.array(sorted(ids), dtype=np.int32)
        out = (self.mask_of(arr), arr)
        self._cyclic_cache[e] = out
        return out

    def _close_by_squaring(self, arr: np.ndarray) -> int:
        """Close a subset (containing the identity) under products by repeated
        pairwise multiplication; good when the pieces are small."""
        while True:
            if len(arr) > self.half:
                return self.full_mask
            prod = np.unique(self.table[np.ix_(arr, arr)])
            if len(prod) == len(arr):
                mask = self.mask_of(arr)
                self._ids_by_mask.setdefault(mask, arr.astype(np.int32))
                return mask
            arr = prod

    def _close_by_cosets(self, B_arr: np.ndarray, other: np.ndarray) -> int:
        """Close <B, other> as a union of right cosets of B: BFS over coset
        representatives; good when B is already large.

        The coset graph must use the whole generating set B + other; with the
        other side alone it can be disconnected.
        """
        table = self.table
        gen_ids = np.concatenate((other, B_arr))
        in_K = np.zeros(self.n, dtype=bool)
        in_K[B_arr] = True
        b = len(B_arr)
        size = b
        level = np.array([self.identity_id], dtype=np.int32)
        while len(level):
            cand = table[level[:, None], gen_ids].ravel()
            if len(cand) > 2048:
                cand = np.unique(cand)
            cand = cand[~in_K[cand]]
            new_reps = []
            while len(cand):
                t = int(cand[0])
                in_K[table[B_arr, t]] = True
                size += b
                if size > self.half:
                    return self.full_mask
                new_reps.append(t)
                cand = cand[~in_K[cand]]
            level = np.array(new_reps, dtype=np.int32)
        ids = np.flatnonzero(in_K).astype(np.int32)
        mask = self.mask_of(ids)
        self._ids_by_mask.setdefault(mask, ids)
        return mask

    def join(self, H_mask: int, e: int) -> int:
        """Mask of <H, e>, memoized."""
        if H_mask >> e & 1:
            return H_mask
        key = (H_mask, e)
        cached = self._join_cache.get(key)
        if cached is not None:
            return cached
        c_mask, c_arr = self.cyclic(e)
        if c_mask | H_mask == c_mask:
            self._join_cache[key] = c_mask
            return c_mask
        H_arr = self.ids_of(H_mask)
        big, small = (H_arr, c_arr) if len(H_arr) >= len(c_arr) else (c_arr, H_arr)
        if len(big) < 32:
            # both pieces small: repeated squaring doubles fast and
            # short-circuits once it passes half the group
            start = np.unique(self.table[np.ix_(H_arr, c_arr)])
            out = self._close_by_squaring(start)
        else:
            out = self._close_by_cosets(big, small)
        self._join_cache[key] = out
        return out

    def closure_of_ids(self, ids) -> int:
        """Mask of the subgroup generated by the given element ids."""
        ids = [int(i) for i in ids]
        if not ids:
            return 1
        mask, _ = self.cyclic(ids[0])
        for e in ids[1:]:
            mask = self.join(mask, e)
        return mask

    def conjugates(self, mask: int) -> set[int]:
        """All conjugate subgroup masks of the given subgroup."""
        arr = self.ids_of(mask)
        out = set()
        for g in range(self.n):
            conj = self.table[self.table[self.inv[g], arr], g]
            conj_sorted = np.sort(conj)
            m = self.mask_of(conj_sorted)
            if m not in out:
                out.add(m)
                self._ids_by_mask.setdefault(m, conj_sorted.astype(np.int32))
        return out

    def element_conjugacy_class_reps(self) -> list[int]:
        """One representative id per conjugacy class of elements, ascending."""
        seen = set()
        reps = []
        for e in range(self.n):
            if e in seen:
                continue
            reps.append(e)
            cls = self.table[self.table[self.inv, e], np.arange(self.n)]
            # x ranges over g^-1 * e * g for all g
            seen.update(int(x) for x in cls)
        return reps

    def conjugacy_class_of_element(self, e: int) -> set[int]:
        cls = self.table[self.table[self.inv, e], np.arange(self.n)]
        return {int(x) for x in cls}

    def small_generating_ids(self, mask: int) -> list[int]:
        """A short generating id list for the subgroup, greedy over ascending
        element ids; at most log2 of the subgroup order."""
        cached = self._gens_by_mask.get(mask)
        if cached is not None:
            return cached
        gens: list[int] = []
        cur = 1 << self.identity_id
        for e in self.ids_of(mask):
            e = int(e)
            if cur >> e & 1:
                continue
            gens.append(e)
            cur = self.join(cur, e)
            if cur == mask:
                break
        if cur != mask:
            raise AssertionError("mask is not closed under products")
        self._gens_by_mask[mask] = gens
        return gens

    def conjugation_orbit_mins(self, mask: int) -> np.ndarray:
        """The minimum element id of each orbit of the subgroup acting on all
        elements by conjugation."""
        ar = self.full_ids
        label = ar.copy()
        maps = []
        for g in self.small_generating_ids(mask):
            gi = int(self.inv[g])
            maps.append(self.table[self.table[gi, ar], g])
            maps.append(self.table[self.table[g, ar], gi])
        changed = True
        while changed:
            changed = False
            for mp in maps:
                new = np.minimum(label, label[mp])
                if not np.array_equal(new, label):
                    label = new
                    changed = True
        return np.unique(label)


class SubgroupLattice:
    """All subgroups of a group, with containment and maximality data."""

    def __init__(self, table: GroupTable, masks: list[int]):
        self.table = table
        # canonical order: by order then mask value
        self.masks = sorted(masks, key=lambda m: (m.bit_count(), m))
        self.index = {m: i for i, m in enumerate(self.masks)}
        self.orders = [m.bit_count() for m in self.masks]
        self._maximal: list[bool] | None = None
        self._length: tuple[int, list[int]] | None = None

    def __len__(self):
        return len(self.masks)

    @property
    def full_mask(self) -> int:
        return self.masks[-1]

    def contains(self, outer: int, inner: int) -> bool:
        return inner | outer == outer

    def maximal_flags(self) -> list[bool]:
        """flags[i] is True iff masks[i] is maximal in the whole group."""
        if self._maximal is None:
            full = self.full_mask
            flags = []
            for i, m in enumerate(self.masks):
                if m == full:
                    flags.append(False)
                    continue
                is_max = True
                for k, other in zip(self.orders, self.masks):
                    if k <= self.orders[i] or other == full:
                        continue
                    if m | other == other:
                        is_max = False
                        break
                flags.append(is_max)
            self._maximal = flags
        return self._maximal

    def maximal_subgroup_masks(self) -> list[int]:
        return [m for m, f in zip(self.masks, self.maximal_flags()) if f]

    def maximal_subgroups_up_to_conjugacy(self) -> list[int]:
        """One conjugacy-class representative per class of maximal subgroups."""
        out = []
        seen = set()
        for m in self.maximal_subgroup_masks():
            if m in seen:
                continue
            cls = self.table.conjugates(m)
            seen.update(cls)
            out.append(min(cls))
        return out

    def length_with_witness(self) -> tuple[int, list[int]]:
        """Longest strictly descending chain length and a witness mask chain."""
        if self._length is None:
            n = len(self.masks)
            best = [0] * n
            back = [-1] * n
            for i in range(n):
                m = self.masks[i]
                for j in range(i):
                    if self.orders[j] < self.orders[i] and self.masks[j] | m == m:
                        if best[j] + 1 > best[i]:
                            best[i] = best[j] + 1
                            back[i] = j
            top = n - 1
            chain = [self.masks[top]]
            while back[top] != -1:
                top = back[top]
                chain.append(self.masks[top])
            self._length = (best[n - 1], chain)
        return self._length

    def subgroups_up_to_conjugacy(self) -> list[int]:
        out = []
        seen = set()
        for m in self.masks:
            if m in seen:
                continue
            cls = self.table.conjugates(m)
            seen.update(cls)
            out.append(min(cls))
        return out


def subgroup_lattice(G: GroupHandle, cap: int = LATTICE_CAP, table: GroupTable | None = None) -> SubgroupLattice:
    """Enumerate every subgroup of G (|G| <= cap)."""
    if table is None:
        if len(G.elements()) > cap:
            raise ValueError(f"group order {len(G.elements())} exceeds lattice cap {cap}")
        table = GroupTable(G)
    known: set[int] = {1, table.full_mask}
    # distinct cyclic subgroups, with a canonical generator each
    cyclic_by_mask: dict[int, int] = {}
    for e in range(table.n):
        m, _ = table.cyclic(e)
        cyclic_by_mask.setdefault(m, e)
    cyclic_items = sorted(cyclic_by_mask.items())

    queue: list[int] = []

    def add_class(mask: int):
        if mask in known:
            return
        cls = table.conjugates(mask)
        known.update(cls)
        queue.append(min(cls))

    for m, _e in cyclic_items:
        add_class(m)

    # extend each class representative; <H, x> and <H, x^h> are conjugate, so
    # one element per H-conjugation orbit suffices
    head = 0
    while head < len(queue):
        H = queue[head]
        head += 1
        for e in table.conjugation_orbit_mins(H):
            e = int(e)
            if H >> e & 1:
                continue
            add_class(table.join(H, e))
    return SubgroupLattice(table, list(known))


def length(G: GroupHandle, cap: int = LATTICE_CAP, table: GroupTable | None = None):
    """Length of G (longest subgroup chain) with a witness chain of handles.

    p-groups short-circuit through Burnside counting: every maximal subgroup
    has index p, so the length is the exponent sum of the order.
    """
    n = len(G.elements())
    from .arith import big_omega, factorize

    if n > cap:
        if len(factorize(n)) == 1:
            return big_omega(n), None
        raise ValueError(f"group order {n} exceeds lattice cap {cap}")
    lat = subgroup_lattice(G, cap=cap, table=table)
    ell, chain_masks = lat.length_with_witness()
    witness = [lat.table.subgroup_handle(m) for m in chain_masks]
    return ell, witness
