import pytest

from genset_lab.group import (
    alternating,
    cyclic,
    dihedral,
    quaternion8,
    symmetric,
)
from genset_lab.lattice import GroupTable, length, subgroup_lattice


def test_table_basics():
    t = GroupTable(symmetric(3))
    assert t.n == 6
    assert t.full_mask == (1 << 6) - 1
    ids = [1, 3]
    assert list(t.ids_of(t.mask_of(ids))) == ids


def test_mask_roundtrip_large():
    t = GroupTable(symmetric(5))
    ids = list(range(0, 120, 7))
    assert list(t.ids_of(t.mask_of(ids))) == ids


def test_cyclic_subgroups():
    t = GroupTable(symmetric(4))
    for e in range(1, t.n):
        mask, arr = t.cyclic(e)
        assert bin(mask).count("1") == len(arr)
        assert 0 in set(arr.tolist())  # identity is id 0


def test_join_matches_closure():
    t = GroupTable(symmetric(4))
    for h in range(1, 8):
        H, _ = t.cyclic(h)
        for e in range(1, t.n, 3):
            assert t.join(H, e) == t.closure_of_ids(list(t.ids_of(H)) + [e])


def test_subgroup_counts():
    # (group, total subgroups, conjugacy classes, maximal subgroups)
    cases = [
        (symmetric(3), 6, 4, 4),
        (symmetric(4), 30, 11, 8),
        (alternating(4), 10, 5, 5),
        (quaternion8(), 6, 6, 3),
        (dihedral(4), 10, 8, 3),
        (alternating(5), 59, 9, 21),
    ]
    for G, total, classes, maximal in cases:
        lat = subgroup_lattice(G)
        assert len(lat) == total
        assert len(lat.subgroups_up_to_conjugacy()) == classes
        assert len(lat.maximal_subgroup_masks()) == maximal


def test_length_values():
    assert length(cyclic(12))[0] == 3
    assert length(symmetric(3))[0] == 2
    assert length(symmetric(4))[0] == 4
    assert length(alternating(5))[0] == 4
    assert length(quaternion8())[0] == 3


def test_length_witness_chain():
    ell, chain = length(symmetric(4))
    orders = [len(h.elements()) for h in chain]
    assert orders[0] == 24 and orders[-1] == 1
    assert len(chain) == ell + 1
    for big, small in zip(orders, orders[1:]):
        assert big % small == 0 and big > small
    # each step is a genuine inclusion
    for big, small in zip(chain, chain[1:]):
        assert small.is_subgroup_of(big)


def test_length_p_group_shortcut():
    ell, chain = length(quaternion8(), cap=4)
    assert ell == 3
    assert chain is None


def test_lattice_cap():
    with pytest.raises(ValueError):
        length(symmetric(4), cap=10)


def test_maximal_up_to_conjugacy():
    lat = subgroup_lattice(symmetric(4))
    reps = lat.maximal_subgroups_up_to_conjugacy()
    orders = sorted(bin(m).count("1") for m in reps)
    assert orders == [6, 8, 12]  # S3, D8, A4


def test_conjugation_orbit_mins():
    t = GroupTable(symmetric(4))
    H, _ = t.cyclic(1)
    mins = t.conjugation_orbit_mins(H)
    # orbit minima are distinct, sorted, and genuinely minimal in their orbit
    assert sorted(set(mins.tolist())) == mins.tolist()
    assert 0 in mins.tolist()


def test_small_generating_ids():
    t = GroupTable(symmetric(4))
    gens = t.small_generating_ids(t.full_mask)
    assert t.closure_of_ids(gens) == t.full_mask
    assert len(gens) <= 4
