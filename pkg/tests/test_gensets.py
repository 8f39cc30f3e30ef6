from genset_lab.gensets import (
    check_bounds,
    delta,
    invariant_report,
    is_minimal_genset,
    is_nilpotent,
    max_minimal_genset_size,
    min_genset_size,
    sylow_ranks,
)
from genset_lab.group import (
    alternating,
    cyclic,
    dihedral,
    direct_product,
    frobenius21,
    quaternion8,
    symmetric,
)
from genset_lab.perm import Permutation


def test_d_values():
    assert min_genset_size(cyclic(6))[0] == 1
    assert min_genset_size(symmetric(4))[0] == 2
    assert min_genset_size(alternating(5))[0] == 2
    assert min_genset_size(direct_product(cyclic(2), cyclic(2)))[0] == 2
    assert min_genset_size(quaternion8())[0] == 2


def test_d_witness_generates():
    for G in (symmetric(4), dihedral(6), frobenius21()):
        d, w = min_genset_size(G)
        assert len(w) == d
        assert is_minimal_genset(G, w).generates


def test_m_small_groups():
    assert max_minimal_genset_size(cyclic(12))[:1] == (2,)
    assert max_minimal_genset_size(symmetric(3))[0] == 2
    assert max_minimal_genset_size(symmetric(4))[0] == 3
    assert max_minimal_genset_size(alternating(4))[0] == 2
    assert max_minimal_genset_size(dihedral(4))[0] == 2
    assert max_minimal_genset_size(quaternion8())[0] == 2


def test_m_witness_is_minimal():
    for G in (symmetric(4), alternating(4), cyclic(30)):
        m, w, exact = max_minimal_genset_size(G)
        assert exact
        got = is_minimal_genset(G, w)
        assert got.generates and got.minimal


def test_is_minimal_genset_flags():
    G = symmetric(3)
    a = Permutation.parse("(1 2)", 3)
    b = Permutation.parse("(1 2 3)", 3)
    full = is_minimal_genset(G, [a, b])
    assert full.generates and full.minimal
    redundant = is_minimal_genset(G, [a, b, a * b])
    assert redundant.generates and not redundant.minimal
    proper = is_minimal_genset(G, [b])
    assert not proper.generates


def test_delta():
    assert delta(cyclic(30)) == 3
    assert delta(symmetric(4)) == 3
    assert delta(quaternion8()) == 2
    assert delta(direct_product(quaternion8(), cyclic(3))) == 3


def test_sylow_ranks():
    assert sylow_ranks(symmetric(4)) == {2: 2, 3: 1}
    assert sylow_ranks(cyclic(30)) == {2: 1, 3: 1, 5: 1}


def test_is_nilpotent():
    assert is_nilpotent(cyclic(12))
    assert is_nilpotent(quaternion8())
    assert is_nilpotent(direct_product(dihedral(4), cyclic(9)))
    assert not is_nilpotent(symmetric(3))
    assert not is_nilpotent(frobenius21())


def test_node_budget_flags_inexact():
    m, w, exact = max_minimal_genset_size(symmetric(4), node_budget=5)
    assert not exact
    assert m >= 1  # lower bound from the partial search


def test_check_bounds_pass():
    for G in (symmetric(4), alternating(4), cyclic(30), frobenius21()):
        rep = check_bounds(G)
        assert rep.all_pass
        assert rep.m <= rep.length


def test_nilpotent_m_equals_delta():
    for G in (cyclic(12), quaternion8(), direct_product(cyclic(2), cyclic(2))):
        rep = check_bounds(G)
        assert rep.nilpotent
        assert rep.nilpotent_equality


def test_invariant_report_s4():
    rep = invariant_report(symmetric(4))
    assert (rep.d, rep.m, rep.delta, rep.length) == (2, 3, 3, 4)
    assert rep.m_exact
    orders = [len(h.elements()) for h in rep.witness_chain]
    assert orders == [24, 8, 4, 2, 1]
