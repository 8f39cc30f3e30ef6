import pytest

from genset_lab.group import (
    CapExceeded,
    alternating,
    close,
    coset_action,
    cyclic,
    dihedral,
    direct_product,
    frobenius21,
    is_p_group,
    is_primitive,
    metacyclic,
    metacyclic_inverted,
    natural_action,
    p_group_rank,
    pointwise_stabilizer,
    quaternion8,
    stabilizer_order,
    sylow_subgroup,
    symmetric,
    trivial_group,
)
from genset_lab.perm import Permutation


def test_constructor_orders():
    assert symmetric(4).order() == 24
    assert alternating(5).order() == 60
    assert cyclic(12).order() == 12
    assert dihedral(6).order() == 12
    assert quaternion8().order() == 8
    assert frobenius21().order() == 21
    assert direct_product(symmetric(3), cyclic(2)).order() == 12


def test_metacyclic_orders():
    assert metacyclic(5, 4, 2).order() == 20
    assert metacyclic(7, 3, 2).order() == 21
    assert metacyclic(9, 3, 4).order() == 27
    assert metacyclic_inverted(5, 2, 1).order() == 20
    assert metacyclic_inverted(12, 2, 5).order() == 48


def test_metacyclic_rejects_bad_parameters():
    with pytest.raises(ValueError):
        metacyclic(6, 2, 2)  # gcd(k, m) != 1
    with pytest.raises(ValueError):
        metacyclic(5, 3, 2)  # 2^3 != 1 mod 5


def test_close_and_membership():
    G = close([Permutation.parse("(1 2)", 4), Permutation.parse("(1 2 3 4)", 4)])
    assert G.order() == 24
    assert Permutation.parse("(1 3)", 4) in G
    H = G.subgroup([Permutation.parse("(1 2 3)", 4)])
    assert H.order() == 3
    assert H.is_subgroup_of(G)


def test_closure_cap():
    with pytest.raises(CapExceeded):
        close([Permutation.parse("(1 2)", 9),
               Permutation.from_cycles([tuple(range(9))], 9)], closure_cap=1000)


def test_element_index_deterministic():
    G = symmetric(3)
    elems = G.elements()
    for i, x in enumerate(elems):
        assert G.element_index(x) == i


def test_pointwise_stabilizer():
    G = symmetric(5)
    H = pointwise_stabilizer(G, [0])
    assert H.order() == 24
    assert stabilizer_order(G, [0, 1]) == 6
    assert stabilizer_order(G, range(5)) == 1


def test_sylow_subgroups():
    G = symmetric(4)
    P2 = sylow_subgroup(G, 2)
    P3 = sylow_subgroup(G, 3)
    assert P2.order() == 8 and is_p_group(P2, 2)
    assert P3.order() == 3 and is_p_group(P3, 3)
    assert p_group_rank(P2, 2) == 2
    assert p_group_rank(P3, 3) == 1


def test_p_group_rank_elementary_abelian():
    E = direct_product(direct_product(cyclic(3), cyclic(3)), cyclic(3))
    assert p_group_rank(E, 3) == 3
    assert p_group_rank(quaternion8(), 2) == 2


def test_natural_action():
    A = natural_action(symmetric(4))
    assert A.domain_size == 4
    assert A.faithful and A.transitive
    assert A.source_order == 24
    assert is_primitive(A)


def test_coset_action():
    G = symmetric(4)
    H = G.subgroup([Permutation.parse("(1 2)", 4), Permutation.parse("(3 4)", 4),
                    Permutation.parse("(1 3)(2 4)", 4)])
    assert H.order() == 8
    A = coset_action(G, H)
    assert A.domain_size == 3
    assert A.transitive
    assert not A.faithful  # kernel contains the Klein four-group


def test_coset_action_faithful():
    G = alternating(5)
    H = G.subgroup([Permutation.parse("(1 2 3 4 5)", 5)])
    A = coset_action(G, H)
    assert A.domain_size == 12
    assert A.faithful
    assert A.group.order() == 60


def test_imprimitive_action():
    # D8 on 4 points preserves the diagonal blocks
    A = natural_action(dihedral(4))
    assert not is_primitive(A)


def test_trivial_group():
    T = trivial_group(3)
    assert T.order() == 1
