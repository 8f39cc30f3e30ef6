import pytest

from genset_lab.counts import (
    check_pi_bound,
    constants_audit,
    goursat_maximal_count,
    hom_count_to_cyclic,
    length_formula_sn,
    metacyclic_maximal_count,
    metacyclic_parameter_sweep,
)
from genset_lab.group import (
    alternating,
    cyclic,
    dihedral,
    direct_product,
    quaternion8,
    symmetric,
)
from genset_lab.lattice import length


def test_length_formula_values():
    assert [length_formula_sn(n) for n in range(2, 9)] == [1, 2, 4, 5, 6, 7, 10]


def test_length_formula_matches_lattice():
    for n in range(2, 7):
        assert length_formula_sn(n) == length(symmetric(n))[0]


def test_hom_counts():
    assert hom_count_to_cyclic(cyclic(6), 2) == 2
    assert hom_count_to_cyclic(cyclic(6), 3) == 3
    assert hom_count_to_cyclic(cyclic(6), 5) == 1
    assert hom_count_to_cyclic(symmetric(3), 2) == 2  # sign map
    assert hom_count_to_cyclic(symmetric(3), 3) == 1
    assert hom_count_to_cyclic(alternating(4), 3) == 3
    assert hom_count_to_cyclic(direct_product(cyclic(2), cyclic(2)), 2) == 4
    assert hom_count_to_cyclic(quaternion8(), 2) == 4


def test_goursat_formula_vs_lattice():
    # |M(H x C_n)| = |M(H)| + omega(n) + sum_{p | n} (|Hom(H, C_p)| - 1)
    for H in (symmetric(3), cyclic(4), dihedral(4), quaternion8()):
        for n in (2, 6, 30):
            rep = goursat_maximal_count(H, n)
            assert rep.formula_matches_oracle
            assert rep.passed


def test_goursat_s4():
    rep = goursat_maximal_count(symmetric(4), 6)
    assert rep.formula_value == rep.oracle_value == 11


def test_goursat_bound():
    # |M(H)| <= 9 for |H| <= 24, so |M(H x C_n)| <= 9 + omega(n) is reported
    rep = goursat_maximal_count(symmetric(4), 30)
    assert rep.bound_value == 9 + 3
    assert rep.within_bound


def test_metacyclic_counts():
    rep = metacyclic_maximal_count(7, 3, 2)
    assert rep.oracle_value == 8  # Frobenius(21): 7 conjugate C3's + C7
    assert rep.bound_value == 7 + 1
    assert rep.within_bound
    rep = metacyclic_maximal_count(5, 2, 1, inverted=True)
    assert rep.within_bound


def test_metacyclic_sweep_tuples():
    tuples = metacyclic_parameter_sweep(limit=30)
    assert all(m >= 2 and n >= 2 and m * n <= 30 for m, n, k in tuples)
    # canonical-k dedup: k = 2 and k = 3 collapse to one class mod C5
    ks = [k for m, n, k in tuples if (m, n) == (5, 4)]
    assert ks == [1, 2, 4]


def test_metacyclic_sweep_dedup_is_canonical():
    for m, n, k in metacyclic_parameter_sweep(limit=40):
        js = [j for j in range(1, n) if __import__("math").gcd(j, n) == 1]
        assert k == min(pow(k, j, m) for j in js)


def test_constants_audit():
    rep = constants_audit()
    assert rep.passed


def test_pi_bound():
    for n in (17, 54, 100, 1000, 10**5):
        rep = check_pi_bound(n)
        assert rep.passed
    with pytest.raises(ValueError):
        check_pi_bound(10)
