import pytest
from hypothesis import given, strategies as st

from genset_lab.perm import Permutation


def test_identity():
    e = Permutation.identity(5)
    assert e.is_identity()
    assert e.order() == 1
    assert e.cycle_string() == "()"


def test_parse_and_cycle_string():
    p = Permutation.parse("(1 2 3)(4 5)", 5)
    assert p(0) == 1 and p(2) == 0 and p(3) == 4
    assert p.cycle_string() == "(1 2 3)(4 5)"
    assert Permutation.parse("()", 3).is_identity()


def test_parse_roundtrip():
    for s, n in [("(1 2)", 4), ("(1 3 5)(2 4)", 5), ("(2 6)", 6)]:
        p = Permutation.parse(s, n)
        assert Permutation.parse(p.cycle_string(), n) == p


def test_parse_rejects_bad_input():
    with pytest.raises(ValueError):
        Permutation.parse("(1 1)", 3)
    with pytest.raises(ValueError):
        Permutation.parse("(0 1)", 3)


def test_composition_order():
    # right action: (p*q)(x) = q(p(x))
    p = Permutation.parse("(1 2)", 3)
    q = Permutation.parse("(2 3)", 3)
    assert (p * q)(0) == 2
    assert (q * p)(0) == 1


def test_from_cycles():
    p = Permutation.from_cycles([(0, 1, 2)], 4)
    assert p == Permutation.parse("(1 2 3)", 4)


def test_sign_and_order():
    assert Permutation.parse("(1 2)", 2).sign() == -1
    assert Permutation.parse("(1 2 3)", 3).sign() == 1
    assert Permutation.parse("(1 2 3)(4 5)", 5).order() == 6


perms = st.integers(min_value=1, max_value=8).flatmap(
    lambda n: st.permutations(list(range(n))).map(Permutation)
)


@given(perms)
def test_inverse(p):
    n = p.degree
    assert (p * p.inverse()) == Permutation.identity(n)
    assert (p.inverse() * p) == Permutation.identity(n)


@given(st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.tuples(*[st.permutations(list(range(n))).map(Permutation)] * 3)
))
def test_associativity(triple):
    p, q, r = triple
    assert (p * q) * r == p * (q * r)


@given(perms)
def test_order_divides_factorial(p):
    e = Permutation.identity(p.degree)
    acc = e
    for _ in range(p.order()):
        acc = acc * p
    assert acc == e
