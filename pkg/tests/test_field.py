import pytest
from hypothesis import given, settings, strategies as st

from genset_lab.field import (
    FieldMatrix,
    FiniteField,
    field_make,
    subfield_primitive_element,
)


def test_prime_field():
    F = FiniteField(7, 1)
    a = F.element([3])
    b = F.element([5])
    assert (a * b).to_int() == 1
    assert (a + b).to_int() == 1
    assert a.inverse() == b


def test_gf4():
    F = field_make(2, 2)
    # canonical modulus x^2 + x + 1
    assert F.modulus == (1, 1, 1)
    x = F.element([0, 1])
    assert (x * x * x).to_int() == 1
    assert x.multiplicative_order() == 3


def test_gf9_modulus_canonical():
    F = field_make(3, 2)
    assert F.modulus[-1] == 1  # monic
    assert len(F.elements()) == 9


def test_field_cached():
    assert field_make(2, 3) is field_make(2, 3)


def test_from_int_roundtrip():
    F = field_make(5, 2)
    for code in range(25):
        assert F.from_int(code).to_int() == code


def test_generator_is_primitive():
    for p, f in [(2, 2), (2, 3), (3, 2), (2, 6)]:
        F = field_make(p, f)
        assert F.generator.multiplicative_order() == p**f - 1


def test_subfield_primitive_element():
    F = field_make(2, 6)
    for e in (1, 2, 3, 6):
        z = subfield_primitive_element(F, e)
        assert z.multiplicative_order() == 2**e - 1
    with pytest.raises(ValueError):
        subfield_primitive_element(F, 4)


@st.composite
def field_and_elems(draw, count=3):
    p, f = draw(st.sampled_from([(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3)]))
    F = field_make(p, f)
    codes = draw(st.lists(st.integers(0, p**f - 1), min_size=count, max_size=count))
    return F, [F.from_int(c) for c in codes]


@given(field_and_elems())
@settings(max_examples=60)
def test_field_axioms(data):
    F, (a, b, c) = data
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == F.element([0])
    if a:
        assert a * a.inverse() == F.element([1])


def test_matrix_mul_and_det():
    F = field_make(2, 1)
    A = FieldMatrix.from_int_rows(F, [[1, 1], [0, 1]])
    B = FieldMatrix.from_int_rows(F, [[1, 0], [1, 1]])
    C = A * B
    assert C == FieldMatrix.from_int_rows(F, [[0, 1], [1, 1]])
    assert A.det().to_int() == 1
    assert (A * A) == FieldMatrix.identity(F, 2)


def test_matrix_det_3x3():
    F = field_make(5, 1)
    M = FieldMatrix.from_int_rows(F, [[1, 2, 3], [0, 1, 4], [0, 0, 2]])
    assert M.det().to_int() == 2


def test_bad_modulus_rejected():
    with pytest.raises(ValueError):
        FiniteField(2, 2, modulus=(1, 0, 1))  # x^2 + 1 = (x+1)^2 over GF(2)
    with pytest.raises(ValueError):
        FiniteField(4, 1)  # characteristic must be prime
